#include "diraccs/fock.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>

#include "diraccs/special_fn.hpp"

namespace diraccs::fock {

namespace {

double log_norm_prefactor(const ModelParams& p) { return 0.5 * std::log(p.omega_b() / (4.0 * pi)); }

double power_log(int a, double xi) { return a == 0 ? 0.0 : a * std::log(xi); }

}  // namespace

cplx psi_scalar(const ModelParams& p, ScalarIndex idx, PlanePoint pt) {
  return psi_scalar(p, idx, to_elliptic(p, pt));
}

cplx psi_scalar(const ModelParams& p, ScalarIndex idx, const EllipticPoint& ep) {
  if (idx.m < 0 || idx.n < 0) throw IndexError("psi_scalar: labels must be nonnegative");
  const int lo = std::min(idx.m, idx.n);
  const int hi = std::max(idx.m, idx.n);
  const int d = idx.n - idx.m;
  const int a = hi - lo;
  const double x = ep.xi * ep.xi;
  const double log_mag = log_norm_prefactor(p) +
                         0.5 * (special::log_factorial(lo) - special::log_factorial(hi)) +
                         power_log(a, ep.xi) - 0.5 * x;
  const double lag = special::laguerre_assoc(lo, a, x);
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  return sign * lag * std::exp(log_mag) * std::polar(1.0, d * ep.theta);
}

std::vector<cplx> psi_diagonal(const ModelParams& p, int d, int k_max, const EllipticPoint& ep) {
  if (k_max < 0) throw IndexError("psi_diagonal: k_max must be nonnegative");
  const int a = std::abs(d);
  const double x = ep.xi * ep.xi;
  // Orthonormal Laguerre functions sqrt(k!/(k+a)!) L_k^a(x), with the common
  // Gaussian and power prefactor folded into the starting value.
  std::vector<double> f(static_cast<std::size_t>(k_max) + 1);
  f[0] = std::exp(log_norm_prefactor(p) - 0.5 * special::log_factorial(a) + power_log(a, ep.xi) -
                  0.5 * x);
  if (k_max >= 1) f[1] = f[0] * (1.0 + a - x) / std::sqrt(1.0 + a);
  for (int k = 1; k < k_max; ++k) {
    f[k + 1] = ((2.0 * k + 1.0 + a - x) * f[k] - std::sqrt(static_cast<double>(k) * (k + a)) * f[k - 1]) /
               std::sqrt((k + 1.0) * (k + 1.0 + a));
  }
  const cplx phase = std::polar(1.0, d * ep.theta);
  std::vector<cplx> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = ((k % 2 == 0) ? f[k] : -f[k]) * phase;
  return out;
}

Eigen::MatrixXcd scalar_table(const ModelParams& p, const EllipticPoint& ep, int max_index) {
  if (max_index < 0) throw IndexError("scalar_table: max_index must be nonnegative");
  Eigen::MatrixXcd t(max_index + 1, max_index + 1);
  for (int d = -max_index; d <= max_index; ++d) {
    const int k_max = max_index - std::abs(d);
    const auto diag = psi_diagonal(p, d, k_max, ep);
    for (int k = 0; k <= k_max; ++k) {
      if (d >= 0)
        t(k, k + d) = diag[k];
      else
        t(k - d, k) = diag[k];
    }
  }
  return t;
}

LadderResult ladder_action(Ladder which, ScalarIndex idx) {
  if (idx.m < 0 || idx.n < 0) throw IndexError("ladder_action: labels must be nonnegative");
  switch (which) {
    case Ladder::a_minus:
      if (idx.n == 0) return {};
      return {std::sqrt(static_cast<double>(idx.n)), ScalarIndex{idx.m, idx.n - 1}};
    case Ladder::a_plus:
      return {std::sqrt(idx.n + 1.0), ScalarIndex{idx.m, idx.n + 1}};
    case Ladder::b_minus:
      if (idx.m == 0) return {};
      return {std::sqrt(static_cast<double>(idx.m)), ScalarIndex{idx.m - 1, idx.n}};
    case Ladder::b_plus:
      return {std::sqrt(idx.m + 1.0), ScalarIndex{idx.m + 1, idx.n}};
  }
  return {};
}

TruncatedOperator::TruncatedOperator(int cutoff, Eigen::MatrixXcd entries)
    : cutoff_(cutoff), entries_(std::move(entries)) {
  const int dim = (cutoff + 1) * (cutoff + 1);
  if (entries_.rows() != dim || entries_.cols() != dim)
    throw DomainError("TruncatedOperator: matrix dimension does not match cutoff");
}

int TruncatedOperator::index_of(ScalarIndex idx) const {
  if (idx.m < 0 || idx.n < 0 || idx.m > cutoff_ || idx.n > cutoff_)
    throw IndexError("TruncatedOperator: label outside block");
  return idx.m * (cutoff_ + 1) + idx.n;
}

ScalarIndex TruncatedOperator::label_of(int index) const {
  if (index < 0 || index >= dimension()) throw IndexError("TruncatedOperator: index outside block");
  return {index / (cutoff_ + 1), index % (cutoff_ + 1)};
}

TruncatedOperator build_truncated(ScalarOperator which, int cutoff) {
  if (cutoff < 1) throw DomainError("build_truncated: cutoff must be at least 1");
  const int side = cutoff + 1;
  const int dim = side * side;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  auto index = [side](ScalarIndex s) { return s.m * side + s.n; };
  for (int m = 0; m <= cutoff; ++m) {
    for (int n = 0; n <= cutoff; ++n) {
      const ScalarIndex src{m, n};
      const int col = index(src);
      std::optional<Ladder> ladder;
      switch (which) {
        case ScalarOperator::n: mat(col, col) = n; break;
        case ScalarOperator::m: mat(col, col) = m; break;
        case ScalarOperator::lz: mat(col, col) = n - m; break;
        case ScalarOperator::a_minus: ladder = Ladder::a_minus; break;
        case ScalarOperator::a_plus: ladder = Ladder::a_plus; break;
        case ScalarOperator::b_minus: ladder = Ladder::b_minus; break;
        case ScalarOperator::b_plus: ladder = Ladder::b_plus; break;
      }
      if (!ladder) continue;
      const auto r = ladder_action(*ladder, src);
      if (r.annihilated() || r.index->m > cutoff || r.index->n > cutoff) continue;
      mat(index(*r.index), col) = r.coefficient;
    }
  }
  return TruncatedOperator(cutoff, std::move(mat));
}

std::vector<int> interior_indices(int cutoff) {
  std::vector<int> idx;
  const int side = cutoff + 1;
  for (int m = 0; m < cutoff; ++m)
    for (int n = 0; n < cutoff; ++n) idx.push_back(m * side + n);
  return idx;
}

Eigen::MatrixXcd sparse_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::SparseMatrix<cplx> sa = a.sparseView();
  const Eigen::SparseMatrix<cplx> sb = b.sparseView();
  return Eigen::MatrixXcd(sa * sb);
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::SparseMatrix<cplx> sa = a.sparseView();
  const Eigen::SparseMatrix<cplx> sb = b.sparseView();
  return Eigen::MatrixXcd(sa * sb - sb * sa);
}

RelationCheck block_deviation(std::string name, const Eigen::MatrixXcd& diff,
                              const std::vector<int>& idx) {
  RelationCheck rc;
  rc.name = std::move(name);
  for (int i : idx) {
    for (int j : idx) {
      const double v = std::abs(diff(i, j));
      if (rc.worst_row < 0 || v > rc.max_deviation) {
        rc.max_deviation = v;
        rc.worst_row = i;
        rc.worst_col = j;
      }
    }
  }
  return rc;
}

RelationReport check_scalar_algebra(int cutoff) {
  if (cutoff < 2) throw DomainError("check_scalar_algebra: cutoff must be at least 2");
  const auto am = build_truncated(ScalarOperator::a_minus, cutoff).entries();
  const auto ap = build_truncated(ScalarOperator::a_plus, cutoff).entries();
  const auto bm = build_truncated(ScalarOperator::b_minus, cutoff).entries();
  const auto bp = build_truncated(ScalarOperator::b_plus, cutoff).entries();
  const auto num = build_truncated(ScalarOperator::n, cutoff).entries();
  const auto mnum = build_truncated(ScalarOperator::m, cutoff).entries();
  const auto lz = build_truncated(ScalarOperator::lz, cutoff).entries();
  const auto idx = interior_indices(cutoff);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(am.rows(), am.cols());

  RelationReport rep;
  rep.cutoff = cutoff;
  auto add = [&](const char* name, const Eigen::MatrixXcd& diff) {
    rep.relations.push_back(block_deviation(name, diff, idx));
  };
  add("[A-,A+] - 1", commutator(am, ap) - eye);
  add("[B-,B+] - 1", commutator(bm, bp) - eye);
  add("[A-,B-]", commutator(am, bm));
  add("[A+,B+]", commutator(ap, bp));
  add("[A-,B+]", commutator(am, bp));
  add("[A+,B-]", commutator(ap, bm));
  add("N - A+A-", num - sparse_product(ap, am));
  add("M - B+B-", mnum - sparse_product(bp, bm));
  add("[Lz,A+] - A+", commutator(lz, ap) - ap);
  add("[Lz,A-] + A-", commutator(lz, am) + am);
  add("[Lz,B+] + B+", commutator(lz, bp) + bp);
  add("[Lz,B-] - B-", commutator(lz, bm) - bm);
  return rep;
}

RelationReport check_factorization(const ModelParams& p, int cutoff) {
  if (cutoff < 2) throw DomainError("check_factorization: cutoff must be at least 2");
  const auto am = build_truncated(ScalarOperator::a_minus, cutoff).entries();
  const auto ap = build_truncated(ScalarOperator::a_plus, cutoff).entries();
  const auto bm = build_truncated(ScalarOperator::b_minus, cutoff).entries();
  const auto bp = build_truncated(ScalarOperator::b_plus, cutoff).entries();
  const auto num = build_truncated(ScalarOperator::n, cutoff).entries();
  const auto lz = build_truncated(ScalarOperator::lz, cutoff).entries();
  const auto idx = interior_indices(cutoff);
  const int dim = static_cast<int>(am.rows());
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);

  const Eigen::MatrixXcd h_plus = sparse_product(ap, am);
  const Eigen::MatrixXcd h_minus = sparse_product(am, ap);

  RelationReport rep;
  rep.cutoff = cutoff;
  rep.relations.push_back(block_deviation("H+ - N", h_plus - num, idx));
  rep.relations.push_back(block_deviation("A+A- - (B+B- + Lz)", h_plus - (sparse_product(bp, bm) + lz), idx));
  rep.relations.push_back(block_deviation("H- - (H+ + 1)", h_minus - (h_plus + eye), idx));
  rep.relations.push_back(block_deviation("[Lz,A+] - A+", commutator(lz, ap) - ap, idx));
  rep.relations.push_back(block_deviation("[Lz,A-] + A-", commutator(lz, am) + am, idx));
  rep.relations.push_back(block_deviation("[Lz,B+] + B+", commutator(lz, bp) + bp, idx));
  rep.relations.push_back(block_deviation("[Lz,B-] - B-", commutator(lz, bm) - bm, idx));

  // Dirac operator sqrt(w) [[0, -iA-], [iA+, 0]] squares to w diag(H-, H+).
  const cplx i(0.0, 1.0);
  const double w = p.omega_b();
  Eigen::MatrixXcd hd = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
  hd.topRightCorner(dim, dim) = -i * std::sqrt(w) * am;
  hd.bottomLeftCorner(dim, dim) = i * std::sqrt(w) * ap;
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
  target.topLeftCorner(dim, dim) = w * h_minus;
  target.bottomRightCorner(dim, dim) = w * h_plus;
  std::vector<int> idx2 = idx;
  for (int k : idx) idx2.push_back(k + dim);
  rep.relations.push_back(block_deviation("H_D^2 - w diag(H-, H+)", sparse_product(hd, hd) - target, idx2));
  return rep;
}

}  // namespace diraccs::fock
