#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace diraccs {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Thrown when a series or quadrature hits its cap. partial() holds the value
// accumulated so far (one entry per output component).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<cplx> partial, int terms)
      : std::runtime_error(what), partial_(std::move(partial)), terms_(terms) {}

  const std::vector<cplx>& partial() const noexcept { return partial_; }
  int terms() const noexcept { return terms_; }

 private:
  std::vector<cplx> partial_;
  int terms_;
};

class CrossCheckError : public std::runtime_error {
 public:
  CrossCheckError(const std::string& what, double x, double y, double deviation)
      : std::runtime_error(what), x_(x), y_(y), deviation_(deviation) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double deviation() const noexcept { return deviation_; }

 private:
  double x_, y_, deviation_;
};

// One checked identity: the largest elementwise deviation and where it occurred.
struct RelationCheck {
  std::string name;
  double max_deviation = 0.0;
  int worst_row = -1;
  int worst_col = -1;
};

struct RelationReport {
  int cutoff = 0;
  std::vector<RelationCheck> relations;

  double max_deviation() const {
    double d = 0.0;
    for (const auto& r : relations) d = d < r.max_deviation ? r.max_deviation : d;
    return d;
  }

  const RelationCheck& find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return r;
    throw std::out_of_range("no relation named " + name);
  }
};

}  // namespace diraccs
