#include "cli/parse.hpp"

#include <charconv>
#include <cmath>

namespace diraccs::cli {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

double parse_double(std::string_view s, std::string_view context) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("cannot parse number '" + std::string(s) + "' in '" + std::string(context) + "'");
  if (!std::isfinite(v)) throw UsageError("non-finite number in '" + std::string(context) + "'");
  return v;
}

int parse_int(std::string_view s, std::string_view context) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("cannot parse integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_double(s, text), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_of = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part, text);
  };
  if (split_at == std::string::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split_at), text), imag_of(body.substr(split_at))};
}

observables::GridSpec parse_grid(std::string_view text) {
  const auto parts = split(strip(text), ',');
  if (parts.size() != 6) throw UsageError("grid must be x0,x1,nx,y0,y1,ny");
  observables::GridSpec g;
  g.x_min = parse_double(parts[0], text);
  g.x_max = parse_double(parts[1], text);
  g.nx = parse_int(parts[2], text);
  g.y_min = parse_double(parts[3], text);
  g.y_max = parse_double(parts[4], text);
  g.ny = parse_int(parts[5], text);
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid grid: ") + e.what());
  }
  return g;
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto parts = split(strip(text), ',');
  if (parts.size() != 2) throw UsageError("range must be a,b");
  const double a = parse_double(parts[0], text), b = parse_double(parts[1], text);
  if (!(b > a)) throw UsageError("range needs b > a");
  return {a, b};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& part : split(strip(text), ',')) out.push_back(parse_int(part, text));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

}  // namespace diraccs::cli
