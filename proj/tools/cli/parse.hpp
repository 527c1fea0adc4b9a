#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diraccs/common.hpp"
#include "diraccs/observables.hpp"

namespace diraccs::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "a+bi", "a-bi", "a", "bi", "i", "-i" with any double syntax for a and b.
cplx parse_complex(std::string_view text);

// "x0,x1,nx,y0,y1,ny"
observables::GridSpec parse_grid(std::string_view text);

// "a,b"
std::pair<double, double> parse_range(std::string_view text);

std::vector<int> parse_int_list(std::string_view text);

// 17 significant digits, "." decimal point.
std::string format_double(double v);

}  // namespace diraccs::cli
