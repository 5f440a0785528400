#pragma once

#include "ecf/types.hpp"

#include <string_view>

namespace ecf {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMaxPrecisionBits = 4096;

// Certified bracket of a named constant at the requested precision.
// Names: "pi-3", "sqrt2-1", "e-2". Throws std::invalid_argument otherwise.
RatInterval named_constant(std::string_view name, unsigned bits);

bool is_named_constant(std::string_view name);

// Exact value of a decimal string like "0.14159" or "1e-3"; rationals "p/q"
// are parsed exactly as well.
Rational parse_exact_value(std::string_view text);

// Inverse CDF of the R-invariant density evaluated at the dyadic
// u = u_num / 2^u_bits, rounded to a dyadic rational with out_bits fractional
// bits. Monotone exact formula 3(3^u - 1)/(3^u + 3), evaluated by MPFR.
Rational mu_inverse_cdf_dyadic(const Integer& u_num, unsigned u_bits, unsigned out_bits);

}  // namespace ecf
