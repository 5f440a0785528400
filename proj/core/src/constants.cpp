#include "ecf/constants.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <string>

namespace ecf {
namespace {

// exact mpfr_t -> Rational via mantissa * 2^exp
Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpz_t z;
  mpz_init(z);
  mpfr_exp_t e = mpfr_get_z_2exp(z, x);
  // import the mantissa into a cpp_int through the hex representation
  char* hex = mpz_get_str(nullptr, 16, z);
  Integer mant;
  if (hex[0] == '-') {
    mant = -Integer(std::string("0x") + (hex + 1));
  } else {
    mant = Integer(std::string("0x") + hex);
  }
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(hex, std::strlen(hex) + 1);
  mpz_clear(z);

  Rational r(mant);
  if (e >= 0) {
    r *= Rational(Integer(1) << e);
  } else {
    r /= Rational(Integer(1) << (-e));
  }
  return r;
}

using Fill = void (*)(mpfr_ptr, mpfr_rnd_t);

void fill_pi_minus_3(mpfr_ptr x, mpfr_rnd_t rnd) {
  mpfr_const_pi(x, rnd);
  mpfr_sub_ui(x, x, 3, rnd);
}
void fill_sqrt2_minus_1(mpfr_ptr x, mpfr_rnd_t rnd) {
  mpfr_sqrt_ui(x, 2, rnd);
  mpfr_sub_ui(x, x, 1, rnd);
}
void fill_e_minus_2(mpfr_ptr x, mpfr_rnd_t rnd) {
  mpfr_set_ui(x, 1, MPFR_RNDN);
  mpfr_exp(x, x, rnd);
  mpfr_sub_ui(x, x, 2, rnd);
}

Fill lookup(std::string_view name) {
  if (name == "pi-3") return fill_pi_minus_3;
  if (name == "sqrt2-1") return fill_sqrt2_minus_1;
  if (name == "e-2") return fill_e_minus_2;
  return nullptr;
}

}  // namespace

bool is_named_constant(std::string_view name) { return lookup(name) != nullptr; }

RatInterval named_constant(std::string_view name, unsigned bits) {
  Fill fill = lookup(name);
  if (!fill) throw std::invalid_argument("unknown named constant: " + std::string(name));
  bits = std::clamp(bits, 64u, kMaxPrecisionBits + 64u);
  mpfr_t lo, hi;
  mpfr_init2(lo, bits + 16);
  mpfr_init2(hi, bits + 16);
  fill(lo, MPFR_RNDD);
  fill(hi, MPFR_RNDU);
  RatInterval out(mpfr_to_rational(lo), mpfr_to_rational(hi));
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

Rational parse_exact_value(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty numeric literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num) / Rational(den);
  }

  // decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
  long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  std::string digits = s;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    frac_digits = static_cast<long>(s.size() - dot - 1);
    digits = s.substr(0, dot) + s.substr(dot + 1);
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad numeric literal: " + std::string(text));
  Rational r{Integer(digits)};
  long net = exp10 - frac_digits;
  Integer pow10 = 1;
  for (long i = 0; i < std::abs(net); ++i) pow10 *= 10;
  if (net >= 0) return r * Rational(pow10);
  return r / Rational(pow10);
}

Rational mu_inverse_cdf_dyadic(const Integer& u_num, unsigned u_bits, unsigned out_bits) {
  const unsigned work = out_bits + 64;
  mpfr_t u, t, num, den;
  mpfr_init2(u, work);
  mpfr_init2(t, work);
  mpfr_init2(num, work);
  mpfr_init2(den, work);

  // u = u_num / 2^u_bits
  mpfr_set_str(u, u_num.str().c_str(), 10, MPFR_RNDN);
  mpfr_div_2ui(u, u, u_bits, MPFR_RNDN);

  // t = 3^u
  mpfr_set_ui(t, 3, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_mul(t, t, u, MPFR_RNDN);
  mpfr_exp(t, t, MPFR_RNDN);

  mpfr_sub_ui(num, t, 1, MPFR_RNDN);
  mpfr_mul_ui(num, num, 3, MPFR_RNDN);
  mpfr_add_ui(den, t, 3, MPFR_RNDN);
  mpfr_div(num, num, den, MPFR_RNDN);

  // round to dyadic with out_bits fractional bits
  mpfr_mul_2ui(num, num, out_bits, MPFR_RNDN);
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, num, MPFR_RNDN);
  char* dec = mpz_get_str(nullptr, 10, z);
  Integer mant{std::string(dec)};
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(dec, std::strlen(dec) + 1);
  mpz_clear(z);
  mpfr_clear(u);
  mpfr_clear(t);
  mpfr_clear(num);
  mpfr_clear(den);

  return Rational(mant) / Rational(Integer(1) << out_bits);
}

}  // namespace ecf
