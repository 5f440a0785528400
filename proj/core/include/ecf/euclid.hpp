#pragma once

#include "ecf/stream.hpp"
#include "ecf/types.hpp"

namespace ecf {

struct EuclidDigit {
  Integer a;
  explicit EuclidDigit(Integer aa) : a(std::move(aa)) {
    if (a < 1) throw std::domain_error("EuclidDigit: a must be >= 1");
  }
  bool operator==(const EuclidDigit& o) const { return a == o.a; }
};

using EuclidWord = std::vector<EuclidDigit>;

struct EuclidExpansion {
  EuclidWord digits;
  bool finite = false;  // rational source fully expanded
};

// Gauss-map digits a_n = floor(1/G^{n-1}(x)). Exact and total for rationals
// (the floor algorithm never emits a trailing 1 except for x = 1 itself).
EuclidExpansion euclid_expand(const Rational& x, std::size_t max_digits);

// Certified expansion of an interval-backed real; throws PrecisionExhausted
// when the bracket straddles a Gauss-partition boundary at max precision.
EuclidWord euclid_expand(EcfStream::Refiner refiner, unsigned initial_bits,
                         unsigned max_bits, std::size_t n);

// Euclidean convergents P_n/Q_n with Q_{-1} = P_0 = 0, P_{-1} = Q_0 = 1.
class EuclidConvergentSeq {
 public:
  EuclidConvergentSeq();
  void push(const EuclidDigit& d);
  std::size_t size() const { return p_.size() - 1; }
  const Integer& p(std::size_t n) const;
  const Integer& q(std::size_t n) const;

 private:
  std::vector<Integer> p_, q_;
};

Rational evaluate_euclid(std::span<const EuclidDigit> word);

struct EcfConversion {
  OmegaWord digits;
  bool periodic_tail = false;  // expansion continues with the (1,-1) tail
};

// Exact Euclid -> ECF conversion by repeated local rewriting of triplets with
// odd leading quotient, moving left to right.
EcfConversion euclid_to_ecf(std::span<const EuclidDigit> word);

}  // namespace ecf
