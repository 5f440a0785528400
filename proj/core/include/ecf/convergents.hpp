#pragma once

#include "ecf/types.hpp"
#include "ecf/words.hpp"

#include <span>

namespace ecf {

// Incremental p_n/q_n from p_n = 2k_n p_{n-1} + xi_{n-1} p_{n-2} (same for q),
// seeded q_{-1} = p_0 = 0, p_{-1} = q_0 = xi_0 = 1.
class ConvergentSeq {
 public:
  ConvergentSeq();

  void push(const EcfDigit& d);
  void push_all(std::span<const EcfDigit> digits);

  std::size_t size() const { return p_.size() - 1; }  // digits pushed so far
  const Integer& p(std::size_t n) const { return at(p_, n); }
  const Integer& q(std::size_t n) const { return at(q_, n); }
  Rational value(std::size_t n) const { return Rational(p(n)) / Rational(q(n)); }
  const EcfDigit& digit(std::size_t n) const;  // 1-based

 private:
  const Integer& at(const std::vector<Integer>& v, std::size_t n) const;
  std::vector<Integer> p_, q_;
  std::vector<EcfDigit> digits_;
};

struct Convergent {
  Integer p, q;
  std::size_t index = 0;
};

std::vector<Convergent> convergents(std::span<const EcfDigit> digits, std::size_t n);

// q_hat_n = q_{nu_n} for n >= 1, q_hat_0 = 1.
Integer hat_q(std::span<const SigmaSymbol> word, std::size_t n);

enum class BackwardMode { q, p };

// Appendix-style reversed word [[(k_m,xi_{m-1}),...,(k_1,*)]] (mode q) or the
// p-analogue stopping at (k_2,*) (mode p), evaluated exactly.
Rational backward_evaluate(std::span<const EcfDigit> digits, std::size_t m, BackwardMode mode);

// beta = (q_{m-1} + p_{m-1} gamma) / (q_m + p_m gamma).
Rational mobius_backward(const ConvergentSeq& c, std::size_t m, const Rational& gamma);
RatInterval mobius_backward(const ConvergentSeq& c, std::size_t m, const RatInterval& gamma);

}  // namespace ecf
