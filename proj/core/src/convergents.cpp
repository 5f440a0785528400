#include "ecf/convergents.hpp"

namespace ecf {

ConvergentSeq::ConvergentSeq() {
  // index 0 holds (p_0, q_0)
  p_.push_back(0);
  q_.push_back(1);
}

void ConvergentSeq::push(const EcfDigit& d) {
  const std::size_t n = p_.size();  // index being produced
  Integer twok = 2 * d.k;
  if (n == 1) {
    // p_1 = 2k_1*p_0 + xi_0*p_{-1} with p_{-1} = 1, q_{-1} = 0, xi_0 = 1
    p_.push_back(twok * p_[0] + 1);
    q_.push_back(twok * q_[0]);
  } else {
    int xi_prev = digits_[n - 2].xi;
    p_.push_back(twok * p_[n - 1] + xi_prev * p_[n - 2]);
    q_.push_back(twok * q_[n - 1] + xi_prev * q_[n - 2]);
  }
  digits_.push_back(d);
}

void ConvergentSeq::push_all(std::span<const EcfDigit> digits) {
  for (const auto& d : digits) push(d);
}

const Integer& ConvergentSeq::at(const std::vector<Integer>& v, std::size_t n) const {
  if (n >= v.size())
    throw InsufficientDigits("ConvergentSeq: index " + std::to_string(n) +
                             " beyond " + std::to_string(v.size() - 1) + " digits");
  return v[n];
}

const EcfDigit& ConvergentSeq::digit(std::size_t n) const {
  if (n < 1 || n > digits_.size())
    throw InsufficientDigits("ConvergentSeq::digit: bad index");
  return digits_[n - 1];
}

std::vector<Convergent> convergents(std::span<const EcfDigit> digits, std::size_t n) {
  if (digits.size() < n) throw InsufficientDigits("convergents: not enough digits");
  ConvergentSeq c;
  std::vector<Convergent> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    c.push(digits[i - 1]);
    out.push_back({c.p(i), c.q(i), i});
  }
  return out;
}

Integer hat_q(std::span<const SigmaSymbol> word, std::size_t n) {
  if (n == 0) return 1;
  auto nu = nu_indices(word, n);
  const long nu_n = nu[n];
  // nu_n reaches one digit into block n+1, so the opening digit of symbol n+1
  // (bar if its h > 0, its closer otherwise) is required as well
  OmegaWord omega = sigma_decode(word.subspan(0, n));
  if (static_cast<long>(omega.size()) < nu_n) {
    if (word.size() <= n)
      throw InsufficientDigits("hat_q: need symbol n+1 to reach q_{nu_n}");
    const auto& next = word[n];
    omega.push_back(next.h > 0 ? bar_digit() : next.closing_digit());
  }
  ConvergentSeq c;
  c.push_all(omega);
  return c.q(static_cast<std::size_t>(nu_n));
}

Rational backward_evaluate(std::span<const EcfDigit> digits, std::size_t m, BackwardMode mode) {
  if (m < 2 || digits.size() < m)
    throw std::domain_error("backward_evaluate: need m >= 2 digits");
  const std::size_t last = mode == BackwardMode::q ? 1 : 2;  // stop at k_1 or k_2
  OmegaWord rev;
  rev.reserve(m - last + 1);
  for (std::size_t j = m; j >= last; --j) {
    // pairs (k_j, xi_{j-1}); the final sign is unused by the evaluation
    int sign = j > last ? digits[j - 2].xi : 1;
    rev.emplace_back(digits[j - 1].k, sign);
  }
  return evaluate_word(rev);
}

Rational mobius_backward(const ConvergentSeq& c, std::size_t m, const Rational& gamma) {
  if (m < 2) throw std::domain_error("mobius_backward: m >= 2 required");
  Rational den = Rational(c.q(m)) + Rational(c.p(m)) * gamma;
  if (den == 0) throw std::domain_error("mobius_backward: degenerate denominator");
  return (Rational(c.q(m - 1)) + Rational(c.p(m - 1)) * gamma) / den;
}

RatInterval mobius_backward(const ConvergentSeq& c, std::size_t m, const RatInterval& gamma) {
  // (q' + p' g)/(q + p g) is monotone in g (derivative has the sign of
  // p'q - pq' = +-1), so endpoint images bound the interval image
  Rational a = mobius_backward(c, m, gamma.lo);
  Rational b = mobius_backward(c, m, gamma.hi);
  return RatInterval(std::move(a), std::move(b));
}

}  // namespace ecf
