#include "ecf/words.hpp"

namespace ecf {

long tau(std::span<const EcfDigit> word, long scan_limit) {
  long count = 0;
  for (const auto& d : word) {
    if (!d.is_bar()) return count;
    if (++count > scan_limit)
      throw UnboundedPrefix("tau: more than scan_limit leading (1,-1) digits");
  }
  throw InsufficientDigits("tau: word ends inside a (1,-1) run");
}

SigmaEncodeResult sigma_encode(std::span<const EcfDigit> word) {
  SigmaEncodeResult out;
  long h = 0;
  std::size_t block_start = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].is_bar()) {
      ++h;
    } else {
      out.symbols.emplace_back(h, word[i].k, word[i].xi);
      h = 0;
      block_start = i + 1;
    }
  }
  out.leftover.assign(word.begin() + block_start, word.end());
  return out;
}

OmegaWord sigma_decode(std::span<const SigmaSymbol> word) {
  OmegaWord out;
  for (const auto& s : word) {
    for (long i = 0; i < s.h; ++i) out.push_back(bar_digit());
    out.push_back(s.closing_digit());
  }
  return out;
}

std::vector<long> theta_list(std::span<const SigmaSymbol> word, std::size_t n) {
  if (word.size() < n)
    throw InsufficientDigits("theta_list: need " + std::to_string(n) + " symbols");
  std::vector<long> theta;
  theta.reserve(n + 1);
  theta.push_back(1);  // theta_0
  for (std::size_t i = 0; i < n; ++i) theta.push_back(1 + word[i].h);
  return theta;
}

std::vector<long> nu_indices(std::span<const SigmaSymbol> word, std::size_t n) {
  auto theta = theta_list(word, n);
  std::vector<long> nu(theta.size());
  long acc = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    acc += theta[i];
    nu[i] = acc;
  }
  return nu;
}

Rational evaluate_with_tail(std::span<const EcfDigit> word, const Rational& tail) {
  if (word.empty()) throw std::domain_error("evaluate_with_tail: empty word");
  Rational t = 2 * Rational(word.back().k) + tail;
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    if (t == 0) throw std::domain_error("evaluate_with_tail: zero denominator");
    t = 2 * Rational(word[i].k) + Rational(word[i].xi) / t;
  }
  if (t == 0) throw std::domain_error("evaluate_with_tail: zero denominator");
  return 1 / t;
}

RatInterval evaluate_with_tail(std::span<const EcfDigit> word, const RatInterval& tail) {
  if (word.empty()) throw std::domain_error("evaluate_with_tail: empty word");
  // innermost level: t = 2k_m + tail, then fold outwards; every level satisfies
  // t > 2k - 1 >= 1, so the inversions are safe
  RatInterval t(2 * Rational(word.back().k) + tail.lo,
                2 * Rational(word.back().k) + tail.hi);
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    RatInterval inv = word[i].xi == 1 ? RatInterval(1 / t.hi, 1 / t.lo)
                                      : RatInterval(-1 / t.lo, -1 / t.hi);
    t = RatInterval(2 * Rational(word[i].k) + inv.lo, 2 * Rational(word[i].k) + inv.hi);
  }
  return RatInterval(1 / t.hi, 1 / t.lo);
}

Rational evaluate_sigma(std::span<const SigmaSymbol> word) {
  auto omega = sigma_decode(word);
  return evaluate_word(omega);
}

}  // namespace ecf
