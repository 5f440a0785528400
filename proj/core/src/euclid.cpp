#include "ecf/euclid.hpp"

#include <deque>

namespace ecf {

EuclidExpansion euclid_expand(const Rational& x, std::size_t max_digits) {
  if (x <= 0 || x > 1) throw std::domain_error("euclid_expand: x must be in (0,1]");
  EuclidExpansion out;
  Integer num = numerator(x), den = denominator(x);
  while (out.digits.size() < max_digits) {
    Integer a = den / num;
    Integer r = den % num;
    out.digits.emplace_back(a);
    if (r == 0) {
      out.finite = true;
      return out;
    }
    den = num;
    num = r;
  }
  return out;
}

EuclidWord euclid_expand(EcfStream::Refiner refiner, unsigned initial_bits,
                         unsigned max_bits, std::size_t n) {
  RatInterval base = refiner(initial_bits);
  unsigned bits = initial_bits;
  EuclidWord out;
  RatInterval iv = base;
  auto replay = [&]() {
    iv = base;
    for (const auto& d : out) {
      // G = 1/x - a, decreasing
      iv = RatInterval(1 / iv.hi - Rational(d.a), 1 / iv.lo - Rational(d.a));
    }
  };
  while (out.size() < n) {
    bool certain = false;
    Integer a;
    if (iv.lo > 0 && iv.hi <= 1) {
      Rational inv_hi = 1 / iv.hi;
      a = numerator(inv_hi) / denominator(inv_hi);
      certain = (a >= 1) && (Rational(1) <= (Rational(a) + 1) * iv.lo);
    }
    if (certain) {
      out.emplace_back(a);
      iv = RatInterval(1 / iv.hi - Rational(a), 1 / iv.lo - Rational(a));
      continue;
    }
    if (bits >= max_bits)
      throw PrecisionExhausted("euclid_expand: boundary straddle at max precision");
    bits = std::min(bits * 2, max_bits);
    base = refiner(bits).intersect(base);
    replay();
  }
  return out;
}

EuclidConvergentSeq::EuclidConvergentSeq() {
  p_.push_back(0);
  q_.push_back(1);
}

void EuclidConvergentSeq::push(const EuclidDigit& d) {
  const std::size_t n = p_.size();
  if (n == 1) {
    p_.push_back(d.a * p_[0] + 1);
    q_.push_back(d.a * q_[0]);
  } else {
    p_.push_back(d.a * p_[n - 1] + p_[n - 2]);
    q_.push_back(d.a * q_[n - 1] + q_[n - 2]);
  }
}

const Integer& EuclidConvergentSeq::p(std::size_t n) const {
  if (n >= p_.size()) throw InsufficientDigits("EuclidConvergentSeq: index out of range");
  return p_[n];
}
const Integer& EuclidConvergentSeq::q(std::size_t n) const {
  if (n >= q_.size()) throw InsufficientDigits("EuclidConvergentSeq: index out of range");
  return q_[n];
}

Rational evaluate_euclid(std::span<const EuclidDigit> word) {
  if (word.empty()) throw std::domain_error("evaluate_euclid: empty word");
  Rational t(word.back().a);
  for (std::size_t i = word.size() - 1; i-- > 0;) t = Rational(word[i].a) + 1 / t;
  return 1 / t;
}

namespace {

// Working quotient with the sign linking it to the next one.
struct Quot {
  Integer b;
  int sign_next;  // +1 or -1
};

}  // namespace

EcfConversion euclid_to_ecf(std::span<const EuclidDigit> word) {
  EcfConversion out;
  if (word.empty()) return out;

  std::deque<Quot> work;
  for (const auto& d : word) work.push_back({d.a, +1});

  while (!work.empty()) {
    Quot head = work.front();
    if (head.b % 2 == 0) {
      work.pop_front();
      out.digits.emplace_back(head.b / 2, work.empty() ? +1 : head.sign_next);
      continue;
    }
    // odd leading quotient: rewrite with the conversion identity
    work.pop_front();
    if (work.empty()) {
      // b = (b+1) - 1/1 and 1 is the (1,-1) tail
      out.digits.emplace_back((head.b + 1) / 2, -1);
      out.periodic_tail = true;
      return out;
    }
    Quot second = work.front();
    work.pop_front();
    std::vector<Quot> repl;
    if (work.empty()) {
      // terminal pair: b + 1/c = (b+1) - 1/(2 - 1/(2 - ... - 1/2)) with c-1
      // twos (the minus-linked chain of j twos evaluates to (j+1)/j)
      repl.push_back({head.b + 1, -1});
      for (Integer i = 0; i + 1 < second.b; ++i) repl.push_back({Integer(2), -1});
      repl.back().sign_next = +1;  // word ends here
    } else {
      // triplet (b, c, d) -> (b+1), c-1 twos, (d+1); minus signs throughout,
      // (d+1) keeps d's link to the rest
      Quot third = work.front();
      work.pop_front();
      repl.push_back({head.b + 1, -1});
      for (Integer i = 0; i + 1 < second.b; ++i) repl.push_back({Integer(2), -1});
      repl.push_back({third.b + 1, third.sign_next});
    }
    for (auto it = repl.rbegin(); it != repl.rend(); ++it) work.push_front(*it);
  }
  return out;
}

}  // namespace ecf
