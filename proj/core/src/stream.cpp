#include "ecf/stream.hpp"

namespace ecf {

DigitStep ecf_digit(const Rational& x) {
  if (x <= 0 || x > 1) throw std::domain_error("ecf_digit: x must be in (0,1]");
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  Integer n = den / num;
  Integer r = den % num;
  if (r == 0) {
    if (n % 2 == 0) return {EcfDigit(n / 2, 1), Rational(0), true};
    // 1/x an odd integer: digit ((n+1)/2, -1), T(x) = 1 (the tail entry point)
    return {EcfDigit((n + 1) / 2, -1), Rational(1), false};
  }
  if (n % 2 == 0) return {EcfDigit(n / 2, 1), Rational(r) / Rational(num), false};
  return {EcfDigit((n + 1) / 2, -1), Rational(num - r) / Rational(num), false};
}

EcfStream EcfStream::from_rational(Rational x) {
  if (x <= 0 || x > 1) throw std::domain_error("EcfStream: value must be in (0,1]");
  EcfStream s;
  s.value_ = std::move(x);
  if (s.value_ == 1) s.status_ = Status::periodic_tail;
  return s;
}

EcfStream EcfStream::from_interval(Refiner refiner, unsigned initial_bits, unsigned max_bits) {
  EcfStream s;
  s.refiner_ = std::move(refiner);
  s.bits_ = initial_bits;
  s.max_bits_ = max_bits;
  s.base_ = s.refiner_(s.bits_);
  if (s.base_.lo < 0 || s.base_.hi > 1)
    throw std::domain_error("EcfStream: interval source must lie inside (0,1]");
  s.current_ = s.base_;
  return s;
}

std::optional<EcfDigit> EcfStream::next() {
  if (status_ != Status::active) {
    if (status_ == Status::precision_exhausted)
      throw PrecisionExhausted("EcfStream: interval straddles a boundary at max precision");
    return std::nullopt;
  }
  const std::size_t before = emitted_.size();
  if (exact()) step_exact(); else step_interval();
  if (emitted_.size() == before) {
    if (status_ == Status::precision_exhausted)
      throw PrecisionExhausted("EcfStream: interval straddles a boundary at max precision");
    return std::nullopt;
  }
  return emitted_.back();
}

std::vector<EcfDigit> EcfStream::expand(std::size_t n) {
  std::vector<EcfDigit> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n && status_ == Status::active; ++i) {
    const std::size_t before = emitted_.size();
    if (exact()) step_exact(); else step_interval();
    if (emitted_.size() > before) out.push_back(emitted_.back());
  }
  if (status_ == Status::precision_exhausted)
    throw PrecisionExhausted("EcfStream: interval straddles a boundary at max precision");
  return out;
}

void EcfStream::step_exact() {
  if (value_ == 1) {  // 1 = [[(1,-1),(1,-1),...]]
    status_ = Status::periodic_tail;
    return;
  }
  DigitStep s = ecf_digit(value_);
  emitted_.push_back(s.digit);
  value_ = std::move(s.next);
  if (s.terminated) status_ = Status::terminated;
  else if (value_ == 1) status_ = Status::periodic_tail;
}

namespace {

// Digit of the open interval (lo, hi): the integer window [j, j+1) containing
// 1/x for every interior x, if one exists.
struct IntervalDigit {
  bool certain = false;
  Integer j;
};

IntervalDigit interval_digit(const RatInterval& iv) {
  IntervalDigit out;
  if (iv.hi <= 0) return out;
  // j = floor(1/hi); certified when 1/lo <= j+1 (interior y in (1/hi, 1/lo))
  Rational inv_hi = 1 / iv.hi;
  Integer j = numerator(inv_hi) / denominator(inv_hi);
  out.j = j;
  if (iv.lo <= 0) {
    out.certain = false;  // interval reaches down to 0: 1/lo unbounded
    return out;
  }
  out.certain = (1 <= j) && (Rational(1) <= (Rational(j) + 1) * iv.lo);
  return out;
}

RatInterval apply_branch(const RatInterval& iv, const Integer& j) {
  if (j % 2 == 0) {
    // T = 1/x - j, decreasing in x
    return RatInterval(1 / iv.hi - Rational(j), 1 / iv.lo - Rational(j));
  }
  // T = (j+1) - 1/x, increasing in x
  return RatInterval(Rational(j + 1) - 1 / iv.lo, Rational(j + 1) - 1 / iv.hi);
}

EcfDigit digit_from_window(const Integer& j) {
  if (j % 2 == 0) return EcfDigit(j / 2, 1);
  return EcfDigit((j + 1) / 2, -1);
}

}  // namespace

bool EcfStream::replay(const RatInterval& base) {
  RatInterval iv = base;
  for (const auto& d : emitted_) {
    Integer j = d.xi == 1 ? Integer(2 * d.k) : Integer(2 * d.k - 1);
    iv = apply_branch(iv, j);
  }
  current_ = iv;
  return true;
}

void EcfStream::step_interval() {
  for (;;) {
    IntervalDigit id = interval_digit(current_);
    if (id.certain) {
      emitted_.push_back(digit_from_window(id.j));
      current_ = apply_branch(current_, id.j);
      return;
    }
    if (bits_ >= max_bits_) {
      status_ = Status::precision_exhausted;
      return;
    }
    bits_ = std::min(bits_ * 2, max_bits_);
    RatInterval refined = refiner_(bits_);
    // keep brackets nested so the emitted prefix stays valid under replay
    base_ = refined.intersect(base_);
    replay(base_);
  }
}

const Rational& EcfStream::exact_value() const {
  if (!exact()) throw std::logic_error("EcfStream: exact_value on interval source");
  return value_;
}

RatInterval EcfStream::current_interval() const {
  if (exact()) return RatInterval::point(value_);
  return current_;
}

bool SigmaReader::ensure(std::size_t n) {
  while (symbols_.size() < n) {
    // scan one block: bars then a closer
    long h = 0;
    for (;;) {
      std::size_t idx = consumed_ + static_cast<std::size_t>(h);
      while (stream_.digits().size() <= idx) {
        if (!stream_.next()) return false;
      }
      const EcfDigit& d = stream_.digits()[idx];
      if (d.is_bar()) {
        if (++h > tau_limit_)
          throw UnboundedPrefix("SigmaReader: (1,-1) run exceeds the scan limit");
        continue;
      }
      symbols_.emplace_back(h, d.k, d.xi);
      consumed_ = idx + 1;
      break;
    }
  }
  return true;
}

const SigmaSymbol& SigmaReader::symbol(std::size_t j) {
  if (j == 0) throw std::domain_error("SigmaReader::symbol is 1-based");
  if (!ensure(j)) throw InsufficientDigits("SigmaReader: source exhausted before symbol");
  return symbols_[j - 1];
}

const EcfDigit& SigmaReader::omega_digit(std::size_t i) {
  if (i == 0) throw std::domain_error("SigmaReader::omega_digit is 1-based");
  while (stream_.digits().size() < i) {
    if (!stream_.next()) throw InsufficientDigits("SigmaReader: source exhausted before digit");
  }
  return stream_.digits()[i - 1];
}

}  // namespace ecf
