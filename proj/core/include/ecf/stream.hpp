#pragma once

#include "ecf/types.hpp"
#include "ecf/words.hpp"

#include <functional>
#include <optional>

namespace ecf {

// One digit-extraction step on an exact value in (0,1]: the (k, xi) with
// x in B(k,xi) and T(x) = xi(1/x - 2k).
struct DigitStep {
  EcfDigit digit;
  Rational next;        // T(x)
  bool terminated;      // T(x) == 0, i.e. 1/x was an even integer
};
DigitStep ecf_digit(const Rational& x);

// Lazy certified digit source. Exact for rationals; interval-backed with
// precision doubling for reals.
class EcfStream {
 public:
  enum class Status { active, terminated, periodic_tail, precision_exhausted };

  using Refiner = std::function<RatInterval(unsigned bits)>;

  static EcfStream from_rational(Rational x);
  static EcfStream from_interval(Refiner refiner, unsigned initial_bits,
                                 unsigned max_bits = kStreamMaxBits);

  // Emits the next digit, or nothing once the stream left the active state.
  std::optional<EcfDigit> next();

  // Emits up to n further digits; stops early on a status change.
  std::vector<EcfDigit> expand(std::size_t n);

  Status status() const { return status_; }
  const OmegaWord& digits() const { return emitted_; }

  bool exact() const { return !refiner_; }
  // Current remaining value T^n(x); exact sources only.
  const Rational& exact_value() const;
  // Certified bracket of the current remaining value.
  RatInterval current_interval() const;

  unsigned precision_bits() const { return bits_; }

  static constexpr unsigned kStreamMaxBits = 4096;

 private:
  EcfStream() = default;
  void step_exact();
  void step_interval();
  bool replay(const RatInterval& base);

  Status status_ = Status::active;
  OmegaWord emitted_;

  // exact source
  Rational value_;

  // interval source
  Refiner refiner_;
  RatInterval base_, current_;
  unsigned bits_ = 0;
  unsigned max_bits_ = kStreamMaxBits;
};

// Pulls digits from a stream and groups them into Sigma symbols on demand.
class SigmaReader {
 public:
  explicit SigmaReader(EcfStream stream, long tau_limit = kDefaultTauScanLimit)
      : stream_(std::move(stream)), tau_limit_(tau_limit) {}

  // Ensures symbols 1..n are available; returns false if the stream ran out
  // (terminated / periodic tail) before assembling them. Propagates
  // PrecisionExhausted from interval sources.
  bool ensure(std::size_t n);

  const SigmaSymbol& symbol(std::size_t j);        // 1-based
  const EcfDigit& omega_digit(std::size_t i);      // 1-based
  std::size_t available() const { return symbols_.size(); }
  std::size_t omega_available() const { return stream_.digits().size(); }
  EcfStream& stream() { return stream_; }

 private:
  EcfStream stream_;
  SigmaWord symbols_;
  std::size_t consumed_ = 0;  // omega digits folded into symbols_
  long tau_limit_;
};

}  // namespace ecf
