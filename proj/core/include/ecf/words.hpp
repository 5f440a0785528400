#pragma once

#include "ecf/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

namespace ecf {

inline constexpr long kDefaultTauScanLimit = 1'000'000;

// Number of leading (1,-1) digits. Throws UnboundedPrefix past the scan
// limit, which signals a (1,-1)-tail input.
long tau(std::span<const EcfDigit> word, long scan_limit = kDefaultTauScanLimit);

struct SigmaEncodeResult {
  SigmaWord symbols;
  OmegaWord leftover;  // trailing incomplete block (a run of (1,-1) with no closer)
};

// Greedy re-blocking of an Omega word into Sigma symbols. A block is h copies
// of (1,-1) followed by one closing digit != (1,-1).
SigmaEncodeResult sigma_encode(std::span<const EcfDigit> word);

// Inverse of sigma_encode on complete blocks.
OmegaWord sigma_decode(std::span<const SigmaSymbol> word);

// theta_0..theta_n and nu_0..nu_n of a Sigma word (theta_0 = nu_0 = 1,
// theta_i = 1 + h_i, nu_n = sum of thetas).
std::vector<long> theta_list(std::span<const SigmaSymbol> word, std::size_t n);
std::vector<long> nu_indices(std::span<const SigmaSymbol> word, std::size_t n);

// Exact value of the finite word [[(k_1,xi_1),...,(k_m,*)]] with the innermost
// level closed by `tail`: the fold is t_m = 2k_m + tail, t_i = 2k_i + xi_i/t_{i+1},
// value = 1/t_1. tail = 0 gives the plain finite evaluation (last sign unused);
// tail = -1 with a trailing (1,-1)-tail word evaluates periodic-tail rationals;
// tail = gamma evaluates the doubly-infinite backward words of Appendix-style
// identities. Requires a nonempty word.
Rational evaluate_with_tail(std::span<const EcfDigit> word, const Rational& tail);
inline Rational evaluate_word(std::span<const EcfDigit> word) {
  return evaluate_with_tail(word, Rational(0));
}
// Interval version: the fold of a tail interval through exact Moebius steps.
RatInterval evaluate_with_tail(std::span<const EcfDigit> word, const RatInterval& tail);

Rational evaluate_sigma(std::span<const SigmaSymbol> word);

}  // namespace ecf
