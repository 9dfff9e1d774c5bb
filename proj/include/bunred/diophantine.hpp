#pragma once

#include <cstdint>
#include <utility>

#include "bunred/core_types.hpp"

namespace bunred {

/// The auxiliary type t_F = (rF, dF) of one reduction step and the reduced
/// type t_1 = (r1, d1) derived from it.
///
/// Invariants: chi(t_F, t) = h, r < h rF < 2r, r1 = h rF - r, d1 = h dF - d,
/// h1 = hcf(r1, d1), h | h1 and r1 / h1 < r / h.
struct LemmaSolution {
  std::int64_t rF = 0;
  std::int64_t dF = 0;
  std::int64_t r1 = 0;
  std::int64_t d1 = 0;
  std::int64_t h = 0;
  std::int64_t h1 = 0;

  SheafType auxiliary() const { return {rF, dF}; }
  SheafType reduced() const { return {r1, d1}; }

  friend bool operator==(const LemmaSolution&, const LemmaSolution&) = default;
};

/// Solves (1 - g) rF r + rF d - r dF = h with r < h rF < 2r by one extended
/// Euclidean step: rF ((1 - g) r + d) = h (mod r) has a unique residue modulo
/// r / h, and exactly one representative lies in the open window
/// (r / h, 2 r / h).
///
/// Throws BaseCaseReached when r = h (there is nothing to reduce).
LemmaSolution solve_lemma(const GenusContext& ctx, const SheafType& t);

/// Independent scan of every rF in the window, testing integrality of dF.
/// Requires exactly one hit.
LemmaSolution solve_lemma_bruteforce(const GenusContext& ctx, const SheafType& t);

struct ExactRatio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
};

/// (r / h, r1 / h1) as reduced fractions; throws InternalInvariantViolation unless r1 h < r h1.
std::pair<ExactRatio, ExactRatio> reduction_measure(const LemmaSolution& sol, const SheafType& t);

/// Bezout coefficients: returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
struct BezoutResult {
  std::int64_t gcd = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};
BezoutResult extended_euclid(std::int64_t a, std::int64_t b);

}  // namespace bunred
