#include "bunred/diophantine.hpp"

#include <string>

#include "bunred/checked.hpp"

namespace bunred {
namespace {

std::int64_t checked_hcf(const GenusContext& ctx, const SheafType& t) {
  ctx.require_reduction_genus();
  const std::int64_t h = hcf_of_type(t);
  if (t.rank() == h)
    throw Error(ErrorKind::BaseCaseReached, "r = h for " + t.to_string() + "; nothing to reduce");
  return h;
}

// r1, d1, h1 from (rF, dF) plus the invariants every solution must meet.
LemmaSolution complete(const SheafType& t, std::int64_t h, std::int64_t rF, std::int64_t dF) {
  using namespace checked;
  LemmaSolution sol;
  sol.rF = rF;
  sol.dF = dF;
  sol.h = h;
  sol.r1 = sub(mul(h, rF), t.rank());
  sol.d1 = sub(mul(h, dF), t.degree());
  if (sol.r1 < 1 || sol.r1 >= t.rank())
    throw Error(ErrorKind::InternalInvariantViolation, "reduced rank out of (0, r) for " + t.to_string());
  sol.h1 = hcf(sol.r1, sol.d1);
  if (sol.h1 % h != 0)
    throw Error(ErrorKind::InternalInvariantViolation, "h does not divide h1 for " + t.to_string());
  return sol;
}

}  // namespace

BezoutResult extended_euclid(std::int64_t a, std::int64_t b) {
  using namespace checked;
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = sub(old_r, mul(q, r));
    std::swap(old_r, r);
    old_x = sub(old_x, mul(q, x));
    std::swap(old_x, x);
    old_y = sub(old_y, mul(q, y));
    std::swap(old_y, y);
  }
  if (old_r < 0) return {neg(old_r), neg(old_x), neg(old_y)};
  return {old_r, old_x, old_y};
}

LemmaSolution solve_lemma(const GenusContext& ctx, const SheafType& t) {
  using namespace checked;
  const std::int64_t h = checked_hcf(ctx, t);
  const std::int64_t r = t.rank();
  const std::int64_t modulus = r / h;  // >= 2 since r > h

  // chi(t_F, t) = rF ((1 - g) r + d) - r dF, so chi = h is a Bezout
  // relation between a := (1 - g) r + d and r; gcd(a, r) = gcd(d, r) = h.
  const std::int64_t a = add(mul(ctx.one_minus_g(), r), t.degree());
  const BezoutResult bez = extended_euclid(a, r);
  if (bez.gcd != h)
    throw Error(ErrorKind::InternalInvariantViolation, "hcf(r, (1-g)r+d) != h for " + t.to_string());

  const std::int64_t residue = ((bez.x % modulus) + modulus) % modulus;
  if (residue == 0)
    throw Error(ErrorKind::InternalInvariantViolation, "rF = 0 mod r/h for " + t.to_string());
  const std::int64_t rF = residue + modulus;

  const std::int64_t num = sub(mul(rF, a), h);
  if (num % r != 0)
    throw Error(ErrorKind::InternalInvariantViolation, "non-integral dF for " + t.to_string());
  return complete(t, h, rF, num / r);
}

LemmaSolution solve_lemma_bruteforce(const GenusContext& ctx, const SheafType& t) {
  using namespace checked;
  const std::int64_t h = checked_hcf(ctx, t);
  const std::int64_t r = t.rank();
  const std::int64_t d = t.degree();

  int hits = 0;
  std::int64_t hit_rF = 0, hit_dF = 0;
  // all rF with r < h rF < 2r
  for (std::int64_t rF = 1; mul(h, rF) < 2 * r; ++rF) {
    if (mul(h, rF) <= r) continue;
    // r dF = (1 - g) rF r + rF d - h
    const std::int64_t rhs = sub(add(mul(ctx.one_minus_g(), rF, r), mul(rF, d)), h);
    if (rhs % r != 0) continue;
    ++hits;
    hit_rF = rF;
    hit_dF = rhs / r;
  }
  if (hits != 1)
    throw Error(ErrorKind::InternalInvariantViolation,
                std::to_string(hits) + " window solutions for " + t.to_string() + " (expected exactly 1)");
  return complete(t, h, hit_rF, hit_dF);
}

std::pair<ExactRatio, ExactRatio> reduction_measure(const LemmaSolution& sol, const SheafType& t) {
  if (sol.h < 1 || sol.h1 < 1 || !(checked::mul(sol.r1, sol.h) < checked::mul(t.rank(), sol.h1)))
    throw Error(ErrorKind::InternalInvariantViolation,
                "r/h does not strictly decrease: " + std::to_string(t.rank()) + "/" + std::to_string(sol.h) + " -> " +
                    std::to_string(sol.r1) + "/" + std::to_string(sol.h1));
  const auto reduced = [](std::int64_t num, std::int64_t den) {
    const std::int64_t g = hcf(num, den);
    return ExactRatio{num / g, den / g};
  };
  return {reduced(t.rank(), sol.h), reduced(sol.r1, sol.h1)};
}

}  // namespace bunred
