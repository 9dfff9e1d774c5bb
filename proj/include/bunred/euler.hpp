#pragma once

#include <cstdint>

#include "bunred/core_types.hpp"

namespace bunred {

/// Riemann-Roch Euler form
///   chi(t1, t2) = (1 - g) r1 r2 + r1 d2 - r2 d1
/// as a bare bilinear integer form. No theorem hypotheses are enforced here.
std::int64_t euler_form(const GenusContext& ctx, const SheafType& t1, const SheafType& t2);

/// Dimension of the stack of type-t objects, -chi(t, t) = (g - 1) r^2.
std::int64_t bun_stack_dim(const GenusContext& ctx, const SheafType& t);

/// Relative dimension of the stack of extensions 0 -> F2 -> F -> F1 -> 0 over
/// the product of the two coherent-sheaf stacks, -chi(t2, t1).
std::int64_t ext_relative_dim(const GenusContext& ctx, const SheafType& t1, const SheafType& t2);

/// Absolute dimension of the extension stack,
/// -chi(t2, t2) - chi(t2, t1) - chi(t1, t1).
std::int64_t ext_stack_dim(const GenusContext& ctx, const SheafType& t1, const SheafType& t2);

}  // namespace bunred
