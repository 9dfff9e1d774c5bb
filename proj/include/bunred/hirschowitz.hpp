#pragma once

#include <cstdint>
#include <string_view>

#include "bunred/core_types.hpp"

namespace bunred {

/// Predicted Hom/Ext^1 dimensions for a general pair of bundles of types
/// (t1, t2). Only the chi(t1, t2) >= 0 case is covered; otherwise `covered`
/// is false and the dimensions are left at zero.
struct GenericHomReport {
  std::int64_t hom_dim = 0;
  std::int64_t ext_dim = 0;
  bool covered = false;

  friend bool operator==(const GenericHomReport&, const GenericHomReport&) = default;
};

enum class MorphismKind { Surjective, Injective, InjectiveTorsionfreeCokernel };

std::string_view to_string(MorphismKind kind) noexcept;

GenericHomReport generic_hom(const GenusContext& ctx, const SheafType& t1, const SheafType& t2);

/// Shape of a general morphism F1 -> F2 when chi(t1, t2) >= 1, decided by
/// comparing ranks.
MorphismKind generic_morphism_kind(const GenusContext& ctx, const SheafType& t1, const SheafType& t2);

/// Excess identity m - chi(t1, t2) = -chi(tK, tQ) for a morphism with kernel
/// type tK, image type t and cokernel type tQ (t1 = tK + t, t2 = t + tQ).
bool excess_identity(const GenusContext& ctx, const SheafType& t1, const SheafType& t2, const SheafType& tK,
                     const SheafType& tQ, std::int64_t m);

struct SplittingScanReport {
  std::int64_t examined = 0;           ///< splittings with tK, tQ of positive rank on the strict slope chain
  std::int64_t torsion_cokernel = 0;   ///< splittings with tQ = (0, dQ), dQ > 0
  std::int64_t violations = 0;
};

/// Exhausts all splittings t1 = tK + t, t2 = t + tQ allowed by stability of
/// general F1, F2 with every degree bounded by |degree_bound|, and confirms
/// chi(tK, tQ) > 0 on each (so such a morphism cannot be general).
///
/// Throws TheoremContradicted on the first violation.
SplittingScanReport no_bad_splitting_scan(const GenusContext& ctx, const SheafType& t1, const SheafType& t2,
                                          std::int64_t degree_bound);

}  // namespace bunred
