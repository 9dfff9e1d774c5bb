#pragma once

#include <cstdint>
#include <string>

#include "bunred/core_types.hpp"

namespace bunred {

/// Symbolic vector bundle over (a dense open substack of) the moduli stack of
/// bundles of type `base`. Scalar automorphisms of a moduli point act on its
/// fibres as lambda^weight.
struct WeightedBundleDescriptor {
  std::string name;
  SheafType base;
  std::int64_t rank = 0;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedBundleDescriptor&, const WeightedBundleDescriptor&) = default;
};

// Constructors for the bundles the reduction uses.

/// Fibre at the base point of the universal bundle: rank r, weight 1.
WeightedBundleDescriptor universal_fibre(const SheafType& base);
/// Trivial bundle O^n: weight 0.
WeightedBundleDescriptor trivial_bundle(const SheafType& base, std::int64_t n);
/// A bundle built from a fixed sheaf on the curve; constant in moduli, weight 0.
WeightedBundleDescriptor fixed_bundle(std::string name, const SheafType& base, std::int64_t rank);

WeightedBundleDescriptor weight_of_dual(const WeightedBundleDescriptor& v);

/// Fibrewise Hom(src, dst): ranks multiply, weights subtract (dst - src).
WeightedBundleDescriptor weight_of_hom(const WeightedBundleDescriptor& src, const WeightedBundleDescriptor& dst);

/// Pullback along a map of moduli stacks that preserves scalar automorphisms:
/// rank and weight are unchanged, only the base moves.
WeightedBundleDescriptor pullback(const WeightedBundleDescriptor& v, const SheafType& new_base, std::string name);

/// Hom(E^univ, F) over Bun(base) for a fixed sheaf F of type `fixed`: the
/// generic Hom space has dimension chi(base, fixed) and the weight follows
/// the Hom rule with F of weight 0.
WeightedBundleDescriptor hom_from_universal(const GenusContext& ctx, const SheafType& base, const SheafType& fixed);

struct MinimalRankWitness {
  std::int64_t h = 0;                  ///< hcf(r, d)
  std::int64_t ell_min = 0;            ///< smallest deg(L) with a positive-rank twisted Hom
  std::int64_t universal_rank = 0;     ///< rank of E_p^univ, i.e. r
  std::int64_t twisted_rank = 0;       ///< r (1 - g + ell_min) + d
  std::int64_t scanned_hcf = 0;        ///< hcf of r and all twisted ranks over the scan
  std::int64_t scan_length = 0;
};

/// Arithmetic behind the minimal rank of a weight +-1 bundle: both witness
/// ranks are divisible by the minimal rank, whose hcf over a scan of
/// ell in [ell_min, ell_min + scan_length] must be exactly hcf(r, d).
MinimalRankWitness minimal_rank_divisor(const GenusContext& ctx, const SheafType& t, std::int64_t scan_length = 50);

/// Numerical shadow of V being generically V_0^n: minimal_rank | observed_rank.
bool rank_divisibility_check(std::int64_t minimal_rank, std::int64_t observed_rank);

}  // namespace bunred
