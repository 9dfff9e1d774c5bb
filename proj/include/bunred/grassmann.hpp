#pragma once

#include <cstdint>

#include "bunred/core_types.hpp"
#include "bunred/degree_map.hpp"

namespace bunred {

/// Gr_j(V) over a base stack of dimension base_dim, V of the given rank/weight.
struct GrassmannBundleDescriptor {
  std::int64_t base_dim = 0;
  std::int64_t j = 0;
  std::int64_t bundle_rank = 0;
  std::int64_t bundle_weight = 0;
};

/// base_dim + j (rank - j).
std::int64_t gr_total_dim(const GrassmannBundleDescriptor& d);

/// The two Grassmannian-bundle descriptions of the quasiparabolic stack
/// Par^m_{r,d}: over Bun(r, d) via the dual fibre, or over Bun(r, d - m).
enum class HeckeRoute { Hecke1, Hecke2 };

std::int64_t parabolic_dim(const GenusContext& ctx, std::int64_t r, std::int64_t d, std::int64_t m, HeckeRoute route);

/// Determinant-degree change from the Bun(r, d) side of the Hecke
/// correspondence to the Bun(r, d - m) side: deg -> deg - m.
DegreeAffineMap hecke_det_shift(std::int64_t m);

/// Hypothesis of the birationally linear map Gr_j(V) --> Gr_j(W): equal
/// weights and j <= rk W <= rk V.
bool check_map_precondition(std::int64_t j, std::int64_t rank_w, std::int64_t rank_v, std::int64_t weight_v,
                            std::int64_t weight_w);

/// Gr_j of a weight +-1 bundle over Bun(t) is birationally linear when
/// hcf(r, d) divides j.
bool check_gr_rational(std::int64_t j, const SheafType& t);

}  // namespace bunred
