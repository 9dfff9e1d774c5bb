#include "bunred/grassmann.hpp"

#include "bunred/checked.hpp"
#include "bunred/euler.hpp"

namespace bunred {

std::int64_t gr_total_dim(const GrassmannBundleDescriptor& d) {
  if (d.j < 0 || d.j > d.bundle_rank)
    throw Error(ErrorKind::InvalidArgument,
                "Gr_j needs 0 <= j <= rank, got j=" + std::to_string(d.j) + " rank=" + std::to_string(d.bundle_rank));
  return checked::add(d.base_dim, checked::mul(d.j, d.bundle_rank - d.j));
}

std::int64_t parabolic_dim(const GenusContext& ctx, std::int64_t r, std::int64_t d, std::int64_t m, HeckeRoute route) {
  ctx.require_reduction_genus();
  if (m < 1 || m > r)
    throw Error(ErrorKind::InvalidArgument,
                "multiplicity must lie in [1, r], got m=" + std::to_string(m) + " r=" + std::to_string(r));
  const SheafType base = route == HeckeRoute::Hecke1 ? SheafType(r, d) : SheafType(r, checked::sub(d, m));
  return gr_total_dim({bun_stack_dim(ctx, base), m, r, route == HeckeRoute::Hecke1 ? -1 : 1});
}

DegreeAffineMap hecke_det_shift(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "Hecke multiplicity must be >= 1");
  return {1, checked::neg(m)};
}

bool check_map_precondition(std::int64_t j, std::int64_t rank_w, std::int64_t rank_v, std::int64_t weight_v,
                            std::int64_t weight_w) {
  return j <= rank_w && rank_w <= rank_v && weight_v == weight_w;
}

bool check_gr_rational(std::int64_t j, const SheafType& t) {
  return j % hcf_of_type(t) == 0;
}

}  // namespace bunred
