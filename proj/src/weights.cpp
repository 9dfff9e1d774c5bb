#include "bunred/weights.hpp"

#include "bunred/checked.hpp"
#include "bunred/euler.hpp"

namespace bunred {

WeightedBundleDescriptor universal_fibre(const SheafType& base) {
  return {"E_p^univ", base, base.rank(), 1};
}

WeightedBundleDescriptor trivial_bundle(const SheafType& base, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "trivial bundle rank must be >= 0");
  return {"O^" + std::to_string(n), base, n, 0};
}

WeightedBundleDescriptor fixed_bundle(std::string name, const SheafType& base, std::int64_t rank) {
  if (rank < 0) throw Error(ErrorKind::InvalidArgument, "bundle rank must be >= 0");
  return {std::move(name), base, rank, 0};
}

WeightedBundleDescriptor weight_of_dual(const WeightedBundleDescriptor& v) {
  return {v.name + " dual", v.base, v.rank, checked::neg(v.weight)};
}

WeightedBundleDescriptor weight_of_hom(const WeightedBundleDescriptor& src, const WeightedBundleDescriptor& dst) {
  if (!(src.base == dst.base))
    throw Error(ErrorKind::BaseMismatch,
                "Hom(" + src.name + ", " + dst.name + ") over different stacks " + src.base.to_string() + " and " +
                    dst.base.to_string());
  return {"Hom(" + src.name + ", " + dst.name + ")", src.base, checked::mul(src.rank, dst.rank),
          checked::sub(dst.weight, src.weight)};
}

WeightedBundleDescriptor pullback(const WeightedBundleDescriptor& v, const SheafType& new_base, std::string name) {
  return {std::move(name), new_base, v.rank, v.weight};
}

WeightedBundleDescriptor hom_from_universal(const GenusContext& ctx, const SheafType& base, const SheafType& fixed) {
  const auto univ = pullback(universal_fibre(base), base, "E^univ");
  const auto f = fixed_bundle("F", base, 1);
  auto hom = weight_of_hom(univ, f);
  hom.rank = euler_form(ctx, base, fixed);
  return hom;
}

MinimalRankWitness minimal_rank_divisor(const GenusContext& ctx, const SheafType& t, std::int64_t scan_length) {
  if (t.rank() < 1) throw Error(ErrorKind::InvalidType, "minimal rank needs rank >= 1, got " + t.to_string());
  ctx.require_reduction_genus();
  if (scan_length < 0) throw Error(ErrorKind::InvalidArgument, "scan length must be >= 0");

  const std::int64_t r = t.rank();
  const std::int64_t d = t.degree();
  // r (1 - g + ell) + d >= 1  <=>  ell >= g - 1 + ceil((1 - d) / r)
  const std::int64_t num = 1 - d;
  const std::int64_t ceil_div = num >= 0 ? (num + r - 1) / r : -((-num) / r);
  const std::int64_t ell_min = checked::add(ctx.genus() - 1, ceil_div);
  auto twisted = [&](std::int64_t ell) {
    return checked::add(checked::mul(r, checked::add(ctx.one_minus_g(), ell)), d);
  };

  MinimalRankWitness w;
  w.h = hcf_of_type(t);
  w.ell_min = ell_min;
  w.universal_rank = r;
  w.twisted_rank = twisted(ell_min);
  w.scan_length = scan_length;
  if (w.twisted_rank < 1 || twisted(ell_min - 1) >= 1)
    throw Error(ErrorKind::InternalInvariantViolation, "ell_min is not minimal for " + t.to_string());

  std::int64_t acc = r;
  for (std::int64_t ell = ell_min; ell <= ell_min + scan_length; ++ell) {
    const std::int64_t rank = twisted(ell);
    if (hcf(r, rank) % w.h != 0)
      throw Error(ErrorKind::InternalInvariantViolation, "witness hcf not a multiple of h at ell=" + std::to_string(ell));
    acc = hcf(acc, rank);
  }
  w.scanned_hcf = acc;
  if (acc != w.h)
    throw Error(ErrorKind::InternalInvariantViolation,
                "scanned hcf " + std::to_string(acc) + " differs from h=" + std::to_string(w.h));
  return w;
}

bool rank_divisibility_check(std::int64_t minimal_rank, std::int64_t observed_rank) {
  if (minimal_rank <= 0) throw Error(ErrorKind::InvalidArgument, "minimal rank must be >= 1");
  return observed_rank % minimal_rank == 0;
}

}  // namespace bunred
