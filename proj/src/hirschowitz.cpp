#include "bunred/hirschowitz.hpp"

#include <algorithm>
#include <string>

#include "bunred/checked.hpp"
#include "bunred/euler.hpp"

namespace bunred {
namespace {

void require_positive_ranks(const SheafType& t1, const SheafType& t2, ErrorKind kind) {
  if (t1.rank() < 1 || t2.rank() < 1)
    throw Error(kind, "rank-zero types are not covered: " + t1.to_string() + ", " + t2.to_string());
}

bool within(std::int64_t v, std::int64_t bound) { return v >= -bound && v <= bound; }

}  // namespace

std::string_view to_string(MorphismKind kind) noexcept {
  switch (kind) {
    case MorphismKind::Surjective: return "surjective";
    case MorphismKind::Injective: return "injective";
    case MorphismKind::InjectiveTorsionfreeCokernel: return "injective with torsionfree cokernel";
  }
  return "unknown";
}

GenericHomReport generic_hom(const GenusContext& ctx, const SheafType& t1, const SheafType& t2) {
  ctx.require_reduction_genus();
  require_positive_ranks(t1, t2, ErrorKind::NotCovered);
  const std::int64_t chi = euler_form(ctx, t1, t2);
  if (chi < 0) return {0, 0, false};
  return {chi, 0, true};
}

MorphismKind generic_morphism_kind(const GenusContext& ctx, const SheafType& t1, const SheafType& t2) {
  ctx.require_reduction_genus();
  require_positive_ranks(t1, t2, ErrorKind::InvalidType);
  const std::int64_t chi = euler_form(ctx, t1, t2);
  if (chi < 1)
    throw Error(ErrorKind::HypothesisNotMet, "chi(t1, t2) = " + std::to_string(chi) + " < 1");
  if (t1.rank() > t2.rank()) return MorphismKind::Surjective;
  if (t1.rank() == t2.rank()) return MorphismKind::Injective;
  return MorphismKind::InjectiveTorsionfreeCokernel;
}

bool excess_identity(const GenusContext& ctx, const SheafType& t1, const SheafType& t2, const SheafType& tK,
                     const SheafType& tQ, std::int64_t m) {
  using namespace checked;
  if (sub(t1.rank(), tK.rank()) != sub(t2.rank(), tQ.rank()) ||
      sub(t1.degree(), tK.degree()) != sub(t2.degree(), tQ.degree()))
    throw Error(ErrorKind::InvalidSplitting, "t1 - tK != t2 - tQ");
  return sub(m, euler_form(ctx, t1, t2)) == neg(euler_form(ctx, tK, tQ));
}

SplittingScanReport no_bad_splitting_scan(const GenusContext& ctx, const SheafType& t1, const SheafType& t2,
                                          std::int64_t degree_bound) {
  using namespace checked;
  ctx.require_reduction_genus();
  require_positive_ranks(t1, t2, ErrorKind::InvalidType);
  if (degree_bound < 0) throw Error(ErrorKind::InvalidArgument, "degree bound must be >= 0");
  const std::int64_t chi12 = euler_form(ctx, t1, t2);
  if (chi12 < 0) throw Error(ErrorKind::HypothesisNotMet, "scan needs chi(t1, t2) >= 0");

  SplittingScanReport report;
  if (!within(t1.degree(), degree_bound) || !within(t2.degree(), degree_bound)) return report;

  auto fail = [&](const std::string& what, const SheafType& tK, const SheafType& t, const SheafType& tQ) {
    ++report.violations;
    throw Error(ErrorKind::TheoremContradicted,
                what + " for tK=" + tK.to_string() + " t=" + t.to_string() + " tQ=" + tQ.to_string());
  };

  const std::int64_t max_image_rank = std::min(t1.rank(), t2.rank());
  for (std::int64_t r = 1; r <= max_image_rank; ++r) {
    for (std::int64_t d = -degree_bound; d <= degree_bound; ++d) {
      const std::int64_t dK = sub(t1.degree(), d);
      const std::int64_t dQ = sub(t2.degree(), d);
      if (!within(dK, degree_bound) || !within(dQ, degree_bound)) continue;
      const std::int64_t rK = t1.rank() - r;
      const std::int64_t rQ = t2.rank() - r;
      if (rK < 1) continue;  // a rank-zero subsheaf of a bundle is zero
      const SheafType image(r, d);
      const SheafType kernel(rK, dK);

      // F1 stable: mu(K) < mu(F1) < mu(image)
      if (slope_cmp(kernel, t1) >= 0 || slope_cmp(t1, image) >= 0) continue;

      if (rQ == 0) {
        if (dQ <= 0) continue;
        const SheafType torsion(0, dQ);
        ++report.torsion_cokernel;
        const std::int64_t chi = euler_form(ctx, kernel, torsion);
        if (chi != mul(rK, dQ) || chi <= 0) fail("chi(tK, tQ) = rK dQ > 0 fails", kernel, image, torsion);
        continue;
      }

      const SheafType cokernel(rQ, dQ);
      // F2 stable: mu(image) < mu(F2) < mu(Q)
      if (slope_cmp(image, t2) >= 0 || slope_cmp(t2, cokernel) >= 0) continue;

      ++report.examined;
      const std::int64_t chiKQ = euler_form(ctx, kernel, cokernel);
      if (chiKQ <= 0) fail("chi(tK, tQ) <= 0 on the slope chain", kernel, image, cokernel);
      // chi(tK,tQ)/(rK rQ) > chi(t1,t2)/(r1 r2), cross-multiplied
      if (!(mul(chiKQ, t1.rank(), t2.rank()) > mul(chi12, rK, rQ)))
        fail("normalized chi inequality fails", kernel, image, cokernel);
    }
  }
  return report;
}

}  // namespace bunred
