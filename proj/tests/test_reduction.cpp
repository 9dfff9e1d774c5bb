#include <doctest.h>

#include "bunred/reduction.hpp"
#include "generators.hpp"

using namespace bunred;

namespace {

const CompositeStep& composite(const StepNode& n) { return std::get<CompositeStep>(n.step); }
CompositeStep& composite(StepNode& n) { return std::get<CompositeStep>(n.step); }
const BaseStep& base(const StepNode& n) { return std::get<BaseStep>(n.step); }

}  // namespace

TEST_CASE("reduce g=2 (2,1)") {
  const auto trace = reduce(GenusContext(2), {2, 1});
  CHECK(trace.h == 1);
  CHECK(trace.total_affine_dim == 3);
  const auto& c = composite(trace.root);
  CHECK(c.sol.rF == 3);
  CHECK(c.sol.dF == -2);
  CHECK(c.rkV == 4);
  CHECK(c.rho_affine == 3);
  CHECK(c.hecke_affine == 0);
  REQUIRE(c.mu1->is_base());
  CHECK(base(*c.mu1).type == SheafType(1, -3));
  CHECK(base(*c.mu1).twist_degree == 3);
  REQUIRE(c.mu2->is_base());
  CHECK(base(*c.mu2).type == SheafType(1, -1));
  CHECK(base(*c.mu2).twist_degree == 1);
  const std::vector<DegreeAffineMap> ledger{{-1, -2}, {1, 3}, {1, -1}, {1, 1}};
  CHECK(c.det_maps == ledger);
  CHECK(trace.composite_det == DegreeAffineMap{-1, 1});
  CHECK(trace.composite_det.apply(1) == 0);
  CHECK(verify_trace(trace).ok());
}

TEST_CASE("reduce g=2 (4,2)") {
  const auto trace = reduce(GenusContext(2), {4, 2});
  const auto& c = composite(trace.root);
  CHECK(c.sol == LemmaSolution{3, -2, 2, -6, 2, 2});
  CHECK(c.rkV == 8);
  CHECK(c.rho_affine == 12);
  CHECK(c.hecke_affine == 0);
  CHECK(c.mu1->is_base());
  CHECK(c.mu2->is_base());
  CHECK(trace.total_affine_dim == 12);
  CHECK(verify_trace(trace).ok());
}

TEST_CASE("reduce g=3 (3,1)") {
  const auto trace = reduce(GenusContext(3), {3, 1});
  CHECK(composite(trace.root).sol.rF == 4);
  CHECK(composite(trace.root).sol.dF == -7);
  CHECK(trace.total_affine_dim == 16);
  CHECK(verify_trace(trace).ok());
}

TEST_CASE("reduce base case") {
  const auto trace = reduce(GenusContext(2), {3, 0});
  REQUIRE(trace.root.is_base());
  CHECK(base(trace.root).twist_degree == 0);
  CHECK(trace.total_affine_dim == 0);
  CHECK(trace.composite_det == DegreeAffineMap::identity());
  CHECK(verify_trace(trace).ok());

  const auto twisted = reduce(GenusContext(2), {2, -6});
  CHECK(base(twisted.root).twist_degree == 3);
  CHECK(twisted.composite_det.apply(-6) == 0);
}

TEST_CASE("reduce with a nontrivial Hecke step and nested children") {
  // g=4 (5,3): h1 = 2 > h = 1, so theta2 contributes and mu2 recurses
  const auto trace = reduce(GenusContext(4), {5, 3});
  const auto& c = composite(trace.root);
  CHECK(c.sol.rF == 7);
  CHECK(c.sol.dF == -17);
  CHECK(c.sol.h1 == 2);
  CHECK(c.rkV == 64);
  CHECK(c.hecke_affine == 1);
  CHECK_FALSE(c.mu2->is_base());
  CHECK(c.mu2->type() == SheafType(2, -1));
  CHECK(trace.total_affine_dim == 72);
  CHECK(node_depth(trace.root) == 3);
  CHECK(verify_trace(trace).ok());
}

TEST_CASE("reduce preconditions") {
  CHECK_THROWS_AS(reduce(GenusContext(1), {2, 1}), Error);
  CHECK_THROWS_AS(reduce(GenusContext(2), {0, 1}), Error);
  CHECK_THROWS_AS(reduce(GenusContext(2), {kMaxRank + 1, 1}), Error);
  try {
    reduce(GenusContext(1), {2, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("verify_trace pinpoints tampering") {
  const auto good = reduce(GenusContext(2), {2, 1});

  SUBCASE("dF perturbed") {
    auto t = good;
    composite(t.root).sol.dF = -1;
    const auto rep = verify_trace(t);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failed("aux_euler_identity"));
    try {
      rep.throw_if_invalid();
      FAIL("expected CertificateInvalid");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CertificateInvalid);
      CHECK(std::string(e.what()).find("root") != std::string::npos);
    }
  }
  SUBCASE("total affine dimension") {
    auto t = good;
    t.total_affine_dim = 4;
    const auto rep = verify_trace(t);
    CHECK(rep.failed("affine_closed_form"));
    CHECK(rep.failed("affine_sum"));
  }
  SUBCASE("child twist") {
    auto t = good;
    std::get<BaseStep>(composite(t.root).mu1->step).twist_degree = 2;
    const auto rep = verify_trace(t);
    CHECK(rep.failed("base_twist"));
    CHECK(rep.failed("det_map_mu1"));
  }
  SUBCASE("child type") {
    auto t = good;
    std::get<BaseStep>(composite(t.root).mu2->step).type = SheafType(1, -2);
    CHECK(verify_trace(t).failed("input_type"));
  }
  SUBCASE("missing det map") {
    auto t = good;
    composite(t.root).det_maps.pop_back();
    CHECK(verify_trace(t).failed("det_map_count"));
  }
  SUBCASE("genus") {
    auto t = good;
    t.genus = 1;
    CHECK(verify_trace(t).failed("genus"));
  }
}

TEST_CASE("property: random reductions verify and satisfy the global identities") {
  testing::Gen gen(0x7ace);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t g = gen.in(2, 20);
    const SheafType t = gen.positive_rank_type(60, 1000);
    const auto trace = reduce(GenusContext(g), t);
    const auto rep = verify_trace(trace);
    CHECK(rep.ok());
    CHECK(trace.total_affine_dim == (g - 1) * (t.rank() * t.rank() - trace.h * trace.h));
    CHECK(trace.composite_det.apply(t.degree()) == 0);
    CHECK(node_depth(trace.root) <= t.rank());
  }
}

TEST_CASE("large input stays exact") {
  const auto trace = reduce(GenusContext(100), {kMaxRank - 1, -kMaxAbsDegree + 1});
  CHECK(verify_trace(trace).ok());
  CHECK(trace.total_affine_dim == 99 * ((kMaxRank - 1) * (kMaxRank - 1) - trace.h * trace.h));
}
