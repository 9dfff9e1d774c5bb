#include "bunred/reduction.hpp"

#include <algorithm>
#include <functional>

#include "bunred/checked.hpp"
#include "bunred/euler.hpp"
#include "bunred/grassmann.hpp"
#include "bunred/weights.hpp"

namespace bunred {

const SheafType& StepNode::type() const {
  return std::visit([](const auto& s) -> const SheafType& { return s.type; }, step);
}

// -- construction -------------------------------------------------------------

namespace {

StepNode build(const GenusContext& ctx, const SheafType& t) {
  using namespace checked;
  const std::int64_t h = hcf_of_type(t);
  if (t.rank() == h) return StepNode{BaseStep{t, neg(t.degree() / t.rank())}};

  CompositeStep c;
  c.type = t;
  c.sol = solve_lemma(ctx, t);
  c.rkV = euler_form(ctx, c.sol.reduced(), c.sol.auxiliary());
  c.rho_affine = mul(h, sub(c.rkV, c.sol.h1));
  c.hecke_affine = mul(h, sub(c.sol.h1, h));
  c.mu1 = Box<StepNode>(build(ctx, c.sol.reduced()));
  c.mu2 = Box<StepNode>(build(ctx, SheafType(c.sol.h1, neg(h))));
  c.det_maps = {
      DegreeAffineMap{-1, mul(h, c.sol.dF)},
      node_det_composite(*c.mu1),
      hecke_det_shift(h),
      node_det_composite(*c.mu2),
  };
  return StepNode{std::move(c)};
}

}  // namespace

ReductionTrace reduce(const GenusContext& ctx, const SheafType& t) {
  ctx.require_reduction_genus();
  if (t.rank() < 1) throw Error(ErrorKind::InvalidType, "reduction needs rank >= 1, got " + t.to_string());
  require_input_bounds(t);

  ReductionTrace trace;
  trace.genus = ctx.genus();
  trace.input = t;
  trace.h = hcf_of_type(t);
  trace.root = build(ctx, t);
  trace.total_affine_dim = node_affine_total(trace.root);
  trace.composite_det = node_det_composite(trace.root);
  return trace;
}

std::int64_t node_affine_total(const StepNode& node) {
  if (const auto* c = std::get_if<CompositeStep>(&node.step)) {
    using namespace checked;
    std::int64_t total = add(c->rho_affine, c->hecke_affine);
    if (c->mu1) total = add(total, node_affine_total(*c->mu1));
    if (c->mu2) total = add(total, node_affine_total(*c->mu2));
    return total;
  }
  return 0;
}

DegreeAffineMap node_det_composite(const StepNode& node) {
  if (const auto* c = std::get_if<CompositeStep>(&node.step)) return compose_det(c->det_maps);
  const auto& b = std::get<BaseStep>(node.step);
  return {1, checked::mul(b.type.rank(), b.twist_degree)};
}

std::int64_t node_depth(const StepNode& node) {
  if (const auto* c = std::get_if<CompositeStep>(&node.step)) {
    const std::int64_t d1 = c->mu1 ? node_depth(*c->mu1) : 0;
    const std::int64_t d2 = c->mu2 ? node_depth(*c->mu2) : 0;
    return 1 + std::max(d1, d2);
  }
  return 1;
}

std::int64_t node_count(const StepNode& node) {
  if (const auto* c = std::get_if<CompositeStep>(&node.step))
    return 1 + (c->mu1 ? node_count(*c->mu1) : 0) + (c->mu2 ? node_count(*c->mu2) : 0);
  return 1;
}

// -- verification ---------------------------------------------------------------

void VerificationReport::record(std::string path, std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(path), std::move(name), passed, std::move(detail)});
}

bool VerificationReport::ok() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> VerificationReport::failures() const {
  std::vector<CheckResult> out;
  std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const CheckResult& c) { return !c.passed; });
  return out;
}

bool VerificationReport::failed(std::string_view name) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&](const CheckResult& c) { return !c.passed && c.name == name; });
}

void VerificationReport::throw_if_invalid() const {
  for (const auto& c : checks_) {
    if (!c.passed) {
      std::string msg = "certificate invalid at " + c.path + ": " + c.name;
      if (!c.detail.empty()) msg += " (" + c.detail + ")";
      throw Error(ErrorKind::CertificateInvalid, msg);
    }
  }
}

namespace {

std::optional<SheafType> try_type(std::int64_t rank, std::int64_t degree) {
  try {
    return SheafType(rank, degree);
  } catch (const Error&) {
    return std::nullopt;
  }
}

class Verifier {
 public:
  Verifier(const GenusContext& ctx, VerificationReport& report) : ctx_(ctx), report_(report) {}

  // Runs one named check; arithmetic errors inside the predicate count as a
  // failure of that check.
  void check(const std::string& path, const std::string& name, const std::function<bool()>& pred,
             const std::function<std::string()>& detail = {}) {
    try {
      const bool passed = pred();
      report_.record(path, name, passed, passed || !detail ? std::string{} : detail());
    } catch (const Error& e) {
      report_.record(path, name, false, e.what());
    }
  }

  void node(const StepNode& n, const std::optional<SheafType>& expected, const std::string& path) {
    const SheafType& t = n.type();
    if (expected)
      check(path, "input_type", [&] { return t == *expected; },
            [&] { return "stored " + t.to_string() + ", expected " + expected->to_string(); });
    else
      check(path, "input_type", [] { return false; }, [] { return std::string("parent data does not determine a valid type"); });

    if (const auto* b = std::get_if<BaseStep>(&n.step))
      base(*b, path);
    else
      composite(std::get<CompositeStep>(n.step), path);
  }

 private:
  void base(const BaseStep& b, const std::string& path) {
    const SheafType& t = b.type;
    check(path, "base_rank_equals_hcf", [&] { return t.rank() >= 1 && t.rank() == hcf(t.rank(), t.degree()); });
    check(path, "base_rank_divides_degree", [&] { return t.rank() >= 1 && t.degree() % t.rank() == 0; });
    check(path, "base_twist", [&] { return t.rank() >= 1 && b.twist_degree == -(t.degree() / t.rank()); },
          [&] { return "twist " + std::to_string(b.twist_degree); });
    check(path, "base_det_zero", [&] { return node_det_composite(StepNode{b}).apply(t.degree()) == 0; });
  }

  void composite(const CompositeStep& c, const std::string& path) {
    using namespace checked;
    const SheafType& t = c.type;
    const LemmaSolution& s = c.sol;
    const std::int64_t g = ctx_.genus();
    const std::int64_t r = t.rank();
    const std::int64_t d = t.degree();
    std::int64_t h = 0;
    try {
      h = hcf_of_type(t);
    } catch (const Error& e) {
      report_.record(path, "h_recomputed", false, e.what());
      return;
    }

    check(path, "h_recomputed", [&] { return s.h == h; });
    check(path, "not_base", [&] { return r > h; });
    check(path, "aux_euler_identity",
          [&] {
            const std::int64_t lhs = sub(add(mul(1 - g, s.rF, r), mul(s.rF, d)), mul(r, s.dF));
            return lhs == h && euler_form(ctx_, SheafType(s.rF, s.dF), t) == h;
          },
          [&] { return "(1-g) rF r + rF d - r dF != " + std::to_string(h); });
    check(path, "aux_window", [&] { return r < mul(h, s.rF) && mul(h, s.rF) < mul(2, r); });
    check(path, "r1_recomputed", [&] { return s.r1 == sub(mul(h, s.rF), r); });
    check(path, "d1_recomputed", [&] { return s.d1 == sub(mul(h, s.dF), d); });
    check(path, "h1_recomputed", [&] { return s.r1 >= 1 && s.h1 == hcf(s.r1, s.d1); });
    check(path, "h_divides_h1", [&] { return s.h1 >= 1 && s.h1 % h == 0; });
    check(path, "measure_decrease", [&] { return mul(s.r1, h) < mul(r, s.h1); });

    const std::optional<SheafType> reduced = try_type(s.r1, s.d1);
    const std::optional<SheafType> aux = try_type(s.rF, s.dF);

    check(path, "rkV_euler_form", [&] { return reduced && aux && c.rkV == euler_form(ctx_, *reduced, *aux); },
          [&] { return "stored rkV " + std::to_string(c.rkV); });

    // The two weighted bundles fed to the birationally linear map rho: the
    // generic Hom(E_1^univ, F) and the pullback of the dual universal fibre
    // of Bun(h1, 0) along mu1.
    check(path, "weights", [&] {
      if (!reduced || !aux) return false;
      const auto v = hom_from_universal(ctx_, *reduced, *aux);
      const auto w = pullback(weight_of_dual(universal_fibre(SheafType(s.h1, 0))), *reduced, "W");
      return v.weight == -1 && w.weight == -1 && w.rank == s.h1;
    });
    check(path, "map_precondition", [&] { return check_map_precondition(h, s.h1, c.rkV, -1, -1); },
          [&] { return "need h <= h1 <= rkV: " + std::to_string(h) + ", " + std::to_string(s.h1) + ", " + std::to_string(c.rkV); });
    check(path, "gr_rational_theta2",
          [&] { return s.h1 >= 1 && check_gr_rational(h, SheafType(s.h1, neg(h))) && hcf(s.h1, h) == h; });
    check(path, "node_dimension_identity", [&] {
      if (!reduced) return false;
      // dim Bun(r,d) = dim Gr_h(Hom(E_1^univ, F)) over Bun(r1,d1)
      const std::int64_t over = gr_total_dim({bun_stack_dim(ctx_, *reduced), h, c.rkV, -1});
      const std::int64_t key = add(mul(g - 1, sub(mul(r, r), mul(s.r1, s.r1))), mul(h, h));
      return bun_stack_dim(ctx_, t) == over && mul(h, c.rkV) == key;
    });
    check(path, "rho_affine", [&] {
      return c.rho_affine == sub(gr_total_dim({0, h, c.rkV, -1}), gr_total_dim({0, h, s.h1, -1}));
    });
    check(path, "hecke_affine", [&] {
      // relative dimension of theta2: Par^h_{h1,0} -> Bun(h1, -h)
      const std::int64_t rel =
          sub(parabolic_dim(ctx_, s.h1, 0, h, HeckeRoute::Hecke1), bun_stack_dim(ctx_, SheafType(s.h1, neg(h))));
      return c.hecke_affine == rel && c.hecke_affine == mul(h, sub(s.h1, h));
    });

    check(path, "det_map_count", [&] { return c.det_maps.size() == 4; });
    const auto det_at = [&](std::size_t i) -> std::optional<DegreeAffineMap> {
      if (i < c.det_maps.size()) return c.det_maps[i];
      return std::nullopt;
    };
    check(path, "det_map_signs",
          [&] { return std::all_of(c.det_maps.begin(), c.det_maps.end(), [](auto& m) { return m.is_valid(); }); });
    check(path, "det_map_lambda", [&] { return det_at(0) == DegreeAffineMap{-1, mul(h, s.dF)}; });
    check(path, "det_map_mu1", [&] { return c.mu1 && det_at(1) == node_det_composite(*c.mu1); });
    check(path, "det_map_hecke", [&] { return det_at(2) == hecke_det_shift(h); });
    check(path, "det_map_mu2", [&] { return c.mu2 && det_at(3) == node_det_composite(*c.mu2); });
    check(path, "det_degree_walk", [&] {
      if (c.det_maps.size() != 4) return false;
      // d -> d1 -> 0 -> -h -> 0
      const std::int64_t a = c.det_maps[0].apply(d);
      const std::int64_t b = c.det_maps[1].apply(a);
      const std::int64_t e = c.det_maps[2].apply(b);
      const std::int64_t f = c.det_maps[3].apply(e);
      return a == s.d1 && b == 0 && e == -h && f == 0;
    });

    const std::optional<SheafType> mu2_expected = try_type(s.h1, -h);
    if (c.mu1)
      node(*c.mu1, reduced, path + ".mu1");
    else
      report_.record(path, "mu1_present", false);
    if (c.mu2)
      node(*c.mu2, mu2_expected, path + ".mu2");
    else
      report_.record(path, "mu2_present", false);
  }

  const GenusContext& ctx_;
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_trace(const ReductionTrace& trace) {
  VerificationReport report;
  const std::string top = "trace";
  if (trace.genus < 2 || trace.genus > kMaxGenus) {
    report.record(top, "genus", false, "genus " + std::to_string(trace.genus) + " outside [2, 100]");
    return report;
  }
  report.record(top, "genus", true);
  const GenusContext ctx(trace.genus);
  Verifier v(ctx, report);

  const SheafType& t = trace.input;
  v.check(top, "input_rank", [&] { return t.rank() >= 1; });
  if (t.rank() < 1) return report;
  const std::int64_t h = hcf_of_type(t);
  v.check(top, "h_matches_input", [&] { return trace.h == h; });

  v.node(trace.root, t, "root");

  v.check(top, "affine_sum", [&] { return trace.total_affine_dim == node_affine_total(trace.root); },
          [&] { return "stored " + std::to_string(trace.total_affine_dim); });
  v.check(top, "affine_closed_form",
          [&] {
            using namespace checked;
            return trace.total_affine_dim == mul(trace.genus - 1, sub(mul(t.rank(), t.rank()), mul(h, h)));
          },
          [&] { return "stored " + std::to_string(trace.total_affine_dim); });
  v.check(top, "composite_det_matches", [&] { return trace.composite_det == node_det_composite(trace.root); });
  v.check(top, "composite_det_zero",
          [&] { return trace.composite_det.is_valid() && trace.composite_det.apply(t.degree()) == 0; });
  v.check(top, "depth_bound", [&] { return node_depth(trace.root) <= t.rank(); });
  return report;
}

}  // namespace bunred
