// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed here and not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "bunred/diophantine.hpp"
#include "bunred/euler.hpp"
#include "bunred/grassmann.hpp"
#include "bunred/hirschowitz.hpp"
#include "bunred/reduction.hpp"
#include "bunred/trace_io.hpp"
#include "bunred/weights.hpp"
#include "generators.hpp"

using namespace bunred;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
  int failures = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (failures++ < 5) detail += (detail.empty() ? "" : "; ") + what;
    passed = false;
  }
};

int g_failed = 0;

void criterion(int id, const char* title, double max_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (max_seconds > 0 && secs >= max_seconds) {
    out.passed = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("runtime budget exceeded");
  }
  if (!out.passed) ++g_failed;
  std::printf("[%s] %d. %s (%.3f s%s)%s%s\n", out.passed ? "PASS" : "FAIL", id, title, secs,
              max_seconds > 0 ? (" < " + std::to_string(static_cast<int>(max_seconds)) + " s").c_str() : "",
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
}

std::string tag(std::int64_t g, const SheafType& t) { return "g=" + std::to_string(g) + " " + t.to_string(); }

// Pre-order list of mutable composite nodes with their verifier paths.
void composites(StepNode& node, const std::string& path, std::vector<std::pair<CompositeStep*, std::string>>& out) {
  if (auto* c = std::get_if<CompositeStep>(&node.step)) {
    out.emplace_back(c, path);
    composites(*c->mu1, path + ".mu1", out);
    composites(*c->mu2, path + ".mu2", out);
  }
}

bool failed_at(const VerificationReport& rep, const std::string& path, const std::string& name) {
  for (const auto& c : rep.checks())
    if (!c.passed && c.path == path && c.name == name) return true;
  return false;
}

std::vector<ReductionTrace> certificate_grid() {
  std::vector<ReductionTrace> traces;
  for (std::int64_t g = 2; g <= 4; ++g)
    for (std::int64_t r = 1; r <= 12; ++r)
      for (std::int64_t d = -12; d <= 12; ++d) traces.push_back(reduce(GenusContext(g), {r, d}));
  return traces;
}

}  // namespace

int main() {
  criterion(1, "lemma solver == brute-force window scan, g in [2,5], r in [1,30], |d| <= 30", 2.0, [] {
    Outcome out;
    int cases = 0;
    for (std::int64_t g = 2; g <= 5; ++g) {
      const GenusContext ctx(g);
      for (std::int64_t r = 1; r <= 30; ++r) {
        for (std::int64_t d = -30; d <= 30; ++d) {
          const SheafType t(r, d);
          if (r == hcf_of_type(t)) continue;
          ++cases;
          // solve_lemma_bruteforce throws unless exactly one window solution exists
          const auto fast = solve_lemma(ctx, t);
          const auto slow = solve_lemma_bruteforce(ctx, t);
          out.require(fast == slow, "mismatch at " + tag(g, t));
        }
      }
    }
    out.detail = std::to_string(cases) + " cases" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
  });

  criterion(2, "golden values", 0, [] {
    Outcome out;
    struct Golden {
      std::int64_t g, r, d, rF, dF, r1, d1, n;
    };
    for (const Golden& e : {Golden{2, 2, 1, 3, -2, 1, -3, 3}, Golden{2, 4, 2, 3, -2, 2, -6, 12},
                            Golden{3, 3, 1, 4, -7, 1, -8, 16}}) {
      const SheafType t(e.r, e.d);
      const auto trace = reduce(GenusContext(e.g), t);
      const auto& c = std::get<CompositeStep>(trace.root.step);
      out.require(c.sol.rF == e.rF && c.sol.dF == e.dF, "(rF,dF) at " + tag(e.g, t));
      out.require(c.sol.r1 == e.r1 && c.sol.d1 == e.d1, "(r1,d1) at " + tag(e.g, t));
      out.require(trace.total_affine_dim == e.n, "n at " + tag(e.g, t));
      out.require(verify_trace(trace).ok(), "verification at " + tag(e.g, t));
    }
    return out;
  });

  criterion(3, "certificate sweep g in [2,4], r in [1,12], |d| <= 12", 2.0, [] {
    Outcome out;
    const auto traces = certificate_grid();
    for (const auto& trace : traces) {
      const auto& t = trace.input;
      const std::int64_t g = trace.genus;
      const auto rep = verify_trace(trace);
      out.require(rep.ok(), "invalid certificate at " + tag(g, t));
      const std::int64_t h = std::gcd(t.rank(), t.degree());
      out.require(trace.total_affine_dim == (g - 1) * (t.rank() * t.rank() - h * h), "n at " + tag(g, t));
      out.require(trace.composite_det.apply(t.degree()) == 0, "det at " + tag(g, t));
      out.require(node_depth(trace.root) <= t.rank(), "depth at " + tag(g, t));
    }
    out.detail = std::to_string(traces.size()) + " traces" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
  });

  criterion(4, "single-field perturbations fail at the named check", 0, [] {
    Outcome out;
    int perturbations = 0;
    const auto traces = certificate_grid();
    for (const auto& good : traces) {
      const std::string where = tag(good.genus, good.input);
      for (const std::int64_t delta : {-1, 1}) {
        {
          auto t = good;
          t.total_affine_dim += delta;
          ++perturbations;
          out.require(failed_at(verify_trace(t), "trace", "affine_closed_form"), "n perturbation at " + where);
        }
        {
          auto t = good;
          t.composite_det.shift += delta;
          ++perturbations;
          out.require(failed_at(verify_trace(t), "trace", "composite_det_matches"), "composite det at " + where);
        }
        std::vector<std::pair<CompositeStep*, std::string>> nodes;
        auto probe = good;
        composites(probe.root, "root", nodes);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          const auto mutate = [&](const std::function<void(CompositeStep&)>& edit, const char* check) {
            auto t = good;
            std::vector<std::pair<CompositeStep*, std::string>> mine;
            composites(t.root, "root", mine);
            edit(*mine[i].first);
            ++perturbations;
            out.require(failed_at(verify_trace(t), mine[i].second, check),
                        std::string(check) + " at " + where + " " + mine[i].second);
          };
          mutate([&](CompositeStep& c) { c.sol.dF += delta; }, "aux_euler_identity");
          mutate([&](CompositeStep& c) { c.rkV += delta; }, "rkV_euler_form");
          static const char* kDetChecks[] = {"det_map_lambda", "det_map_mu1", "det_map_hecke", "det_map_mu2"};
          for (std::size_t k = 0; k < 4; ++k)
            mutate([&](CompositeStep& c) { c.det_maps[k].shift += delta; }, kDetChecks[k]);
        }
      }
    }
    out.detail = std::to_string(perturbations) + " perturbations" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
  });

  criterion(5, "Euler form biadditivity and chi(t,t) = (1-g) r^2 on 1000 random triples", 0, [] {
    Outcome out;
    testing::Gen gen(20261018);
    for (int i = 0; i < 1000; ++i) {
      const GenusContext ctx(gen.in(0, 100));
      const auto a = gen.type(10'000, 1'000'000), b = gen.type(10'000, 1'000'000), c = gen.type(10'000, 1'000'000);
      const std::int64_t g = ctx.genus();
      out.require(euler_form(ctx, add_types(a, b), c) == euler_form(ctx, a, c) + euler_form(ctx, b, c),
                  "left additivity");
      out.require(euler_form(ctx, c, add_types(a, b)) == euler_form(ctx, c, a) + euler_form(ctx, c, b),
                  "right additivity");
      out.require(euler_form(ctx, a, a) == (1 - g) * a.rank() * a.rank(), "diagonal");
    }
    return out;
  });

  criterion(6, "Hecke1 == Hecke2 dimension, g in [2,4], r in [1,10], m in [1,r], d in [-5,5]", 0, [] {
    Outcome out;
    for (std::int64_t g = 2; g <= 4; ++g)
      for (std::int64_t r = 1; r <= 10; ++r)
        for (std::int64_t m = 1; m <= r; ++m)
          for (std::int64_t d = -5; d <= 5; ++d) {
            const GenusContext ctx(g);
            out.require(parabolic_dim(ctx, r, d, m, HeckeRoute::Hecke1) == parabolic_dim(ctx, r, d, m, HeckeRoute::Hecke2),
                        "mismatch at g=" + std::to_string(g) + " r=" + std::to_string(r) + " m=" + std::to_string(m));
          }
    return out;
  });

  criterion(7, "splitting scan: 200 random pairs with chi >= 0, ranks <= 5, bound 20", 10.0, [] {
    Outcome out;
    testing::Gen gen(7);
    int pairs = 0;
    std::int64_t examined = 0, torsion = 0;
    while (pairs < 200) {
      const GenusContext ctx(gen.in(2, 4));
      const SheafType t1 = gen.positive_rank_type(5, 20), t2 = gen.positive_rank_type(5, 20);
      if (euler_form(ctx, t1, t2) < 0) continue;
      ++pairs;
      const auto rep = no_bad_splitting_scan(ctx, t1, t2, 20);
      out.require(rep.violations == 0, "violation at " + t1.to_string() + " -> " + t2.to_string());
      examined += rep.examined;
      torsion += rep.torsion_cokernel;
    }
    out.require(examined > 0, "scan examined nothing");
    out.detail = std::to_string(examined) + " chain splittings, " + std::to_string(torsion) + " torsion cokernels" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
  });

  criterion(8, "hcf of witness ranks over ell in [ell_min, ell_min+50] equals hcf(r,d)", 0, [] {
    Outcome out;
    for (std::int64_t g = 2; g <= 4; ++g)
      for (std::int64_t r = 1; r <= 12; ++r)
        for (std::int64_t d = -12; d <= 12; ++d) {
          const SheafType t(r, d);
          const auto w = minimal_rank_divisor(GenusContext(g), t, 50);
          out.require(w.scanned_hcf == std::gcd(r, d) && w.h == std::gcd(r, d), "at " + tag(g, t));
          out.require(rank_divisibility_check(w.h, w.universal_rank) && rank_divisibility_check(w.h, w.twisted_rank),
                      "divisibility at " + tag(g, t));
        }
    return out;
  });

  criterion(9, "serialization round trip and byte-stable re-serialization on the sweep grid", 0, [] {
    Outcome out;
    for (const auto& trace : certificate_grid()) {
      const std::string doc = serialize_trace(trace);
      const auto back = parse_trace(doc);
      out.require(back == trace, "structural mismatch at " + tag(trace.genus, trace.input));
      out.require(serialize_trace(back) == doc, "bytes differ at " + tag(trace.genus, trace.input));
    }
    return out;
  });

  std::printf("%s: %d criteria failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
  return g_failed == 0 ? 0 : 1;
}
