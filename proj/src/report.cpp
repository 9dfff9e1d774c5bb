#include "bunred/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bunred {
namespace {

std::string bun(std::int64_t r, std::int64_t d) { return "Bun(" + std::to_string(r) + "," + std::to_string(d) + ")"; }

void format_node(const StepNode& node, int depth, std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  if (const auto* b = std::get_if<BaseStep>(&node.step)) {
    out << indent << bun(b->type.rank(), b->type.degree()) << " --[twist " << b->twist_degree << "]--> "
        << bun(b->type.rank(), 0) << " ; +affine 0\n";
    return;
  }
  const auto& c = std::get<CompositeStep>(node.step);
  out << indent << bun(c.type.rank(), c.type.degree()) << " --[rF=" << c.sol.rF << ",dF=" << c.sol.dF << "]--> Gr_"
      << c.sol.h << " over " << bun(c.sol.r1, c.sol.d1) << " ; +affine " << (c.rho_affine + c.hecke_affine)
      << "  (rkV=" << c.rkV << ", rho " << c.rho_affine << ", theta2 " << c.hecke_affine << ")\n";
  if (c.mu1) format_node(*c.mu1, depth + 1, out);
  if (c.mu2) format_node(*c.mu2, depth + 1, out);
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw Error(ErrorKind::InvalidArgument, "not an integer: \"" + text + "\"");
  return value;
}

}  // namespace

std::string format_trace_text(const ReductionTrace& trace, const VerificationReport& report) {
  std::ostringstream out;
  out << "genus " << trace.genus << ": " << bun(trace.input.rank(), trace.input.degree()) << " --> "
      << bun(trace.h, 0) << "  (h=" << trace.h << ")\n";
  format_node(trace.root, 1, out);
  out << "det ledger: " << trace.composite_det.to_string() << " ; " << trace.input.degree() << " -> "
      << trace.composite_det.apply(trace.input.degree()) << "\n";
  out << "n=" << trace.total_affine_dim << "  depth=" << node_depth(trace.root) << "  nodes=" << node_count(trace.root)
      << "  checks=" << report.checks().size() << "\n";
  if (report.ok()) {
    out << "certificate VALID\n";
  } else {
    const auto failures = report.failures();
    out << "certificate INVALID (" << failures.size() << " failed checks)\n";
    for (const auto& f : failures) {
      out << "  FAIL " << f.path << ": " << f.name;
      if (!f.detail.empty()) out << " (" << f.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

bool SweepResult::all_valid() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.valid; });
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  if (spec.genus.empty() || spec.rank.empty() || spec.degree.empty()) return result;
  if (spec.genus.lo < 2) throw Error(ErrorKind::DomainError, "genus must be ≥ 2 in a sweep");
  if (spec.rank.lo < 1) throw Error(ErrorKind::InvalidArgument, "sweep ranks must be >= 1");

  for (std::int64_t g = spec.genus.lo; g <= spec.genus.hi; ++g) {
    const GenusContext ctx(g);
    for (std::int64_t r = spec.rank.lo; r <= spec.rank.hi; ++r) {
      for (std::int64_t d = spec.degree.lo; d <= spec.degree.hi; ++d) {
        ReductionTrace trace = reduce(ctx, SheafType(r, d));
        SweepRow row{g, r, d, trace.h, trace.total_affine_dim, node_depth(trace.root), node_count(trace.root), true, {}};
        if (spec.verify) {
          const VerificationReport report = verify_trace(trace);
          row.valid = report.ok();
          if (!row.valid) {
            const auto f = report.failures().front();
            row.failure = f.path + ": " + f.name;
          }
        }
        result.rows.push_back(std::move(row));
        if (spec.emit_traces) result.traces.push_back(std::move(trace));
      }
    }
  }
  return result;
}

std::string format_sweep_table(const SweepResult& result) {
  std::ostringstream out;
  out << "genus\trank\tdegree\th\tn\tdepth\tnodes\tvalid\n";
  for (const auto& row : result.rows) {
    out << row.genus << '\t' << row.rank << '\t' << row.degree << '\t' << row.h << '\t' << row.n << '\t' << row.depth
        << '\t' << row.nodes << '\t' << (row.valid ? "yes" : "NO " + row.failure) << '\n';
  }
  const auto valid = std::count_if(result.rows.begin(), result.rows.end(), [](const SweepRow& r) { return r.valid; });
  out << "# " << result.rows.size() << " rows, " << valid << " valid\n";
  return out.str();
}

}  // namespace bunred
