// bunred: reduction certificates for moduli stacks of bundles on a curve.
//
// Exit codes: 0 success (and valid certificate), 1 domain error or invalid
// certificate, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bunred/diophantine.hpp"
#include "bunred/euler.hpp"
#include "bunred/hirschowitz.hpp"
#include "bunred/reduction.hpp"
#include "bunred/report.hpp"
#include "bunred/trace_io.hpp"

namespace {

using bunred::Error;
using bunred::ErrorKind;
using bunred::GenusContext;
using bunred::SheafType;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SheafType parse_type(const std::string& flag, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + " expects RANK,DEGREE, got \"" + text + "\"");
  try {
    const auto rank = bunred::parse_range(text.substr(0, comma));
    const auto degree = bunred::parse_range(text.substr(comma + 1));
    if (rank.lo != rank.hi || degree.lo != degree.hi) throw UsageError(flag + " expects a single type");
    return SheafType(rank.lo, degree.lo);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw UsageError(flag + ": " + e.what());
    throw;
  }
}

bunred::IntRange range_flag(const std::string& flag, const std::string& text) {
  try {
    return bunred::parse_range(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json type_json(const SheafType& t) { return Json{{"rank", t.rank()}, {"degree", t.degree()}}; }

int certificate_output(const bunred::ReductionTrace& trace, const std::string& format, const std::string& out) {
  const auto report = bunred::verify_trace(trace);
  if (format == "json") {
    write_output(out, bunred::serialize_trace(trace));
    if (!report.ok()) std::cerr << bunred::format_trace_text(trace, report);
  } else {
    write_output(out, bunred::format_trace_text(trace, report));
  }
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction certificates Bun(r,d) --> Bun(h,0) for moduli stacks of vector bundles on a curve"};
  app.require_subcommand(1);

  std::int64_t genus = 2, rank = 1, degree = 0, bound = 20;
  std::string format = "text", out, t1_text, t2_text, file;
  std::string genus_range = "2", rank_range, degree_range = "0";
  std::int64_t max_rank = 0;
  bool no_verify = false, emit_traces = false, bruteforce = false;

  const auto formats = CLI::IsMember({"json", "text"});

  auto* reduce = app.add_subcommand("reduce", "build and verify the reduction trace of one type");
  reduce->add_option("-g,--genus", genus, "curve genus (>= 2)")->required();
  reduce->add_option("-r,--rank", rank, "rank r >= 1")->required();
  reduce->add_option("-d,--degree", degree, "degree d")->required();
  reduce->add_option("--format", format, "json or text")->check(formats);
  reduce->add_option("--out", out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "reduce and verify every type in a grid");
  sweep->add_option("-g,--genus", genus_range, "genus or range a..b");
  sweep->add_option("--max-rank", max_rank, "ranks 1..N");
  sweep->add_option("--rank-range", rank_range, "ranks a..b (overrides --max-rank)");
  sweep->add_option("--degree-range", degree_range, "degrees a..b");
  sweep->add_flag("--no-verify", no_verify, "skip certificate verification");
  sweep->add_flag("--emit-traces", emit_traces, "write one trace document per grid point into --out DIR");
  sweep->add_option("--out", out, "table file, or trace directory with --emit-traces");

  auto* verify = app.add_subcommand("verify", "re-verify a serialized trace document");
  verify->add_option("file", file, "trace JSON")->required();
  verify->add_option("--format", format, "json or text")->check(formats);

  auto* chi = app.add_subcommand("chi", "Euler form chi(t1, t2) and derived stack dimensions");
  chi->add_option("-g,--genus", genus, "curve genus (>= 0)")->required();
  chi->add_option("--t1", t1_text, "first type RANK,DEGREE")->required();
  chi->add_option("--t2", t2_text, "second type RANK,DEGREE")->required();
  chi->add_option("--format", format, "json or text")->check(formats);

  auto* solve = app.add_subcommand("solve-lemma", "auxiliary type (rF, dF) of one reduction step");
  solve->add_option("-g,--genus", genus, "curve genus (>= 2)")->required();
  solve->add_option("-r,--rank", rank, "rank")->required();
  solve->add_option("-d,--degree", degree, "degree")->required();
  solve->add_flag("--bruteforce", bruteforce, "use the window scan instead of the Euclidean solver");
  solve->add_option("--format", format, "json or text")->check(formats);

  auto* hom = app.add_subcommand("generic-hom", "generic Hom/Ext dimensions and morphism shape");
  hom->add_option("-g,--genus", genus, "curve genus (>= 2)")->required();
  hom->add_option("--t1", t1_text, "source type RANK,DEGREE")->required();
  hom->add_option("--t2", t2_text, "target type RANK,DEGREE")->required();
  hom->add_option("--format", format, "json or text")->check(formats);

  auto* scan = app.add_subcommand("scan-splittings", "exhaust kernel/image/cokernel splittings of a general morphism");
  scan->add_option("-g,--genus", genus, "curve genus (>= 2)")->required();
  scan->add_option("--t1", t1_text, "source type RANK,DEGREE")->required();
  scan->add_option("--t2", t2_text, "target type RANK,DEGREE")->required();
  scan->add_option("--bound", bound, "bound on |degree| of every type in a splitting");
  scan->add_option("--format", format, "json or text")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      const GenusContext ctx(genus);
      return certificate_output(bunred::reduce(ctx, SheafType(rank, degree)), format, out);
    }

    if (sweep->parsed()) {
      bunred::SweepSpec spec;
      spec.genus = range_flag("--genus", genus_range);
      spec.rank = rank_range.empty() ? bunred::IntRange{1, max_rank} : range_flag("--rank-range", rank_range);
      spec.degree = range_flag("--degree-range", degree_range);
      spec.verify = !no_verify;
      spec.emit_traces = emit_traces;
      const auto result = bunred::run_sweep(spec);
      if (emit_traces) {
        if (out.empty()) throw UsageError("--emit-traces needs --out DIR");
        std::filesystem::create_directories(out);
        for (const auto& t : result.traces) {
          const auto name = "trace_g" + std::to_string(t.genus) + "_r" + std::to_string(t.input.rank()) + "_d" +
                            std::to_string(t.input.degree()) + ".json";
          write_output((std::filesystem::path(out) / name).string(), bunred::serialize_trace(t));
        }
        std::cout << bunred::format_sweep_table(result);
      } else {
        write_output(out, bunred::format_sweep_table(result));
      }
      return result.all_valid() ? kExitOk : kExitFailure;
    }

    if (verify->parsed()) {
      const auto trace = bunred::parse_trace(read_file(file));
      const auto report = bunred::verify_trace(trace);
      if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : report.checks())
          checks.push_back(Json{{"path", c.path}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        std::cout << Json{{"valid", report.ok()}, {"checks", checks}}.dump(2) << "\n";
      } else {
        std::cout << bunred::format_trace_text(trace, report);
      }
      return report.ok() ? kExitOk : kExitFailure;
    }

    if (chi->parsed()) {
      const GenusContext ctx(genus);
      const auto t1 = parse_type("--t1", t1_text);
      const auto t2 = parse_type("--t2", t2_text);
      const auto value = bunred::euler_form(ctx, t1, t2);
      if (format == "json") {
        std::cout << Json{{"genus", genus},
                          {"t1", type_json(t1)},
                          {"t2", type_json(t2)},
                          {"chi", value},
                          {"dim_bun_t1", bunred::bun_stack_dim(ctx, t1)},
                          {"dim_bun_t2", bunred::bun_stack_dim(ctx, t2)},
                          {"ext_relative_dim", bunred::ext_relative_dim(ctx, t1, t2)},
                          {"ext_stack_dim", bunred::ext_stack_dim(ctx, t1, t2)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "chi(" << t1 << ", " << t2 << ") = " << value << "\n"
                  << "dim Bun" << t1 << " = " << bunred::bun_stack_dim(ctx, t1) << "\n"
                  << "dim Bun" << t2 << " = " << bunred::bun_stack_dim(ctx, t2) << "\n"
                  << "Ext(t2, t1) relative dim = " << bunred::ext_relative_dim(ctx, t1, t2) << "\n"
                  << "Ext(t2, t1) stack dim = " << bunred::ext_stack_dim(ctx, t1, t2) << "\n";
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      const GenusContext ctx(genus);
      const SheafType t(rank, degree);
      const auto sol = bruteforce ? bunred::solve_lemma_bruteforce(ctx, t) : bunred::solve_lemma(ctx, t);
      const auto [before, after] = bunred::reduction_measure(sol, t);
      if (format == "json") {
        std::cout << Json{{"genus", genus}, {"input", type_json(t)}, {"rF", sol.rF}, {"dF", sol.dF},
                          {"r1", sol.r1},   {"d1", sol.d1},            {"h", sol.h},   {"h1", sol.h1}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "t=" << t << " h=" << sol.h << "\n"
                  << "rF=" << sol.rF << " dF=" << sol.dF << "\n"
                  << "r1=" << sol.r1 << " d1=" << sol.d1 << " h1=" << sol.h1 << "\n"
                  << "r/h: " << before.num << "/" << before.den << " -> " << after.num << "/" << after.den << "\n";
      }
      return kExitOk;
    }

    if (hom->parsed()) {
      const GenusContext ctx(genus);
      const auto t1 = parse_type("--t1", t1_text);
      const auto t2 = parse_type("--t2", t2_text);
      const auto rep = bunred::generic_hom(ctx, t1, t2);
      const std::int64_t chi_value = bunred::euler_form(ctx, t1, t2);
      std::string kind = "n/a";
      if (chi_value >= 1) kind = std::string(bunred::to_string(bunred::generic_morphism_kind(ctx, t1, t2)));
      if (format == "json") {
        Json j{{"genus", genus}, {"t1", type_json(t1)}, {"t2", type_json(t2)}, {"chi", chi_value}, {"covered", rep.covered}};
        if (rep.covered) {
          j["hom_dim"] = rep.hom_dim;
          j["ext_dim"] = rep.ext_dim;
        }
        j["general_morphism"] = kind;
        std::cout << j.dump(2) << "\n";
      } else if (rep.covered) {
        std::cout << "dim Hom = " << rep.hom_dim << ", dim Ext^1 = " << rep.ext_dim << "\n"
                  << "general morphism: " << kind << "\n";
      } else {
        std::cout << "chi = " << chi_value << " < 0: not covered\n";
      }
      return kExitOk;
    }

    if (scan->parsed()) {
      const GenusContext ctx(genus);
      const auto t1 = parse_type("--t1", t1_text);
      const auto t2 = parse_type("--t2", t2_text);
      const auto rep = bunred::no_bad_splitting_scan(ctx, t1, t2, bound);
      if (format == "json") {
        std::cout << Json{{"examined", rep.examined}, {"torsion_cokernel", rep.torsion_cokernel}, {"violations", rep.violations}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "examined " << rep.examined << " splittings, " << rep.torsion_cokernel
                  << " with torsion cokernel, " << rep.violations << " violations\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << bunred::to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
