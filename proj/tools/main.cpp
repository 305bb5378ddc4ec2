#include "pathsum/identities.hpp"
#include "pathsum/oracle.hpp"
#include "pathsum/prove.hpp"
#include "pathsum/render.hpp"
#include "pathsum/simulate.hpp"
#include "pathsum/walks.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using pathsum::CheckReport;
using pathsum::Status;
using pathsum::exact::Rational;
using pathsum::identities::IdentityDef;
using pathsum::identities::IdentityId;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

/// Comma-separated values; each token is a rational "p/q" or an inclusive
/// integer range "a..b".
std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (token.empty()) throw std::invalid_argument("empty value in list");
    auto dots = token.find("..");
    if (dots != std::string::npos) {
      long lo = Rational::parse(token.substr(0, dots)).as_long();
      long hi = Rational::parse(token.substr(dots + 2)).as_long();
      if (lo > hi) throw std::invalid_argument("range '" + token + "' is empty");
      for (long v = lo; v <= hi; ++v) out.push_back(Rational(v));
    } else {
      out.push_back(Rational::parse(token));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

IdentityId parse_identity_or_throw(const std::string& name) {
  auto id = pathsum::identities::parse_identity(name);
  if (!id) throw std::invalid_argument("unknown identity '" + name + "' (expected I1..I10)");
  return *id;
}

pathsum::render::ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return pathsum::render::ReportFormat::csv;
  if (name == "jsonl") return pathsum::render::ReportFormat::jsonl;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or jsonl)");
}

const std::vector<Rational>& rational_probe_values() {
  static const std::vector<Rational> values = {
      Rational::parse("1/2"),  Rational::parse("-1/2"), Rational::parse("1/3"),
      Rational::parse("7/5"), Rational::parse("-3/2"), Rational::parse("9/7"),
  };
  return values;
}

std::vector<Rational> integer_range(long lo, long hi) {
  std::vector<Rational> out;
  for (long v = lo; v <= hi; ++v) out.push_back(Rational(v));
  return out;
}

struct SweepOptions {
  std::string identity;
  long n_max = 0;
  std::string m_list;
  std::string r_list;
  bool rational_set = false;
  std::string format = "csv";
  bool self_test_mutate = false;
};

IdentityDef sweep_definition(const SweepOptions& opt) {
  IdentityDef def = pathsum::identities::identity(parse_identity_or_throw(opt.identity));
  if (opt.self_test_mutate) def.rhs_offset += 1;
  return def;
}

std::vector<CheckReport> run_sweep(const IdentityDef& def, const SweepOptions& opt) {
  std::vector<Rational> ms, rs;
  if (def.has_m)
    ms = !opt.m_list.empty() ? parse_value_list(opt.m_list)
                             : (opt.rational_set ? rational_probe_values() : integer_range(-10, 10));
  if (def.has_r)
    rs = !opt.r_list.empty() ? parse_value_list(opt.r_list)
                             : (opt.rational_set ? rational_probe_values() : integer_range(-10, 10));
  if (!def.has_m && !opt.m_list.empty()) throw std::invalid_argument("identity has no free symbol m");
  if (!def.has_r && !opt.r_list.empty()) throw std::invalid_argument("identity has no free symbol r");

  std::vector<CheckReport> reports;
  for (long n = 0; n <= opt.n_max; ++n) {
    if (!def.has_m) {
      reports.push_back(eval_identity(def, n, std::nullopt, std::nullopt));
    } else if (!def.has_r) {
      for (const auto& m : ms) reports.push_back(eval_identity(def, n, m, std::nullopt));
    } else {
      for (const auto& m : ms)
        for (const auto& r : rs) reports.push_back(eval_identity(def, n, m, r));
    }
  }
  return reports;
}

int emit_and_grade(const std::vector<CheckReport>& reports, pathsum::render::ReportFormat format,
                   bool with_header) {
  if (with_header && format == pathsum::render::ReportFormat::csv)
    std::cout << "identity,n,m,r,lhs,rhs,status\n";
  bool failed = false;
  for (const auto& rep : reports) {
    std::cout << pathsum::render::format_report_row(rep, format) << "\n";
    if (rep.status == Status::unequal) failed = true;
    if (!rep.note.empty()) std::cerr << rep.id << " n=" << rep.n << ": " << rep.note << "\n";
  }
  return failed ? kExitFailedCheck : kExitOk;
}

int cmd_count(const std::string& kind, long steps, long end, std::optional<long> barrier) {
  using namespace pathsum::walks;
  if (kind == "P") {
    if (barrier) throw std::invalid_argument("count --kind P takes no barrier");
    std::cout << count_paths(steps, end).str() << "\n";
    return kExitOk;
  }
  if (!barrier) throw std::invalid_argument("count --kind " + kind + " needs --barrier");
  if (kind == "S")
    std::cout << count_touching(steps, end, *barrier).str() << "\n";
  else if (kind == "T")
    std::cout << count_avoiding(steps, end, *barrier).str() << "\n";
  else
    throw std::invalid_argument("unknown kind '" + kind + "' (expected P, S or T)");
  return kExitOk;
}

int cmd_enumerate(long steps, long end, std::optional<long> avoid, long limit) {
  using namespace pathsum::walks;
  if (limit < 0) throw std::invalid_argument("enumerate: limit must be nonnegative");
  std::vector<PathConstraint> cons{PathConstraint::end_at(end)};
  if (avoid) cons.push_back(PathConstraint::avoids(*avoid));
  for (const auto& path : enumerate_paths(steps, cons, static_cast<std::size_t>(limit)))
    std::cout << path << "\n";
  return kExitOk;
}

int cmd_prove(const std::string& identity, long n, bool mutate) {
  IdentityDef def = pathsum::identities::identity(parse_identity_or_throw(identity));
  if (mutate) def.rhs_offset += 1;
  auto cert = pathsum::prove::verify_polynomial(def, n);
  if (cert.verified) {
    std::cout << "verified (" << cert.evaluations << " evaluations)\n";
    return kExitOk;
  }
  std::cout << "refuted (m=" << cert.refuted_at->first.str();
  if (cert.refuted_at->second) std::cout << ", r=" << cert.refuted_at->second->str();
  std::cout << "; " << cert.evaluations << " evaluations)\n";
  return kExitFailedCheck;
}

int cmd_induct(const std::string& identity, long n_max) {
  IdentityDef def = pathsum::identities::identity(parse_identity_or_throw(identity));
  auto certs = pathsum::prove::verify_induction(def, n_max);
  bool all = true;
  for (const auto& cert : certs) {
    std::cout << "n=" << cert.n << ": " << (cert.verified ? "verified" : "refuted") << " ("
              << cert.evaluations << " evaluations)\n";
    all = all && cert.verified;
  }
  return all ? kExitOk : kExitFailedCheck;
}

int cmd_decomp(const std::string& which, std::optional<long> steps, std::optional<long> end,
               std::optional<long> r, long steps_max, const std::string& format) {
  using namespace pathsum::walks;
  auto id = parse_decomp(which);
  if (!id) {
    std::string names;
    for (DecompId d : kAllDecomps)
      names += std::string(names.empty() ? "" : ", ") + std::string(decomp_name(d));
    throw std::invalid_argument("unknown decomposition '" + which + "' (expected one of " + names + ")");
  }
  std::vector<CheckReport> reports;
  if (steps)
    reports.push_back(check_decomposition(*id, {*steps, end, r}));
  else
    reports = sweep_decomposition(*id, steps_max);
  return emit_and_grade(reports, parse_format(format), /*with_header=*/false);
}

int cmd_simulate(long steps, std::uint64_t samples, std::uint64_t seed) {
  auto h = pathsum::walks::simulate_walks(steps, samples, seed);
  std::cout << "kind,position,count\n";
  for (const auto& [pos, c] : h.end_counts) std::cout << "end," << pos << "," << c << "\n";
  for (const auto& [pos, c] : h.touch_counts) std::cout << "touch," << pos << "," << c << "\n";
  return kExitOk;
}

int cmd_render(long steps, const std::string& path, std::optional<long> barrier, bool reflect) {
  auto scene = pathsum::render::scene_for_path(steps, path, barrier, reflect);
  std::cout << pathsum::render::render_walk(scene);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact random-walk path counting and binomial-identity verification"};
  app.require_subcommand(1);

  SweepOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "sweep an identity and report each point");
  verify->add_option("--identity", verify_opt.identity, "identity id, I1..I10")->required();
  verify->add_option("--n-max", verify_opt.n_max, "check n = 0..n-max")->required();
  verify->add_option("--m", verify_opt.m_list, "m values: rationals p/q and ranges a..b");
  verify->add_option("--r", verify_opt.r_list, "r values: rationals p/q and ranges a..b");
  verify->add_flag("--rational", verify_opt.rational_set,
                   "default unspecified sweeps to the rational probe set");
  verify->add_option("--format", verify_opt.format, "csv or jsonl rows")->default_val("csv");
  verify->add_flag("--self-test-mutate", verify_opt.self_test_mutate)->group("");

  SweepOptions table_opt;
  auto* table = app.add_subcommand("table", "CSV table of lhs/rhs values for an identity sweep");
  table->add_option("--identity", table_opt.identity)->required();
  table->add_option("--n-max", table_opt.n_max)->required();
  table->add_option("--m", table_opt.m_list);
  table->add_option("--r", table_opt.r_list);
  table->add_flag("--rational", table_opt.rational_set);

  std::string count_kind;
  long count_steps = 0, count_end = 0;
  std::optional<long> count_barrier;
  auto* count = app.add_subcommand("count", "exact walk count");
  count->add_option("--kind", count_kind, "P (all), S (touching), T (avoiding)")->required();
  count->add_option("--steps", count_steps)->required();
  count->add_option("--end", count_end)->required();
  count->add_option("--barrier", count_barrier);

  long enum_steps = 0, enum_end = 0, enum_limit = 100;
  std::optional<long> enum_avoid;
  auto* enumerate = app.add_subcommand("enumerate", "list satisfying walks, one per line");
  enumerate->add_option("--steps", enum_steps)->required();
  enumerate->add_option("--end", enum_end)->required();
  enumerate->add_option("--avoid", enum_avoid, "exclude walks touching this position");
  enumerate->add_option("--limit", enum_limit)->default_val(100);

  std::string prove_identity;
  long prove_n = 0;
  bool prove_mutate = false;
  auto* prove = app.add_subcommand("prove", "grid certificate for a fixed n");
  prove->add_option("--identity", prove_identity, "one of I1..I4, I7, I8")->required();
  prove->add_option("--n", prove_n)->required();
  prove->add_flag("--self-test-mutate", prove_mutate)->group("");

  std::string induct_identity;
  long induct_n_max = 0;
  auto* induct = app.add_subcommand("induct", "base case plus per-step certificates");
  induct->add_option("--identity", induct_identity, "I7 or I8")->required();
  induct->add_option("--n-max", induct_n_max)->required();

  std::string decomp_which, decomp_format = "csv";
  std::optional<long> decomp_steps, decomp_end, decomp_r;
  long decomp_steps_max = 14;
  auto* decomp = app.add_subcommand("decomp", "verify a walk-count decomposition");
  decomp->add_option("--which", decomp_which, "decomposition id (see README)")->required();
  decomp->add_option("--steps", decomp_steps, "check a single point instead of the sweep");
  decomp->add_option("--end", decomp_end);
  decomp->add_option("--r", decomp_r);
  decomp->add_option("--steps-max", decomp_steps_max, "sweep bound")->default_val(14);
  decomp->add_option("--format", decomp_format)->default_val("csv");

  long sim_steps = 0;
  std::uint64_t sim_samples = 0, sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "seeded sampling with end/touch histograms");
  simulate->add_option("--steps", sim_steps)->required();
  simulate->add_option("--samples", sim_samples)->required();
  simulate->add_option("--seed", sim_seed)->required();

  long render_steps = 0;
  std::string render_path;
  std::optional<long> render_barrier;
  bool render_reflect = false;
  auto* render = app.add_subcommand("render", "ASCII diagram of a walk");
  render->add_option("--steps", render_steps)->required();
  render->add_option("--path", render_path, "step string of L and R");
  render->add_option("--barrier", render_barrier, "dashed barrier row");
  render->add_flag("--reflect", render_reflect, "mirror the tail after the last barrier visit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to the error stream
    return kExitUsage;
  }

  try {
    if (*verify)
      return emit_and_grade(run_sweep(sweep_definition(verify_opt), verify_opt),
                            parse_format(verify_opt.format), false);
    if (*table)
      return emit_and_grade(run_sweep(sweep_definition(table_opt), table_opt),
                            pathsum::render::ReportFormat::csv, true);
    if (*count) return cmd_count(count_kind, count_steps, count_end, count_barrier);
    if (*enumerate) return cmd_enumerate(enum_steps, enum_end, enum_avoid, enum_limit);
    if (*prove) return cmd_prove(prove_identity, prove_n, prove_mutate);
    if (*induct) return cmd_induct(induct_identity, induct_n_max);
    if (*decomp)
      return cmd_decomp(decomp_which, decomp_steps, decomp_end, decomp_r, decomp_steps_max,
                        decomp_format);
    if (*simulate) return cmd_simulate(sim_steps, sim_samples, sim_seed);
    if (*render) return cmd_render(render_steps, render_path, render_barrier, render_reflect);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
