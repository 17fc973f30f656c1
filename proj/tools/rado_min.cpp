// rado-min: count, optimize and verify monochromatic {x, y, x + ay} triples.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse or I/O error,
// 3 invalid parameters, 4 greedy block cap reached, 5 search budget exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rado/bounds.hpp"
#include "rado/counting.hpp"
#include "rado/density.hpp"
#include "rado/errors.hpp"
#include "rado/greedy.hpp"
#include "rado/io.hpp"
#include "rado/search.hpp"

namespace {

using namespace rado;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kParams = 3, kCap = 4, kBudget = 5 };

struct Config {
  int threads = 0;
  std::string format;
  std::string output;

  int a = 1;
  int colors = 0;
  int n = 0;
  int n_max = 0;

  std::string file;
  std::string coloring;
  std::string pattern;
  std::string pattern_file;

  int max_blocks = 64;
  bool compat_first_positive = false;
  bool best_of_all = false;
  bool cross_check = false;
  bool json_flag = false;
  bool no_steps = false;
  bool progress = false;
  double time_limit = 0;

  bool exact = false;
  bool local = false;
  int restarts = 20;
  std::uint64_t seed = 1;
  double budget = kDefaultSearchBudget;
  std::string csv;

  bool all = false;
  std::string q_slack = "0";
  std::string mono_slack = "1/4";
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(cfg.output, text);
  }
}

std::string format_of(const Config& cfg, const char* fallback) {
  if (cfg.json_flag) return "json";
  return cfg.format.empty() ? fallback : cfg.format;
}

Coloring load_coloring(const Config& cfg) {
  if (!cfg.file.empty() && !cfg.coloring.empty()) throw InvalidArgument("give either --file or --coloring, not both");
  if (!cfg.coloring.empty()) return parse_coloring(cfg.coloring, cfg.colors);
  if (!cfg.file.empty()) return parse_coloring(read_file(cfg.file), cfg.colors);
  throw InvalidArgument("a coloring is required (--file or --coloring)");
}

BigRational parse_slack(const std::string& text, const char* flag) {
  try {
    return BigRational::parse(text);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument(std::string(flag) + ": not a rational number: '" + text + "'");
  }
}

int cmd_count(const Config& cfg) {
  const Coloring c = load_coloring(cfg);
  const TripleCounts counts = count_triples(c, cfg.a, cfg.threads);
  const bool categories = c.r() == 2 && cfg.a >= 2;
  std::optional<PairCategoryCounts> cats;
  if (categories) cats = count_pair_categories(c, cfg.a, cfg.threads);
  const std::string fmt = format_of(cfg, "json");
  std::ostringstream out;
  if (fmt == "json") {
    json j = {{"n", c.n()}, {"a", cfg.a}, {"r", c.r()}, {"counts", to_json(counts)}};
    if (cats) {
      j["categories"] = to_json(*cats);
      j["residue_slack"] = residue_bound_slack(c, cfg.a).str();
      j["residue_slack_floor"] = residue_slack_floor(c, cfg.a).str();
    }
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "n,a,r,mono,nonmono,total" << (cats ? ",divisible,lower_cat,upper_cat" : "") << "\n";
    out << c.n() << "," << cfg.a << "," << c.r() << "," << counts.mono << "," << counts.nonmono << ","
        << counts.total;
    if (cats) out << "," << cats->divisible << "," << cats->lower_cat << "," << cats->upper_cat;
    out << "\n";
  } else {
    out << "n=" << c.n() << " a=" << cfg.a << " r=" << c.r() << "\n";
    out << "mono=" << counts.mono << " nonmono=" << counts.nonmono << " total=" << counts.total << "\n";
    if (cats)
      out << "divisible=" << cats->divisible << " lower_cat=" << cats->lower_cat << " upper_cat=" << cats->upper_cat
          << "\n";
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_density(const Config& cfg) {
  if (!cfg.pattern.empty() && !cfg.pattern_file.empty())
    throw InvalidArgument("give either --pattern or --pattern-file, not both");
  if (cfg.pattern.empty() && cfg.pattern_file.empty()) throw InvalidArgument("a pattern is required");
  const BlockPattern p = parse_pattern(cfg.pattern.empty() ? read_file(cfg.pattern_file) : cfg.pattern);
  const DensityReport rep = mono_density(p, cfg.a, cfg.threads);
  const std::string fmt = format_of(cfg, "json");
  std::ostringstream out;
  std::optional<TripleCounts> realized;
  if (cfg.n > 0) realized = count_triples(realize(p, cfg.n), cfg.a, cfg.threads);
  if (fmt == "json") {
    json j = {{"a", cfg.a}, {"pattern", pattern_to_json(p)}, {"density", to_json(rep)}};
    if (realized) j["realized"] = {{"n", cfg.n}, {"counts", to_json(*realized)}};
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "a,coefficient,decimal\n" << cfg.a << "," << rep.coefficient.str() << "," << rep.coefficient.decimal(10)
        << "\n";
  } else {
    out << "density=" << rep.coefficient.str() << " (" << rep.coefficient.decimal(10) << ")\n";
    if (realized) out << "n=" << cfg.n << " mono=" << realized->mono << "\n";
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_greedy(const Config& cfg) {
  if (cfg.compat_first_positive && cfg.best_of_all)
    throw InvalidArgument("--compat-first-positive and --best-of-all are mutually exclusive");
  GreedyOptions opts;
  opts.max_blocks = cfg.max_blocks;
  opts.selection = cfg.best_of_all ? ColorSelection::BestOfAll : ColorSelection::FirstPositive;
  opts.threads = cfg.threads;
  opts.cross_check = cfg.cross_check;
  opts.keep_steps = !cfg.no_steps;
  if (cfg.time_limit > 0) opts.time_limit = std::chrono::duration<double>(cfg.time_limit);
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.progress)
    opts.on_accept = [&](const GreedyStep& s) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cerr << "block " << s.step << " color " << int(s.color) << " density~" << s.density_after.decimal(12)
                << " (" << s.density_after.denominator().get_str().size() << " digits) " << dt.count() << "s\n";
    };
  const GreedyTrace trace = greedy_optimize(cfg.a, cfg.colors == 0 ? 2 : cfg.colors, opts);
  const std::string fmt = format_of(cfg, "json");
  std::ostringstream out;
  if (fmt == "json") {
    json j = to_json(trace);
    if (cfg.no_steps) j.erase("steps");
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "step,color,t,density_after,accepted\n";
    for (const GreedyStep& s : trace.steps)
      out << s.step << "," << int(s.color) << "," << (s.t ? s.t->str() : "") << "," << s.density_after.str() << ","
          << (s.accepted ? 1 : 0) << "\n";
  } else {
    out << "a=" << trace.a << " r=" << trace.r << " selection=" << to_string(trace.selection)
        << " blocks=" << trace.final_pattern.size() << (trace.capped ? " (capped)" : "") << (trace.timed_out ? " (timed out)" : "") << "\n";
    out << "colors:";
    for (Color c : trace.final_pattern.color_sequence()) out << " " << int(c);
    out << "\nlengths:";
    for (const BigRational& l : trace.final_pattern.lengths()) out << " " << l.str();
    out << "\ndensity=" << trace.final_density.str() << "\n";
    out << "decimal=" << trace.final_density.decimal(10) << " reciprocal=" << trace.final_density.reciprocal().decimal(10)
        << "\n";
  }
  emit(cfg, out.str());
  if (trace.timed_out) {
    std::cerr << "error: greedy ran past --time-limit=" << cfg.time_limit << "s before its stopping rule fired\n";
    return kCap;
  }
  if (trace.capped) {
    std::cerr << "error: greedy reached --max-blocks=" << cfg.max_blocks << " before its stopping rule fired\n";
    return kCap;
  }
  return kOk;
}

int cmd_search(const Config& cfg) {
  if (cfg.exact && cfg.local) throw InvalidArgument("--exact and --local are mutually exclusive");
  const int r = cfg.colors == 0 ? 2 : cfg.colors;
  SearchResult res = cfg.local ? local_search_min(cfg.n, cfg.a, r, cfg.restarts, cfg.seed, cfg.threads)
                               : exact_min(cfg.n, cfg.a, r, {cfg.threads, cfg.budget});
  const std::string fmt = format_of(cfg, "json");
  std::ostringstream out;
  if (fmt == "json") {
    out << to_json(res).dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "n,a,r,min_count,witness,exhaustive\n"
        << res.n << "," << res.a << "," << res.r << "," << res.min_count << "," << res.witness.to_digits() << ","
        << (res.exhaustive ? 1 : 0) << "\n";
  } else {
    out << "n=" << res.n << " a=" << res.a << " r=" << res.r << " min_count=" << res.min_count
        << (res.exhaustive ? " (exact)" : " (local search)") << "\nwitness=" << res.witness.to_digits() << "\n";
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_scan(const Config& cfg) {
  const int r = cfg.colors == 0 ? 2 : cfg.colors;
  const std::vector<ScanRow> rows = scan_minima(cfg.a, r, cfg.n_max, {cfg.threads, cfg.budget});
  const std::string fmt = format_of(cfg, "csv");
  if (!cfg.csv.empty()) write_file(cfg.csv, scan_csv(rows));
  if (fmt == "json") {
    json j = json::array();
    for (const ScanRow& row : rows) j.push_back({{"n", row.n}, {"min_count", row.min_count}});
    emit(cfg, j.dump(2) + "\n");
  } else if (cfg.csv.empty() || !cfg.output.empty()) {
    emit(cfg, scan_csv(rows));
  }
  return kOk;
}

std::string summary_line(const VerifySummary& v) {
  std::ostringstream s;
  s << (v.passed() ? "PASS" : "FAIL") << " n=" << v.n << " a=" << v.a << " colorings=" << v.colorings
    << " count_identity=" << v.count_identity_failures << " category_identity=" << v.category_identity_failures
    << " residue_bound=" << v.residue_bound_failures << " theorem3=" << v.theorem3_failures
    << " corollary4=" << v.corollary4_failures << " total_identity=" << v.total_identity_failures;
  return s.str();
}

int cmd_verify(const Config& cfg) {
  const BoundSlack slack{parse_slack(cfg.q_slack, "--q-slack"), parse_slack(cfg.mono_slack, "--mono-slack")};
  std::vector<VerifySummary> results;
  if (cfg.all) {
    if (cfg.n_max < 1) throw InvalidArgument("--all needs --n-max >= 1");
    if (cfg.n_max > 26) throw InvalidArgument("--n-max must be <= 26 for exhaustive verification");
    for (int n = 1; n <= cfg.n_max; ++n) results.push_back(verify_exhaustive(n, cfg.a, slack, cfg.threads));
  } else if (!cfg.file.empty()) {
    std::istringstream lines(read_file(cfg.file));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      results.push_back(verify_coloring(parse_coloring(line, 2), cfg.a, slack));
    }
    if (results.empty()) throw ParseError(cfg.file + ": no colorings found");
  } else if (!cfg.coloring.empty()) {
    results.push_back(verify_coloring(parse_coloring(cfg.coloring, 2), cfg.a, slack));
  } else {
    throw InvalidArgument("verify needs --all --n-max N, --file, or --coloring");
  }
  bool ok = true;
  for (const VerifySummary& v : results) ok = ok && v.passed();
  const std::string fmt = format_of(cfg, "text");
  std::ostringstream out;
  if (fmt == "json") {
    json j = json::array();
    for (const VerifySummary& v : results) j.push_back(to_json(v));
    out << json{{"passed", ok}, {"results", std::move(j)}}.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << "n,a,colorings,passed,count_identity,category_identity,residue_bound,theorem3,corollary4,total_identity\n";
    for (const VerifySummary& v : results)
      out << v.n << "," << v.a << "," << v.colorings << "," << (v.passed() ? 1 : 0) << ","
          << v.count_identity_failures << "," << v.category_identity_failures << "," << v.residue_bound_failures << ","
          << v.theorem3_failures << "," << v.corollary4_failures << "," << v.total_identity_failures << "\n";
  } else {
    for (const VerifySummary& v : results) out << summary_line(v) << "\n";
    out << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  emit(cfg, out.str());
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Count, minimize and verify monochromatic {x, y, x+ay} triples under r-colorings of [1, n]"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Thread cap (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--json", cfg.json_flag, "Shorthand for --format json");
    sub->add_option("-o,--output", cfg.output, "Write the report to a file instead of stdout");
  };
  const auto add_a = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--a", cfg.a, "Coefficient a in x + a*y = z")->check(CLI::Range(1, 1000000));
    if (required) opt->required();
  };
  const auto add_colors = [&](CLI::App* sub) {
    sub->add_option("-r,--colors", cfg.colors, "Number of colors")->check(CLI::Range(1, 10));
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Exhaustive search budget in incremental steps")
        ->envname("RADO_MIN_BUDGET")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* count = app.add_subcommand("count", "Count triples in one coloring");
  add_common(count);
  add_a(count, true);
  add_colors(count);
  count->add_option("--file", cfg.file, "Coloring file (digit string or RLE c:len,...)");
  count->add_option("--coloring", cfg.coloring, "Coloring given inline");

  CLI::App* density = app.add_subcommand("density", "Exact n^2 coefficient of a block pattern");
  add_common(density);
  add_a(density, true);
  density->add_option("--pattern", cfg.pattern, "Pattern JSON inline");
  density->add_option("--pattern-file", cfg.pattern_file, "Pattern JSON file");
  density->add_option("--n", cfg.n, "Also realize the pattern on [1, n] and count")->check(CLI::PositiveNumber);

  CLI::App* greedy = app.add_subcommand("greedy", "Greedy interval construction");
  add_common(greedy);
  add_a(greedy, true);
  add_colors(greedy);
  greedy->add_option("--max-blocks", cfg.max_blocks, "Block cap (exit 4 when reached)")->check(CLI::Range(1, 100000));
  greedy->add_flag("--compat-first-positive", cfg.compat_first_positive,
                   "Accept the first color that improves (default)");
  greedy->add_flag("--best-of-all", cfg.best_of_all, "Evaluate every color and take the lowest density");
  greedy->add_flag("--cross-check", cfg.cross_check, "Re-derive every step through the rational route");
  greedy->add_flag("--no-steps", cfg.no_steps, "Omit the per-step trace from JSON output");
  greedy->add_flag("--progress", cfg.progress, "Report each accepted block on stderr");
  greedy->add_option("--time-limit", cfg.time_limit, "Stop after this many seconds (exit 4)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* search = app.add_subcommand("search", "Minimum monochromatic count over all colorings of [1, n]");
  add_common(search);
  add_a(search, true);
  add_colors(search);
  add_budget(search);
  search->add_option("--n", cfg.n, "Interval length")->required()->check(CLI::Range(1, 1000000));
  search->add_flag("--exact", cfg.exact, "Exhaustive search (default)");
  search->add_flag("--local", cfg.local, "Hill climbing with random restarts");
  search->add_option("--restarts", cfg.restarts, "Local search restarts")->check(CLI::NonNegativeNumber);
  search->add_option("--seed", cfg.seed, "Local search seed");

  CLI::App* scan = app.add_subcommand("scan", "Exact minima for n = 1..n_max");
  add_common(scan);
  add_a(scan, true);
  add_colors(scan);
  add_budget(scan);
  scan->add_option("--n-max", cfg.n_max, "Largest n")->required()->check(CLI::Range(1, 64));
  scan->add_option("--csv", cfg.csv, "Write n,min_count,min_over_n2 to this file");

  CLI::App* verify = app.add_subcommand("verify", "Run the identity and bound suites");
  add_common(verify);
  add_a(verify, true);
  verify->add_option("--n-max", cfg.n_max, "Largest n for --all")->check(CLI::Range(1, 26));
  verify->add_flag("--all", cfg.all, "Every 2-coloring of [1, n] for n = 1..n_max");
  verify->add_option("--file", cfg.file, "Colorings to check, one per line");
  verify->add_option("--coloring", cfg.coloring, "One coloring to check");
  verify->add_option("--q-slack", cfg.q_slack, "Linear slack for the Q upper bound, in units of n");
  verify->add_option("--mono-slack", cfg.mono_slack, "Linear slack for the monochromatic lower bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParams;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*density) return cmd_density(cfg);
    if (*greedy) return cmd_greedy(cfg);
    if (*search) return cmd_search(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const BlockCapReached& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParams;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kParams;
}
