#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bsimplex/csv.hpp"
#include "bsimplex/errors.hpp"
#include "bsimplex/estimate.hpp"
#include "bsimplex/ineq.hpp"
#include "bsimplex/monotone.hpp"
#include "bsimplex/rng.hpp"
#include "bsimplex/sample_set.hpp"
#include "bsimplex/simplex.hpp"
#include "bsimplex/spoly.hpp"

namespace bsimplex::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string csv;
  std::string summary;
  bool pass = true;
};

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(trim(item));
  return parts;
}

double to_double(const std::string& field, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + field + "' is not a number");
  }
  if (used != field.size()) throw UsageError(what + ": '" + field + "' is not a number");
  return value;
}

int to_int(const std::string& field, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + field + "' is not an integer");
  }
  if (used != field.size()) throw UsageError(what + ": '" + field + "' is not an integer");
  return value;
}

std::vector<int> int_list(const std::string& text, const std::string& what, int min_value) {
  std::vector<int> values;
  for (const auto& part : split(text, ',')) {
    const int v = to_int(part, what);
    if (v < min_value) {
      throw UsageError(what + ": " + std::to_string(v) + " is below " + std::to_string(min_value));
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(what + ": empty list");
  return values;
}

std::vector<double> double_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(to_double(part, what));
  if (values.empty()) throw UsageError(what + ": empty list");
  return values;
}

// "start:stop:step"
std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid: expected start:stop:step, got '" + text + "'");
  const double start = to_double(parts[0], "--grid");
  const double stop = to_double(parts[1], "--grid");
  const double step = to_double(parts[2], "--grid");
  if (!(start > 0.0)) throw UsageError("--grid: start must be positive");
  if (!(step > 0.0) || !(stop >= start)) throw UsageError("--grid: need step > 0 and stop >= start");
  if ((stop - start) / step > 1e6) throw UsageError("--grid: more than 10^6 points");
  return linear_grid(start, stop, step);
}

bool flag_given(const std::vector<std::string>& args, const std::string& key) {
  const std::string bare = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == bare || a.rfind(bare + "=", 0) == 0;
  });
}

// Strips --config <file> and appends one --key=value token per config line
// whose key was not given on the command line.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> result;
  std::string config_path;
  bool has_config = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      config_path = args[++i];
      has_config = true;
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      has_config = true;
    } else {
      result.push_back(args[i]);
    }
  }
  if (!has_config) return result;

  std::ifstream in(config_path);
  if (!in) throw UsageError("cannot read config file '" + config_path + "'");
  std::string line;
  int line_no = 0;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(config_path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty()) throw UsageError(config_path + ":" + std::to_string(line_no) + ": empty key");
    if (!flag_given(result, key) && !flag_given(extra, key)) extra.push_back("--" + key + "=" + value);
  }
  result.insert(result.end(), extra.begin(), extra.end());
  return result;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
    return;
  }
  const auto path = resolve_output(out_path);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  write_file_atomically(path, content);
}

// ---------------------------------------------------------------- cm-scan

struct CmScanArgs {
  int d = 2;
  std::uint64_t seed = 0;
  std::size_t instances = 1;
  std::string grid = "0.1:10:0.1";
  int max_order = 6;
  bool corrupt = false;
};

Result run_cm_scan(const CmScanArgs& a) {
  const auto grid = parse_grid(a.grid);
  ScanOptions options;
  options.corrupt = a.corrupt;

  Result result;
  result.csv = "instance,d,a,order,value,margin\n";
  double max_violation = 0.0;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < a.instances; ++i) {
    const auto inst = random_instance(a.d, Rng::derive_seed(a.seed, i));
    const auto report = cm_scan(inst, grid, a.max_order, options);
    for (const auto& row : report.rows) {
      result.csv += csv_row({std::to_string(i), std::to_string(a.d), format_double(row.a), row.order,
                             format_double(row.value), format_double(row.margin)});
    }
    max_violation = std::max(max_violation, report.max_violation);
    if (!report.pass) ++failed;
  }
  result.pass = failed == 0;
  result.csv += "# pass=" + std::string(result.pass ? "1" : "0") +
                " max_violation=" + format_double(max_violation) + "\n";
  result.summary = "cm-scan: " + std::to_string(a.instances - failed) + "/" +
                   std::to_string(a.instances) + " instances pass, max_violation=" +
                   format_double(max_violation);
  return result;
}

// -------------------------------------------------------------- ineq-fuzz

struct FuzzArgs {
  std::size_t trials = 1000;
  int dmax = 5;
  std::uint64_t seed = 0;
  bool corrupt = false;
};

Result run_ineq_fuzz(const FuzzArgs& a) {
  if (a.trials == 0) throw UsageError("--trials must be at least 1");
  FuzzOptions options;
  options.flip_sign = a.corrupt;
  const auto report = fuzz_inequalities(a.trials, a.dmax, a.seed, options);
  Result result;
  result.csv = fuzz_report_csv(report);
  result.pass = report.pass;
  result.summary = "ineq-fuzz: min_margin=" + format_double(report.min_margin) +
                   " max_abs_equality=" + format_double(report.max_abs_equality) +
                   " pass=" + (report.pass ? "1" : "0");
  return result;
}

// ---------------------------------------------------------------- s-table

struct STableArgs {
  int d = 1;
  std::string r = "1";
  std::string s = "1";
  std::string m_list = "10,20,40,80,160,320";
};

Result run_s_table(const STableArgs& a) {
  const auto rs = int_list(a.r, "--r", 1);
  const auto ss = int_list(a.s, "--s", 1);
  const auto ms = int_list(a.m_list, "--m-list", 1);
  for (int r : rs) {
    for (int s : ss) {
      for (int m : ms) SPolyParams{r, s, m, a.d}.validate();
    }
  }
  Result result;
  bool header = true;
  double worst_ratio = 0.0;
  for (int r : rs) {
    for (int s : ss) {
      const auto rows = s_convergence_table(a.d, r, s, ms);
      result.csv += convergence_csv(rows, header);
      header = false;
      double peak = 0.0;
      for (const auto& row : rows) peak = std::max(peak, row.scaled_error);
      // Bounded m*|error|: nothing later may exceed twice the first entry.
      const double first = rows.front().scaled_error;
      const double ratio = first > 0.0 ? peak / first : (peak > 0.0 ? INFINITY : 1.0);
      worst_ratio = std::max(worst_ratio, ratio);
      if (peak > 2.0 * first) result.pass = false;
    }
  }
  result.summary = "s-table: max scaled_error / first = " + format_double(worst_ratio) +
                   " pass=" + (result.pass ? "1" : "0");
  return result;
}

// ----------------------------------------------------------- lclt-compare

struct LcltArgs {
  int d = 1;
  std::string r = "1";
  std::string s = "1";
  std::string m_list = "16,64,256";
  std::string x;
};

Result run_lclt_compare(const LcltArgs& a) {
  const auto rs = int_list(a.r, "--r", 1);
  const auto ss = int_list(a.s, "--s", 1);
  const auto ms = int_list(a.m_list, "--m-list", 1);
  if (a.d < 1) throw UsageError("--d must be at least 1");
  SimplexPoint x = barycenter(a.d);
  if (!a.x.empty()) {
    auto coords = double_list(a.x, "--x");
    if (coords.size() != static_cast<std::size_t>(a.d)) {
      throw UsageError("--x must have exactly d coordinates");
    }
    x = SimplexPoint(std::move(coords));
  }
  if (!x.interior()) throw UsageError("--x must be an interior point of the simplex");
  for (int r : rs) {
    for (int s : ss) {
      for (int m : ms) SPolyParams{r, s, m, a.d}.validate();
    }
  }
  Result result;
  bool header = true;
  for (int r : rs) {
    for (int s : ss) {
      const auto rows = lclt_compare(r, s, x, ms);
      result.csv += lclt_csv(rows, header);
      header = false;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].abs_error < rows[i - 1].abs_error)) result.pass = false;
      }
    }
  }
  result.summary = std::string("lclt-compare: strictly decreasing error = ") +
                   (result.pass ? "yes" : "no");
  return result;
}

// --------------------------------------------------------- identity-check

struct IdentityArgs {
  int d = 4;
  int m = 60;
};

Result run_identity_check(const IdentityArgs& a) {
  const ExactBudget budget;
  if (a.d < 1 || a.d > budget.max_d) {
    throw UsageError("--d must be in [1, " + std::to_string(budget.max_d) + "]");
  }
  if (a.m < 0 || a.m > budget.max_m) {
    throw UsageError("--m must be in [0, " + std::to_string(budget.max_m) + "]");
  }
  Result result;
  result.csv = "d,m,lhs,rhs,equal\n";
  std::size_t failures = 0;
  for (int d = 1; d <= a.d; ++d) {
    for (int m = 0; m <= a.m; ++m) {
      const auto report = central_binomial_identity(d, m, budget);
      result.csv += csv_row({std::to_string(d), std::to_string(m), report.lhs.str(),
                             report.rhs.str(), report.equal ? "1" : "0"});
      if (!report.equal) ++failures;
    }
  }
  result.pass = failures == 0;
  result.summary = "identity-check: " + std::to_string(failures) + " mismatches";
  return result;
}

// --------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string samples;
  int m = 10;
  std::string kind = "simplex-cdf";
  int grid = 20;
};

Result run_estimate(const EstimateArgs& a) {
  EstimatorConfig config;
  try {
    config.kind = parse_estimator_kind(a.kind);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  config.m = a.m;
  if (a.m < 1) throw UsageError("--m must be at least 1");
  if (a.grid < 1) throw UsageError("--grid must be a positive resolution");
  std::ifstream in(a.samples);
  if (!in) throw UsageError("cannot read samples file '" + a.samples + "'");
  const SampleSet samples = read_sample_csv(in, domain_of(config.kind), a.samples);
  if (samples.empty()) throw UsageError("samples file '" + a.samples + "' has no observations");

  const auto evaluation = evaluate_on_grid(samples, config, a.grid);
  Result result;
  result.csv = grid_csv(evaluation);
  result.summary = std::string("estimate: kind=") + to_string(config.kind) +
                   " m=" + std::to_string(a.m) + " points=" +
                   std::to_string(evaluation.values.size());
  if (config.kind != EstimatorKind::kHypercubeDensity) {
    std::vector<double> reference;
    reference.reserve(evaluation.values.size());
    for (std::size_t i = 0; i < evaluation.values.size(); ++i) {
      reference.push_back(empirical_cdf(
          samples, std::span<const double>(evaluation.points).subspan(i * evaluation.dim, evaluation.dim)));
    }
    result.summary += " sup_error=" + format_double(sup_error_on_grid(evaluation.values, reference));
  }
  return result;
}

// ------------------------------------------------------------- sample-gen

struct SampleGenArgs {
  std::string alpha;
  std::string domain = "simplex";
  int d = 2;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
};

Result run_sample_gen(const SampleGenArgs& a) {
  if (a.n == 0) throw UsageError("--n must be at least 1");
  std::optional<SampleSet> samples;
  if (a.domain == "simplex") {
    std::vector<double> alpha;
    if (a.alpha.empty()) {
      if (a.d < 1) throw UsageError("--d must be at least 1");
      alpha.assign(static_cast<std::size_t>(a.d) + 1, 1.0);
    } else {
      alpha = double_list(a.alpha, "--alpha");
    }
    if (alpha.size() < 2) throw UsageError("--alpha needs at least two entries");
    for (double v : alpha) {
      if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("--alpha entries must be positive");
    }
    samples.emplace(sample_dirichlet(alpha, a.n, a.seed));
  } else if (a.domain == "hypercube") {
    if (a.d < 1) throw UsageError("--d must be at least 1");
    samples.emplace(sample_uniform_hypercube(static_cast<std::size_t>(a.d), a.n, a.seed));
  } else {
    throw UsageError("--domain must be simplex or hypercube");
  }
  Result result;
  result.csv = sample_csv(*samples);
  result.summary = "sample-gen: " + std::to_string(samples->size()) + " points in dimension " +
                   std::to_string(samples->dim());
  return result;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein simplex numerics: verification suites and estimators", "bsimplex"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string out_path;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output CSV path (stdout if omitted)");
  };

  CmScanArgs cm;
  auto* cm_cmd = app.add_subcommand("cm-scan", "Complete-monotonicity scan of random instances");
  cm_cmd->add_option("--d", cm.d, "Dimension")->check(CLI::Range(1, 64));
  cm_cmd->add_option("--seed", cm.seed, "Base seed");
  cm_cmd->add_option("--instances", cm.instances, "Number of random instances")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  cm_cmd->add_option("--grid", cm.grid, "Grid start:stop:step");
  cm_cmd->add_option("--max-order", cm.max_order, "Highest finite-difference order")
      ->check(CLI::Range(1, 6));
  cm_cmd->add_flag("--self-test-corrupt", cm.corrupt, "Scan a deliberately broken g");
  add_out(cm_cmd);

  FuzzArgs fz;
  auto* fz_cmd = app.add_subcommand("ineq-fuzz", "Randomized check of the coefficient inequalities");
  fz_cmd->add_option("--trials", fz.trials, "Number of trials");
  fz_cmd->add_option("--dmax", fz.dmax, "Largest dimension drawn")->check(CLI::Range(1, 64));
  fz_cmd->add_option("--seed", fz.seed, "Base seed");
  fz_cmd->add_flag("--self-test-corrupt", fz.corrupt, "Flip the sign of every margin");
  add_out(fz_cmd);

  STableArgs st;
  auto* st_cmd = app.add_subcommand("s-table", "Convergence table for the integral of S_{r,s,m}");
  st_cmd->add_option("--d", st.d, "Dimension")->check(CLI::Range(1, 16));
  st_cmd->add_option("--r", st.r, "Comma-separated r values");
  st_cmd->add_option("--s", st.s, "Comma-separated s values");
  st_cmd->add_option("--m-list", st.m_list, "Comma-separated degrees");
  add_out(st_cmd);

  LcltArgs lc;
  auto* lc_cmd = app.add_subcommand("lclt-compare", "Compare m^(d/2) S_{r,s,m}(x) with its Gaussian limit");
  lc_cmd->add_option("--d", lc.d, "Dimension")->check(CLI::Range(1, 16));
  lc_cmd->add_option("--r", lc.r, "Comma-separated r values");
  lc_cmd->add_option("--s", lc.s, "Comma-separated s values");
  lc_cmd->add_option("--m-list", lc.m_list, "Comma-separated degrees");
  lc_cmd->add_option("--x", lc.x, "Comma-separated interior point (barycenter if omitted)");
  add_out(lc_cmd);

  IdentityArgs id;
  auto* id_cmd = app.add_subcommand("identity-check", "Exact central-binomial lattice identity");
  id_cmd->add_option("--d", id.d, "Largest dimension");
  id_cmd->add_option("--m", id.m, "Largest degree");
  add_out(id_cmd);

  EstimateArgs es;
  auto* es_cmd = app.add_subcommand("estimate", "Evaluate a Bernstein estimator on a grid");
  es_cmd->add_option("--samples", es.samples, "Sample CSV file")->required();
  es_cmd->add_option("--m", es.m, "Polynomial degree");
  es_cmd->add_option("--kind", es.kind, "simplex-cdf, hypercube-cdf or hypercube-density");
  es_cmd->add_option("--grid", es.grid, "Grid resolution");
  add_out(es_cmd);

  SampleGenArgs sg;
  auto* sg_cmd = app.add_subcommand("sample-gen", "Generate a seeded synthetic sample");
  sg_cmd->add_option("--alpha", sg.alpha, "Comma-separated Dirichlet parameters");
  sg_cmd->add_option("--domain", sg.domain, "simplex or hypercube");
  sg_cmd->add_option("--d", sg.d, "Dimension when --alpha is omitted");
  sg_cmd->add_option("--n", sg.n, "Number of points");
  sg_cmd->add_option("--seed", sg.seed, "Seed");
  add_out(sg_cmd);

  try {
    auto args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Result result;
  try {
    if (cm_cmd->parsed()) {
      result = run_cm_scan(cm);
    } else if (fz_cmd->parsed()) {
      result = run_ineq_fuzz(fz);
    } else if (st_cmd->parsed()) {
      result = run_s_table(st);
    } else if (lc_cmd->parsed()) {
      result = run_lclt_compare(lc);
    } else if (id_cmd->parsed()) {
      result = run_identity_check(id);
    } else if (es_cmd->parsed()) {
      result = run_estimate(es);
    } else {
      result = run_sample_gen(sg);
    }
    emit(out_path, result.csv, out);
  } catch (const std::exception& e) {
    // Nothing has been written: output only happens after a full run.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << result.summary << "\n";
  return result.pass ? kExitPass : kExitViolation;
}

}  // namespace bsimplex::cli
