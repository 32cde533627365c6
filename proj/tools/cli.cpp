#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "ppdiamond/diamond.hpp"
#include "ppdiamond/serialize.hpp"

namespace ppd::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Largest period for which per-residue tables are built on demand.
constexpr std::int64_t kMaxQuasipolyPeriod = 2520;
constexpr std::int64_t kMaxCompressedPeriod = 2520;

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

template <typename T>
std::vector<T> parallel_map(std::int64_t first, std::int64_t last, int jobs, const std::function<T(std::int64_t)>& f) {
  const std::int64_t count = std::max<std::int64_t>(last - first + 1, 0);
  std::vector<T> out(static_cast<size_t>(count));
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::int64_t>(count, 1))));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = f(first + i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (int w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::int64_t i = w; i < count; i += workers) out[i] = f(first + i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

Json params_json(const DiamondParams& p) {
  std::vector<std::int64_t> bprime(p.bprime.begin(), p.bprime.end());
  std::vector<std::int64_t> eps(p.epsilon.begin(), p.epsilon.end());
  return {{"k", p.k},           {"alpha", p.alpha},   {"beta", p.beta},         {"parts", p.seq.parts()},
          {"value_set", p.value_set}, {"period", p.period}, {"n0", p.n0},   {"shifts", p.shifts},
          {"bprime", bprime},   {"epsilon", eps}};
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  const auto p = build_params(cfg.k);
  if (cfg.format == Format::json) {
    out << params_json(p).dump(2) << "\n";
    return kOk;
  }
  std::vector<std::int64_t> bprime(p.bprime.begin(), p.bprime.end());
  std::vector<std::int64_t> eps(p.epsilon.begin(), p.epsilon.end());
  out << "k: " << p.k << "\nalpha: " << p.alpha << "\nbeta: " << p.beta << "\nparts: " << join(p.seq.parts())
      << "\nvalue_set: " << join(p.value_set) << "\nperiod: " << p.period << "\nn0: " << p.n0
      << "\nshifts: " << join(p.shifts) << "\nbprime: " << join(bprime) << "\nepsilon: " << join(eps) << "\n";
  return kOk;
}

// Evaluates D_k(n) on [first, last] with one method, sharing precomputation.
class CountEngine {
 public:
  CountEngine(const RunConfig& cfg, const DiamondParams& params, std::int64_t first, std::int64_t last)
      : cfg_(cfg), params_(params), method_(cfg.method == Method::automatic ? Method::shifts : cfg.method) {
    switch (method_) {
      case Method::series: dense_ = diamond_series(params.k, last); break;
      case Method::shifts: dense_ = counts_via_shifts(params, last); break;
      case Method::quasipoly:
        if (first < params.n0)
          throw UsageError("method quasipoly applies only for n >= n0 = " + std::to_string(params.n0));
        if (params.period > kMaxQuasipolyPeriod)
          throw BudgetExceeded("quasipoly: period " + std::to_string(params.period) + " too large");
        quasi_.emplace(diamond_quasipoly(params));
        break;
      case Method::compressed: {
        if (params.period > kMaxCompressedPeriod)
          throw BudgetExceeded("compressed: period " + std::to_string(params.period) + " too large");
        CompressedOptions opts;
        opts.tuple_budget = cfg.tuple_budget;
        compressed_.emplace(params, opts);
        break;
      }
      default: break;
    }
  }

  Method method() const { return method_; }

  Integer operator()(std::int64_t n, const DiamondVisitor& visit = {}) const {
    switch (method_) {
      case Method::enumerate: return enumerate_diamonds(params_.k, n, cfg_.node_budget, visit);
      case Method::quasipoly: return quasi_->count_at(n);
      case Method::compressed: return compressed_->count(n);
      default: return dense_[n];
    }
  }

 private:
  const RunConfig& cfg_;
  const DiamondParams& params_;
  Method method_;
  std::vector<Integer> dense_;
  std::optional<QuasiPolynomial> quasi_;
  std::optional<CompressedCounter> compressed_;
};

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n) throw UsageError("count requires --n");
  const auto n = *cfg.n;
  if (n < 0) throw UsageError("--n must be >= 0");
  RunConfig effective = cfg;
  if (cfg.witnesses) {
    if (cfg.method != Method::automatic && cfg.method != Method::enumerate)
      throw UsageError("--witnesses requires --method enumerate");
    effective.method = Method::enumerate;
  }
  const auto params = build_params(cfg.k);
  const CountEngine engine(effective, params, n, n);
  DiamondVisitor visit;
  if (cfg.witnesses) {
    visit = [&](std::span<const std::int64_t> d) { out << join({d.begin(), d.end()}) << "\n"; };
  }
  const Integer value = engine(n, visit);
  const auto method = method_name(engine.method());
  switch (cfg.format) {
    case Format::json:
      out << Json{{"k", cfg.k}, {"n", n}, {"count", to_string(value)}, {"method", method}}.dump() << "\n";
      break;
    case Format::csv: out << "n,count,method\n" << n << "," << value << "," << method << "\n"; break;
    case Format::text:
      out << value << "\n";
      err << "method: " << method << "\n";
      break;
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.max_n) throw UsageError("table requires --max-n");
  const auto first = cfg.min_n, last = *cfg.max_n;
  if (first < 0 || last < first) throw UsageError("table needs 0 <= --min-n <= --max-n");
  const auto params = build_params(cfg.k);
  const CountEngine engine(cfg, params, first, last);
  const auto values = parallel_map<Integer>(first, last, cfg.jobs, [&](std::int64_t n) { return engine(n); });
  const auto method = method_name(engine.method());
  switch (cfg.format) {
    case Format::csv:
      out << "n,count,method\n";
      for (std::int64_t n = first; n <= last; ++n) out << n << "," << values[n - first] << "," << method << "\n";
      break;
    case Format::json: {
      Json rows = Json::array();
      for (std::int64_t n = first; n <= last; ++n) rows.push_back({{"n", n}, {"count", to_string(values[n - first])}});
      out << Json{{"k", cfg.k}, {"method", method}, {"rows", rows}}.dump(2) << "\n";
      break;
    }
    case Format::text:
      for (std::int64_t n = first; n <= last; ++n) out << n << " " << values[n - first] << "\n";
      break;
  }
  return kOk;
}

int cmd_quasipoly(const RunConfig& cfg, std::ostream& out) {
  const auto params = build_params(cfg.k);
  if (params.period > kMaxQuasipolyPeriod)
    throw BudgetExceeded("quasipoly: period " + std::to_string(params.period) + " too large");
  out << to_json(diamond_quasipoly(params)).dump(cfg.format == Format::json ? -1 : 2) << "\n";
  return kOk;
}

int cmd_polypart(const RunConfig& cfg, std::ostream& out) {
  const auto params = build_params(cfg.k);
  const auto compressed = diamond_polypart_compressed(params);
  const auto bern = diamond_polypart_bernoulli(params);
  const bool equal = compressed == bern;
  if (cfg.format == Format::json) {
    out << Json{{"k", cfg.k}, {"compressed", to_json(compressed)}, {"bernoulli", to_json(bern)}, {"equal", equal}}.dump(2)
        << "\n";
  } else {
    out << "compressed: " << to_json(compressed).dump() << "\n";
    out << "bernoulli:  " << to_json(bern).dump() << "\n";
    out << "equal: " << (equal ? "true" : "false") << "\n";
  }
  return equal ? kOk : kVerificationFailed;
}

int cmd_waves(const RunConfig& cfg, std::ostream& out) {
  const auto params = build_params(cfg.k);
  if (params.period > kMaxQuasipolyPeriod)
    throw BudgetExceeded("waves: period " + std::to_string(params.period) + " too large");
  const auto waves = diamond_waves(params);
  const std::int64_t last = cfg.max_n.value_or(100);
  const auto truth = counts_via_shifts(params, last);
  std::int64_t bad = -1;
  for (std::int64_t n = 0; n <= last && bad < 0; ++n) {
    Rational sum = 0;
    for (const auto& [j, w] : waves) sum += w(n);
    if (sum != Rational(truth[n])) bad = n;
  }
  if (cfg.format == Format::json) {
    Json w = Json::object();
    for (const auto& [j, q] : waves) w[std::to_string(j)] = to_json(q);
    out << Json{{"k", cfg.k}, {"waves", w}, {"residual_max_n", last}, {"residual_zero", bad < 0}}.dump(2) << "\n";
  } else {
    for (const auto& [j, q] : waves) out << "W_" << j << ": " << to_json(q).dump() << "\n";
    out << "residual sum_j W_j(n) - D_k(n) over n=0.." << last << ": "
        << (bad < 0 ? std::string("0") : "nonzero at n=" + std::to_string(bad)) << "\n";
  }
  return bad < 0 ? kOk : kVerificationFailed;
}

struct Check {
  std::string name;
  std::function<std::string()> body;  // empty string on success; "SKIP ..." to skip
};

std::string first_mismatch(const std::vector<Integer>& expected, std::int64_t first, std::int64_t last,
                           const std::function<Integer(std::int64_t)>& f) {
  for (std::int64_t n = first; n <= last; ++n) {
    const Integer got = f(n);
    if (got != expected[n]) return "n=" + std::to_string(n) + ": got " + to_string(got) + ", expected " + to_string(expected[n]);
  }
  return {};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto params = build_params(cfg.k);
  const std::int64_t last = cfg.max_n.value_or(450);
  if (last < 0) throw UsageError("--max-n must be >= 0");
  const auto series = diamond_series(cfg.k, last);

  std::vector<Check> checks;
  checks.push_back({"structure: phi bijection and inverse", [&]() -> std::string {
    std::int64_t prev = 0;
    for (int j = 1; j <= params.beta; ++j) {
      const auto v = phi(params, j);
      if (v <= prev || v != params.value_set[j - 1] || phi_inv(params, v) != j) return "j=" + std::to_string(j);
      prev = v;
    }
    return {};
  }});
  checks.push_back({"structure: multiset of parts", [&]() -> std::string {
    auto parts = params.seq.parts();
    auto expected = params.value_set;
    for (int i = 1; i <= params.alpha; ++i) expected.push_back(3 * i - 1);
    std::sort(parts.begin(), parts.end());
    std::sort(expected.begin(), expected.end());
    return parts == expected ? std::string{} : "parts differ";
  }});
  checks.push_back({"structure: shifts count and maximum", [&]() -> std::string {
    const auto expected = std::size_t{1} << (params.k - params.alpha);
    if (params.shifts.size() != expected) return "count " + std::to_string(params.shifts.size());
    if (params.shifts.back() != params.n0) return "max " + std::to_string(params.shifts.back());
    return {};
  }});
  checks.push_back({"series: raw = reduced", [&] {
    const auto reduced = diamond_series(cfg.k, last, SeriesForm::reduced);
    return first_mismatch(series, 0, last, [&](std::int64_t n) { return reduced[n]; });
  }});
  checks.push_back({"shifts = series", [&] {
    const auto shifts = counts_via_shifts(params, last);
    return first_mismatch(series, 0, last, [&](std::int64_t n) { return shifts[n]; });
  }});
  checks.push_back({"enumeration = series (n <= 25)", [&]() -> std::string {
    try {
      return first_mismatch(series, 0, std::min<std::int64_t>(last, 25),
                            [&](std::int64_t n) { return enumerate_diamonds(cfg.k, n, cfg.node_budget); });
    } catch (const BudgetExceeded& e) {
      return std::string("SKIP ") + e.what();
    }
  }});
  checks.push_back({"quasipoly = series (n >= n0)", [&]() -> std::string {
    if (params.period > kMaxQuasipolyPeriod) return "SKIP period too large";
    const auto q = diamond_quasipoly(params);
    return first_mismatch(series, params.n0, last, [&](std::int64_t n) { return q.count_at(n); });
  }});
  checks.push_back({"compressed = series", [&]() -> std::string {
    if (params.period > kMaxCompressedPeriod) return "SKIP period too large";
    CompressedOptions opts;
    opts.tuple_budget = cfg.tuple_budget;
    const CompressedCounter counter(params, opts);
    return first_mismatch(series, 0, last, [&](std::int64_t n) { return counter.count(n); });
  }});
  checks.push_back({"polynomial part: compressed = bernoulli", [&]() -> std::string {
    return diamond_polypart_compressed(params) == diamond_polypart_bernoulli(params) ? std::string{} : "differ";
  }});
  checks.push_back({"waves: sum_j W_j = series", [&]() -> std::string {
    if (params.period > kMaxQuasipolyPeriod) return "SKIP period too large";
    const auto waves = diamond_waves(params);
    for (std::int64_t n = 0; n <= last; ++n) {
      Rational sum = 0;
      for (const auto& [j, w] : waves) sum += w(n);
      if (sum != Rational(series[n])) return "n=" + std::to_string(n);
    }
    return {};
  }});

  std::vector<std::string> results(checks.size());
  const auto run_one = [&](size_t i) {
    try {
      results[i] = checks[i].body();
    } catch (const std::exception& e) {
      results[i] = std::string("exception: ") + e.what();
    }
  };
  if (cfg.jobs > 1) {
    std::vector<std::future<void>> tasks;
    for (size_t i = 0; i < checks.size(); ++i) tasks.push_back(std::async(std::launch::async, run_one, i));
    for (auto& t : tasks) t.get();
  } else {
    for (size_t i = 0; i < checks.size(); ++i) run_one(i);
  }

  bool ok = true;
  Json report = Json::array();
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& r = results[i];
    const std::string status = r.empty() ? "PASS" : (r.rfind("SKIP", 0) == 0 ? "SKIP" : "FAIL");
    ok = ok && status != "FAIL";
    if (cfg.format == Format::json) {
      report.push_back({{"check", checks[i].name}, {"status", status}, {"detail", r}});
    } else {
      out << status << "  " << checks[i].name << (r.empty() || status == "SKIP" ? "" : "  (" + r + ")") << "\n";
    }
  }
  if (cfg.format == Format::json) out << Json{{"k", cfg.k}, {"max_n", last}, {"checks", report}, {"ok", ok}}.dump(2) << "\n";
  else out << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::enumerate: return "enumerate";
    case Method::series: return "series";
    case Method::shifts: return "shifts";
    case Method::quasipoly: return "quasipoly";
    case Method::compressed: return "compressed";
  }
  return "?";
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.k < 1) throw UsageError("--k must be >= 1");
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    switch (cfg.command) {
      case Command::params: return cmd_params(cfg, out);
      case Command::count: return cmd_count(cfg, out, err);
      case Command::table: return cmd_table(cfg, out);
      case Command::quasipoly: return cmd_quasipoly(cfg, out);
      case Command::polypart: return cmd_polypart(cfg, out);
      case Command::waves: return cmd_waves(cfg, out);
      case Command::verify: return cmd_verify(cfg, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of plane partition diamonds and their quasi-polynomial structure"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::int64_t> node_budget, tuple_budget;

  const std::map<std::string, Method> methods{{"auto", Method::automatic},   {"enumerate", Method::enumerate},
                                              {"series", Method::series},    {"shifts", Method::shifts},
                                              {"quasipoly", Method::quasipoly}, {"compressed", Method::compressed}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  const std::vector<std::pair<std::string, Command>> commands{
      {"params", Command::params},       {"count", Command::count},       {"table", Command::table},
      {"quasipoly", Command::quasipoly}, {"polypart", Command::polypart}, {"waves", Command::waves},
      {"verify", Command::verify}};
  const std::map<std::string, std::string> help{
      {"params", "print the derived constants of length k"},
      {"count", "print D_k(n)"},
      {"table", "print n, D_k(n) over a range"},
      {"quasipoly", "dump the quasi-polynomial of D_k as JSON"},
      {"polypart", "print the polynomial part by two formulas and check equality"},
      {"waves", "print every Sylvester wave and check their sum"},
      {"verify", "run the cross-method checks"}};

  for (const auto& [name, command] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--k", cfg.k, "diamond length k >= 1")->required();
    sub->add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--enum-budget", node_budget, "enumeration node cap");
    sub->add_option("--tuple-budget", tuple_budget, "tuple-iteration cap");
    if (command == Command::count) {
      sub->add_option("--n", cfg.n, "n >= 0")->required();
      sub->add_flag("--witnesses", cfg.witnesses, "stream each diamond (enumeration)");
    }
    if (command == Command::count || command == Command::table)
      sub->add_option("--method", cfg.method, "counting method")->transform(CLI::CheckedTransformer(methods));
    if (command == Command::table) sub->add_option("--min-n", cfg.min_n, "first n");
    if (command == Command::table || command == Command::waves || command == Command::verify)
      sub->add_option("--max-n", cfg.max_n, "last n");
    sub->callback([&cfg, c = command] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("DIAMOND_BUDGET")) {
    try {
      const std::int64_t budget = std::stoll(env);
      cfg.node_budget = budget;
      cfg.tuple_budget = budget;
    } catch (const std::exception&) {
      err << "usage error: DIAMOND_BUDGET must be an integer\n";
      return kUsage;
    }
  }
  if (node_budget) cfg.node_budget = *node_budget;
  if (tuple_budget) cfg.tuple_budget = *tuple_budget;
  return run(cfg, out, err);
}

}  // namespace ppd::cli
