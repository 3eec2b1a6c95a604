#include "tau/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tau/arith.hpp"
#include "tau/bounds.hpp"
#include "tau/cache.hpp"
#include "tau/engines.hpp"
#include "tau/identities.hpp"
#include "tau/stats.hpp"

namespace tau::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kReportVersion = 1;
constexpr std::uint64_t kDefaultLimit = 1000;
constexpr std::uint64_t kDefaultStatsLimit = 8000;
constexpr std::uint64_t kComputePreview = 10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view to_string(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::verify: return "verify";
    case Command::bounds: return "bounds";
    case Command::stats: return "stats";
    case Command::lseries: return "lseries";
    case Command::audit: return "audit";
  }
  return "unknown";
}

json big(const BigInt& v) { return v.get_str(10); }
json real(const HighReal& v) { return v.str(15); }

struct Report {
  json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json summary = json::object();
};

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Report& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    json doc;
    doc["meta"] = report.meta;
    json rows = json::array();
    for (const auto& row : report.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < report.columns.size(); ++i) obj[report.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = report.summary;
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
  for (const auto& [key, value] : report.summary.items()) out << "# " << key << '=' << cell_text(value) << '\n';
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = to_string(cfg.command);
  c["limit"] = cfg.limit ? json(*cfg.limit) : json(nullptr);
  c["algo"] = cfg.algo;
  c["c"] = cfg.fixed_c ? real(*cfg.fixed_c) : json("implied");
  c["scan_start"] = cfg.scan_start;
  c["format"] = cfg.format == Format::csv ? "csv" : "json";
  c["cache"] = cfg.cache_path ? json(*cfg.cache_path) : json(nullptr);
  c["checkpoints"] = cfg.checkpoints;
  c["s"] = real(cfg.s);
  c["n"] = cfg.n ? json(*cfg.n) : json(nullptr);
  return c;
}

Report make_report(const RunConfig& cfg, std::vector<std::string> columns) {
  Report r;
  r.meta["version"] = kReportVersion;
  r.meta["config"] = config_json(cfg);
  r.meta["c_used"] = nullptr;
  r.columns = std::move(columns);
  return r;
}

std::uint64_t effective_limit(const RunConfig& cfg, std::uint64_t fallback) {
  const std::uint64_t limit = cfg.limit.value_or(fallback);
  if (limit == 0) throw UsageError("--limit must be >= 1");
  return limit;
}

TauTable build_table(Algo algo, std::uint64_t limit) {
  switch (algo) {
    case Algo::eta: return tau_eta(limit);
    case Algo::niebur: return tau_niebur(limit, sieve_sigma(limit, {1}));
    case Algo::eisenstein: return tau_eisenstein(limit, sieve_sigma(limit, {3, 5}));
    case Algo::multiplicative: return tau_multiplicative(limit, harvest_prime_taus(tau_eta(limit)));
  }
  throw std::logic_error("unhandled algorithm");
}

std::vector<TauTable> build_all(std::uint64_t limit) {
  std::vector<TauTable> tables;
  tables.push_back(tau_eta(limit));
  tables.push_back(build_table(Algo::niebur, limit));
  tables.push_back(build_table(Algo::eisenstein, limit));
  tables.push_back(tau_multiplicative(limit, harvest_prime_taus(tables.front())));
  return tables;
}

TauTable truncate(const TauTable& table, std::uint64_t limit) {
  if (limit == table.limit()) return table;
  std::vector<BigInt> values(limit + 1, BigInt(0));
  for (std::uint64_t n = 1; n <= limit; ++n) values[n] = table[n];
  return TauTable(table.algo(), std::move(values));
}

// Cached table when --cache is given, otherwise a fresh one from `algo`.
TauTable source_table(const RunConfig& cfg, std::uint64_t limit, Algo fresh_algo) {
  if (!cfg.cache_path) return build_table(fresh_algo, limit);
  TauTable cached = read_table(*cfg.cache_path);
  if (cached.limit() < limit) {
    throw UsageError("cache holds tau(1.." + std::to_string(cached.limit()) + "), need " + std::to_string(limit));
  }
  return truncate(cached, limit);
}

Algo single_algo(const RunConfig& cfg) {
  return cfg.algo == "all" ? Algo::eta : parse_algo(cfg.algo);
}

json reconcile_json(const ReconcileReport& rep) {
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    json j;
    j["a"] = to_string(rep.algos[p.first]);
    j["b"] = to_string(rep.algos[p.second]);
    j["first_mismatch"] = p.first_mismatch ? json(*p.first_mismatch) : json(nullptr);
    pairs.push_back(std::move(j));
  }
  return pairs;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t limit = effective_limit(cfg, kDefaultLimit);
  Report report = make_report(cfg, {"n", "tau"});
  bool agree = true;
  std::vector<TauTable> tables;
  if (cfg.algo == "all") {
    tables = build_all(limit);
    const ReconcileReport rep = reconcile(tables);
    agree = rep.all_agree();
    report.summary["reconciled_range"] = rep.range;
    report.summary["agree"] = agree;
    report.summary["pairs"] = reconcile_json(rep);
  } else {
    tables.push_back(build_table(parse_algo(cfg.algo), limit));
  }
  const TauTable& primary = tables.front();
  for (std::uint64_t n = 1; n <= std::min(limit, kComputePreview); ++n) report.rows.push_back({n, big(primary[n])});
  report.summary["limit"] = limit;
  report.summary["algo"] = cfg.algo;
  if (cfg.cache_path && agree) {
    write_table(primary, *cfg.cache_path);
    report.summary["cache"] = *cfg.cache_path;
  }
  emit(report, cfg.format, out);
  return agree ? exit_code::ok : exit_code::check_failed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t limit = cfg.cache_path ? cfg.limit.value_or(0) : effective_limit(cfg, kDefaultLimit);
  TauTable table = cfg.cache_path ? read_table(*cfg.cache_path) : build_table(single_algo(cfg), limit);
  if (cfg.cache_path && limit != 0) {
    if (table.limit() < limit) throw UsageError("cache is shorter than --limit");
    table = truncate(table, limit);
  }

  Report report = make_report(cfg, {"kind", "n", "lhs", "rhs", "detail"});
  const auto violations = check_all_identities(table);
  for (const auto& v : violations) {
    report.rows.push_back({std::string(to_string(v.kind)), v.n, big(v.lhs), big(v.rhs), v.detail});
  }

  std::vector<TauTable> tables{table};
  if (!cfg.cache_path && cfg.algo == "all") {
    for (auto& t : build_all(table.limit())) {
      if (t.algo() != table.algo()) tables.push_back(std::move(t));
    }
  } else {
    tables.push_back(build_table(table.algo() == Algo::eta ? Algo::eisenstein : Algo::eta, table.limit()));
  }
  const ReconcileReport rep = reconcile(tables);
  std::size_t cross_failures = 0;
  for (const auto& p : rep.pairs) {
    if (!p.first_mismatch) continue;
    ++cross_failures;
    const std::uint64_t n = *p.first_mismatch;
    report.rows.push_back({"cross-engine", n, big(tables[p.first][n]), big(tables[p.second][n]),
                           std::string(to_string(rep.algos[p.first])) + " vs " +
                               std::string(to_string(rep.algos[p.second]))});
  }

  report.summary["limit"] = table.limit();
  report.summary["table_algo"] = to_string(table.algo());
  report.summary["identity_violations"] = violations.size();
  report.summary["cross_engine"] = reconcile_json(rep);
  report.summary["cross_engine_failures"] = cross_failures;
  emit(report, cfg.format, out);
  return violations.empty() && cross_failures == 0 ? exit_code::ok : exit_code::check_failed;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::uint64_t limit = effective_limit(cfg, kDefaultLimit);
  if (limit < 3) throw UsageError("bounds needs --limit >= 3: the claimed bound involves log log n, defined positive from n = 3");
  BoundParams params;
  params.scan_start = cfg.scan_start;
  if (cfg.fixed_c) params.c = *cfg.fixed_c;
  params.validate();

  const TauTable table = source_table(cfg, limit, Algo::eta);
  const TauTable check = tau_multiplicative(limit, harvest_prime_taus(table));
  const std::vector<TauTable> pair{table, check};
  const ReconcileReport rep = reconcile(pair);
  if (!rep.all_agree()) {
    err << "error: tau table disagrees with its multiplicative reconstruction at n=" << *rep.pairs.front().first_mismatch
        << "; refusing to report bounds\n";
    return exit_code::check_failed;
  }

  const SigmaTables sigma = sieve_sigma(limit, {0, 1});
  const std::uint64_t c_first = params.scan_start <= limit ? params.scan_start : 3;
  const ImpliedC implied = implied_c(sigma, c_first, limit);
  if (!cfg.fixed_c) params.c = implied.value;

  Report report = make_report(cfg, {"n", "abs_tau", "deligne_ok", "hecke_ratio", "t5_bound", "t5_ratio", "t5_verdict"});
  report.meta["c_used"] = real(params.c);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const BoundRecord rec = make_bound_record(n, table[n], sigma.at(0, n), params.c);
    std::vector<json> row{n, big(rec.abs_tau), rec.deligne_ok, real(rec.hecke_ratio)};
    if (rec.t5) {
      row.push_back(real(rec.t5->bound));
      row.push_back(real(rec.t5->ratio));
      row.push_back(std::string(to_string(rec.t5->verdict)));
    } else {
      row.insert(row.end(), {nullptr, nullptr, nullptr});
    }
    report.rows.push_back(std::move(row));
  }

  const DeligneCheck deligne = check_deligne(table, sigma);
  const RobinCheck robin = check_robin(sigma, params, 3, limit);
  const HeckeScan hecke = hecke_ratio_scan(table, 1, limit);

  auto& s = report.summary;
  s["limit"] = limit;
  s["c_used"] = real(params.c);
  s["implied_c"] = real(implied.value);
  s["implied_c_argmax"] = implied.argmax;
  s["implied_c_range"] = json::array({c_first, limit});
  s["deligne_violations"] = deligne.violations.size();
  s["deligne_max_ratio"] = real(deligne.max_ratio);
  s["deligne_argmax"] = deligne.argmax;
  s["robin_violations"] = robin.violations.size();
  json near = json::array();
  for (std::uint64_t n : robin.near_equality) {
    const RobinRecord& r = robin.records[n - 3];
    near.push_back({{"n", n}, {"sigma", big(r.sigma)}, {"bound", real(r.bound)}, {"margin", real(r.margin)}});
  }
  s["robin_near_equality"] = std::move(near);
  s["hecke_max_ratio"] = real(hecke.max_ratio);
  s["hecke_argmax"] = hecke.argmax;
  s["t5_scan_start"] = params.scan_start;
  if (params.scan_start <= limit) {
    const T5Check t5 = check_t5(table, sigma, params, params.scan_start, limit);
    json profile = json::array();
    for (const auto& p : t5.profile) {
      profile.push_back({{"upto", p.upto}, {"running_max", real(p.running_max)}, {"argmax", p.argmax}});
    }
    s["t5_failures"] = t5.failures;
    s["t5_near_equality"] = t5.near_equality;
    s["t5_profile"] = std::move(profile);
  } else {
    s["t5_failures"] = nullptr;
    s["t5_near_equality"] = nullptr;
    s["t5_profile"] = json::array();
  }
  emit(report, cfg.format, out);
  return deligne.violations.empty() && robin.violations.empty() ? exit_code::ok : exit_code::check_failed;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> checkpoints = cfg.checkpoints;
  if (checkpoints.empty()) {
    limit = effective_limit(cfg, kDefaultStatsLimit);
    checkpoints = default_checkpoints(limit);
  } else {
    limit = effective_limit(cfg, checkpoints.back());
    if (checkpoints.back() > limit) throw UsageError("checkpoint beyond --limit");
  }
  const TauTable table = source_table(cfg, limit, Algo::eta);
  const RankinScan scan = rankin_rows(table, checkpoints);

  Report report = make_report(cfg, {"N", "sum_sq", "r12", "r11"});
  for (const auto& row : scan.rows) {
    report.rows.push_back({row.upto, big(row.sum_sq), real(row.r12), row.r11 ? real(*row.r11) : json(nullptr)});
  }
  json growth = json::array();
  for (const auto& g : scan.growth) {
    growth.push_back({{"from", g.from},
                      {"to", g.to},
                      {"r12_factor", real(g.r12_factor)},
                      {"r11_factor", g.r11_factor ? real(*g.r11_factor) : json(nullptr)}});
  }
  report.summary["limit"] = limit;
  report.summary["growth"] = std::move(growth);
  emit(report, cfg.format, out);
  return exit_code::ok;
}

int cmd_lseries(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t limit = effective_limit(cfg, kDefaultLimit);
  if (!(cfg.s > HighReal::parse("6.5"))) {
    throw UsageError("--s must exceed 6.5: the Dirichlet series of tau only converges conditionally below that");
  }
  const TauTable table = source_table(cfg, limit, Algo::eta);
  const LSeriesComparison cmp = lseries_compare(table, cfg.s, limit, limit);
  Report report =
      make_report(cfg, {"s", "N", "P", "dirichlet_partial", "euler_partial", "difference", "tail_bound"});
  report.rows.push_back({real(cfg.s), limit, limit, real(cmp.dirichlet_partial), real(cmp.euler_partial),
                         real(cmp.difference), real(cmp.tail_bound)});
  emit(report, cfg.format, out);
  return exit_code::ok;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t first = 1;
  std::uint64_t last = 0;
  if (cfg.n) {
    if (*cfg.n == 0) throw UsageError("--n must be >= 1");
    first = last = *cfg.n;
  } else {
    last = effective_limit(cfg, kDefaultLimit);
  }
  const SigmaTables sigma = sieve_sigma(last, {1});
  const TauTable table = source_table(cfg, last, Algo::eta);

  Report report = make_report(cfg, {"n", "signed_abs", "absolute_sum", "ratio"});
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = first; n <= last; ++n) {
    const CancellationAudit a = audit_cancellation(n, sigma);
    if (a.reconstructed_tau != table[n]) ++mismatches;
    report.rows.push_back({n, big(a.signed_abs), big(a.absolute_sum), real(a.ratio)});
  }
  report.summary["range"] = json::array({first, last});
  report.summary["reconstruction_mismatches"] = mismatches;
  emit(report, cfg.format, out);
  return mismatches == 0 ? exit_code::ok : exit_code::check_failed;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v == 0) {
      throw UsageError("bad --checkpoints entry '" + std::string(item) + "'");
    }
    if (!out.empty() && v <= out.back()) throw UsageError("--checkpoints must be strictly ascending");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::compute: return cmd_compute(config, out);
      case Command::verify: return cmd_verify(config, out);
      case Command::bounds: return cmd_bounds(config, out, err);
      case Command::stats: return cmd_stats(config, out);
      case Command::lseries: return cmd_lseries(config, out);
      case Command::audit: return cmd_audit(config, out);
    }
  } catch (const CacheError& e) {
    err << "error: corrupt cache: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::check_failed;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ramanujan tau tables, identity checks and bound audits", "tau"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  static constexpr Sub kSubs[] = {
      {Command::compute, "compute", "Compute a tau table, optionally cross-checking all engines and caching it"},
      {Command::verify, "verify", "Check the Hecke and multiplicative identities and cross-engine agreement"},
      {Command::bounds, "bounds", "Deligne, Robin, Hecke-ratio and claimed-bound report"},
      {Command::stats, "stats", "Partial sums of tau(n)^2 at checkpoints"},
      {Command::lseries, "lseries", "Truncated Dirichlet series against truncated Euler product"},
      {Command::audit, "audit", "Sign cancellation inside the divisor convolution"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& s : kSubs) subs.emplace_back(app.add_subcommand(s.name, s.help), s.command);

  std::uint64_t limit = 0;
  std::string algo = "eta";
  std::string c_text = "implied";
  std::uint64_t scan_start = 16;
  std::string format = "csv";
  std::string cache;
  std::string checkpoints;
  std::string s_text = "8";
  std::uint64_t n = 0;
  auto* limit_opt = app.add_option("--limit", limit, "Table limit N");
  app.add_option("--algo", algo, "Engine")
      ->check(CLI::IsMember({"eta", "niebur", "eisenstein", "multiplicative", "all"}));
  app.add_option("--c", c_text, "Bound constant c, or 'implied'");
  app.add_option("--scan-start", scan_start, "First n of the claimed-bound scan");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  auto* cache_opt = app.add_option("--cache", cache, "Tau table cache file");
  auto* checkpoints_opt = app.add_option("--checkpoints", checkpoints, "Comma-separated partial-sum checkpoints");
  app.add_option("--s", s_text, "Real part s of the L-series argument");
  auto* n_opt = app.add_option("--n", n, "Single n for audit");

  std::vector<std::string> argv_storage{"tau"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::ok : exit_code::usage;
  }

  RunConfig cfg;
  try {
    for (const auto& [sub, command] : subs) {
      if (sub->parsed()) cfg.command = command;
    }
    if (limit_opt->count() > 0) cfg.limit = limit;
    cfg.algo = algo;
    if (c_text != "implied") {
      cfg.fixed_c = HighReal::parse(c_text);
      if (cfg.fixed_c->sign() <= 0) throw UsageError("--c must be > 0");
    }
    cfg.scan_start = scan_start;
    cfg.format = format == "json" ? Format::json : Format::csv;
    if (cache_opt->count() > 0) cfg.cache_path = cache;
    if (checkpoints_opt->count() > 0) cfg.checkpoints = parse_checkpoints(checkpoints);
    cfg.s = HighReal::parse(s_text);
    if (n_opt->count() > 0) cfg.n = n;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return run(cfg, out, err);
}

}  // namespace tau::cli
