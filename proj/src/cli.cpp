#include "sptj/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptj/cache.hpp"
#include "sptj/partitions.hpp"
#include "sptj/series.hpp"
#include "sptj/smallest_parts.hpp"
#include "sptj/stats.hpp"
#include "sptj/verify.hpp"

namespace sptj {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rows of json scalars; CSV and plain print strings without quotes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_table(const Table& t, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::kCsv: {
      for (size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
      out << '\n';
      for (const auto& r : t.rows) {
        for (size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << cell_text(r[c]);
        out << '\n';
      }
      break;
    }
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& r : t.rows) {
        json obj = json::object();
        for (size_t c = 0; c < r.size(); ++c) obj[t.columns[c]] = r[c];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(1) << '\n';
      break;
    }
    case OutputFormat::kPlain: {
      std::vector<size_t> width(t.columns.size());
      for (size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
      for (const auto& r : t.rows) {
        for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], cell_text(r[c]).size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < cells.size(); ++c) {
          if (c) out << "  ";
          const bool numeric = !cells[c].empty() &&
                               cells[c].find_first_not_of("-0123456789") == std::string::npos;
          if (!numeric && c + 1 == cells.size()) {
            out << cells[c];
          } else {
            out << (numeric ? std::right : std::left) << std::setw(static_cast<int>(width[c])) << cells[c];
          }
        }
        out << '\n';
      };
      line(t.columns);
      for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (const json& v : r) cells.push_back(cell_text(v));
        line(cells);
      }
      break;
    }
  }
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

Route parse_route(const std::string& s) {
  if (s == "gf") return Route::kGeneratingFunction;
  if (s == "weight") return Route::kWeight;
  if (s == "moments") return Route::kMoments;
  throw UsageError("unknown route '" + s + "'");
}

std::vector<Int> partition_counts(int n_max, Route route) {
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  if (route == Route::kGeneratingFunction) {
    const TruncSeries p = partition_series(n_max);
    for (int n = 0; n <= n_max; ++n) out[static_cast<size_t>(n)] = p[n];
  } else if (route == Route::kWeight) {
    for (int n = 0; n <= n_max; ++n) {
      Int c = 0;
      for_each_partition(n, [&](const Partition&) { c += 1; });
      out[static_cast<size_t>(n)] = c;
    }
  } else {
    throw UsageError("family p has no moments route");
  }
  return out;
}

std::optional<ResultCache> open_cache(const RunConfig& cfg) {
  if (cfg.cache) return ResultCache(*cfg.cache);
  if (auto p = ResultCache::default_path()) return ResultCache(*p);
  return std::nullopt;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  std::vector<Route> routes;
  const bool all = cfg.route == "all";
  if (all) {
    routes = {Route::kGeneratingFunction, Route::kWeight};
    if (cfg.family != "p") routes.push_back(Route::kMoments);
  } else {
    routes = {parse_route(cfg.route)};
  }

  SptRequest req;
  if (cfg.family == "p") {
    if (cfg.j != 0 || cfg.k != 0) throw UsageError("family p takes neither j nor k");
  } else {
    try {
      req.family = parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    req.j = cfg.j;
    req.k = cfg.k;
    req.n_max = cfg.n_max;
    req.routes = routes;
    req.validate();
  }

  std::optional<ResultCache> cache = open_cache(cfg);
  std::vector<std::vector<Int>> values;
  bool dirty = false;
  for (Route route : routes) {
    const CacheKey key{cfg.family, cfg.j, cfg.k, cfg.n_max, to_string(route)};
    if (cache) {
      if (auto hit = cache->lookup(key)) {
        values.push_back(std::move(*hit));
        continue;
      }
    }
    if (cfg.family == "p") {
      values.push_back(partition_counts(cfg.n_max, route));
    } else {
      SptRequest one = req;
      one.routes = {route};
      values.push_back(evaluate(one).front());
    }
    if (cache) {
      cache->store(key, values.back());
      dirty = true;
    }
  }
  if (cache && dirty) cache->save();

  Table t;
  t.columns = all ? std::vector<std::string>{"n", "value", "route"} : std::vector<std::string>{"n", "value"};
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (size_t r = 0; r < routes.size(); ++r) {
      std::vector<json> row{n, values[r][static_cast<size_t>(n)].get_str()};
      if (all) row.emplace_back(to_string(routes[r]));
      t.rows.push_back(std::move(row));
    }
  }
  write_table(t, format_or(cfg, OutputFormat::kCsv), out);

  for (size_t r = 1; r < routes.size(); ++r) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      if (values[r][static_cast<size_t>(n)] != values[0][static_cast<size_t>(n)]) {
        err << "routes disagree at n=" << n << ": " << to_string(routes[0]) << '=' << values[0][static_cast<size_t>(n)]
            << ", " << to_string(routes[r]) << '=' << values[r][static_cast<size_t>(n)] << '\n';
        return kExitDiscrepancy;
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = format_or(cfg, OutputFormat::kPlain);
  if (cfg.list) {
    Table t{{"identity", "description"}, {}};
    for (const auto& name : identity_names()) t.rows.push_back({name, identity_description(name)});
    write_table(t, fmt, out);
    return kExitOk;
  }
  if (cfg.identity.empty()) throw UsageError("verify needs an identity name (see --list)");
  if (!is_identity(cfg.identity)) throw UsageError("unknown identity '" + cfg.identity + "'");
  VerifyReport rep;
  try {
    rep = run_identity(cfg.identity, VerifyParams{cfg.j, cfg.k, cfg.r, cfg.n_max});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ostream& summary = fmt == OutputFormat::kPlain ? out : err;
  if (fmt != OutputFormat::kPlain) {
    Table t{{"n", "lhs", "rhs", "ok"}, {}};
    for (const auto& r : rep.rows) t.rows.push_back({r.n, r.lhs, r.rhs, r.ok});
    write_table(t, fmt, out);
  }
  for (const auto& note : rep.notes) summary << note << '\n';
  if (auto i = rep.first_failure()) {
    const VerifyRow& r = rep.rows[*i];
    summary << "FAIL " << rep.identity << " at n=" << r.n << ": lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
    return kExitDiscrepancy;
  }
  summary << "PASS " << rep.identity << " (" << rep.rows.size() << " coefficients)\n";
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.j < 1) throw UsageError("table needs --j >= 1");
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (cfg.r != 0) throw UsageError("table does not take --r");
  const int chosen = (cfg.m ? 1 : 0) + (cfg.t ? 1 : 0) + (cfg.k != 0 ? 1 : 0);
  if (chosen > 1) throw UsageError("give at most one of --m, --t, --k");
  if (cfg.t && *cfg.t < 0) throw UsageError("--t must be nonnegative");
  if (cfg.k < 0) throw UsageError("--k must be positive");
  TableSource source;
  if (cfg.source == "gf") {
    source = TableSource::kGeneratingFunction;
  } else if (cfg.source == "comb") {
    source = TableSource::kCombinatorial;
  } else {
    throw UsageError("unknown source '" + cfg.source + "'");
  }
  const OutputFormat fmt = format_or(cfg, OutputFormat::kCsv);

  Table t;
  if (chosen == 0) {
    const CountTable counts(cfg.j, cfg.n_max, source);
    t.columns = {"n", "m", "value"};
    for (int n = 1; n <= cfg.n_max; ++n) {
      for (int m = -n; m <= n; ++m) t.rows.push_back({n, m, counts.count(m, n).get_str()});
    }
  } else {
    MomentTable col = cfg.m   ? count_column(cfg.j, *cfg.m, cfg.n_max, source)
                      : cfg.t ? moment_column(cfg.j, *cfg.t, cfg.n_max, source)
                              : sym_mu_column(cfg.j, cfg.k, cfg.n_max, source);
    t.columns = {"n", "value"};
    for (int n = 1; n <= cfg.n_max; ++n) t.rows.push_back({n, col.values[static_cast<size_t>(n)].get_str()});
  }
  write_table(t, fmt, out);
  return kExitOk;
}

int cmd_congruence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int bound = cfg.n_max == 0 ? 30 : cfg.n_max;
  if (bound < 1) throw UsageError("--n-max must be at least 1");
  const OutputFormat fmt = format_or(cfg, OutputFormat::kPlain);
  const TruncSeries p = partition_series(bound);
  struct Case {
    int ell;
    int m;
  };
  const Case families[] = {{5, 4}, {7, 5}, {11, 6}};

  Table t{{"function", "modulus", "n", "j", "value", "residue"}, {}};
  std::optional<std::string> witness;
  std::vector<std::string> summaries;
  for (const auto& f : families) {
    int spt_cases = 0;
    int p_cases = 0;
    for (int a = f.m; a <= bound; a += f.ell) {
      const auto record = [&](const std::string& fn, int j, const Int& value) {
        const Int residue = value % f.ell;
        t.rows.push_back({fn, f.ell, a, j, value.get_str(), residue.get_str()});
        if (residue != 0 && !witness) {
          witness = fn + "(" + std::to_string(a) + ")" + (j ? " with j=" + std::to_string(j) : "") + " = " +
                    value.get_str() + " is " + residue.get_str() + " mod " + std::to_string(f.ell);
        }
      };
      record("p", 0, p[a]);
      ++p_cases;
      for (int j = a + 1; j <= bound + 1; ++j) {
        record("Spt_j", j, gf_Sptj(j, a)[a]);
        ++spt_cases;
      }
    }
    const std::string arg = std::to_string(f.ell) + "n+" + std::to_string(f.m);
    summaries.push_back("Spt_j(" + arg + ") mod " + std::to_string(f.ell) + ": " + std::to_string(spt_cases) +
                        " cases with j > " + arg);
    summaries.push_back("p(" + arg + ") mod " + std::to_string(f.ell) + ": " + std::to_string(p_cases) + " cases");
  }

  if (fmt == OutputFormat::kPlain) {
    for (const auto& s : summaries) out << s << '\n';
  } else {
    write_table(t, fmt, out);
  }
  if (witness) {
    err << "violation: " << *witness << '\n';
    return kExitDiscrepancy;
  }
  (fmt == OutputFormat::kPlain ? out : err) << "PASS congruences up to " << bound << '\n';
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "compute") return cmd_compute(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "table") return cmd_table(cfg, out, err);
    if (cfg.subcommand == "congruence") return cmd_congruence(cfg, out, err);
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitDiscrepancy;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format;
  int m = 0;
  int t = 0;

  CLI::App app{"Generalized spt-functions: tables, identity checks and congruences", "sptj"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json", "plain"};

  auto* compute = app.add_subcommand("compute", "Values of p, spt, spt_k, Spt_j or jspt_k for n = 1..n_max");
  compute->add_option("--family", cfg.family, "p | spt | spt_k | Spt_j | jspt_k")->required();
  compute->add_option("--j", cfg.j);
  compute->add_option("--k", cfg.k);
  compute->add_option("--n-max,--N", cfg.n_max)->required();
  compute->add_option("--route", cfg.route, "gf | weight | moments | all")
      ->check(CLI::IsMember({"gf", "weight", "moments", "all"}));
  compute->add_option("--format", format)->check(CLI::IsMember(formats));
  compute->add_option("--cache", cfg.cache, "cache file (default from $" + std::string(ResultCache::kEnvVar) + ")");

  auto* verify = app.add_subcommand("verify", "Expand both sides of a registered identity");
  verify->add_option("identity", cfg.identity);
  verify->add_flag("--list", cfg.list, "list registered identities");
  verify->add_option("--j", cfg.j);
  verify->add_option("--k", cfg.k);
  verify->add_option("--r", cfg.r);
  verify->add_option("--N,--n-max", cfg.n_max, "series order or range bound");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "N_j(m,n) counts, moments _jN_t or symmetrized moments _jmu_k");
  table->add_option("--j", cfg.j)->required();
  auto* m_opt = table->add_option("--m", m, "single count column");
  auto* t_opt = table->add_option("--t", t, "moment order");
  table->add_option("--k", cfg.k, "symmetrized moment index K of mu_K");
  table->add_option("--n-max,--N", cfg.n_max)->required();
  table->add_option("--source", cfg.source, "gf | comb")->check(CLI::IsMember({"gf", "comb"}));
  table->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* congruence = app.add_subcommand("congruence", "Check Spt_j and p modulo 5, 7 and 11");
  congruence->add_option("--n-max,--N", cfg.n_max, "largest argument checked (default 30)");
  congruence->add_option("--format", format)->check(CLI::IsMember(formats));

  std::vector<std::string> storage{"sptj"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : {compute, verify, table, congruence}) {
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  }
  if (m_opt->count() > 0) cfg.m = m;
  if (t_opt->count() > 0) cfg.t = t;
  if (format == "csv") cfg.format = OutputFormat::kCsv;
  if (format == "json") cfg.format = OutputFormat::kJson;
  if (format == "plain") cfg.format = OutputFormat::kPlain;
  return execute(cfg, out, err);
}

}  // namespace sptj
