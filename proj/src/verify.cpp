#include "sptj/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sptj/laurent.hpp"
#include "sptj/partitions.hpp"
#include "sptj/series.hpp"
#include "sptj/smallest_parts.hpp"
#include "sptj/stats.hpp"

namespace sptj {

bool VerifyReport::passed() const { return !first_failure().has_value(); }

std::optional<size_t> VerifyReport::first_failure() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) return i;
  }
  return std::nullopt;
}

namespace {

struct Entry {
  std::string name;
  std::string description;
  bool uses_j;
  bool uses_k;
  bool uses_r;
  VerifyParams defaults;
  std::function<void(VerifyReport&)> run;
};

VerifyRow row(int n, const Int& lhs, const Int& rhs, bool extra_ok = true) {
  return VerifyRow{n, lhs.get_str(), rhs.get_str(), extra_ok && lhs == rhs};
}

void compare_series(VerifyReport& rep, const TruncSeries& a, const TruncSeries& b, int from = 0) {
  for (int n = from; n <= rep.params.order; ++n) rep.rows.push_back(row(n, a[n], b[n]));
}

Int n_p(int n, const TruncSeries& p) { return Int(n) * p[n]; }

void run_sptpn(VerifyReport& rep) {
  const int N = rep.params.order;
  const TruncSeries p = partition_series(N);
  const TruncSeries gf = gf_spt(N);
  for (int n = 1; n <= N; ++n) {
    const Int lhs = spt_weight(n);
    const Int rhs = n_p(n, p) - exact_divide(moment(2, 2, n), Int(2));
    rep.rows.push_back(row(n, lhs, rhs, gf[n] == lhs));
  }
}

void run_genn1(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const TruncSeries lhs = gf_genn1_lhs(j, N);
  const TruncSeries rhs = gf_genn1_rhs(j, N);
  const TruncSeries spt = gf_Sptj(j, N);
  for (int n = 0; n <= N; ++n) rep.rows.push_back(row(n, lhs[n], rhs[n], spt[n] == lhs[n]));
}

void run_sptpng(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const auto gf = Spt_j_values(j, N, Route::kGeneratingFunction);
  const auto mo = Spt_j_values(j, N, Route::kMoments);
  for (int n = 1; n <= N; ++n) rep.rows.push_back(row(n, gf[static_cast<size_t>(n)], mo[static_cast<size_t>(n)]));
}

void run_kn1(VerifyReport& rep) {
  const Kn1Sides s = build_kn1_sides(rep.params.j, rep.params.order);
  for (int n = 0; n <= rep.params.order; ++n) {
    rep.rows.push_back(VerifyRow{n, to_string(s.lhs[n]), to_string(s.rhs[n]), s.lhs[n] == s.rhs[n]});
  }
}

void run_genjmu2k(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const int k = rep.params.k;
  const TruncSeries extracted = symmetrized_extract(build_jrank_gf(j, N), k);
  const TruncSeries closed = gf_sym_mu_closed(j, k, N);
  for (int n = 0; n <= N; ++n) rep.rows.push_back(row(n, extracted[n], closed[n], sym_mu(j, 2 * k, n) == closed[n]));
}

void run_appbp(VerifyReport& rep) {
  const SeriesPair s = appbp_sides(rep.params.r, rep.params.k, rep.params.order);
  compare_series(rep, s.lhs, s.rhs);
}

void run_gtjsptk(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const int k = rep.params.k;
  const TruncSeries poch = gf_jsptk(j, k, N, JSptForm::kPochhammer);
  const TruncSeries gauss = gf_jsptk(j, k, N, JSptForm::kGaussian);
  for (int n = 1; n <= N; ++n) {
    const Int diff = sym_mu(j, 2 * k, n) - sym_mu(j + 1, 2 * k, n);
    rep.rows.push_back(row(n, poch[n], diff, gauss[n] == poch[n]));
  }
}

void run_relos(VerifyReport& rep) {
  for (int n = 0; n <= rep.params.order; ++n) {
    rep.rows.push_back(row(n, moment(rep.params.j, 2 * rep.params.k, n), moment_via_sym(rep.params.j, rep.params.k, n)));
  }
}

void run_fdyson(VerifyReport& rep) {
  const int N = rep.params.order;
  const TruncSeries p = partition_series(std::max(N, 1));
  for (int n = 2; n <= N; ++n) rep.rows.push_back(row(n, n_p(n, p), exact_divide(moment(1, 2, n), Int(2))));
  // n = 1 is excluded from the identity; report both crank tables there.
  const Int gf_half = moment(1, 2, 1);
  const Int comb = CountTable(1, 1, TableSource::kCombinatorial).moment(2, 1);
  rep.notes.push_back("n=1 excluded: n p(n) = 1, M_2(1) = " + gf_half.get_str() +
                      " from the crank generating function and " + comb.get_str() +
                      " from the crank of the partition (1); the identity needs M_2(1) = 2 and fails for the latter");
}

void run_sptdiff(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const auto hi = Spt_j_values(j, N, Route::kGeneratingFunction);
  const auto lo = Spt_j_values(j - 1, N, Route::kGeneratingFunction);
  for (int n = 1; n <= N; ++n) {
    const Int lhs = hi[static_cast<size_t>(n)] - lo[static_cast<size_t>(n)];
    const Int rhs = exact_divide(moment(j, 2, n) - moment(j + 1, 2, n), Int(2));
    rep.rows.push_back(row(n, lhs, rhs));
  }
}

void run_jgn(VerifyReport& rep) {
  const int N = rep.params.order;
  const TruncSeries p = partition_series(N);
  for (int n = 1; n <= N; ++n) {
    const int j = rep.params.j > 0 ? rep.params.j : n + 1;
    if (j <= n) break;
    rep.rows.push_back(row(n, gf_Sptj(j, n)[n], n_p(n, p)));
  }
}

void run_rk_forms(VerifyReport& rep) {
  const int N = rep.params.order;
  const int j = rep.params.j;
  const BiSeries counts = jrank_gf_from_counts(j, N);
  const BiSeries nested = build_jrank_gf(j, N, JRankForm::kNestedSum);
  const BiSeries lambert = build_jrank_gf(j, N, JRankForm::kLambert);
  for (int n = 0; n <= N; ++n) {
    rep.rows.push_back(
        VerifyRow{n, to_string(counts[n]), to_string(nested[n]), counts[n] == nested[n] && nested[n] == lambert[n]});
  }
}

void run_lemma31(VerifyReport& rep) {
  for (int n = 1; n <= rep.params.order; ++n) {
    long long rr = 0;
    long long matching = 0;
    for_each_partition(n, [&](const Partition& p) {
      const DurfeeChain lower = successive_lower_durfee(p);
      if (!is_rogers_ramanujan(p, lower.count())) return;
      ++rr;
      auto sides = lower.sides;
      std::reverse(sides.begin(), sides.end());
      if (sides == successive_durfee(p).sides) ++matching;
    });
    rep.rows.push_back(VerifyRow{n, std::to_string(rr), std::to_string(matching), rr == matching});
  }
}

void run_lemma32(VerifyReport& rep) {
  for (int n = 1; n <= rep.params.order; ++n) {
    long long total = 0;
    long long matching = 0;
    for_each_partition(n, [&](const Partition& p) {
      ++total;
      if (successive_lower_durfee(p).count() == successive_durfee(p).count()) ++matching;
    });
    rep.rows.push_back(VerifyRow{n, std::to_string(total), std::to_string(matching), total == matching});
  }
}

void run_genineq(VerifyReport& rep) {
  const int j = rep.params.j;
  const int k = rep.params.k;
  for (int n = 1; n <= rep.params.order; ++n) {
    const Int diff = moment(j, 2 * k, n) - moment(j + 1, 2 * k, n);
    rep.rows.push_back(VerifyRow{n, diff.get_str(), "0", diff >= 0});
  }
  const auto t = strictness_threshold(j, k, rep.params.order);
  rep.notes.push_back(t ? "strict for all n >= " + std::to_string(*t) + " up to " + std::to_string(rep.params.order)
                        : "not strict at n = " + std::to_string(rep.params.order));
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"genn1", "Spt_j generating function: nested sum vs theta-type series", true, false, false, {1, 0, 0, 40}, run_genn1},
      {"sptpn", "spt(n) = n p(n) - N_2(n)/2", false, false, false, {0, 0, 0, 60}, run_sptpn},
      {"sptpng", "Spt_j(n) = n p(n) - _{j+1}N_2(n)/2", true, false, false, {1, 0, 0, 40}, run_sptpng},
      {"kn1", "bivariate nested sum vs product side", true, false, false, {1, 0, 0, 30}, run_kn1},
      {"genjmu2k", "symmetrized j-rank moments: extraction vs closed form vs table", true, true, false, {1, 1, 0, 30},
       run_genjmu2k},
      {"appbp", "Bailey pair instance", false, true, true, {0, 1, 1, 25}, run_appbp},
      {"gtjsptk", "_jspt_k generating function vs symmetrized moment difference", true, true, false, {1, 1, 0, 20},
       run_gtjsptk},
      {"relos", "_jN_2k(n) = sum_t (2t)! S*(k,t) _jmu_2t(n)", true, true, false, {1, 1, 0, 30}, run_relos},
      {"fdyson", "n p(n) = M_2(n)/2 for n > 1", false, false, false, {0, 0, 0, 40}, run_fdyson},
      {"sptdiff", "Spt_j(n) - Spt_{j-1}(n) = (_jN_2(n) - _{j+1}N_2(n))/2", true, false, false, {2, 0, 0, 30},
       run_sptdiff},
      {"jgn", "Spt_j(n) = n p(n) for j > n", true, false, false, {0, 0, 0, 20}, run_jgn},
      {"Rk-forms", "three expansions of R_j(z,q)", true, false, false, {2, 0, 0, 25}, run_rk_forms},
      {"lemma31", "Rogers-Ramanujan partitions: lower-Durfee squares are the Durfee squares", false, false, false,
       {0, 0, 0, 25}, run_lemma31},
      {"lemma32", "equal numbers of lower-Durfee and Durfee squares", false, false, false, {0, 0, 0, 25}, run_lemma32},
      {"genineq", "_jN_2k(n) - _{j+1}N_2k(n) >= 0", true, true, false, {1, 1, 0, 40}, run_genineq},
  };
  return entries;
}

const Entry& find(const std::string& name) {
  for (const Entry& s : registry()) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

void check_param(const std::string& identity, const char* flag, int value, bool used, int minimum) {
  if (!used && value != 0) throw std::invalid_argument(identity + " does not take " + flag);
  if (used && value != 0 && value < minimum) {
    throw std::invalid_argument(identity + ": " + flag + " must be at least " + std::to_string(minimum));
  }
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

bool is_identity(const std::string& name) {
  const auto& names = identity_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string identity_description(const std::string& name) { return find(name).description; }

VerifyReport run_identity(const std::string& name, VerifyParams params) {
  const Entry& entry = find(name);
  check_param(name, "j", params.j, entry.uses_j, name == "sptdiff" ? 2 : 1);
  check_param(name, "k", params.k, entry.uses_k, 1);
  check_param(name, "r", params.r, entry.uses_r, 1);
  if (params.order < 0) throw std::invalid_argument("order must be nonnegative");
  if (params.j == 0) params.j = entry.defaults.j;
  if (params.k == 0) params.k = entry.defaults.k;
  if (params.r == 0) params.r = entry.defaults.r;
  if (params.order == 0) params.order = entry.defaults.order;
  VerifyReport rep{name, entry.description, params, {}, {}};
  entry.run(rep);
  return rep;
}

std::optional<int> strictness_threshold(int j, int k, int order) {
  if (j < 1 || k < 1 || order < 1) throw std::invalid_argument("strictness_threshold: arguments must be positive");
  std::optional<int> start;
  for (int n = order; n >= 1; --n) {
    if (moment(j, 2 * k, n) - moment(j + 1, 2 * k, n) <= 0) break;
    start = n;
  }
  return start;
}

}  // namespace sptj
