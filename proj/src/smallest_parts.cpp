#include "sptj/smallest_parts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sptj/stats.hpp"

namespace sptj {

std::string to_string(Route r) {
  switch (r) {
    case Route::kGeneratingFunction: return "gf";
    case Route::kWeight: return "weight";
    case Route::kMoments: return "moments";
  }
  return "?";
}

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

// q^b (q)_b / (1 - q^b)^2, the smallest-part kernel before the 1/(q)_inf factor.
TruncSeries smallest_part_kernel(int b, int order) {
  TruncSeries t = shift(pochhammer_finite(1, b, order), b);
  return divide_by_one_minus_q(t, b, 2);
}

// tails[a] = sum_{n_r >= ... >= n_1 >= a} q^{n_1+...+n_r} / prod (1-q^{n_i})^2 for r = depth,
// with depth 0 giving 1. Built by suffix sums from a = order down to 1.
std::vector<TruncSeries> smallest_part_tails(int depth, int order) {
  std::vector<TruncSeries> cur(static_cast<size_t>(order) + 2, TruncSeries::one(order));
  std::vector<TruncSeries> factor;
  factor.reserve(static_cast<size_t>(order) + 1);
  factor.emplace_back(order);
  for (int a = 1; a <= order; ++a) factor.push_back(divide_by_one_minus_q(TruncSeries::monomial(Int(1), a, order), a, 2));
  for (int round = 0; round < depth; ++round) {
    std::vector<TruncSeries> next(cur.size(), TruncSeries(order));
    for (int a = order; a >= 1; --a) {
      next[static_cast<size_t>(a)] =
          factor[static_cast<size_t>(a)] * cur[static_cast<size_t>(a)] + next[static_cast<size_t>(a) + 1];
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> coefficients_from(const TruncSeries& s, int n_max) {
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) out[static_cast<size_t>(n)] = s[n];
  return out;
}

// The w_k sum with t_1 = the part at position idx from the smallest (0-based),
// counting t_1 with multiplicity `lead`.
Int split_weight(const Partition& p, int idx, int lead, int k) {
  const int t1 = p[static_cast<size_t>(p.length() - 1 - idx)];
  std::map<int, int> larger;
  for (int v : p.parts()) {
    if (v > t1) ++larger[v];
  }
  // tail[d] = sum over chains t_2 < ... < t_r of larger parts and compositions of d.
  std::vector<Int> tail(static_cast<size_t>(k) + 1);
  tail[0] = 1;
  for (const auto& [v, f] : larger) {
    std::vector<Int> next = tail;
    for (int d = 0; d <= k; ++d) {
      if (tail[static_cast<size_t>(d)] == 0) continue;
      for (int m = 1; d + m <= k; ++m) {
        next[static_cast<size_t>(d + m)] += tail[static_cast<size_t>(d)] * binomial(Int(f + m), 2 * m);
      }
    }
    tail = std::move(next);
  }
  Int sum = 0;
  for (int m1 = 1; m1 <= k; ++m1) {
    sum += binomial(Int(lead + m1 - 1), 2 * m1 - 1) * tail[static_cast<size_t>(k - m1)];
  }
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// spt

Int spt_weight(int n) {
  require_positive(n, "spt_weight: n");
  Int total = 0;
  for_each_partition(n, [&](const Partition& p) { total += frequency(p, p.smallest()); });
  return total;
}

TruncSeries gf_spt(int order) {
  TruncSeries sum(order);
  for (int m = 1; m <= order; ++m) {
    TruncSeries t = divide_by_one_minus_q(TruncSeries::monomial(Int(1), m, order), m, 2);
    for (int i = m + 1; i <= order; ++i) t = divide_by_one_minus_q(t, i);
    sum += t;
  }
  return sum;
}

TruncSeries gf_np(int order) {
  TruncSeries lambert(order);
  for (int n = 1; n <= order; ++n) {
    for (int e = n; e <= order; e += n) lambert[e] += n;
  }
  return partition_series(order) * lambert;
}

// ---------------------------------------------------------------------------
// Spt_j

int W_weight(const Partition& p, int j) {
  require_positive(j, "W_weight: j");
  if (p.empty()) return 0;
  const DurfeeChain lower = successive_lower_durfee(p);
  const int covered = std::min(lower.rows_in_first(j - 1) + 1, p.length());
  const auto m = marks_from_smallest(p);
  int w = 0;
  for (int i = 0; i < covered; ++i) w += m[static_cast<size_t>(i)];
  return w;
}

TruncSeries gf_Sptj(int j, int order) {
  require_positive(j, "gf_Sptj: j");
  const auto chains = gaussian_chain_sums(j - 1, 0, order);
  TruncSeries sum(order);
  for (int b = 1; b <= order; ++b) sum += smallest_part_kernel(b, order) * chains[static_cast<size_t>(b)];
  return partition_series(order) * sum;
}

TruncSeries gf_genn1_lhs(int j, int order) {
  require_positive(j, "gf_genn1_lhs: j");
  const auto chains = pochhammer_chain_sums(j - 1, 0, order);
  TruncSeries sum(order);
  for (int b = 1; b <= order; ++b) {
    // q^b (q)_b / ((1-q^b)^2 (q^{b+1})_inf) = q^b (q)_b^2 / ((1-q^b)^2 (q)_inf).
    TruncSeries t = smallest_part_kernel(b, order) * pochhammer_finite(1, b, order);
    sum += t * chains[static_cast<size_t>(b)];
  }
  return partition_series(order) * sum;
}

TruncSeries gf_genn1_rhs(int j, int order) {
  require_positive(j, "gf_genn1_rhs: j");
  TruncSeries sum(order);
  for (int n = 1;; ++n) {
    const int e = n * ((2 * j + 1) * n + 1) / 2;
    if (e > order) break;
    TruncSeries t(order);
    const int sign = (n % 2 == 0) ? 1 : -1;
    t[e] += sign;
    if (e + n <= order) t[e + n] += sign;
    sum += divide_by_one_minus_q(t, n, 2);
  }
  return gf_np(order) + partition_series(order) * sum;
}

std::vector<Int> Spt_j_values(int j, int n_max, Route route) {
  require_positive(j, "Spt_j: j");
  if (n_max < 0) throw std::invalid_argument("Spt_j: negative n_max");
  switch (route) {
    case Route::kGeneratingFunction:
      return coefficients_from(gf_Sptj(j, n_max), n_max);
    case Route::kWeight: {
      std::vector<Int> out(static_cast<size_t>(n_max) + 1);
      for (int n = 1; n <= n_max; ++n) {
        long long total = 0;
        for_each_partition(n, [&](const Partition& p) { total += W_weight(p, j); });
        out[static_cast<size_t>(n)] = Int(std::to_string(total));
      }
      return out;
    }
    case Route::kMoments: {
      const TruncSeries np = gf_np(n_max);
      std::vector<Int> out(static_cast<size_t>(n_max) + 1);
      for (int n = 1; n <= n_max; ++n) {
        out[static_cast<size_t>(n)] = np[n] - exact_divide(moment(j + 1, 2, n), Int(2));
      }
      return out;
    }
  }
  throw std::invalid_argument("Spt_j: unknown route");
}

Int Spt_j(int j, int n, Route route) {
  require_positive(n, "Spt_j: n");
  return Spt_j_values(j, n, route)[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// spt_k and _j spt_k

Int w_k_weight(const Partition& p, int k) {
  require_positive(k, "w_k_weight: k");
  if (p.empty()) throw std::invalid_argument("w_k_weight: empty partition");
  return split_weight(p, 0, frequency(p, p.smallest()), k);
}

TruncSeries gf_sptk(int k, int order) {
  require_positive(k, "gf_sptk: k");
  const auto tails = smallest_part_tails(k - 1, order);
  TruncSeries sum(order);
  for (int a = 1; a <= order; ++a) sum += smallest_part_kernel(a, order) * tails[static_cast<size_t>(a)];
  return partition_series(order) * sum;
}

Int jw_k_weight(const Partition& p, int j, int k) {
  require_positive(j, "jw_k_weight: j");
  require_positive(k, "jw_k_weight: k");
  if (p.empty()) return 0;
  const auto m = marks_from_smallest(p);
  int first = 0;
  int last = 0;
  if (j >= 2) {
    const DurfeeChain lower = successive_lower_durfee(p);
    first = lower.rows_in_first(j - 2) + 1;
    last = lower.rows_in_first(j - 1);
  }
  last = std::min(last, p.length() - 1);
  Int sum = 0;
  for (int idx = first; idx <= last; ++idx) sum += split_weight(p, idx, m[static_cast<size_t>(idx)], k);
  return sum;
}

TruncSeries gf_jsptk(int j, int k, int order, JSptForm form) {
  require_positive(j, "gf_jsptk: j");
  require_positive(k, "gf_jsptk: k");
  const auto tails = smallest_part_tails(k - 1, order);
  TruncSeries sum(order);
  if (form == JSptForm::kGaussian) {
    const auto chains = gaussian_chain_sums(j - 1, 1, order);
    for (int b = 1; b <= order; ++b) {
      sum += smallest_part_kernel(b, order) * tails[static_cast<size_t>(b)] * chains[static_cast<size_t>(b)];
    }
  } else {
    const auto chains = pochhammer_chain_sums(j - 1, 1, order);
    for (int b = 1; b <= order; ++b) {
      TruncSeries t = smallest_part_kernel(b, order) * pochhammer_finite(1, b, order);
      sum += t * tails[static_cast<size_t>(b)] * chains[static_cast<size_t>(b)];
    }
  }
  return partition_series(order) * sum;
}

std::vector<Int> jspt_k_values(int j, int k, int n_max, Route route) {
  require_positive(j, "jspt_k: j");
  require_positive(k, "jspt_k: k");
  if (n_max < 0) throw std::invalid_argument("jspt_k: negative n_max");
  switch (route) {
    case Route::kGeneratingFunction:
      return coefficients_from(gf_jsptk(j, k, n_max), n_max);
    case Route::kWeight: {
      std::vector<Int> out(static_cast<size_t>(n_max) + 1);
      for (int n = 1; n <= n_max; ++n) {
        Int total = 0;
        for_each_partition(n, [&](const Partition& p) { total += jw_k_weight(p, j, k); });
        out[static_cast<size_t>(n)] = total;
      }
      return out;
    }
    case Route::kMoments: {
      std::vector<Int> out(static_cast<size_t>(n_max) + 1);
      for (int n = 1; n <= n_max; ++n) out[static_cast<size_t>(n)] = sym_mu(j, 2 * k, n) - sym_mu(j + 1, 2 * k, n);
      return out;
    }
  }
  throw std::invalid_argument("jspt_k: unknown route");
}

Int jspt_k(int j, int k, int n, Route route) {
  require_positive(n, "jspt_k: n");
  return jspt_k_values(j, k, n, route)[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------

SeriesPair appbp_sides(int r, int k, int order) {
  require_positive(r, "appbp: r");
  require_positive(k, "appbp: k");
  const auto tails = smallest_part_tails(k - 1, order);
  const auto beta = pochhammer_chain_sums(r - 1, 0, order);
  TruncSeries lhs(order);
  TruncSeries plain(order);
  for (int b = 1; b <= order; ++b) {
    TruncSeries base = divide_by_one_minus_q(TruncSeries::monomial(Int(1), b, order), b, 2) * tails[static_cast<size_t>(b)];
    plain += base;
    const TruncSeries poch = pochhammer_finite(1, b, order);
    lhs += base * (poch * poch) * beta[static_cast<size_t>(b)];
  }
  TruncSeries alpha_part(order);
  for (int n = 1;; ++n) {
    const int e = n * (n - 1) / 2 + r * n * n + k * n;
    if (e > order) break;
    TruncSeries t(order);
    const int sign = (n % 2 == 0) ? 1 : -1;
    t[e] += sign;
    if (e + n <= order) t[e + n] += sign;
    alpha_part += divide_by_one_minus_q(t, n, 2 * k);
  }
  return SeriesPair{std::move(lhs), plain + alpha_part};
}

bool verify_appbp(int r, int k, int order) {
  const SeriesPair s = appbp_sides(r, k, order);
  return s.lhs == s.rhs;
}

Int relation_sum(int j, int n) {
  require_positive(j, "relation_sum: j");
  require_positive(n, "relation_sum: n");
  const Int spt = Spt_j(j, n, Route::kGeneratingFunction);
  Int layered = 0;
  for (int l = 1; l <= j; ++l) layered += jspt_k(l, 1, n, Route::kGeneratingFunction);
  const Int mu_diff = sym_mu(1, 2, n) - sym_mu(j + 1, 2, n);
  if (spt != layered || spt != mu_diff) {
    throw std::logic_error("relation_sum: Spt_" + std::to_string(j) + "(" + std::to_string(n) + ") = " +
                           spt.get_str() + ", layered sum = " + layered.get_str() +
                           ", moment difference = " + mu_diff.get_str());
  }
  return spt;
}

// ---------------------------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::kSpt: return "spt";
    case Family::kSptK: return "spt_k";
    case Family::kSptJ: return "Spt_j";
    case Family::kJSptK: return "jspt_k";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "spt") return Family::kSpt;
  if (s == "spt_k") return Family::kSptK;
  if (s == "Spt_j") return Family::kSptJ;
  if (s == "jspt_k") return Family::kJSptK;
  throw std::invalid_argument("unknown family '" + s + "'");
}

void SptRequest::validate() const {
  const bool needs_j = family == Family::kSptJ || family == Family::kJSptK;
  const bool needs_k = family == Family::kSptK || family == Family::kJSptK;
  const std::string name = to_string(family);
  if (needs_j && j < 1) throw std::invalid_argument(name + " requires j >= 1");
  if (!needs_j && j != 0) throw std::invalid_argument(name + " does not take j");
  if (needs_k && k < 1) throw std::invalid_argument(name + " requires k >= 1");
  if (!needs_k && k != 0) throw std::invalid_argument(name + " does not take k");
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (routes.empty()) throw std::invalid_argument("no route requested");
}

std::vector<std::vector<Int>> evaluate(const SptRequest& req) {
  req.validate();
  std::vector<std::vector<Int>> out;
  for (Route route : req.routes) {
    switch (req.family) {
      case Family::kSpt:
        out.push_back(Spt_j_values(1, req.n_max, route));
        if (route == Route::kWeight) {
          for (int n = 1; n <= req.n_max; ++n) out.back()[static_cast<size_t>(n)] = spt_weight(n);
        } else if (route == Route::kGeneratingFunction) {
          out.back() = coefficients_from(gf_spt(req.n_max), req.n_max);
        }
        break;
      case Family::kSptK: out.push_back(jspt_k_values(1, req.k, req.n_max, route)); break;
      case Family::kSptJ: out.push_back(Spt_j_values(req.j, req.n_max, route)); break;
      case Family::kJSptK: out.push_back(jspt_k_values(req.j, req.k, req.n_max, route)); break;
    }
  }
  return out;
}

}  // namespace sptj
