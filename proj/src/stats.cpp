#include "sptj/stats.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sptj {

int rank(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("rank: empty partition");
  return p.largest() - p.length();
}

int crank(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("crank: empty partition");
  const int ones = frequency(p, 1);
  if (ones == 0) return p.largest();
  const auto parts = p.parts();
  const int larger = static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int x) { return x > ones; }));
  return larger - ones;
}

std::optional<int> jrank(const Partition& p, int j) {
  if (j < 2) throw std::invalid_argument("jrank: j must be at least 2");
  const DurfeeChain chain = successive_durfee(p);
  if (chain.count() < j - 1) return std::nullopt;
  const int first = chain.sides.front();
  const int limit = chain.sides[static_cast<size_t>(j) - 2];
  const auto parts = p.parts();
  int columns = 0;
  for (int c = first + 1; c <= p.largest(); ++c) {
    const int len = static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int x) { return x >= c; }));
    if (len <= limit) ++columns;
  }
  const int below = p.length() - chain.rows_in_first(j - 1);
  return columns - below;
}

TruncSeries gf_Njm(int j, int m, int order) {
  if (j < 1) throw std::invalid_argument("gf_Njm: j must be at least 1");
  const int am = std::abs(m);
  TruncSeries sum(order);
  for (int n = 1;; ++n) {
    const int e = n * ((2 * j - 1) * n - 1) / 2 + am * n;
    if (e > order) break;
    const int sign = (n % 2 == 1) ? 1 : -1;
    sum[e] += sign;
    if (e + n <= order) sum[e + n] -= sign;
  }
  return partition_series(order) * sum;
}

TruncSeries gf_sym_mu_closed(int j, int k, int order) {
  if (j < 1 || k < 1) throw std::invalid_argument("gf_sym_mu_closed: j and k must be at least 1");
  TruncSeries sum(order);
  for (int n = 1;; ++n) {
    const int low = n * ((2 * j - 1) * n - 1) / 2 + k * n;
    if (low > order) break;
    const int sign = (n % 2 == 1) ? 1 : -1;
    TruncSeries t(order);
    t[low] += sign;
    if (low + n <= order) t[low + n] += sign;
    sum += divide_by_one_minus_q(t, n, 2 * k);
  }
  return partition_series(order) * sum;
}

// ---------------------------------------------------------------------------

CountTable::CountTable(int j, int order, TableSource source) : j_(j), order_(order), source_(source) {
  if (j < 1) throw std::invalid_argument("CountTable: j must be at least 1");
  if (order < 0) throw std::invalid_argument("CountTable: negative order");
  counts_.assign(2 * static_cast<size_t>(order) + 1, std::vector<Int>(static_cast<size_t>(order) + 1));
  if (source == TableSource::kGeneratingFunction) {
    for (int m = 0; m <= order; ++m) {
      const TruncSeries g = gf_Njm(j, m, order);
      for (int n = 0; n <= order; ++n) {
        counts_[static_cast<size_t>(order + m)][static_cast<size_t>(n)] = g[n];
        counts_[static_cast<size_t>(order - m)][static_cast<size_t>(n)] = g[n];
      }
    }
    return;
  }
  for (int n = 1; n <= order; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      std::optional<int> stat = (j == 1) ? std::optional<int>(crank(p)) : jrank(p, j);
      if (stat) counts_[static_cast<size_t>(order + *stat)][static_cast<size_t>(n)] += 1;
    });
  }
}

Int CountTable::count(int m, int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("CountTable::count: n outside table");
  if (m < -order_ || m > order_) return 0;
  return counts_[static_cast<size_t>(order_ + m)][static_cast<size_t>(n)];
}

Int CountTable::moment(int t, int n) const {
  if (t < 0) throw std::invalid_argument("moment: negative order");
  Int sum = 0;
  Int power;
  for (int m = -n; m <= n; ++m) {
    const Int& c = counts_[static_cast<size_t>(order_ + m)][static_cast<size_t>(n)];
    if (c == 0) continue;
    mpz_pow_ui(power.get_mpz_t(), Int(m).get_mpz_t(), static_cast<unsigned long>(t));
    sum += power * c;
  }
  return sum;
}

Int CountTable::sym_mu(int k, int n) const {
  if (k < 1) throw std::invalid_argument("sym_mu: k must be at least 1");
  const int offset = (k - 1) / 2;
  Int sum = 0;
  for (int m = -n; m <= n; ++m) {
    const Int& c = counts_[static_cast<size_t>(order_ + m)][static_cast<size_t>(n)];
    if (c != 0) sum += binomial(Int(m + offset), k) * c;
  }
  return sum;
}

std::shared_ptr<const CountTable> count_table(int j, int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CountTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[j];
  if (!slot || slot->order() < order) {
    // Grow geometrically so that rising n does not rebuild every time.
    const int target = slot ? std::max(order, 2 * slot->order()) : std::max(order, 16);
    slot = std::make_shared<const CountTable>(j, target);
  }
  return slot;
}

Int moment(int j, int t, int n) {
  if (n < 0) throw std::invalid_argument("moment: negative n");
  return count_table(j, n)->moment(t, n);
}

Int sym_mu(int j, int k, int n) {
  if (n < 0) throw std::invalid_argument("sym_mu: negative n");
  return count_table(j, n)->sym_mu(k, n);
}

namespace {

std::shared_ptr<const CountTable> table_for(int j, int order, TableSource source) {
  if (source == TableSource::kGeneratingFunction) return count_table(j, order);
  return std::make_shared<const CountTable>(j, order, source);
}

}  // namespace

MomentTable count_column(int j, int m, int order, TableSource source) {
  const auto table = table_for(j, order, source);
  MomentTable out{MomentKind::kCount, j, m, source, {}};
  for (int n = 0; n <= order; ++n) out.values.push_back(table->count(m, n));
  return out;
}

MomentTable moment_column(int j, int t, int order, TableSource source) {
  const auto table = table_for(j, order, source);
  MomentTable out{MomentKind::kMoment, j, t, source, {}};
  for (int n = 0; n <= order; ++n) out.values.push_back(table->moment(t, n));
  return out;
}

MomentTable sym_mu_column(int j, int k, int order, TableSource source) {
  const auto table = table_for(j, order, source);
  MomentTable out{MomentKind::kSymmetrized, j, k, source, {}};
  for (int n = 0; n <= order; ++n) out.values.push_back(table->sym_mu(k, n));
  return out;
}

BiSeries jrank_gf_from_counts(int j, int order) {
  BiSeries r(order);
  for (int m = 0; m <= order; ++m) {
    const TruncSeries g = gf_Njm(j, m, order);
    for (int n = 0; n <= order; ++n) {
      r[n].add_term(m, g[n]);
      if (m != 0) r[n].add_term(-m, g[n]);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Int> g_poly(int k) {
  if (k < 1) throw std::invalid_argument("g_poly: k must be at least 1");
  std::vector<Int> c{Int(1)};
  for (int i = 0; i < k; ++i) {
    // multiply by x^2 - i^2
    std::vector<Int> next(c.size() + 2);
    for (size_t d = 0; d < c.size(); ++d) {
      next[d + 2] += c[d];
      next[d] -= c[d] * (i * i);
    }
    c = std::move(next);
  }
  return c;
}

StirlingStarTable::StirlingStarTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("StirlingStarTable: negative size");
  std::vector<std::vector<Int>> g(static_cast<size_t>(max_n) + 1);
  for (int k = 1; k <= max_n; ++k) g[static_cast<size_t>(k)] = g_poly(k);
  rows_.resize(static_cast<size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    // Peel off g_k from the top degree down; each g_k is monic of degree 2k.
    std::vector<Int> rest(2 * static_cast<size_t>(n) + 1);
    rest[2 * static_cast<size_t>(n)] = 1;
    auto& row = rows_[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, Int(0));
    for (int k = n; k >= 1; --k) {
      const Int s = rest[2 * static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = s;
      const auto& gk = g[static_cast<size_t>(k)];
      for (size_t d = 0; d < gk.size(); ++d) rest[d] -= s * gk[d];
    }
    if (!std::all_of(rest.begin(), rest.end(), [](const Int& x) { return x == 0; })) {
      throw std::logic_error("StirlingStarTable: nonzero remainder for n = " + std::to_string(n));
    }
  }
}

const Int& StirlingStarTable::operator()(int n, int k) const {
  if (n < 1 || n > max_n_ || k < 1 || k > n) {
    throw std::out_of_range("StirlingStarTable: index (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

StirlingStarTable stirling_star(int max_n) { return StirlingStarTable(max_n); }

Int moment_via_sym(int j, int k, int n) {
  if (k < 1) throw std::invalid_argument("moment_via_sym: k must be at least 1");
  const StirlingStarTable s(k);
  Int sum = 0;
  for (int t = 1; t <= k; ++t) sum += factorial(2 * t) * s(k, t) * sym_mu(j, 2 * t, n);
  return sum;
}

Int sym_mu_via_g(int j, int k, int n) {
  if (k < 1) throw std::invalid_argument("sym_mu_via_g: k must be at least 1");
  const auto table = count_table(j, n);
  const auto g = g_poly(k);
  Int sum = 0;
  for (int m = -n; m <= n; ++m) {
    const Int c = table->count(m, n);
    if (c == 0) continue;
    Int value = 0;
    for (size_t d = g.size(); d-- > 0;) value = value * m + g[d];
    sum += value * c;
  }
  return exact_divide(sum, factorial(2 * k));
}

}  // namespace sptj
