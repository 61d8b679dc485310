#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sptj/laurent.hpp"
#include "sptj/partitions.hpp"
#include "sptj/series.hpp"

namespace sptj {

/// Largest part minus number of parts. Throws std::invalid_argument on the empty partition.
int rank(const Partition& p);

/// Largest part when there are no ones; otherwise (#parts larger than the
/// number of ones) - (number of ones). Throws on the empty partition.
int crank(const Partition& p);

/// Garvan's j-rank for j >= 2: columns right of the first Durfee square with
/// length at most n_{j-1}, minus parts below the (j-1)-st Durfee square.
/// Empty when p has fewer than j-1 successive Durfee squares.
std::optional<int> jrank(const Partition& p, int j);

/// Generating function of N_j(m, .) for j >= 2, and of the crank counts
/// M(m, .) for j = 1:
///   1/(q)_inf sum_{n>=1} (-1)^{n-1} q^{n((2j-1)n-1)/2 + |m| n} (1 - q^n).
TruncSeries gf_Njm(int j, int m, int order);

enum class TableSource { kGeneratingFunction, kCombinatorial };

/// N_j(m, n) for 0 <= n <= order and all m (zero outside [-order, order]).
///
/// The generating-function source is the production path. The combinatorial
/// source counts partitions directly by j-rank (crank for j = 1) and is kept
/// as an oracle; for j = 1 it differs from the generating function at n = 1,
/// where the crank of the partition (1) is -1 but the table has
/// M(-1,1) = M(1,1) = 1, M(0,1) = -1.
class CountTable {
 public:
  CountTable(int j, int order, TableSource source = TableSource::kGeneratingFunction);

  int j() const { return j_; }
  int order() const { return order_; }
  TableSource source() const { return source_; }

  Int count(int m, int n) const;
  /// sum_m m^t N_j(m, n).
  Int moment(int t, int n) const;
  /// sum_m binomial(m + floor((k-1)/2), k) N_j(m, n).
  Int sym_mu(int k, int n) const;

 private:
  int j_;
  int order_;
  TableSource source_;
  std::vector<std::vector<Int>> counts_;  // [m + order_][n]
};

/// Shared generating-function table of order at least `order`. Tables are
/// built once per j and only replaced by larger ones; concurrent callers are safe.
std::shared_ptr<const CountTable> count_table(int j, int order);

/// Closed form of sum_n _jmu_{2k}(n) q^n:
///   1/(q)_inf sum_{n>=1} (-1)^{n-1} (q^{n((2j-1)n+1)/2} + q^{n((2j-1)n-1)/2}) q^{kn} / (1-q^n)^{2k}.
TruncSeries gf_sym_mu_closed(int j, int k, int order);

/// _jN_t(n) = sum_m m^t N_j(m, n); _1N_t are crank moments, _2N_t rank moments.
Int moment(int j, int t, int n);

/// _jmu_k(n) = sum_m binomial(m + floor((k-1)/2), k) N_j(m, n).
Int sym_mu(int j, int k, int n);

enum class MomentKind { kCount, kMoment, kSymmetrized };

/// One column of values by n = 0..order.
struct MomentTable {
  MomentKind kind;
  int j;
  int index;  // m, t or k depending on kind
  TableSource source;
  std::vector<Int> values;
};

MomentTable count_column(int j, int m, int order, TableSource source = TableSource::kGeneratingFunction);
MomentTable moment_column(int j, int t, int order, TableSource source = TableSource::kGeneratingFunction);
MomentTable sym_mu_column(int j, int k, int order, TableSource source = TableSource::kGeneratingFunction);

/// sum_{n, m} N_j(m, n) z^m q^n assembled from the single-m generating functions.
BiSeries jrank_gf_from_counts(int j, int order);

/// Coefficients of g_k(x) = prod_{i=0}^{k-1} (x^2 - i^2), index = power of x.
std::vector<Int> g_poly(int k);

/// S*(n, k) for 1 <= k <= n <= K, defined by x^{2n} = sum_k S*(n, k) g_k(x).
class StirlingStarTable {
 public:
  explicit StirlingStarTable(int max_n);

  int max_n() const { return max_n_; }
  /// Throws std::out_of_range unless 1 <= k <= n <= max_n.
  const Int& operator()(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<Int>> rows_;
};

StirlingStarTable stirling_star(int max_n);

/// _jN_{2k}(n) through sum_{t=1}^{k} (2t)! S*(k, t) _jmu_{2t}(n).
Int moment_via_sym(int j, int k, int n);

/// _jmu_{2k}(n) through (1/(2k)!) sum_m g_k(m) N_j(m, n).
Int sym_mu_via_g(int j, int k, int n);

}  // namespace sptj
