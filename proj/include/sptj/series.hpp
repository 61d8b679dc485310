#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sptj {

using Int = mpz_class;

/// Divides `a` by `d`, throwing std::domain_error unless the quotient is exact.
Int exact_divide(const Int& a, const Int& d);

Int factorial(int n);

/// x (x-1) ... (x-len+1); 1 when len == 0.
Int falling_factorial(const Int& x, int len);

/// Binomial coefficient with an arbitrary integer top: falling_factorial(x, k) / k!.
/// Negative x is allowed, e.g. binomial(-1, 2) == 1.
Int binomial(const Int& x, int k);

/// Truncated power series in q with exact integer coefficients.
///
/// A series of order N stores the coefficients of q^0..q^N. Binary
/// operations on series of orders N1 and N2 produce a series of order
/// min(N1, N2); nothing is ever promoted to a higher order.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(int order);
  /// Takes ownership of `coeffs`; the order is coeffs.size() - 1.
  explicit TruncSeries(std::vector<Int> coeffs);

  static TruncSeries zero(int order) { return TruncSeries(order); }
  static TruncSeries one(int order);
  /// c * q^exp, or zero when exp exceeds the order.
  static TruncSeries monomial(const Int& c, int exp, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Int& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }

  /// Checked access; throws std::out_of_range for n outside [0, order].
  const Int& coefficient(int n) const;

  std::span<const Int> coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Drops coefficients above `order` (which must not exceed the current order).
  TruncSeries truncated(int order) const;

  TruncSeries& operator+=(const TruncSeries& b);
  TruncSeries& operator-=(const TruncSeries& b);
  TruncSeries& operator*=(const Int& c);

  /// Same order and identical coefficients.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Int> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const Int& c, const TruncSeries& a);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Throws std::domain_error for any other constant term.
TruncSeries inv_unit(const TruncSeries& a);

/// a * q^e for e >= 0.
TruncSeries shift(const TruncSeries& a, int e);

/// a / (1 - q^e)^power for e >= 1, computed by running sums.
TruncSeries divide_by_one_minus_q(const TruncSeries& a, int e, int power = 1);

/// a * (1 - q^e)^power for e >= 1.
TruncSeries multiply_by_one_minus_q(const TruncSeries& a, int e, int power = 1);

/// (q^a_exp; q)_n = prod_{i=0}^{n-1} (1 - q^{a_exp + i}).
TruncSeries pochhammer_finite(int a_exp, int n, int order);

/// (q^a_exp; q)_inf for a_exp >= 1. Factors with exponent above the order are
/// dropped since they cannot reach any stored coefficient.
TruncSeries pochhammer_inf(int a_exp, int order);

/// 1 / (q; q)_inf, the partition generating function.
TruncSeries partition_series(int order);

/// Entries i = 0..count-1 hold (q; q)_i.
std::vector<TruncSeries> q_pochhammer_table(int count, int order);
/// Entries i = 0..count-1 hold 1 / (q; q)_i.
std::vector<TruncSeries> inverse_q_pochhammer_table(int count, int order);

/// Gaussian binomial [n, m] via the q-Pascal recurrence; zero unless 0 <= m <= n.
TruncSeries gauss_binomial(int n, int m, int order);

/// table[n][m] = [n, m] for 0 <= m <= n <= max_n, built row by row with q-Pascal.
std::vector<std::vector<TruncSeries>> gauss_binomial_table(int max_n, int order);

/// Entry b (0 <= b <= order) holds
///   sum over b >= n_depth >= ... >= n_1 >= lowest of
///   q^{n_1^2 + ... + n_depth^2} / ((q)_{n_1} (q)_{n_2-n_1} ... (q)_{b-n_depth}),
/// so depth 0 gives 1/(q)_b. Indices whose square exceeds the order are pruned.
std::vector<TruncSeries> pochhammer_chain_sums(int depth, int lowest, int order);

/// Entry b (0 <= b <= order) holds
///   sum over b >= n_depth >= ... >= n_1 >= lowest of
///   [b, n_depth] [n_depth, n_{depth-1}] ... [n_2, n_1] q^{n_1^2 + ... + n_depth^2},
/// so depth 0 gives 1. Equals (q)_b times the matching pochhammer_chain_sums entry.
std::vector<TruncSeries> gaussian_chain_sums(int depth, int lowest, int order);

std::string to_string(const TruncSeries& a);
std::ostream& operator<<(std::ostream& os, const TruncSeries& a);

}  // namespace sptj
