#pragma once

#include <map>
#include <string>
#include <vector>

#include "sptj/series.hpp"

namespace sptj {

/// Finite Laurent polynomial in z with exact integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Int& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Int& c, int exp);

  const std::map<int, Int>& terms() const { return terms_; }
  Int coefficient(int exp) const;
  bool is_zero() const { return terms_.empty(); }

  /// Smallest / largest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int exp, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const Int& c);

  /// this * z^s.
  LaurentPoly shifted(int s) const;
  /// Image under z -> 1/z.
  LaurentPoly reflected() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Int> terms_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Int& c, const LaurentPoly& a);

std::string to_string(const LaurentPoly& p);

/// Truncated power series in q whose coefficients are Laurent polynomials in z.
class BiSeries {
 public:
  explicit BiSeries(int order);

  static BiSeries one(int order);
  /// c z^z_exp q^q_exp, or zero beyond the truncation order.
  static BiSeries monomial(const Int& c, int z_exp, int q_exp, int order);
  /// Embeds a univariate series as z-constant coefficients.
  static BiSeries from_series(const TruncSeries& a);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const LaurentPoly& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
  LaurentPoly& operator[](int n) { return coeffs_[static_cast<size_t>(n)]; }
  /// Checked access; throws std::out_of_range.
  const LaurentPoly& coefficient(int n) const;

  BiSeries truncated(int order) const;

  BiSeries& operator+=(const BiSeries& b);
  BiSeries& operator-=(const BiSeries& b);

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
/// Multiplication by a univariate series (z-free coefficients).
BiSeries operator*(const TruncSeries& a, const BiSeries& b);

/// Inverse of a series whose q^0 coefficient is +-z^m. Throws std::domain_error otherwise.
BiSeries bi_inv_unit(const BiSeries& a);

/// a / (1 - z^z_exp q^q_exp) for q_exp >= 1.
BiSeries divide_by_one_minus(const BiSeries& a, int z_exp, int q_exp);
/// a * (1 - z^z_exp q^q_exp) for q_exp >= 0.
BiSeries multiply_by_one_minus(const BiSeries& a, int z_exp, int q_exp);

/// (z^z_exp q^a_exp; q)_n as a bivariate series; a_exp may be 0.
BiSeries z_pochhammer_finite(int z_exp, int a_exp, int n, int order);
/// (z^z_exp q^a_exp; q)_inf for a_exp >= 1.
BiSeries z_pochhammer_inf(int z_exp, int a_exp, int order);

/// Crank generating function (q)_inf / ((zq)_inf (q/z)_inf).
BiSeries build_crank_gf(int order);

/// Rank generating function sum_{n>=1} q^{n^2} / ((zq)_n (q/z)_n). The q^0
/// coefficient is 0, in agreement with the single-m rank generating functions.
BiSeries build_rank_gf(int order);

/// Two closed expansions of the j-rank generating function R_j(z, q).
enum class JRankForm {
  /// sum over n_{j-1} >= ... >= n_1 >= 1 of q^{n_1^2+...+n_{j-1}^2} over
  /// (q)_{n_{j-1}-n_{j-2}} ... (q)_{n_2-n_1} (zq)_{n_1} (q/z)_{n_1}.
  kNestedSum,
  /// z/(q)_inf sum_{n != 0} (-1)^{n-1} q^{n((2j-1)n+1)/2} (1-q^n)/(1-zq^n).
  kLambert,
};

/// R_j(z, q) for j >= 1. For j == 1 the nested sum degenerates and the crank
/// generating function is returned; the Lambert form is still expanded literally.
BiSeries build_jrank_gf(int j, int order, JRankForm form = JRankForm::kNestedSum);

/// Coefficientwise sum_m c_m m(m-1)...(m-t+1): the t-th z-derivative at z = 1.
TruncSeries dz_at_1(const BiSeries& a, int t);

/// Coefficientwise sum_m c_m binomial(m+k-1, 2k), i.e. (d/dz)^{2k} z^{k-1} a at z = 1, over (2k)!.
TruncSeries symmetrized_extract(const BiSeries& a, int k);

struct Kn1Sides {
  BiSeries lhs;
  BiSeries rhs;
};

/// Both sides of the j-fold generalisation of Watson's specialised identity:
///   sum_{n_j>=...>=n_1>=0} (z)_{n_j}(1/z)_{n_j} q^{n_1^2+...+n_{j-1}^2+n_j}
///       / ((q)_{n_1}(q)_{n_2-n_1}...(q)_{n_j-n_{j-1}})
/// and
///   (zq)_inf(q/z)_inf/(q)_inf^2 (1 + sum_{n>=1} (-1)^n q^{n((2j+1)n+1)/2}(1+q^n)
///       (z)_n(1/z)_n / ((zq)_n(q/z)_n)).
Kn1Sides build_kn1_sides(int j, int order);

}  // namespace sptj
