#pragma once

#include <string>
#include <vector>

#include "sptj/partitions.hpp"
#include "sptj/series.hpp"

namespace sptj {

/// How a value is computed.
///  - kGeneratingFunction: coefficient extraction from a q-series expansion.
///  - kWeight: summing a combinatorial weight over all partitions of n.
///  - kMoments: differences of (symmetrized) rank/crank/j-rank moments.
enum class Route { kGeneratingFunction, kWeight, kMoments };

std::string to_string(Route r);

// --- spt(n) ----------------------------------------------------------------

/// Total number of appearances of the smallest parts over all partitions of n.
Int spt_weight(int n);

/// sum_{m>=1} q^m / ((1-q^m)^2 (q^{m+1};q)_inf).
TruncSeries gf_spt(int order);

/// sum n p(n) q^n = 1/(q)_inf sum_{n>=1} n q^n / (1-q^n).
TruncSeries gf_np(int order);

// --- Spt_j(n) --------------------------------------------------------------

/// Sum of the marks of the parts inside the first j-1 successive
/// lower-Durfee squares together with the part right above them; every
/// part when there are fewer than j-1 such squares. W_1 is the multiplicity
/// of the smallest part.
int W_weight(const Partition& p, int j);

/// Gaussian-binomial expansion of sum Spt_j(n) q^n:
///   sum_{n_j>=1} sum_{n_{j-1}>=...>=n_1>=0} q^{n_j} / ((1-q^{n_j})^2 (q^{n_j+1})_inf)
///     [n_j, n_{j-1}] ... [n_2, n_1] q^{n_1^2+...+n_{j-1}^2}.
TruncSeries gf_Sptj(int j, int order);

/// The same series with q-Pochhammer denominators in place of Gaussian binomials.
TruncSeries gf_genn1_lhs(int j, int order);

/// 1/(q)_inf sum n q^n/(1-q^n) + 1/(q)_inf sum_{n>=1} (-1)^n q^{n((2j+1)n+1)/2} (1+q^n)/(1-q^n)^2.
TruncSeries gf_genn1_rhs(int j, int order);

/// Spt_j(n) for n = 0..n_max by the requested route (entry 0 is 0).
std::vector<Int> Spt_j_values(int j, int n_max, Route route);
Int Spt_j(int j, int n, Route route);

// --- spt_k(n) and _j spt_k(n) ----------------------------------------------

/// Garvan's weight w_k: over compositions m_1+...+m_r = k and chains of
/// distinct parts t_1 < ... < t_r with t_1 the smallest part,
/// binom(f_{t_1}+m_1-1, 2m_1-1) prod_{i>=2} binom(f_{t_i}+m_i, 2m_i).
Int w_k_weight(const Partition& p, int k);

/// sum_{n_k>=...>=n_1>=1} q^{n_1+...+n_k} / ((1-q^{n_k})^2 ... (1-q^{n_1})^2 (q^{n_1+1})_inf).
TruncSeries gf_sptk(int k, int order);

/// Generalised weight _jw_k: the w_k sum taken at every split point t_1 right
/// above a part of the (j-1)-st lower-Durfee square (t_1 = smallest part for
/// j = 1), with the mark of t_1 in place of its frequency.
Int jw_k_weight(const Partition& p, int j, int k);

enum class JSptForm {
  /// (q)_{n_1} numerator with (q)_{n_1-m_1} ... (q)_{m_{j-1}} denominators.
  kPochhammer,
  /// Gaussian binomials [n_j, n_{j-1}] ... [n_2, n_1].
  kGaussian,
};

TruncSeries gf_jsptk(int j, int k, int order, JSptForm form = JSptForm::kGaussian);

std::vector<Int> jspt_k_values(int j, int k, int n_max, Route route);
Int jspt_k(int j, int k, int n, Route route);

// --- Bailey pair instance and relations -------------------------------------

struct SeriesPair {
  TruncSeries lhs;
  TruncSeries rhs;
};

/// Both sides of Garvan's Bailey-pair theorem at the pair with parameter r (a = 1).
SeriesPair appbp_sides(int r, int k, int order);
bool verify_appbp(int r, int k, int order);

/// Spt_j(n), checked against sum_{l=1}^{j} _l spt_1(n) and _1mu_2(n) - _{j+1}mu_2(n).
/// Throws std::logic_error on any mismatch.
Int relation_sum(int j, int n);

// --- Requests ----------------------------------------------------------------

enum class Family { kSpt, kSptK, kSptJ, kJSptK };

std::string to_string(Family f);
/// Accepts "spt", "spt_k", "Spt_j", "jspt_k". Throws std::invalid_argument otherwise.
Family parse_family(const std::string& s);

struct SptRequest {
  Family family = Family::kSpt;
  int j = 0;  // 0 = not given
  int k = 0;
  int n_max = 0;
  std::vector<Route> routes{Route::kGeneratingFunction};

  /// Throws std::invalid_argument on inconsistent parameters (for example,
  /// j given for spt, or missing k for spt_k).
  void validate() const;
};

/// values[r][n] for each requested route r and n = 0..n_max.
std::vector<std::vector<Int>> evaluate(const SptRequest& req);

}  // namespace sptj
