#include "sptj/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace sptj {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(const Int& c, int exp) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

Int LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  r *= Int(-1);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
  LaurentPoly r = a;
  r *= c;
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first, the usual way these are written.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(int order) {
  if (order < 0) throw std::invalid_argument("BiSeries: negative order");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

BiSeries BiSeries::one(int order) { return monomial(Int(1), 0, 0, order); }

BiSeries BiSeries::monomial(const Int& c, int z_exp, int q_exp, int order) {
  if (q_exp < 0) throw std::invalid_argument("BiSeries::monomial: negative q exponent");
  BiSeries s(order);
  if (q_exp <= order) s[q_exp].add_term(z_exp, c);
  return s;
}

BiSeries BiSeries::from_series(const TruncSeries& a) {
  BiSeries s(a.order());
  for (int n = 0; n <= a.order(); ++n) s[n].add_term(0, a[n]);
  return s;
}

const LaurentPoly& BiSeries::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("BiSeries::coefficient: index " + std::to_string(n) + " outside [0, " +
                            std::to_string(order()) + "]");
  }
  return coeffs_[static_cast<size_t>(n)];
}

BiSeries BiSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) throw std::invalid_argument("truncated: order out of range");
  BiSeries r(new_order);
  for (int n = 0; n <= new_order; ++n) r[n] = (*this)[n];
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& b) {
  if (b.order() < order()) coeffs_.resize(static_cast<size_t>(b.order()) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] += b[n];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& b) {
  if (b.order() < order()) coeffs_.resize(static_cast<size_t>(b.order()) + 1);
  for (int n = 0; n <= order(); ++n) (*this)[n] -= b[n];
  return *this;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries r = a;
  r += b;
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries r = a;
  r -= b;
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int order = std::min(a.order(), b.order());
  BiSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int k = 0; i + k <= order; ++k) {
      if (!b[k].is_zero()) r[i + k] += a[i] * b[k];
    }
  }
  return r;
}

BiSeries operator*(const TruncSeries& a, const BiSeries& b) {
  const int order = std::min(a.order(), b.order());
  BiSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; i + k <= order; ++k) {
      if (!b[k].is_zero()) r[i + k] += a[i] * b[k];
    }
  }
  return r;
}

BiSeries bi_inv_unit(const BiSeries& a) {
  const LaurentPoly& lead = a[0];
  if (lead.terms().size() != 1 || abs(lead.terms().begin()->second) != 1) {
    throw std::domain_error("bi_inv_unit: q^0 coefficient " + to_string(lead) + " is not a unit");
  }
  const int m = lead.terms().begin()->first;
  const Int sign = lead.terms().begin()->second;
  const LaurentPoly u = LaurentPoly::monomial(sign, -m);
  BiSeries b(a.order());
  b[0] = u;
  for (int n = 1; n <= a.order(); ++n) {
    LaurentPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (!a[k].is_zero() && !b[n - k].is_zero()) acc += a[k] * b[n - k];
    }
    b[n] = -(u * acc);
  }
  return b;
}

BiSeries divide_by_one_minus(const BiSeries& a, int z_exp, int q_exp) {
  if (q_exp < 1) throw std::invalid_argument("divide_by_one_minus: q exponent must be positive");
  BiSeries r = a;
  for (int n = q_exp; n <= r.order(); ++n) r[n] += r[n - q_exp].shifted(z_exp);
  return r;
}

BiSeries multiply_by_one_minus(const BiSeries& a, int z_exp, int q_exp) {
  if (q_exp < 0) throw std::invalid_argument("multiply_by_one_minus: negative q exponent");
  BiSeries r = a;
  for (int n = r.order(); n >= q_exp; --n) r[n] -= a[n - q_exp].shifted(z_exp);
  return r;
}

BiSeries z_pochhammer_finite(int z_exp, int a_exp, int n, int order) {
  if (a_exp < 0 || n < 0) throw std::invalid_argument("z_pochhammer_finite: negative argument");
  BiSeries r = BiSeries::one(order);
  for (int i = 0; i < n && a_exp + i <= order; ++i) r = multiply_by_one_minus(r, z_exp, a_exp + i);
  return r;
}

BiSeries z_pochhammer_inf(int z_exp, int a_exp, int order) {
  if (a_exp < 1) throw std::invalid_argument("z_pochhammer_inf: exponent must be positive");
  return z_pochhammer_finite(z_exp, a_exp, order, order);
}

// ---------------------------------------------------------------------------
// Generating functions

BiSeries build_crank_gf(int order) {
  // (q)_inf / ((zq)_inf (q/z)_inf): divide the z-free numerator by each factor.
  BiSeries r = BiSeries::from_series(pochhammer_inf(1, order));
  for (int e = 1; e <= order; ++e) {
    r = divide_by_one_minus(r, 1, e);
    r = divide_by_one_minus(r, -1, e);
  }
  return r;
}

BiSeries build_rank_gf(int order) { return build_jrank_gf(2, order, JRankForm::kNestedSum); }

namespace {

// q^{a^2} / ((zq)_a (q/z)_a), zero once a^2 exceeds the order.
BiSeries rank_kernel(int a, int order) {
  BiSeries r = BiSeries::monomial(Int(1), 0, a * a, order);
  if (a * a > order) return r;
  for (int i = 1; i <= a; ++i) {
    r = divide_by_one_minus(r, 1, i);
    r = divide_by_one_minus(r, -1, i);
  }
  return r;
}

BiSeries jrank_nested(int j, int order) {
  // chain[a] = sum_{b >= a} q^{b^2}/(q)_{b-a} * previous[b], starting from 1.
  // After j-2 rounds chain[a] is the univariate tail of the nested sum at n_1 = a.
  int top = 0;
  while ((top + 1) * (top + 1) <= order) ++top;
  const auto inv_poch = inverse_q_pochhammer_table(top + 1, order);
  std::vector<TruncSeries> chain(static_cast<size_t>(top) + 1, TruncSeries::one(order));
  for (int round = 0; round < j - 2; ++round) {
    std::vector<TruncSeries> next(chain.size(), TruncSeries(order));
    for (int a = 1; a <= top; ++a) {
      TruncSeries acc(order);
      for (int b = a; b <= top; ++b) {
        acc += shift(inv_poch[static_cast<size_t>(b - a)] * chain[static_cast<size_t>(b)], b * b);
      }
      next[static_cast<size_t>(a)] = std::move(acc);
    }
    chain = std::move(next);
  }
  BiSeries r(order);
  for (int a = 1; a <= top; ++a) r += chain[static_cast<size_t>(a)] * rank_kernel(a, order);
  return r;
}

BiSeries jrank_lambert(int j, int order) {
  // Positive n contributes (-1)^{n-1} z q^{n((2j-1)n+1)/2} (1-q^n)/(1-zq^n);
  // n = -m contributes (-1)^{m-1} q^{m((2j-1)m-1)/2} (1-q^m)/(1-q^m/z).
  BiSeries sum(order);
  for (int n = 1;; ++n) {
    const int e_neg = n * ((2 * j - 1) * n - 1) / 2;
    const int e_pos = n * ((2 * j - 1) * n + 1) / 2;
    if (e_neg > order) break;
    const Int sign = (n % 2 == 1) ? 1 : -1;
    BiSeries neg = BiSeries::monomial(sign, 0, e_neg, order);
    neg = divide_by_one_minus(multiply_by_one_minus(neg, 0, n), -1, n);
    sum += neg;
    if (e_pos <= order) {
      BiSeries pos = BiSeries::monomial(sign, 1, e_pos, order);
      pos = divide_by_one_minus(multiply_by_one_minus(pos, 0, n), 1, n);
      sum += pos;
    }
  }
  return partition_series(order) * sum;
}

}  // namespace

BiSeries build_jrank_gf(int j, int order, JRankForm form) {
  if (j < 1) throw std::invalid_argument("build_jrank_gf: j must be at least 1");
  if (form == JRankForm::kLambert) return jrank_lambert(j, order);
  if (j == 1) return build_crank_gf(order);
  return jrank_nested(j, order);
}

TruncSeries dz_at_1(const BiSeries& a, int t) {
  if (t < 0) throw std::invalid_argument("dz_at_1: negative derivative order");
  TruncSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    for (const auto& [m, c] : a[n].terms()) r[n] += c * falling_factorial(Int(m), t);
  }
  return r;
}

TruncSeries symmetrized_extract(const BiSeries& a, int k) {
  if (k < 1) throw std::invalid_argument("symmetrized_extract: k must be at least 1");
  TruncSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    for (const auto& [m, c] : a[n].terms()) r[n] += c * binomial(Int(m + k - 1), 2 * k);
  }
  return r;
}

Kn1Sides build_kn1_sides(int j, int order) {
  if (j < 1) throw std::invalid_argument("build_kn1_sides: j must be at least 1");
  const std::vector<TruncSeries> down = pochhammer_chain_sums(j - 1, 0, order);

  BiSeries lhs(order);
  BiSeries poch = BiSeries::one(order);  // (z)_b (1/z)_b
  for (int b = 0; b <= order; ++b) {
    BiSeries term(order);
    for (int n = b; n <= order; ++n) term[n] = poch[n - b];  // times q^b
    lhs += down[static_cast<size_t>(b)] * term;
    poch = multiply_by_one_minus(multiply_by_one_minus(poch, 1, b), -1, b);
  }

  // (1-z)(1-1/z) = 2 - z - 1/z.
  LaurentPoly two_minus;
  two_minus.add_term(0, Int(2));
  two_minus.add_term(1, Int(-1));
  two_minus.add_term(-1, Int(-1));

  BiSeries bracket = BiSeries::one(order);
  for (int n = 1;; ++n) {
    const int e = n * ((2 * j + 1) * n + 1) / 2;
    if (e > order) break;
    const LaurentPoly c = (n % 2 == 0 ? Int(1) : Int(-1)) * two_minus;
    BiSeries t(order);
    t[e] = c;
    if (e + n <= order) t[e + n] = c;  // (1 + q^n)
    t = divide_by_one_minus(t, 1, n);
    bracket += divide_by_one_minus(t, -1, n);
  }

  BiSeries prefactor = z_pochhammer_inf(1, 1, order) * z_pochhammer_inf(-1, 1, order);
  const TruncSeries p = partition_series(order);
  prefactor = (p * p) * prefactor;
  return Kn1Sides{std::move(lhs), prefactor * bracket};
}

}  // namespace sptj
