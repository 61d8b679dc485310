#include "sptj/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sptj {

Int exact_divide(const Int& a, const Int& d) {
  if (d == 0) throw std::domain_error("exact_divide: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw std::domain_error("exact_divide: " + a.get_str() + " is not divisible by " + d.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int falling_factorial(const Int& x, int len) {
  if (len < 0) throw std::invalid_argument("falling_factorial: negative length");
  Int r = 1;
  for (int i = 0; i < len; ++i) r *= x - i;
  return r;
}

Int binomial(const Int& x, int k) {
  if (k < 0) return 0;
  return exact_divide(falling_factorial(x, k), factorial(k));
}

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Int(0));
}

TruncSeries::TruncSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient vector");
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(const Int& c, int exp, int order) {
  if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
  TruncSeries s(order);
  if (exp <= order) s[exp] = c;
  return s;
}

const Int& TruncSeries::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("coefficient: index " + std::to_string(n) + " outside [0, " +
                            std::to_string(order()) + "]");
  }
  return coeffs_[static_cast<size_t>(n)];
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) throw std::invalid_argument("truncated: order out of range");
  return TruncSeries(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& b) {
  if (b.order() < order()) coeffs_.resize(static_cast<size_t>(b.order()) + 1);
  for (int i = 0; i <= order(); ++i) (*this)[i] += b[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& b) {
  if (b.order() < order()) coeffs_.resize(static_cast<size_t>(b.order()) + 1);
  for (int i = 0; i <= order(); ++i) (*this)[i] -= b[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  r += b;
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  r -= b;
  return r;
}

TruncSeries operator-(const TruncSeries& a) {
  TruncSeries r = a;
  for (int i = 0; i <= r.order(); ++i) r[i] = -r[i];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; i + k <= n; ++k) {
      if (b[k] != 0) r[i + k] += a[i] * b[k];
    }
  }
  return r;
}

TruncSeries operator*(const Int& c, const TruncSeries& a) {
  TruncSeries r = a;
  r *= c;
  return r;
}

TruncSeries inv_unit(const TruncSeries& a) {
  const Int& c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error("inv_unit: constant term " + c0.get_str() + " is not a unit");
  }
  const int n = a.order();
  TruncSeries b(n);
  b[0] = c0;  // 1/c0 == c0 for units
  Int acc;
  for (int i = 1; i <= n; ++i) {
    acc = 0;
    for (int k = 1; k <= i; ++k) {
      if (a[k] != 0) acc += a[k] * b[i - k];
    }
    b[i] = -acc * c0;
  }
  return b;
}

TruncSeries shift(const TruncSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("shift: negative exponent");
  TruncSeries r(a.order());
  for (int i = 0; i + e <= a.order(); ++i) r[i + e] = a[i];
  return r;
}

TruncSeries divide_by_one_minus_q(const TruncSeries& a, int e, int power) {
  if (e < 1) throw std::invalid_argument("divide_by_one_minus_q: exponent must be positive");
  TruncSeries r = a;
  for (int p = 0; p < power; ++p) {
    for (int i = e; i <= r.order(); ++i) r[i] += r[i - e];
  }
  return r;
}

TruncSeries multiply_by_one_minus_q(const TruncSeries& a, int e, int power) {
  if (e < 1) throw std::invalid_argument("multiply_by_one_minus_q: exponent must be positive");
  TruncSeries r = a;
  for (int p = 0; p < power; ++p) {
    for (int i = r.order(); i >= e; --i) r[i] -= r[i - e];
  }
  return r;
}

TruncSeries pochhammer_finite(int a_exp, int n, int order) {
  if (a_exp < 1) throw std::invalid_argument("pochhammer_finite: exponent must be positive");
  if (n < 0) throw std::invalid_argument("pochhammer_finite: negative length");
  TruncSeries r = TruncSeries::one(order);
  for (int i = 0; i < n && a_exp + i <= order; ++i) r = multiply_by_one_minus_q(r, a_exp + i);
  return r;
}

TruncSeries pochhammer_inf(int a_exp, int order) {
  if (a_exp < 1) throw std::invalid_argument("pochhammer_inf: exponent must be positive");
  TruncSeries r = TruncSeries::one(order);
  for (int e = a_exp; e <= order; ++e) r = multiply_by_one_minus_q(r, e);
  return r;
}

TruncSeries partition_series(int order) {
  TruncSeries r = TruncSeries::one(order);
  for (int e = 1; e <= order; ++e) r = divide_by_one_minus_q(r, e);
  return r;
}

std::vector<TruncSeries> q_pochhammer_table(int count, int order) {
  std::vector<TruncSeries> t;
  t.reserve(static_cast<size_t>(count));
  TruncSeries cur = TruncSeries::one(order);
  for (int i = 0; i < count; ++i) {
    t.push_back(cur);
    if (i + 1 <= order) cur = multiply_by_one_minus_q(cur, i + 1);
  }
  return t;
}

std::vector<TruncSeries> inverse_q_pochhammer_table(int count, int order) {
  std::vector<TruncSeries> t;
  t.reserve(static_cast<size_t>(count));
  TruncSeries cur = TruncSeries::one(order);
  for (int i = 0; i < count; ++i) {
    t.push_back(cur);
    if (i + 1 <= order) cur = divide_by_one_minus_q(cur, i + 1);
  }
  return t;
}

TruncSeries gauss_binomial(int n, int m, int order) {
  if (m < 0 || m > n || n < 0) return TruncSeries(order);
  // row[k] holds [i, k] for the current i; [i, k] = [i-1, k-1] + q^k [i-1, k].
  std::vector<TruncSeries> row(static_cast<size_t>(m) + 1, TruncSeries(order));
  row[0] = TruncSeries::one(order);
  for (int i = 1; i <= n; ++i) {
    for (int k = std::min(i, m); k >= 1; --k) {
      TruncSeries next = row[static_cast<size_t>(k) - 1];
      if (k < i) next += shift(row[static_cast<size_t>(k)], k);
      row[static_cast<size_t>(k)] = std::move(next);
    }
  }
  return row[static_cast<size_t>(m)];
}

std::vector<std::vector<TruncSeries>> gauss_binomial_table(int max_n, int order) {
  std::vector<std::vector<TruncSeries>> t(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = t[static_cast<size_t>(n)];
    row.reserve(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      if (m == 0 || m == n) {
        row.push_back(TruncSeries::one(order));
        continue;
      }
      const auto& prev = t[static_cast<size_t>(n) - 1];
      row.push_back(prev[static_cast<size_t>(m) - 1] + shift(prev[static_cast<size_t>(m)], m));
    }
  }
  return t;
}

std::vector<TruncSeries> pochhammer_chain_sums(int depth, int lowest, int order) {
  if (depth < 0 || lowest < 0) throw std::invalid_argument("pochhammer_chain_sums: negative argument");
  const auto inv_poch = inverse_q_pochhammer_table(order + 1, order);
  std::vector<TruncSeries> cur = inv_poch;
  for (int round = 0; round < depth; ++round) {
    std::vector<TruncSeries> next;
    next.reserve(cur.size());
    for (int b = 0; b <= order; ++b) {
      TruncSeries acc(order);
      for (int a = lowest; a <= b && a * a <= order; ++a) {
        acc += shift(inv_poch[static_cast<size_t>(b - a)] * cur[static_cast<size_t>(a)], a * a);
      }
      next.push_back(std::move(acc));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<TruncSeries> gaussian_chain_sums(int depth, int lowest, int order) {
  if (depth < 0 || lowest < 0) throw std::invalid_argument("gaussian_chain_sums: negative argument");
  std::vector<TruncSeries> cur(static_cast<size_t>(order) + 1, TruncSeries::one(order));
  if (depth == 0) return cur;
  const auto binom = gauss_binomial_table(order, order);
  for (int round = 0; round < depth; ++round) {
    std::vector<TruncSeries> next;
    next.reserve(cur.size());
    for (int b = 0; b <= order; ++b) {
      TruncSeries acc(order);
      for (int a = lowest; a <= b && a * a <= order; ++a) {
        acc += shift(binom[static_cast<size_t>(b)][static_cast<size_t>(a)] * cur[static_cast<size_t>(a)], a * a);
      }
      next.push_back(std::move(acc));
    }
    cur = std::move(next);
  }
  return cur;
}

std::string to_string(const TruncSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= a.order(); ++i) {
    const Int& c = a[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "q";
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << a.order() + 1 << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& a) { return os << to_string(a); }

}  // namespace sptj
