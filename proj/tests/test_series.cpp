#include <random>
#include <vector>

#include "doctest.h"
#include "sptj/series.hpp"

using namespace sptj;

namespace {

using Poly = std::vector<long>;

TruncSeries from(const Poly& c, int order) {
  TruncSeries s(order);
  for (size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s[static_cast<int>(i)] = c[i];
  return s;
}

Poly naive_mul(const Poly& a, const Poly& b, int order) {
  Poly c(static_cast<size_t>(order) + 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (static_cast<int>(i + j) <= order) c[i + j] += a[i] * b[j];
  return c;
}

// Counts partitions of n into parts at most m by plain recursion.
long count_partitions(int n, int m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  long total = 0;
  for (int part = std::min(n, m); part >= 1; --part) total += count_partitions(n - part, part);
  return total;
}

Poly product_of_factors(const std::vector<int>& exps, int order) {
  Poly acc{1};
  acc.resize(static_cast<size_t>(order) + 1, 0);
  for (int e : exps) {
    Poly f(static_cast<size_t>(e) + 1, 0);
    f[0] = 1;
    f[static_cast<size_t>(e)] -= 1;
    acc = naive_mul(acc, f, order);
  }
  return acc;
}

// Exact polynomial long division; fails the test on a nonzero remainder.
Poly poly_div(Poly num, Poly den) {
  while (den.back() == 0) den.pop_back();
  const int dd = static_cast<int>(den.size()) - 1;
  Poly q(num.size(), 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    const long c = num[static_cast<size_t>(i)] / den.back();
    q[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (long r : num) CHECK(r == 0);
  return q;
}

Poly gauss_oracle(int n, int m) {
  std::vector<int> top, bottom;
  for (int i = n - m + 1; i <= n; ++i) top.push_back(i);
  for (int i = 1; i <= m; ++i) bottom.push_back(i);
  const int deg = n * (n + 1) / 2 + 1;
  return poly_div(product_of_factors(top, deg), product_of_factors(bottom, deg));
}

}  // namespace

TEST_CASE("addition, subtraction and truncation to the smaller order") {
  const TruncSeries a = from({1, 1}, 3);
  const TruncSeries b = from({1, -1}, 2);
  const TruncSeries s = a + b;
  CHECK(s.order() == 2);
  CHECK(s == from({2}, 2));
  CHECK(a + TruncSeries::zero(3) == a);
  CHECK(from({1, -1, -1, 1}, 5) - from({1, -1}, 5) == from({0, 0, -1, 1}, 5));
  CHECK(-a == from({-1, -1}, 3));
}

TEST_CASE("multiplication matches naive convolution") {
  CHECK(from({1, -1}, 6) * from({1, 0, -1}, 6) == from({1, -1, -1, 1}, 6));
  CHECK(from({3, 1, 4}, 6) * TruncSeries::one(6) == from({3, 1, 4}, 6));

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + trial % 12;
    Poly a(static_cast<size_t>(order) + 1), b(a.size()), c(a.size());
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = coef(rng);
    const TruncSeries A = from(a, order), B = from(b, order), C = from(c, order);
    CHECK(A * B == from(naive_mul(a, b, order), order));
    CHECK(A * B == B * A);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
    CHECK(A + B == B + A);
  }
}

TEST_CASE("inverse of units") {
  CHECK(inv_unit(from({1, -1}, 5)) == from({1, 1, 1, 1, 1, 1}, 5));
  CHECK(inv_unit(TruncSeries::one(4)) == TruncSeries::one(4));
  CHECK_THROWS_AS(inv_unit(from({2, 1}, 3)), std::domain_error);

  const TruncSeries p = inv_unit(pochhammer_inf(1, 10));
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(p[n] == expected[n]);

  const TruncSeries u = from({-1, 4, 0, -7, 2}, 8);
  CHECK(u * inv_unit(u) == TruncSeries::one(8));
  CHECK(partition_series(6) * pochhammer_inf(1, 6) == TruncSeries::one(6));
}

TEST_CASE("finite and infinite q-Pochhammer symbols") {
  CHECK(pochhammer_finite(1, 2, 6) == from({1, -1, -1, 1}, 6));
  CHECK(pochhammer_finite(1, 0, 6) == TruncSeries::one(6));
  CHECK(pochhammer_finite(2, 3, 10) == from({1, 0, -1, -1, -1, 1, 1, 1, 0, -1}, 10));
  CHECK(pochhammer_inf(1, 12) == from({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 12));
  CHECK(pochhammer_inf(7, 6) == TruncSeries::one(6));
  CHECK(pochhammer_inf(2, 6) == from(product_of_factors({2, 3, 4, 5, 6}, 6), 6));
  CHECK(pochhammer_inf(2, 6) == from({1, 0, -1, -1, -1, 0, 0}, 6));
  CHECK_THROWS_AS(pochhammer_inf(0, 6), std::invalid_argument);
}

TEST_CASE("Euler pentagonal pattern up to order 200") {
  const int order = 200;
  Poly expected(static_cast<size_t>(order) + 1, 0);
  expected[0] = 1;
  for (int k = 1;; ++k) {
    const int e1 = k * (3 * k - 1) / 2;
    const int e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    const long sign = (k % 2 == 1) ? -1 : 1;
    expected[static_cast<size_t>(e1)] += sign;
    if (e2 <= order) expected[static_cast<size_t>(e2)] += sign;
  }
  CHECK(pochhammer_inf(1, order) == from(expected, order));
}

TEST_CASE("partition numbers agree with recursive counting") {
  const TruncSeries p = partition_series(40);
  for (int n = 0; n <= 40; ++n) CHECK(p[n] == count_partitions(n, n));
  CHECK(p.coefficient(4) == 5);
  CHECK_THROWS_AS(p.coefficient(41), std::out_of_range);
  CHECK_THROWS_AS(p.coefficient(-1), std::out_of_range);
}

TEST_CASE("Gaussian binomials") {
  CHECK(gauss_binomial(4, 2, 10) == from({1, 1, 2, 1, 1}, 10));
  CHECK(gauss_binomial(7, 0, 10) == TruncSeries::one(10));
  CHECK(gauss_binomial(3, 5, 10).is_zero());
  CHECK(gauss_binomial(3, -1, 10).is_zero());
  for (int n = 0; n <= 9; ++n) {
    for (int m = 0; m <= n; ++m) {
      const int order = 50;
      const TruncSeries g = gauss_binomial(n, m, order);
      CHECK(g == from(gauss_oracle(n, m), order));
      CHECK(g == gauss_binomial(n, n - m, order));
      int degree = 0;
      for (int e = 0; e <= order; ++e) {
        CHECK(g[e] >= 0);
        if (g[e] != 0) degree = e;
      }
      CHECK(degree == m * (n - m));
    }
  }
  const auto table = gauss_binomial_table(6, 20);
  CHECK(table[6][3] == gauss_binomial(6, 3, 20));
}

TEST_CASE("exact integer helpers") {
  CHECK(factorial(6) == 720);
  CHECK(binomial(Int(5), 2) == 10);
  CHECK(binomial(Int(-1), 2) == 1);
  CHECK(binomial(Int(-3), 3) == -10);
  CHECK(binomial(Int(2), 3) == 0);
  CHECK(falling_factorial(Int(5), 3) == 60);
  CHECK(exact_divide(Int(42), Int(6)) == 7);
  CHECK_THROWS(exact_divide(Int(7), Int(2)));
}

TEST_CASE("division by (1 - q^e) and shifts") {
  const TruncSeries a = divide_by_one_minus_q(TruncSeries::one(6), 2, 2);
  CHECK(a == from({1, 0, 2, 0, 3, 0, 4}, 6));
  CHECK(multiply_by_one_minus_q(a, 2, 2) == TruncSeries::one(6));
  CHECK(shift(from({1, 2}, 4), 3) == from({0, 0, 0, 1, 2}, 4));
}

TEST_CASE("printing") {
  CHECK(to_string(from({1, -1, 0, 2}, 3)) == "1 - q + 2*q^3 + O(q^4)");
}
