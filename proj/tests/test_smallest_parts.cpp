#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "sptj/partitions.hpp"
#include "sptj/series.hpp"
#include "sptj/smallest_parts.hpp"
#include "sptj/stats.hpp"

using namespace sptj;

namespace {

const Partition kFigure1({9, 8, 8, 8, 8, 6, 6, 5, 4, 4, 3});

// Every composition of k into exactly r positive parts.
void compositions(int k, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == 0) {
    if (k == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= k - (r - 1); ++first) {
    cur.push_back(first);
    compositions(k - first, r - 1, cur, out);
    cur.pop_back();
  }
}

// Chains t_1 < t_2 < ... < t_r with t_1 fixed, enumerated as subsets of the
// larger distinct values, each paired with every composition of k.
Int split_oracle(const std::map<int, int>& freq, int t1, int lead, int k) {
  std::vector<int> larger;
  for (const auto& [v, f] : freq)
    if (v > t1) larger.push_back(v);
  Int total = 0;
  const size_t subsets = size_t{1} << larger.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> chain;
    for (size_t b = 0; b < larger.size(); ++b)
      if (mask & (size_t{1} << b)) chain.push_back(larger[b]);
    const int r = 1 + static_cast<int>(chain.size());
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(k, r, cur, comps);
    for (const auto& m : comps) {
      Int term = binomial(Int(lead + m[0] - 1), 2 * m[0] - 1);
      for (size_t i = 0; i < chain.size(); ++i) term *= binomial(Int(freq.at(chain[i]) + m[i + 1]), 2 * m[i + 1]);
      total += term;
    }
  }
  return total;
}

std::map<int, int> freq_of(const Partition& p) {
  std::map<int, int> f;
  for (int x : p.parts()) ++f[x];
  return f;
}

Int w_k_oracle(const Partition& p, int k) {
  const auto f = freq_of(p);
  return split_oracle(f, p.smallest(), f.at(p.smallest()), k);
}

Int jw_k_oracle(const Partition& p, int j, int k) {
  std::vector<int> inc(p.parts().rbegin(), p.parts().rend());
  const auto sides = successive_lower_durfee(p).sides;
  const int len = p.length();
  int first = 0;
  int last = 0;
  if (j >= 2) {
    int below = 0;
    for (int s = 0; s < j - 2 && s < static_cast<int>(sides.size()); ++s) below += sides[static_cast<size_t>(s)];
    int through = below;
    if (j - 2 < static_cast<int>(sides.size())) through += sides[static_cast<size_t>(j) - 2];
    first = below + 1;
    last = std::min(through, len - 1);
  }
  const auto f = freq_of(p);
  Int total = 0;
  for (int i = first; i <= last; ++i) {
    const int t1 = inc[static_cast<size_t>(i)];
    const int mark = static_cast<int>(std::count(inc.begin() + i, inc.end(), t1));
    total += split_oracle(f, t1, mark, k);
  }
  return total;
}

}  // namespace

TEST_CASE("spt by weights, generating function and moments") {
  CHECK(spt_weight(1) == 1);
  CHECK(spt_weight(3) == 5);
  CHECK(spt_weight(4) == 10);
  CHECK_THROWS_AS(spt_weight(0), std::invalid_argument);
  const TruncSeries gf = gf_spt(30);
  const TruncSeries np = gf_np(30);
  const TruncSeries p = partition_series(30);
  CHECK(np[3] == 9);
  for (int n = 1; n <= 30; ++n) {
    CHECK(np[n] == n * p[n]);
    CHECK(gf[n] == spt_weight(n));
    CHECK(gf[n] == np[n] - exact_divide(moment(2, 2, n), Int(2)));
  }
}

TEST_CASE("weights W_j on the worked partitions") {
  CHECK(W_weight(kFigure1, 3) == 17);
  CHECK(W_weight(Partition({4, 4, 3, 3, 2}), 3) == 7);
  CHECK(W_weight(Partition({4, 4}), 3) == 3);
  CHECK(W_weight(Partition({3, 3, 2, 2, 2}), 1) == 3);
  CHECK(W_weight(Partition(), 2) == 0);
  // Every part is covered once j - 1 exceeds the number of squares.
  for_each_partition(9, [](const Partition& q) {
    int expected = 0;
    for (const auto& [v, f] : freq_of(q)) expected += f * (f + 1) / 2;
    CHECK(W_weight(q, 10) == expected);
  });
}

TEST_CASE("Spt_j: three routes agree") {
  for (int j = 1; j <= 4; ++j) {
    const auto gf = Spt_j_values(j, 25, Route::kGeneratingFunction);
    CHECK(gf == Spt_j_values(j, 25, Route::kWeight));
    CHECK(gf == Spt_j_values(j, 25, Route::kMoments));
    const TruncSeries lhs = gf_genn1_lhs(j, 25);
    const TruncSeries rhs = gf_genn1_rhs(j, 25);
    CHECK(lhs == rhs);
    for (int n = 1; n <= 25; ++n) CHECK(lhs[n] == gf[static_cast<size_t>(n)]);
  }
  CHECK(Spt_j_values(2, 50, Route::kGeneratingFunction) == Spt_j_values(2, 50, Route::kMoments));
  CHECK(Spt_j(2, 3, Route::kWeight) == Spt_j(2, 3, Route::kGeneratingFunction));
  CHECK(Spt_j(2, 3, Route::kWeight) == 8);
}

TEST_CASE("Spt_j special values and ordering") {
  const TruncSeries p = partition_series(20);
  const TruncSeries spt = gf_spt(20);
  CHECK(Spt_j(5, 4, Route::kGeneratingFunction) == 20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(Spt_j(1, n, Route::kGeneratingFunction) == spt[n]);
    CHECK(Spt_j(n + 1, n, Route::kGeneratingFunction) == n * p[n]);
  }
  for (int j = 1; j <= 5; ++j) {
    const auto a = Spt_j_values(j, 20, Route::kGeneratingFunction);
    const auto b = Spt_j_values(j + 1, 20, Route::kGeneratingFunction);
    for (int n = 1; n <= 20; ++n) {
      CHECK(a[static_cast<size_t>(n)] >= 0);
      CHECK(a[static_cast<size_t>(n)] <= b[static_cast<size_t>(n)]);
      CHECK(b[static_cast<size_t>(n)] <= n * p[n]);
    }
  }
  for (int j = 2; j <= 4; ++j) {
    for (int n = 1; n <= 30; ++n) {
      const Int lhs = Spt_j(j, n, Route::kGeneratingFunction) - Spt_j(j - 1, n, Route::kGeneratingFunction);
      CHECK(2 * lhs == moment(j, 2, n) - moment(j + 1, 2, n));
    }
  }
}

TEST_CASE("w_k and jw_k against brute-force chains") {
  CHECK(w_k_weight(Partition({1, 1}), 2) == 1);
  CHECK(w_k_weight(Partition({3, 1, 1}), 1) == 2);
  CHECK_THROWS_AS(w_k_weight(Partition(), 1), std::invalid_argument);
  for (int n = 1; n <= 12; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(w_k_weight(p, k) == w_k_oracle(p, k));
        CHECK(jw_k_weight(p, 1, k) == w_k_weight(p, k));
        for (int j = 2; j <= 3; ++j) CHECK(jw_k_weight(p, j, k) == jw_k_oracle(p, j, k));
      }
      CHECK(w_k_weight(p, 1) == frequency(p, p.smallest()));
    });
  }
  for (int n = 13; n <= 15; ++n)
    for_each_partition(n, [&](const Partition& p) { CHECK(jw_k_weight(p, 1, 2) == w_k_weight(p, 2)); });
  Int total = 0;
  for (const auto& p : enumerate(3)) total += w_k_weight(p, 2);
  CHECK(total == sym_mu(1, 4, 3) - sym_mu(2, 4, 3));
}

TEST_CASE("spt_k generating function") {
  CHECK(gf_sptk(1, 25) == gf_spt(25));
  for (int k = 1; k <= 3; ++k) {
    const TruncSeries gf = gf_sptk(k, 20);
    for (int n = 1; n <= 20; ++n) {
      Int total = 0;
      for_each_partition(n, [&](const Partition& p) { total += w_k_weight(p, k); });
      CHECK(gf[n] == total);
      CHECK(gf[n] == sym_mu(1, 2 * k, n) - sym_mu(2, 2 * k, n));
    }
  }
}

TEST_CASE("jspt_k: three routes and two generating-function forms") {
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const auto gf = jspt_k_values(j, k, 20, Route::kGeneratingFunction);
      CHECK(gf == jspt_k_values(j, k, 20, Route::kWeight));
      CHECK(gf == jspt_k_values(j, k, 20, Route::kMoments));
      const TruncSeries poch = gf_jsptk(j, k, 25, JSptForm::kPochhammer);
      CHECK(poch == gf_jsptk(j, k, 25, JSptForm::kGaussian));
      for (int n = 1; n <= 25; ++n) CHECK(poch[n] == sym_mu(j, 2 * k, n) - sym_mu(j + 1, 2 * k, n));
      // The lowest nonzero coefficient sits at n = j + k - 1 and equals 1.
      for (int n = 0; n < j + k - 1; ++n) CHECK(poch[n] == 0);
      CHECK(poch[j + k - 1] == 1);
    }
    CHECK(gf_jsptk(1, j, 20) == gf_sptk(j, 20));
  }
  for (int j = 2; j <= 4; ++j) {
    for (int n = 1; n <= 15; ++n) {
      CHECK(jspt_k(j, 1, n, Route::kWeight) ==
            Spt_j(j, n, Route::kGeneratingFunction) - Spt_j(j - 1, n, Route::kGeneratingFunction));
    }
  }
}

TEST_CASE("Bailey pair instance") {
  CHECK(verify_appbp(1, 1, 30));
  CHECK(verify_appbp(2, 2, 25));
  CHECK(verify_appbp(3, 1, 25));
  const SeriesPair s = appbp_sides(1, 1, 10);
  CHECK(s.lhs == s.rhs);
  CHECK_THROWS_AS(appbp_sides(0, 1, 10), std::invalid_argument);
}

TEST_CASE("Spt_j as layered and moment sums") {
  const TruncSeries p = partition_series(12);
  const TruncSeries spt = gf_spt(12);
  for (int n = 1; n <= 12; ++n) {
    CHECK(relation_sum(1, n) == spt[n]);
    CHECK(relation_sum(n + 1, n) == n * p[n]);
  }
  CHECK(relation_sum(2, 5) == Spt_j(2, 5, Route::kWeight));
  CHECK(relation_sum(2, 5) == Spt_j(2, 5, Route::kMoments));
}

TEST_CASE("requests") {
  CHECK(parse_family("spt") == Family::kSpt);
  CHECK(parse_family("spt_k") == Family::kSptK);
  CHECK(parse_family("Spt_j") == Family::kSptJ);
  CHECK(parse_family("jspt_k") == Family::kJSptK);
  CHECK_THROWS_AS(parse_family("SPT"), std::invalid_argument);
  CHECK(to_string(Family::kJSptK) == "jspt_k");
  CHECK(to_string(Route::kMoments) == "moments");

  SptRequest bad{Family::kSpt, 2, 0, 5, {Route::kGeneratingFunction}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  SptRequest missing_k{Family::kSptK, 0, 0, 5, {Route::kGeneratingFunction}};
  CHECK_THROWS_AS(missing_k.validate(), std::invalid_argument);
  SptRequest no_range{Family::kSptJ, 1, 0, 0, {Route::kGeneratingFunction}};
  CHECK_THROWS_AS(no_range.validate(), std::invalid_argument);

  SptRequest all{Family::kSpt, 0, 0, 6, {Route::kGeneratingFunction, Route::kWeight, Route::kMoments}};
  const auto v = evaluate(all);
  REQUIRE(v.size() == 3);
  const std::vector<Int> expected{0, 1, 3, 5, 10, 14, 26};
  for (const auto& col : v) CHECK(col == expected);

  SptRequest diff{Family::kJSptK, 2, 1, 3, {Route::kGeneratingFunction}};
  const auto d = evaluate(diff).front();
  for (int n = 1; n <= 3; ++n)
    CHECK(d[static_cast<size_t>(n)] ==
          Spt_j(2, n, Route::kGeneratingFunction) - Spt_j(1, n, Route::kGeneratingFunction));
}
