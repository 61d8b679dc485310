// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sptj/laurent.hpp"
#include "sptj/partitions.hpp"
#include "sptj/series.hpp"
#include "sptj/smallest_parts.hpp"
#include "sptj/stats.hpp"
#include "sptj/verify.hpp"

using namespace sptj;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

void require_identity(Outcome& o, const std::string& name, VerifyParams params) {
  const VerifyReport rep = run_identity(name, params);
  if (auto i = rep.first_failure()) {
    const VerifyRow& r = rep.rows[*i];
    std::ostringstream s;
    s << name << " (j=" << rep.params.j << ", k=" << rep.params.k << ", r=" << rep.params.r << ") at n=" << r.n
      << ": " << r.lhs << " vs " << r.rhs;
    o.fail(s.str());
  }
}

Outcome sptpn() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  require_identity(o, "sptpn", {0, 0, 0, 60});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << secs << " s";
  if (secs >= 10.0) o.fail("took " + s.str());
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome genn1() {
  Outcome o;
  for (int j = 1; j <= 3; ++j) require_identity(o, "genn1", {j, 0, 0, 40});
  if (!(gf_genn1_lhs(1, 40) == gf_spt(40))) o.fail("j=1 left side differs from the spt generating function");
  if (!(gf_genn1_rhs(1, 40) == gf_spt(40))) o.fail("j=1 right side differs from the spt generating function");
  return o;
}

Outcome weights() {
  Outcome o;
  if (W_weight(Partition({9, 8, 8, 8, 8, 6, 6, 5, 4, 4, 3}), 3) != 17) o.fail("W_3 of 9+8+8+8+8+6+6+5+4+4+3");
  if (W_weight(Partition({4, 4, 3, 3, 2}), 3) != 7) o.fail("W_3 of 4+4+3+3+2");
  if (W_weight(Partition({4, 4}), 3) != 3) o.fail("W_3 of 4+4");
  for (int j = 1; j <= 4; ++j) {
    const auto gf = Spt_j_values(j, 25, Route::kGeneratingFunction);
    const auto w = Spt_j_values(j, 25, Route::kWeight);
    for (int n = 1; n <= 25; ++n) {
      if (gf[static_cast<size_t>(n)] != w[static_cast<size_t>(n)]) {
        o.fail("j=" + std::to_string(j) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome sptpng() {
  Outcome o;
  for (int j = 1; j <= 5; ++j) require_identity(o, "sptpng", {j, 0, 0, 40});
  require_identity(o, "jgn", {0, 0, 0, 40});
  const TruncSeries p = partition_series(4);
  for (int j = 2; j <= 5; ++j) {
    for (int n = 1; n < j; ++n) {
      if (Spt_j(j, n, Route::kMoments) != n * p[n]) o.fail("moments j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome congruences() {
  Outcome o;
  const int bound = 30;
  const TruncSeries p = partition_series(bound);
  int cases = 0;
  for (const auto& [ell, m] : std::vector<std::pair<int, int>>{{5, 4}, {7, 5}, {11, 6}}) {
    for (int a = m; a <= bound; a += ell) {
      if (p[a] % ell != 0) o.fail("p(" + std::to_string(a) + ")");
      for (int j = a + 1; j <= bound + 1; ++j) {
        ++cases;
        const Int v = Spt_j(j, a, Route::kGeneratingFunction);
        if (v % ell != 0) o.fail("Spt_" + std::to_string(j) + "(" + std::to_string(a) + ") = " + v.get_str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome kn1() {
  Outcome o;
  for (int j = 1; j <= 3; ++j) require_identity(o, "kn1", {j, 0, 0, 30});
  return o;
}

Outcome genjmu2k() {
  Outcome o;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) require_identity(o, "genjmu2k", {j, k, 0, 30});
  return o;
}

Outcome appbp() {
  Outcome o;
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 2; ++k) require_identity(o, "appbp", {0, k, r, 25});
  return o;
}

Outcome jsptk() {
  Outcome o;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      require_identity(o, "gtjsptk", {j, k, 0, 20});
      const auto gf = jspt_k_values(j, k, 20, Route::kGeneratingFunction);
      const auto w = jspt_k_values(j, k, 20, Route::kWeight);
      const auto mo = jspt_k_values(j, k, 20, Route::kMoments);
      if (gf != w || gf != mo) o.fail("routes differ at j=" + std::to_string(j) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome moments() {
  Outcome o;
  std::string thresholds;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      require_identity(o, "relos", {j, k, 0, 30});
      require_identity(o, "genineq", {j, k, 0, 40});
      const auto t = strictness_threshold(j, k, 40);
      if (!t) {
        o.fail("no strict range for j=" + std::to_string(j) + " k=" + std::to_string(k));
        continue;
      }
      thresholds += (thresholds.empty() ? "" : " ") + std::to_string(j) + std::to_string(k) + ":" + std::to_string(*t);
    }
  }
  if (o.ok) o.detail = "strict from n0 (jk:n0) " + thresholds;
  return o;
}

Outcome lemmas() {
  Outcome o;
  require_identity(o, "lemma31", {0, 0, 0, 25});
  require_identity(o, "lemma32", {0, 0, 0, 25});
  return o;
}

Outcome rk_forms() {
  Outcome o;
  for (int j = 2; j <= 4; ++j) require_identity(o, "Rk-forms", {j, 0, 0, 25});
  const VerifyReport fd = run_identity("fdyson", {0, 0, 0, 40});
  if (!fd.passed()) o.fail("n p(n) = M_2(n)/2 fails at n=" + std::to_string(fd.rows[*fd.first_failure()].n));
  const CountTable comb(1, 1, TableSource::kCombinatorial);
  const bool holds_at_1 = 2 * partition_series(1)[1] == comb.moment(2, 1);
  if (holds_at_1) o.fail("n p(n) = M_2(n)/2 unexpectedly holds at n=1 for the combinatorial crank");
  if (o.ok) o.detail = "n=1 fails by the crank of (1): M_2(1) = " + comb.moment(2, 1).get_str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"spt(n) = n p(n) - N_2(n)/2 = gf coefficient, n <= 60", sptpn},
      {"Spt_j generating function, both sides to order 40, j <= 3", genn1},
      {"sum of W_j equals Spt_j gf, n <= 25, j <= 4, worked weights 17 7 3", weights},
      {"Spt_j(n) = n p(n) - _{j+1}N_2(n)/2, n <= 40, j <= 5, and n p(n) for j > n", sptpng},
      {"Spt_j(ln+m) = 0 mod l for (5,4) (7,5) (11,6), ln+m <= 30, j > ln+m", congruences},
      {"bivariate nested sum = product side to order 30, j <= 3", kn1},
      {"symmetrized moment extraction = closed form = table, j,k <= 3, n <= 30", genjmu2k},
      {"Bailey pair instance to order 25, r <= 3, k <= 2", appbp},
      {"_jspt_k three routes and both gf forms, j,k <= 3, n <= 20", jsptk},
      {"_jN_2k via S* route, j,k <= 3, n <= 30; differences nonnegative to n = 40", moments},
      {"lower-Durfee lemmas exhaustive for n <= 25", lemmas},
      {"three forms of R_j to order 25, j = 2..4; n p(n) = M_2(n)/2 for 2 <= n <= 40", rk_forms},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu  %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : "  [", o.detail.empty() ? "" : (o.detail + "]").c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
