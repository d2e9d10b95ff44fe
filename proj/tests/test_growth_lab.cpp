#include <doctest.h>

#include <algorithm>
#include <vector>

#include "recring/fibonacci_types.hpp"
#include "recring/growth_lab.hpp"
#include "recring/monomial_engine.hpp"
#include "recring/recursion_system.hpp"

using namespace recring;

namespace {

const std::vector<unsigned long> kPublishedF = {
    2,   3,   4,   5,   7,   8,   9,   11,  13,  15,  16,  17,  19,  21,  24,
    27,  29,  31,  32,  33,  35,  37,  40,  43,  46,  50,  53,  56,  59,  61,
    63,  64,  65,  67,  69,  72,  75,  78,  82,  85,  89,  94,  98,  103, 107,
    110, 114, 117, 120, 123, 125, 127, 128, 129, 131, 133, 136, 139, 142, 146};

}  // namespace

TEST_CASE("published growth values, exact enumeration") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const auto rows = lab.growth_table(60);
  REQUIRE(rows.size() == 60);
  Int cumulative = 0;
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(rows[n - 1].f == kPublishedF[n - 1]);
    cumulative += rows[n - 1].f;
    CHECK(rows[n - 1].F == cumulative);
    if (n < 60) CHECK(rows[n - 1].g == rows[n].f - rows[n - 1].f);
  }
  CHECK(rows[1].F == 5);
}

TEST_CASE("fast table matches the exact table") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const auto exact = lab.growth_table(40);
  const auto fast = lab.growth_table_fast(40);
  REQUIRE(exact.size() == fast.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    CHECK(exact[i].f == fast[i].f);
    CHECK(exact[i].g == fast[i].g);
    CHECK(exact[i].F == fast[i].F);
  }
}

TEST_CASE("small layers are the expected word sets") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  CHECK(lab.enumerate_nonzero(1) == std::vector<Word>{"s", "t"});
  CHECK(lab.enumerate_nonzero(2) == std::vector<Word>{"st", "ts", "tt"});
  for (const Word& w : lab.enumerate_nonzero(3)) CHECK(w != "ttt");
  CHECK(lab.boundary_set(1) == std::vector<Word>{"t"});
  // (t)sigma = ts lies in W(2).
  const auto w2 = lab.boundary_set(2);
  CHECK(std::find(w2.begin(), w2.end(), "ts") != w2.end());
}

TEST_CASE("boundary generation agrees with boundary filtering") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const auto buckets = lab.boundary_generate(25);
  for (unsigned n = 1; n <= 25; ++n) {
    const auto filtered = lab.boundary_set(n);
    const auto it = buckets.find(n);
    if (it == buckets.end())
      CHECK(filtered.empty());
    else
      CHECK(filtered == it->second);
  }
}

TEST_CASE("boundary size equals the growth difference for n <= 30") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const auto rows = lab.growth_table(31);
  for (unsigned n = 1; n <= 30; ++n)
    CHECK(Int(static_cast<unsigned long>(lab.boundary_set(n).size())) ==
          rows[n].f - rows[n - 1].f);
}

TEST_CASE("landmark identity f(a_{n+1} - 2) = 2^{n-2}") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const auto rows = lab.growth_table_fast(142);  // a_12 - 2
  for (unsigned n = 4; n <= 11; ++n) {
    const unsigned long len = Int(fib(n + 1) - 2).get_ui();
    Int expected = 1;
    expected <<= (n - 2);
    CHECK(rows[len - 1].f == expected);
  }
  // Monotonicity over the whole range.
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].f > rows[i - 1].f);
}

TEST_CASE("avoid-factor counting") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);

  // Avoiding an already-zero factor changes nothing.
  const auto rows = lab.growth_table(12);
  const AvoidReport ss = lab.avoid_factor_count("ss", 12);
  for (unsigned n = 1; n <= 12; ++n) CHECK(ss.counts[n - 1] == rows[n - 1].f);
  CHECK(!ss.vanish_length.has_value());

  // Avoiding t leaves only s, and s^2 = 0.
  const AvoidReport t = lab.avoid_factor_count("t", 6);
  CHECK(t.counts[0] == 1);
  CHECK(t.counts[1] == 0);
  CHECK(t.vanish_length == 1u);

  // The (tst)^3 avoiders die out: the quotient has finite rank.
  const AvoidReport q = lab.avoid_factor_count("tsttsttst", 40);
  REQUIRE(q.vanish_length.has_value());
  CHECK(*q.vanish_length < 40);
  MESSAGE("(tst)^3 avoiders vanish beyond length ", *q.vanish_length);
}

TEST_CASE("growth exponent estimate at desk scale") {
  MonomialEngine engine(builtin_system("R2"));
  GrowthLab lab(engine);
  const GkReport report = lab.gk_estimate(500, 401);
  CHECK(report.band_ok);
  CHECK(report.c_target == doctest::Approx(1.4404).epsilon(1e-3));
  CHECK(report.gk_target == doctest::Approx(2.4404).epsilon(1e-3));
  CHECK(report.fit_lo == 100);
  CHECK(report.fit_hi == 500);
  CHECK(report.fitted_slope > 2.2);
  CHECK(report.fitted_slope < 2.6);
}
