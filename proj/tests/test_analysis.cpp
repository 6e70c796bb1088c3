#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "nse3d/bounds.hpp"
#include "nse3d/comparison.hpp"
#include "nse3d/cubic.hpp"
#include "nse3d/errors.hpp"
#include "nse3d/restrictions.hpp"
#include "nse3d/verdict.hpp"

using namespace nse3d;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

BoundsReport bounds_of(double u0_l2, double u0_h1, double f_hm1, double f_l2, double nu = 1.0,
                       const ConstantsSet& c = {}) {
  return compute_bounds({u0_l2, u0_h1, f_hm1, f_l2}, nu, c);
}

ConstantsSet consts(double c0, double c4) {
  ConstantsSet c;
  c.c0 = c0;
  c.c4 = c4;
  return c;
}

}  // namespace

TEST(Bounds, Examples) {
  const BoundsReport a = bounds_of(1.0, 2.0, 0.0, 0.0);
  EXPECT_EQ(a.K0, 1.0);
  EXPECT_EQ(a.K0_tilde, 1.0);
  EXPECT_EQ(a.F_short, 0.0);
  EXPECT_EQ(a.F_full, 0.0);

  const BoundsReport b = bounds_of(0.0, 0.0, 4.0, 0.0);
  EXPECT_DOUBLE_EQ(b.K0, 4.0);
  EXPECT_DOUBLE_EQ(b.K0_tilde, 8.0);

  const BoundsReport c = bounds_of(0.0, 0.0, 0.0, 8.0, 2.0);
  EXPECT_NEAR(c.F_short, std::cbrt(32.0), 1e-14);
  EXPECT_NEAR(c.F_short, 3.1748, 1e-4);
  EXPECT_NEAR(c.F_full, std::cbrt(64.0), 1e-14);
  // K1 = |grad u0|^2 + 2 c0 |f|^2 / nu^2, K1~ with 10 c0
  EXPECT_DOUBLE_EQ(c.K1, 4.0);
  EXPECT_DOUBLE_EQ(c.K1_tilde, 20.0);
  EXPECT_DOUBLE_EQ(c.K_step(1.0, ConstantsSet{}), 1.0 + 40.0);
}

TEST(Bounds, HorizonsOrdered) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.01, 3.0);
  for (int i = 0; i < 100; ++i) {
    const ConstantsSet c = consts(1.0, U(rng));
    const HorizonReport h = compute_horizons(bounds_of(U(rng), U(rng), U(rng), U(rng), U(rng), c), c);
    EXPECT_LE(h.t_star_semi, h.t_star_continuous);
    EXPECT_LE(h.t_star_continuous, h.blowup_time);
    EXPECT_LE(h.t_f_star, h.t_star_semi);
  }
  const HorizonReport z = compute_horizons(bounds_of(0, 0, 0, 0), {});
  EXPECT_EQ(z.t_star_semi, kInf);
  EXPECT_EQ(z.blowup_time, kInf);
}

TEST(Smallness, Examples) {
  const ConstantsSet c;
  const BoundsReport zero = bounds_of(0, 0, 0, 0);
  for (auto v : {SmallnessVariant::continuous_K0K1, SmallnessVariant::continuous_K1,
                 SmallnessVariant::semi, SmallnessVariant::full}) {
    const Check ch = smallness_check(zero, c, 0.1, v);
    EXPECT_TRUE(ch.ok);
    EXPECT_EQ(ch.slack, ch.rhs);
  }
  // K0 = 1, K1 = 2 -> K0 K1 = 2 > c2 nu^4 = 1
  const Check bad = smallness_check(bounds_of(1.0, 2.0, 0, 0), c, 0.0,
                                    SmallnessVariant::continuous_K0K1);
  EXPECT_FALSE(bad.ok);
  EXPECT_DOUBLE_EQ(bad.slack, -1.0);

  const Check full = smallness_check(bounds_of(0, 0.25, 0, 0), c, 0.0, SmallnessVariant::full);
  EXPECT_TRUE(full.ok);
  EXPECT_DOUBLE_EQ(full.rhs, 0.5);
  EXPECT_DOUBLE_EQ(full.slack, 0.25);
}

TEST(Cubic, ExactFactorization) {
  // c4 k / nu^3 = 1 and 1 + nu k / (2 c0) = 3/2: G = y^3 - 1.5 y + 0.5
  const CubicAnalysis r = cubic_from_x(0.5, 1.0, 1.0, consts(1.0, 1.0));
  ASSERT_TRUE(r.has_positive_roots);
  EXPECT_NEAR(r.y1, (std::sqrt(3.0) - 1.0) / 2.0, 1e-12);
  EXPECT_NEAR(r.y2, 1.0, 1e-12);
  EXPECT_NEAR(r.y0, -(1.0 + std::sqrt(3.0)) / 2.0, 1e-12);
  EXPECT_NEAR(r.y_plus, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(r.y_minus, -std::sqrt(0.5), 1e-15);
  EXPECT_FALSE(r.degenerate);
}

TEST(Cubic, DegenerateAtZero) {
  const double nu = 1.0, k = 0.01;
  const CubicAnalysis r = cubic_from_x(0.0, nu, k, {});
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.y1, 0.0);
  EXPECT_NEAR(r.y2, std::sqrt(r.linear_coeff * nu * nu * nu / k), 1e-12);
  EXPECT_NEAR(r.y0, -r.y2, 1e-12);
}

TEST(Cubic, PositiveRootsExactlyWhenMinimumIsNegative) {
  const ConstantsSet c;
  const double nu = 1.0, k = 0.05;
  const CubicAnalysis probe = cubic_from_x(0.0, nu, k, c);
  const double threshold = 2.0 / 3.0 * probe.linear_coeff * probe.y_plus;
  const CubicAnalysis above = cubic_from_x(threshold * (1.0 + 1e-12), nu, k, c);
  EXPECT_FALSE(above.has_positive_roots);
  EXPECT_GT(above.g_at_y_plus, 0.0);
  EXPECT_TRUE(std::isnan(above.y1));
  const CubicAnalysis below = cubic_from_x(threshold * (1.0 - 1e-9), nu, k, c);
  EXPECT_TRUE(below.has_positive_roots);
  EXPECT_LT(below.g_at_y_plus, 0.0);
}

TEST(Cubic, Dtf1IsSufficient) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double nu = 0.2 + U(rng), k = 1e-3 + U(rng);
    const CubicAnalysis r = cubic_from_x(3.0 * U(rng), nu, k, {});
    if (r.dtf1) {
      EXPECT_TRUE(r.has_positive_roots);
    }
  }
}

TEST(Cubic, RootResidualsAndOrdering) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const double nu = 0.1 + 2.0 * U(rng), k = std::pow(10.0, -4.0 + 4.0 * U(rng));
    const ConstantsSet c = consts(0.5 + U(rng), 0.1 + 2.0 * U(rng));
    const CubicAnalysis probe = cubic_from_x(0.0, nu, k, c);
    const double x = U(rng) * 2.0 / 3.0 * probe.linear_coeff * probe.y_plus;
    const CubicAnalysis r = cubic_from_x(x, nu, k, c);
    ASSERT_TRUE(r.has_positive_roots);
    const double tol = 1e-10 * std::max(1.0, x);
    EXPECT_LE(std::abs(r.G(r.y0)), tol);
    EXPECT_LE(std::abs(r.G(r.y1)), tol);
    EXPECT_LE(std::abs(r.G(r.y2)), tol);
    EXPECT_LT(r.y0, 0.0);
    EXPECT_LE(r.y1, r.y_plus);
    EXPECT_LE(r.y_plus, r.y2);
    if (x > 0.0) {
      EXPECT_GT(r.y1, 0.0);
    }
    if (r.dtf3) {
      EXPECT_GE((1.0 + r.a * k) * x, r.y1);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Cubic, RootsMonotoneInX) {
  const ConstantsSet c;
  const double nu = 1.0, k = 0.02;
  const CubicAnalysis probe = cubic_from_x(0.0, nu, k, c);
  const double xmax = 2.0 / 3.0 * probe.linear_coeff * probe.y_plus;
  double y1 = -1.0, y2 = kInf;
  for (int i = 0; i < 200; ++i) {
    const CubicAnalysis r = cubic_from_x(xmax * i / 200.0, nu, k, c);
    EXPECT_GE(r.y1, y1);
    EXPECT_LE(r.y2, y2);
    y1 = r.y1;
    y2 = r.y2;
  }
}

TEST(Cubic, AnalyzeBuildsX) {
  const CubicAnalysis r = cubic_analyze(1.0, 2.0, 0.5, 0.01, {});
  EXPECT_DOUBLE_EQ(r.x, 1.0 + 2.0 * 0.01 * 2.0 / 0.5);
  EXPECT_DOUBLE_EQ(r.cubic_coeff, 0.01 / 0.125);
  EXPECT_DOUBLE_EQ(r.linear_coeff, 1.0 + 0.5 * 0.01 / 2.0);
  EXPECT_DOUBLE_EQ(r.y_star, r.x / (1.0 + 0.5 * 0.01 / 4.0));
}

TEST(ExplicitBound, Examples) {
  EXPECT_EQ(one_step_explicit_bound(0.0, 0.0, 1.0, 0.01, 1.0), 0.0);
  EXPECT_NEAR(one_step_explicit_bound(1.0, 0.0, 1.0, 0.01, 1.0), 1.02, 1e-15);
  // a k = 2 x^2 k = 0.3
  const double x = std::sqrt(0.3 / (2.0 * 0.01));
  EXPECT_THROW(one_step_explicit_bound(x, 0.0, 1.0, 0.01, 1.0), RestrictionViolated);
}

TEST(Restrictions, SemiShortHandCase) {
  const Restriction r = dt_restrictions(bounds_of(1.0, 1.0, 0, 0), {}, Variant::semi_short);
  EXPECT_EQ(r.k_max, 0.125);
  EXPECT_EQ(r.binding, "dtf5");
}

TEST(Restrictions, FullSmallAtRest) {
  const ConstantsSet c = consts(0.8, 1.0);
  const Restriction r = dt_restrictions(bounds_of(0, 0, 0, 0, 2.0, c), c, Variant::full_small);
  EXPECT_DOUBLE_EQ(r.k_max, 0.8 / 2.0);
  EXPECT_EQ(r.binding, "dtf0");
  for (const auto& lim : r.constraints) {
    if (lim.tag == "dtfa" || lim.tag == "dtfb") {
      EXPECT_EQ(lim.k_max, kInf);
    }
  }
}

TEST(Restrictions, FullShortForcedFromRest) {
  const BoundsReport b = bounds_of(0, 0, 1.0, 1.0);
  const Restriction r = dt_restrictions(b, {}, Variant::full_short);
  double dtf4 = 0, dtfz = 0, dtfx1 = 0, dtfy1 = 0;
  for (const auto& lim : r.constraints) {
    if (lim.tag == "dtf4") dtf4 = lim.k_max;
    if (lim.tag == "dtfz") dtfz = lim.k_max;
    if (lim.tag == "dtfx1") dtfx1 = lim.k_max;
    if (lim.tag == "dtfy1") dtfy1 = lim.k_max;
  }
  const double c13 = std::cbrt(2.0);
  // independent closed forms for nu = c4 = c5 = c0 = 1, |f| = 1, u0 = 0
  EXPECT_NEAR(dtf4, 0.5, 1e-15);
  EXPECT_NEAR(dtfz, (c13 - 1.0) / (2.0 * (1.0 + c13) * (1.0 + c13)), 1e-15);
  const double Kt = 2.0 + 10.0;  // 2F + 10 c0 |f|^2 / nu
  EXPECT_NEAR(dtfx1, 1.0 / (12.0 * Kt * Kt), 1e-15);
  const double lhs = (1.0 + 2.0 * Kt) * Kt + 1.0;  // K0~ = 2
  EXPECT_NEAR(dtfy1, 1.0 / (12.0 * lhs * lhs), 1e-18);
  EXPECT_EQ(r.k_max, std::min({dtf4, dtfz, dtfx1, dtfy1}));
  EXPECT_EQ(r.binding, "dtfy1");
  // dtf4 is unconstrained without forcing
  const Restriction free = dt_restrictions(bounds_of(0.1, 0.1, 0, 0), {}, Variant::full_short);
  for (const auto& lim : free.constraints) {
    if (lim.tag == "dtf4") {
      EXPECT_EQ(lim.k_max, kInf);
    }
  }
}

TEST(Restrictions, HypfViolatedIsInfeasible) {
  try {
    dt_restrictions(bounds_of(1.0, 0.6, 0, 0), {}, Variant::full_small);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.constraint(), "hypf");
  }
}

TEST(Restrictions, SemiSmallQuadratic) {
  // K0 K1 > c2 nu^4 already at k = 0
  EXPECT_THROW(dt_restrictions(bounds_of(0.5, 0.5, 1.0, 0.5), {}, Variant::semi_small),
               Infeasible);
  const Restriction ok = dt_restrictions(bounds_of(0.2, 0.3, 0.01, 0.02), {}, Variant::semi_small);
  const double k0 = 0.2 + 0.01, k1 = 0.3 + 0.04, a = 0.01, b = 0.04;
  // a b k^2 + (k0 b + k1 a) k + k0 k1 - 1 = 0
  const double B = k0 * b + k1 * a, C = k0 * k1 - 1.0;
  const double root = (-B + std::sqrt(B * B - 4.0 * a * b * C)) / (2.0 * a * b);
  EXPECT_NEAR(ok.k_max, root, 1e-12 * root);
  EXPECT_EQ(ok.binding, "K0K1s");
  // without forcing the condition does not involve k
  const Restriction free = dt_restrictions(bounds_of(0.5, 0.5, 0, 0), {}, Variant::semi_small);
  EXPECT_EQ(free.k_max, kInf);
}

TEST(Restrictions, BindingConsistencyOnRandomData) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int finite = 0;
  for (int i = 0; i < 400; ++i) {
    ConstantsSet c;
    c.c0 = 0.5 + U(rng);
    c.c1 = 0.5 + U(rng);
    c.c2 = 0.5 + U(rng);
    c.c4 = 0.5 + U(rng);
    c.c5 = 0.5 + U(rng);
    const double nu = 0.5 + U(rng);
    const BoundsReport b = bounds_of(0.3 * U(rng), 0.3 * U(rng), 0.1 * U(rng), 0.1 * U(rng), nu, c);
    for (Variant v : {Variant::semi_small, Variant::semi_short, Variant::full_small,
                      Variant::full_short}) {
      Restriction r;
      try {
        r = dt_restrictions(b, c, v);
      } catch (const Infeasible&) {
        continue;
      }
      for (const auto& [tag, chk] : evaluate_constraints(v, r.k_max, b, c)) {
        EXPECT_TRUE(chk.ok) << to_string(v) << " " << tag << " at k_max " << r.k_max;
      }
      if (!std::isfinite(r.k_max)) continue;
      ++finite;
      bool any_fail = false;
      for (const auto& [tag, chk] : evaluate_constraints(v, 1.01 * r.k_max, b, c)) {
        any_fail = any_fail || !chk.ok;
      }
      EXPECT_TRUE(any_fail) << to_string(v);
    }
  }
  EXPECT_GT(finite, 1000);
}

TEST(Restrictions, TagsAndDescriptions) {
  EXPECT_EQ(constraint_tags(Variant::semi_small), std::vector<std::string>{"K0K1s"});
  EXPECT_EQ(constraint_tags(Variant::semi_short), std::vector<std::string>{"dtf5"});
  EXPECT_EQ(constraint_tags(Variant::full_short),
            (std::vector<std::string>{"dtfx1", "dtfy1", "dtf4", "dtfz"}));
  EXPECT_EQ(constraint_tags(Variant::full_small),
            (std::vector<std::string>{"hypf", "dtf0", "dtfa", "dtfb"}));
  for (const char* t : {"K0K1s", "dtf5", "dtfx1", "dtfy1", "dtf4", "dtfz", "hypf", "dtf0", "dtfa",
                        "dtfb"}) {
    EXPECT_FALSE(constraint_description(t).empty());
  }
}

TEST(Gronwall, Examples) {
  EXPECT_DOUBLE_EQ(gronwall_envelope(1.0, 1.0, 0.0, 10), std::pow(2.0, -10));
  for (long n : {0L, 1L, 7L, 100L}) EXPECT_DOUBLE_EQ(gronwall_envelope(1.0, 0.0, 1.0, n), 2.0);
}

TEST(Gronwall, DominatesRecursion) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int c = 0; c < 1000; ++c) {
    const double b = 1e-3 + U(rng), x0 = 10.0 * U(rng), rmax = U(rng);
    double x = x0;
    for (long n = 1; n <= 200; ++n) {
      x = (x + rmax * U(rng)) / (1.0 + b);
      ASSERT_LE(x, gronwall_envelope(b, x0, rmax, n) * (1.0 + 1e-14));
    }
  }
}

TEST(Comparison, Examples) {
  EXPECT_EQ(comparison_ode(1.5, 1.0, 1.0, 0.0), 2.25);
  EXPECT_NEAR(comparison_ode(1.0, 1.0, 1.0, 0.25), 2.0, 1e-15);
  EXPECT_THROW(comparison_ode(1.0, 1.0, 1.0, 0.5), BlowUp);
  EXPECT_DOUBLE_EQ(comparison_blowup_time(1.0, 1.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(comparison_flow_blowup_time(1.0, 1.0, 1.0), 0.25);
  EXPECT_THROW(comparison_flow(1.0, 1.0, 1.0, 0.25), BlowUp);
  EXPECT_EQ(comparison_blowup_time(0.0, 1.0, 1.0), kInf);

  const std::vector<double> z = comparison_seq(1.0, 1.0, 1.0, 0.01, 20);
  ASSERT_EQ(z.size(), 21u);
  EXPECT_DOUBLE_EQ(z[1], 1.02);
  for (std::size_t n = 0; n < z.size(); ++n) {
    EXPECT_LE(z[n], comparison_flow(1.0, 1.0, 1.0, 0.01 * n));
  }
}

TEST(Comparison, SequenceBelowFlowOnRandomCases) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int c = 0; c < 100; ++c) {
    const double z0 = 0.1 + 2.0 * U(rng), nu = 0.3 + U(rng), c4 = 0.2 + U(rng);
    const double tb = comparison_flow_blowup_time(z0, nu, c4);
    const double k = tb * (1e-3 + 0.05 * U(rng));
    const long steps = static_cast<long>(0.9 * tb / k);
    const std::vector<double> z = comparison_seq(z0, nu, c4, k, steps);
    for (long n = 0; n <= steps; ++n) {
      ASSERT_LE(z[static_cast<std::size_t>(n)], comparison_flow(z0, nu, c4, n * k));
    }
  }
}

TEST(Verdict, ZeroDataAllTrue) {
  const BoundsReport b = bounds_of(0, 0, 0, 0);
  for (Scheme s : {Scheme::semi_implicit, Scheme::fully_implicit}) {
    for (Variant v : {Variant::semi_small, Variant::semi_short, Variant::full_small,
                      Variant::full_short, Variant::none}) {
      if (!variant_matches(v, s)) continue;
      StepInputs in;
      in.scheme = s;
      in.variant = v;
      in.k = 0.01;
      const StepVerdict r = step_verdict(in, {}, b);
      EXPECT_TRUE(r.all_ok()) << to_string(v);
      EXPECT_GE(r.slack_min(), 0.0);
    }
  }
}

TEST(Verdict, OversizedStepFailsHypothesesOnly) {
  // k far above dtfx for |grad u|^2 = 0.1, but a decaying step
  const BoundsReport b = bounds_of(0.1, 0.1, 0, 0);
  StepInputs in;
  in.scheme = Scheme::fully_implicit;
  in.variant = Variant::none;
  in.k = 50.0;
  in.prev = {0.1, 0.1, 0.1, 0.0};
  in.next = {0.1 / 51.0 / 51.0, 0.1 / 51.0 / 51.0, 0.0, 0.0};
  const StepVerdict r = step_verdict(in, {}, b);
  EXPECT_FALSE(r.dtfx.ok);
  EXPECT_FALSE(r.lemma_hypotheses.ok);
  EXPECT_TRUE(r.l2_recurrence.ok);
  EXPECT_TRUE(r.h1_recurrence.ok);
  EXPECT_LT(r.dtfx.slack, 0.0);
}

TEST(Verdict, SlackSignMatchesOk) {
  const Check a = check_le(1.0, 2.0);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.slack, 1.0);
  EXPECT_EQ(a.fraction, 0.5);
  const Check b = check_le(2.0, 1.0);
  EXPECT_FALSE(b.ok);
  EXPECT_LT(b.slack, 0.0);
  const Check c = check_and(a, b);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.slack, b.slack);
}
