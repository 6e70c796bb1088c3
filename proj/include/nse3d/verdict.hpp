#pragma once

#include "nse3d/bounds.hpp"
#include "nse3d/check.hpp"
#include "nse3d/constants.hpp"
#include "nse3d/cubic.hpp"
#include "nse3d/scheme.hpp"

namespace nse3d {

/// Norms of one time level that the estimates refer to.
struct StateNorms {
  double l2_sq = 0.0;
  double h1_sq = 0.0;
  double h2_sq = 0.0;
  double l3 = 0.0;
};

struct StepInputs {
  Scheme scheme = Scheme::semi_implicit;
  Variant variant = Variant::none;
  double k = 0.0;
  double nu = 1.0;
  StateNorms prev;          // u^{n-1}
  StateNorms next;          // u^n
  double f_hm1_sq = 0.0;    // |f^n|^2_{H^-1}
  double f_l2_sq = 0.0;     // |f^n|^2
};

/// Every per-step inequality with its measured slack. Checks that do not
/// apply to the scheme/variant (or whose hypotheses fail, for conditional
/// conclusions) are marked not applicable.
struct StepVerdict {
  Check l2_recurrence;    // (1 + nu k/c0)|u^n|^2 <= |u^{n-1}|^2 + k|f^n|^2_{H-1}/nu
  Check l2_bound;         // |u^n|^2 <= K0 + (k/nu)|f|^2_{Linf(H-1)}
  Check h1_recurrence;    // semi: one-step H1 inequality with c1; full: G(|grad u^n|^2; x) >= 0
  Check smallness;        // semi: |u^{n-1}|_{L3} <= nu/(2 c1)
  Check dtfx;             // full: K^{(n-1)} <= (1/2)(nu^3/(3 c4 k))^{1/2}
  Check dtfy;             // full: (1 + c5 K~0 K/nu^4)K + |f|^2_{H-1}/nu^2 <= (nu^3/(12 c4 k))^{1/2}
  Check lemma_hypotheses; // dtfx and dtfy
  Check y1_membership;    // full: |grad u^n|^2 <= y1
  Check explicit_bound;   // full, when dtf3 holds: |grad u^n|^2 <= (1 + a k) x
  Check linf_recurrence;  // full, when x <= nu^2/(2 sqrt(c0 c4)): (1 + nu k/(4c0))|grad u^n|^2 <= x
  Check dtf2_posterior;   // full: dtf2 with the computed |u^n|^2
  Check dtf2_prior;       // full: dtf2 with |u^n|^2 replaced by its L2 bound
  Check bound;            // theorem conclusion of the monitored variant
  CubicAnalysis cubic;    // this step's cubic (full scheme, and reported for semi)

  /// Smallest normalised slack over applicable checks (0 if none apply).
  double slack_min() const;
  bool all_ok() const;
};

StepVerdict step_verdict(const StepInputs& in, const ConstantsSet& consts,
                         const BoundsReport& bounds);

/// The a-priori H1 bound asserted by the variant's theorem (+inf for none).
double theorem_h1_bound(Variant v, double k, const BoundsReport& bounds);

}  // namespace nse3d
