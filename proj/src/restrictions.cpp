#include "nse3d/restrictions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "nse3d/errors.hpp"

namespace nse3d {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cbrt2() { return std::cbrt(2.0); }

// Largest k with k <= num / den^2 style limits; +inf when den vanishes.
double inverse_square_limit(double num, double den) {
  return den > 0.0 ? num / (den * den) : kInf;
}

struct Terms {
  double nu, nu2, nu3;
  double fh;  // |f|^2_{H^-1}
  double fl;  // |f|^2_{L2}
  double g0;  // |grad u0|^2
};

Terms terms(const BoundsReport& b) {
  return {b.nu, b.nu * b.nu, b.nu * b.nu * b.nu, b.data.f_hm1_sup_sq, b.data.f_l2_sup_sq,
          b.data.u0_h1_sq};
}

double dtfy_lhs(double K, const BoundsReport& b, const ConstantsSet& c) {
  const Terms t = terms(b);
  return (1.0 + c.c5 / (t.nu2 * t.nu2) * b.K0_tilde * K) * K + t.fh / t.nu2;
}

double dtfz_base(const BoundsReport& b, const ConstantsSet& c) {
  const Terms t = terms(b);
  return 2.0 * t.g0 + (1.0 + cbrt2()) * std::cbrt(t.nu2) * std::cbrt(t.fl) / std::cbrt(c.c4);
}

// Closed-form largest k for a k-dependent constraint.
double closed_form_limit(const std::string& tag, const BoundsReport& b, const ConstantsSet& c) {
  const Terms t = terms(b);
  if (tag == "K0K1s") {
    const double A = b.K0, B = b.K1;
    const double alpha = t.fh / t.nu, beta = 2.0 * t.fl / t.nu;
    const double C = c.c2 * t.nu2 * t.nu2;
    const double room = C - A * B;
    if (room < 0.0) return 0.0;
    const double lin = A * beta + B * alpha;
    const double quad = alpha * beta;
    if (quad == 0.0) return lin > 0.0 ? room / lin : kInf;
    return 2.0 * room / (lin + std::sqrt(lin * lin + 4.0 * quad * room));
  }
  if (tag == "dtf5") return inverse_square_limit(t.nu3 / (2.0 * c.c4), 2.0 * t.g0 + b.F_short);
  if (tag == "dtfx1") return inverse_square_limit(t.nu3 / (12.0 * c.c4), b.K_tilde_short);
  if (tag == "dtfy1") {
    return inverse_square_limit(t.nu3 / (12.0 * c.c4), dtfy_lhs(b.K_tilde_short, b, c));
  }
  if (tag == "dtf4") {
    if (t.fl == 0.0) return kInf;
    return std::pow(t.nu, 5.0 / 3.0) / (2.0 * std::cbrt(c.c4) * std::cbrt(t.fl * t.fl));
  }
  if (tag == "dtfz") {
    return inverse_square_limit((cbrt2() - 1.0) * t.nu3 / (2.0 * c.c4), dtfz_base(b, c));
  }
  if (tag == "dtf0") return c.c0 / t.nu;
  if (tag == "dtfa") return inverse_square_limit(t.nu3 / (12.0 * c.c4), b.K1_tilde);
  if (tag == "dtfb") {
    return inverse_square_limit(t.nu3 / (12.0 * c.c4), dtfy_lhs(b.K1_tilde, b, c));
  }
  throw InvalidArgument("unknown constraint tag '" + tag + "'");
}

}  // namespace

std::vector<std::string> constraint_tags(Variant v) {
  switch (v) {
    case Variant::semi_small: return {"K0K1s"};
    case Variant::semi_short: return {"dtf5"};
    case Variant::full_short: return {"dtfx1", "dtfy1", "dtf4", "dtfz"};
    case Variant::full_small: return {"hypf", "dtf0", "dtfa", "dtfb"};
    case Variant::none: return {};
  }
  return {};
}

std::string constraint_description(const std::string& tag) {
  if (tag == "K0K1s") return "(K0 + k|f|^2_{H-1}/nu)(K1 + 2k|f|^2/nu) <= c2 nu^4";
  if (tag == "dtf5") return "k <= nu^3 / (2 c4 (2|grad u0|^2 + F)^2)";
  if (tag == "dtfx1") return "K~ <= (1/2) (nu^3 / (3 c4 k))^(1/2)";
  if (tag == "dtfy1") return "(1 + c5 K~0 K~ / nu^4) K~ + |f|^2_{H-1}/nu^2 <= (nu^3 / (12 c4 k))^(1/2)";
  if (tag == "dtf4") return "k <= nu^(5/3) / (2 c4^(1/3) |f|^(4/3))";
  if (tag == "dtfz") return "(2|grad u0|^2 + (1+2^(1/3)) nu^(2/3) |f|^(2/3) / c4^(1/3))^2 <= (2^(1/3)-1) nu^3 / (2 c4 k)";
  if (tag == "hypf") return "|grad u0|^2 + 2 c0 |f|^2 / nu^2 <= nu^2 / (2 sqrt(c0 c4))";
  if (tag == "dtf0") return "k <= c0 / nu";
  if (tag == "dtfa") return "K~1 <= (1/2) (nu^3 / (3 c4 k))^(1/2)";
  if (tag == "dtfb") return "(1 + c5 K~0 K~1 / nu^4) K~1 + |f|^2_{H-1}/nu^2 <= (nu^3 / (12 c4 k))^(1/2)";
  return "unknown constraint";
}

Check evaluate_constraint(const std::string& tag, double k, const BoundsReport& b,
                          const ConstantsSet& c) {
  const Terms t = terms(b);
  if (tag == "K0K1s") {
    return check_le((b.K0 + k * t.fh / t.nu) * (b.K1 + 2.0 * k * t.fl / t.nu),
                    c.c2 * t.nu2 * t.nu2);
  }
  if (tag == "dtf5") {
    const double d = 2.0 * t.g0 + b.F_short;
    return check_le(k, d > 0.0 ? t.nu3 / (2.0 * c.c4 * d * d) : kInf);
  }
  if (tag == "dtfx1") {
    return check_le(b.K_tilde_short, 0.5 * std::sqrt(t.nu3 / (3.0 * c.c4 * k)));
  }
  if (tag == "dtfy1") {
    return check_le(dtfy_lhs(b.K_tilde_short, b, c), std::sqrt(t.nu3 / (12.0 * c.c4 * k)));
  }
  if (tag == "dtf4") {
    const double lim = t.fl > 0.0 ? std::pow(t.nu, 5.0 / 3.0) /
                                        (2.0 * std::cbrt(c.c4) * std::cbrt(t.fl * t.fl))
                                  : kInf;
    return check_le(k, lim);
  }
  if (tag == "dtfz") {
    const double base = dtfz_base(b, c);
    return check_le(base * base, (cbrt2() - 1.0) * t.nu3 / (2.0 * c.c4 * k));
  }
  if (tag == "hypf") return smallness_check(b, c, k, SmallnessVariant::full);
  if (tag == "dtf0") return check_le(k, c.c0 / t.nu);
  if (tag == "dtfa") {
    return check_le(b.K1_tilde, 0.5 * std::sqrt(t.nu3 / (3.0 * c.c4 * k)));
  }
  if (tag == "dtfb") {
    return check_le(dtfy_lhs(b.K1_tilde, b, c), std::sqrt(t.nu3 / (12.0 * c.c4 * k)));
  }
  throw InvalidArgument("unknown constraint tag '" + tag + "'");
}

std::vector<std::pair<std::string, Check>> evaluate_constraints(Variant v, double k,
                                                                const BoundsReport& b,
                                                                const ConstantsSet& c) {
  std::vector<std::pair<std::string, Check>> out;
  for (const auto& tag : constraint_tags(v)) out.emplace_back(tag, evaluate_constraint(tag, k, b, c));
  return out;
}

Restriction dt_restrictions(const BoundsReport& b, const ConstantsSet& c, Variant v) {
  c.validate();
  Restriction r;
  r.variant = v;
  r.k_max = kInf;
  for (const auto& tag : constraint_tags(v)) {
    ConstraintLimit lim;
    lim.tag = tag;
    if (tag == "hypf") {
      lim.k_independent = true;
      const Check chk = evaluate_constraint(tag, 1.0, b, c);
      if (!chk.ok) {
        std::ostringstream os;
        os << "smallness condition hypf fails: " << chk.lhs << " > " << chk.rhs;
        throw Infeasible(os.str(), tag);
      }
      lim.k_max = kInf;
    } else {
      double k = closed_form_limit(tag, b, c);
      if (!(k > 0.0)) {
        std::ostringstream os;
        os << "no timestep k > 0 satisfies " << tag << " (" << constraint_description(tag) << ")";
        throw Infeasible(os.str(), tag);
      }
      for (int guard = 0; guard < 64 && std::isfinite(k); ++guard) {
        if (evaluate_constraint(tag, k, b, c).ok) break;
        k = std::nextafter(k, 0.0);
      }
      lim.k_max = k;
    }
    if (lim.k_max < r.k_max) {
      r.k_max = lim.k_max;
      r.binding = tag;
    }
    r.constraints.push_back(lim);
  }
  return r;
}

}  // namespace nse3d
