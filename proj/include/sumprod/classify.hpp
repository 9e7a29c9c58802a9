#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumprod/curve.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/families.hpp"
#include "sumprod/triple.hpp"

namespace sumprod {

/// Arrangements (A,B,C) of t with A(B-C)^3 = B(C-A)^3.  An empty result
/// means the first torsion inequality holds for every permutation.
inline std::vector<Triple> condition_first_violations(const Triple& t) {
  detail::require_pairwise_distinct(t, "condition_first_violations");
  std::vector<Triple> out;
  for (const Triple& p : permutations_of(t)) {
    if (p.x * (p.y - p.z).pow(3) == p.y * (p.z - p.x).pow(3)) out.push_back(p);
  }
  return out;
}

/// Arrangements (A,B,C) of t with AB^2 + BC^2 + CA^2 = 3ABC.
inline std::vector<Triple> condition_second_violations(const Triple& t) {
  detail::require_pairwise_distinct(t, "condition_second_violations");
  std::vector<Triple> out;
  for (const Triple& p : permutations_of(t)) {
    if (p.x * p.y * p.y + p.y * p.z * p.z + p.z * p.x * p.x == Rat(3) * p.x * p.y * p.z) {
      out.push_back(p);
    }
  }
  return out;
}

/// For nonzero integers: pairwise coprime and pairwise distinct.  When this
/// holds, both torsion inequalities are guaranteed to hold for every
/// permutation (a fact the test suite checks rather than assumes).
inline bool coprime_guarantee(const Triple& t) {
  for (int i = 0; i < 3; ++i) {
    if (!t[i].is_integer() || t[i].is_zero()) {
      throw PreconditionError("coprime_guarantee: entries must be nonzero integers, got " +
                              t.to_string());
    }
  }
  if (!t.pairwise_distinct()) return false;
  return gcd(t.x.num(), t.y.num()) == 1 && gcd(t.y.num(), t.z.num()) == 1 &&
         gcd(t.x.num(), t.z.num()) == 1;
}

/// The six points P_(A,B,C) = (-AC + s^2/12, AC(C-A)/2), one per
/// arrangement of the input triple, plus the order-3 point q = (s^2/12, p/2).
/// Together they generate the subgroup the classifier reasons about.
struct TorsionFamily {
  std::array<Triple, 6> arrangements;  // permutations_of order
  std::array<CurvePoint, 6> points;    // points[i] belongs to arrangements[i]
  CurvePoint q;
  Curve curve;

  /// Point for a specific arrangement of the same entries.
  const CurvePoint& point_for(const Triple& arrangement) const {
    for (int i = 0; i < 6; ++i) {
      if (arrangements[i] == arrangement) return points[i];
    }
    throw PreconditionError("point_for: " + arrangement.to_string() +
                            " is not an arrangement of this family");
  }
};

inline TorsionFamily torsion_family(const Triple& t) {
  detail::require_pairwise_distinct(t, "torsion_family");
  if (!t.all_nonzero()) throw PreconditionError("torsion_family: zero entry in " + t.to_string());
  auto [s, p] = elementary_invariants(t);
  if (!is_elliptic(s, p)) {
    throw PreconditionError("torsion_family: " + t.to_string() + " attaches a singular curve");
  }
  TorsionFamily fam;
  fam.curve = build_curve(s, p);
  fam.arrangements = permutations_of(t);
  Rat u0 = s * s / Rat(12);
  for (int i = 0; i < 6; ++i) {
    const Triple& a = fam.arrangements[i];
    Rat ac = a.x * a.z;
    fam.points[i] = CurvePoint(-ac + u0, ac * (a.z - a.x) / Rat(2));
    detail::require_on_curve(fam.points[i], fam.curve, "torsion_family");
  }
  fam.q = CurvePoint(u0, p / Rat(2));
  detail::require_on_curve(fam.q, fam.curve, "torsion_family");
  return fam;
}

/// Least n in 1..12 with n*P = O, or nullopt if there is none.  Rational
/// torsion order never exceeds 12 (Mazur), so nullopt means infinite order.
inline std::optional<int> point_order_bounded(const CurvePoint& p, const Curve& c) {
  detail::require_on_curve(p, c, "point_order_bounded");
  CurvePoint acc = p;
  for (int n = 1; n <= 12; ++n) {
    if (acc.is_infinity()) return n;
    acc = add(acc, p, c);
  }
  return std::nullopt;
}

/// Closed form for 2*P_(A,B,C); used as an independent cross-check of the
/// group law.
inline CurvePoint double_formula(const Rat& a, const Rat& b, const Rat& c) {
  Triple t(a, b, c);
  detail::require_pairwise_distinct(t, "double_formula");
  Rat s = a + b + c;
  Rat u0 = s * s / Rat(12);
  Rat ac = a * c;
  Rat u = u0 - ac * (a - b) * (b - c) / (a - c).pow(2);
  Rat v = ac / (Rat(2) * (a - c).pow(3)) * (a * (c - b).pow(3) - c * (b - a).pow(3));
  return CurvePoint(std::move(u), std::move(v));
}

/// Closed form for -P_(A,B,C) + q.
inline CurvePoint minus_p_plus_q_formula(const Rat& a, const Rat& b, const Rat& c) {
  Triple t(a, b, c);
  detail::require_pairwise_distinct(t, "minus_p_plus_q_formula");
  Rat s = a + b + c;
  return CurvePoint(s * s / Rat(12) - a * b, a * b * (b - a) / Rat(2));
}

enum class TorsionType { Z12, Z9, ZxZ3 };
enum class Infinitude { Yes, Unknown };

/// Verdict for one input triple, with the evidence that produced it.
///
/// The verdict precedence is: repeated entries, then zero product, then the
/// singular (genus-zero) case, then the elliptic trichotomy.  In the
/// elliptic case the generated subgroup is Z/12 when the first inequality
/// fails somewhere, Z/9 when the second fails, and Z + Z/3 otherwise; only
/// the last certifies infinitely many solutions.  Z/12 and Z/9 report
/// Unknown (never No): the full group can still have positive rank, which
/// this method does not decide.
struct Classification {
  enum class Verdict { NotPairwiseDistinct, ProductZero, GenusZero, Elliptic };

  Verdict verdict;
  std::optional<TorsionType> torsion;               // Elliptic only
  Infinitude solutions_infinite = Infinitude::Unknown;
  std::vector<Triple> first_violations;             // evidence for Z12
  std::vector<Triple> second_violations;            // evidence for Z9
  std::optional<FamilyParams> genus_zero_params;    // evidence for GenusZero
};

inline Classification classify_triple(const Triple& t) {
  Classification out;
  if (!t.pairwise_distinct()) {
    out.verdict = Classification::Verdict::NotPairwiseDistinct;
    return out;
  }
  auto [s, p] = elementary_invariants(t);
  if (p.is_zero()) {
    out.verdict = Classification::Verdict::ProductZero;
    out.solutions_infinite = Infinitude::Yes;
    return out;
  }
  if (!is_elliptic(s, p)) {
    out.verdict = Classification::Verdict::GenusZero;
    out.solutions_infinite = Infinitude::Yes;
    out.genus_zero_params = genus_zero_invert(t);
    return out;
  }
  out.verdict = Classification::Verdict::Elliptic;
  out.first_violations = condition_first_violations(t);
  out.second_violations = condition_second_violations(t);
  if (!out.first_violations.empty()) {
    out.torsion = TorsionType::Z12;
  } else if (!out.second_violations.empty()) {
    out.torsion = TorsionType::Z9;
  } else {
    out.torsion = TorsionType::ZxZ3;
    out.solutions_infinite = Infinitude::Yes;
  }
  return out;
}

}  // namespace sumprod
