#pragma once

#include <string>
#include <utility>

#include "sumprod/curve.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/triple.hpp"

namespace sumprod {

/// Parameters of one of the closed-form triple families.
///   GenusZero: (scale(t-1)^3, -scale*t^3, scale),    t not in {-1, 0, 1/2, 1, 2}
///   First:     (r(t+1)^3, -rt^3, -rt(t+1)(2t^2+2t+1)), t not in {-1, -1/2, 0}
///   Second:    (rt^2, -r(t+1), rt(t+1)^2),              t not in {-1, 0}
/// scale plays the role of c for GenusZero and r otherwise.
struct FamilyParams {
  enum class Kind { GenusZero, First, Second };

  Kind kind;
  Rat scale;
  Rat t;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

namespace detail {
[[noreturn]] inline void excluded(const std::string& what) {
  throw ExcludedParameterError(what);
}
}  // namespace detail

/// The triples with sum-cubed equal to 27 times the product: every such
/// triple with distinct nonzero entries is (c(t-1)^3, -ct^3, c) for a
/// unique (c, t).
inline Triple genus_zero_triple(const Rat& scale, const Rat& t) {
  if (scale.is_zero()) detail::excluded("scale = 0 makes every entry zero");
  if (t.is_zero()) detail::excluded("t = 0 makes the second entry zero");
  if (t == Rat(1)) detail::excluded("t = 1 makes the first entry zero");
  if (t == Rat(1, 2)) detail::excluded("t = 1/2 forces the first two entries equal");
  if (t == Rat(2)) detail::excluded("t = 2 forces the outer entries equal");
  if (t == Rat(-1)) detail::excluded("t = -1 forces the last two entries equal");
  return Triple(scale * (t - Rat(1)).pow(3), -scale * t.pow(3), scale);
}

/// Recovers (scale, t) from a degenerate triple: t = (-a+2b-c)/(a+b-2c),
/// scale = c.  a+b = 2c is impossible for valid inputs (it would force all
/// entries equal).
inline FamilyParams genus_zero_invert(const Triple& t) {
  if (!t.all_nonzero()) throw PreconditionError("genus_zero_invert: zero entry");
  auto [s, p] = elementary_invariants(t);
  if (is_elliptic(s, p)) {
    throw PreconditionError("genus_zero_invert: " + t.to_string() +
                            " does not satisfy sum^3 = 27*product");
  }
  if (t.x == t.y && t.y == t.z) {
    throw PreconditionError("genus_zero_invert: all entries equal");
  }
  Rat den = t.x + t.y - Rat(2) * t.z;
  if (den.is_zero()) {
    throw PreconditionError("genus_zero_invert: a + b = 2c only holds for equal entries");
  }
  Rat param = (-t.x + Rat(2) * t.y - t.z) / den;
  return FamilyParams{FamilyParams::Kind::GenusZero, t.z, std::move(param)};
}

/// One solution of the system attached to genus_zero_triple(scale, t), for
/// any u outside {-1, -t}.  u = 0 reproduces the triple itself.
inline Triple genus_zero_solution(const Rat& scale, const Rat& t, const Rat& u) {
  Triple family = genus_zero_triple(scale, t);  // validates (scale, t)
  if (u == Rat(-1)) detail::excluded("u = -1 is a pole of the parametrization");
  if (u == -t) detail::excluded("u = -t is a pole of the parametrization");
  Rat ct = scale * t;
  Rat u1 = u + Rat(1);
  Rat ut = u + t;
  return Triple(ct * (t - Rat(1)).pow(3) / (u1 * ut), -ct * ut * ut / u1, ct * u1 * u1 / ut);
}

/// The one solution outside the u-family: all three coordinates equal to
/// scale*(t - t^2).
inline Triple genus_zero_constant_solution(const Rat& scale, const Rat& t) {
  Rat v = scale * (t - t * t);
  return Triple(v, v, v);
}

/// Finds the unique u with genus_zero_solution(scale, t, u) == sol.  The
/// constant solution is rejected as NotInFamily; anything that fails the
/// defining equations is rejected as NotASolution.
inline Rat genus_zero_solution_invert(const Rat& scale, const Rat& t, const Triple& sol) {
  Triple family = genus_zero_triple(scale, t);
  if (!verify_sum_product(family, sol)) {
    throw NotASolutionError("genus_zero_solution_invert: " + sol.to_string() +
                            " does not solve the system for " + family.to_string());
  }
  if (sol == genus_zero_constant_solution(scale, t)) {
    throw NotInFamilyError("the constant solution lies outside the u-family");
  }
  if (sol == family) return Rat(0);
  // The closed form is stated at scale 1; rescale the solution first.
  Rat y = sol.y / scale;
  Rat z = sol.z / scale;
  Rat num = Rat(2) * t.pow(4) + t.pow(3) * z - Rat(2) * t.pow(3) + t * y * z + t * y - y * z;
  Rat den = t * (t.pow(3) + t * z - t + y);
  return -num / den;
}

/// The triples (with distinct nonzero entries) for which the first torsion
/// inequality fails at the identity arrangement: a(b-c)^3 = b(c-a)^3.
inline Triple family_first(const Rat& r, const Rat& t) {
  if (r.is_zero()) detail::excluded("r = 0 makes every entry zero");
  if (t.is_zero()) detail::excluded("t = 0 makes the last two entries zero");
  if (t == Rat(-1)) detail::excluded("t = -1 makes the outer entries zero");
  if (t == Rat(-1, 2)) detail::excluded("t = -1/2 forces the first two entries equal");
  Rat t1 = t + Rat(1);
  return Triple(r * t1.pow(3), -r * t.pow(3),
                -r * t * t1 * (Rat(2) * t * t + Rat(2) * t + Rat(1)));
}

/// Inverse of family_first: t = (b-c)/(a-b), r = a/(t+1)^3.
inline FamilyParams family_first_invert(const Triple& tr) {
  if (!tr.pairwise_distinct()) throw RepeatedEntriesError("family_first_invert: repeated entries");
  if (!tr.all_nonzero()) throw PreconditionError("family_first_invert: zero entry");
  if (tr.x * (tr.y - tr.z).pow(3) != tr.y * (tr.z - tr.x).pow(3)) {
    throw NotInFamilyError("family_first_invert: " + tr.to_string() +
                           " does not satisfy a(b-c)^3 = b(c-a)^3");
  }
  Rat t = (tr.y - tr.z) / (tr.x - tr.y);
  Rat r = tr.x / (t + Rat(1)).pow(3);
  return FamilyParams{FamilyParams::Kind::First, std::move(r), std::move(t)};
}

/// The triples for which the second torsion inequality fails at the
/// identity arrangement: ab^2 + bc^2 + ca^2 = 3abc.
inline Triple family_second(const Rat& r, const Rat& t) {
  if (r.is_zero()) detail::excluded("r = 0 makes every entry zero");
  if (t.is_zero()) detail::excluded("t = 0 makes the outer entries zero");
  if (t == Rat(-1)) detail::excluded("t = -1 makes the last two entries zero");
  Rat t1 = t + Rat(1);
  return Triple(r * t * t, -r * t1, r * t * t1 * t1);
}

/// Inverse of family_second: t = (a-c)/(b-a), r = a/t^2.
inline FamilyParams family_second_invert(const Triple& tr) {
  if (!tr.pairwise_distinct()) throw RepeatedEntriesError("family_second_invert: repeated entries");
  if (!tr.all_nonzero()) throw PreconditionError("family_second_invert: zero entry");
  if (tr.x * tr.y * tr.y + tr.y * tr.z * tr.z + tr.z * tr.x * tr.x !=
      Rat(3) * tr.x * tr.y * tr.z) {
    throw NotInFamilyError("family_second_invert: " + tr.to_string() +
                           " does not satisfy ab^2 + bc^2 + ca^2 = 3abc");
  }
  Rat t = (tr.x - tr.z) / (tr.y - tr.x);
  Rat r = tr.x / (t * t);
  return FamilyParams{FamilyParams::Kind::Second, std::move(r), std::move(t)};
}

/// When the product is zero the solutions are all (x, s-x, 0) and their
/// permutations; this returns the representative for a given x.
inline Triple product_zero_solution(const Rat& s, const Rat& x) {
  return Triple(x, s - x, Rat(0));
}

}  // namespace sumprod
