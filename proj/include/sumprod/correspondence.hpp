#pragma once

#include <optional>

#include "sumprod/curve.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/triple.hpp"

namespace sumprod {

/// The three curve points with no solution-triple preimage: the two affine
/// points sharing u = s^2/12 and the point at infinity.
struct ExceptionalSet {
  CurvePoint plus;      // (s^2/12,  p/2)
  CurvePoint minus;     // (s^2/12, -p/2)
  CurvePoint infinity;  // O

  bool contains(const CurvePoint& pt) const {
    return pt.is_infinity() || pt == plus || pt == minus;
  }
};

inline ExceptionalSet exceptional_points(const Rat& s, const Rat& p) {
  Rat u = s * s / Rat(12);
  Rat v = p / Rat(2);
  return ExceptionalSet{CurvePoint(u, v), CurvePoint(u, -v), CurvePoint::infinity()};
}

/// Maps a solution of x+y+z = s, xyz = p to a curve point:
///   u = -p/y + s^2/12,   v = -(p/y)(x + y/2 - s/2).
/// Requires p != 0 (so y != 0) and that the triple actually solves the system.
inline CurvePoint rho(const Triple& t, const Rat& s, const Rat& p) {
  if (p.is_zero()) throw PreconditionError("rho: zero product has no curve model");
  auto [ts, tp] = elementary_invariants(t);
  if (ts != s || tp != p) {
    throw NotASolutionError("rho: " + t.to_string() + " does not satisfy the system");
  }
  Rat w = p / t.y;  // nonzero since p != 0
  Rat u = -w + s * s / Rat(12);
  Rat v = -w * (t.x + t.y / Rat(2) - s / Rat(2));
  return CurvePoint(std::move(u), std::move(v));
}

/// Inverse of rho.  Returns nullopt exactly on the exceptional set (the
/// point at infinity and the two points with u = s^2/12), which has no
/// preimage; group walks land there deliberately and skip.
inline std::optional<Triple> rho_inv(const CurvePoint& pt, const Rat& s, const Rat& p) {
  if (pt.is_infinity()) return std::nullopt;
  Rat den = pt.u() - s * s / Rat(12);
  if (den.is_zero()) return std::nullopt;
  detail::require_on_curve(pt, build_curve(s, p), "rho_inv");
  Rat shared = s * pt.u() / Rat(2) - s.pow(3) / Rat(24) + p / Rat(2);
  Rat x = (pt.v() + shared) / den;
  Rat y = -p / den;
  Rat z = (-pt.v() + shared) / den;
  return Triple(std::move(x), std::move(y), std::move(z));
}

}  // namespace sumprod
