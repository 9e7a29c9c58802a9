#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "sumprod/errors.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

/// The short-Weierstrass cubic v^2 = u^3 + a4*u + a6 attached to a pair of
/// elementary invariants (s, p).  The provenance pair is kept so dependent
/// maps can be derived from the curve alone.
struct Curve {
  Rat a4, a6;
  Rat s, p;
};

/// Builds the curve whose rational points (minus three exceptional ones)
/// correspond to the solutions of x+y+z = s, xyz = p.
inline Curve build_curve(const Rat& s, const Rat& p) {
  Rat a4 = -(s.pow(4) / Rat(48) - s * p / Rat(2));
  Rat a6 = s.pow(6) / Rat(864) - s.pow(3) * p / Rat(24) + p * p / Rat(4);
  return Curve{std::move(a4), std::move(a6), s, p};
}

/// Discriminant of the Weierstrass equation, -16(4*a4^3 + 27*a6^2).
/// For curves from build_curve this equals p^3(s^3 - 27p).
inline Rat discriminant(const Curve& c) {
  return Rat(-16) * (Rat(4) * c.a4.pow(3) + Rat(27) * c.a6.pow(2));
}

/// True iff the attached curve is nonsingular, i.e. s^3 != 27p.
inline bool is_elliptic(const Rat& s, const Rat& p) {
  return s.pow(3) != Rat(27) * p;
}

/// A point of the curve: affine (u, v) or the single point at infinity,
/// which is the identity of the group law.
class CurvePoint {
 public:
  CurvePoint() : infinity_(true) {}
  CurvePoint(Rat u, Rat v) : infinity_(false), u_(std::move(u)), v_(std::move(v)) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinity_; }
  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.u_ == b.u_ && a.v_ == b.v_;
  }

  friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (auto c = (!a.infinity_) <=> (!b.infinity_); c != 0) return c;
    if (a.infinity_) return std::strong_ordering::equal;
    if (auto c = a.u_ <=> b.u_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

  std::string to_string() const {
    if (infinity_) return "O";
    return "(" + u_.to_string() + ", " + v_.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const CurvePoint& pt) {
    return os << pt.to_string();
  }

 private:
  bool infinity_;
  Rat u_, v_;
};

inline bool on_curve(const CurvePoint& pt, const Curve& c) {
  if (pt.is_infinity()) return true;
  return pt.v() * pt.v() == pt.u().pow(3) + c.a4 * pt.u() + c.a6;
}

inline CurvePoint neg(const CurvePoint& pt) {
  if (pt.is_infinity()) return pt;
  return CurvePoint(pt.u(), -pt.v());
}

namespace detail {
inline void require_on_curve(const CurvePoint& pt, const Curve& c, const char* who) {
  if (!on_curve(pt, c)) {
    throw NotOnCurveError(std::string(who) + ": point " + pt.to_string() +
                          " is not on the curve");
  }
}
}  // namespace detail

/// Chord-tangent addition.  Callers use this on nonsingular curves only.
inline CurvePoint add(const CurvePoint& p, const CurvePoint& q, const Curve& c) {
  detail::require_on_curve(p, c, "add");
  detail::require_on_curve(q, c, "add");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.u() == q.u() && p.v() == -q.v()) return CurvePoint::infinity();
  Rat lambda = (p == q) ? (Rat(3) * p.u() * p.u() + c.a4) / (Rat(2) * p.v())
                        : (q.v() - p.v()) / (q.u() - p.u());
  Rat u3 = lambda * lambda - p.u() - q.u();
  Rat v3 = lambda * (p.u() - u3) - p.v();
  return CurvePoint(std::move(u3), std::move(v3));
}

/// n*P by double-and-add; n may be negative or zero.
inline CurvePoint scalar_mul(long n, const CurvePoint& p, const Curve& c) {
  detail::require_on_curve(p, c, "scalar_mul");
  if (n < 0) return scalar_mul(-n, neg(p), c);
  CurvePoint acc = CurvePoint::infinity();
  CurvePoint base = p;
  while (n != 0) {
    if (n & 1) acc = add(acc, base, c);
    n >>= 1;
    if (n != 0) base = add(base, base, c);
  }
  return acc;
}

}  // namespace sumprod
