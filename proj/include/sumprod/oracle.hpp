#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sumprod/classify.hpp"
#include "sumprod/correspondence.hpp"
#include "sumprod/cubes.hpp"
#include "sumprod/enumerate.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/triple.hpp"

namespace sumprod {

/// Result of a bounded exhaustive search.  `solutions` holds canonically
/// sorted triples in ascending order with no duplicates; the search is
/// complete for every solution having at least one coordinate of height
/// at most `bound`.
struct OracleReport {
  Int bound;
  std::vector<Triple> solutions;
  bool exhaustive = true;
};

/// True iff the canonical n/d is the square of a rational; if so, *root
/// receives the nonnegative square root.
inline bool rational_square_root(const Rat& q, Rat* root) {
  if (q.sign() < 0) return false;
  Int n = q.num();
  Int d = q.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  *root = Rat(rn, rd);
  return true;
}

/// Ground truth independent of the curve machinery: for every rational x
/// of height at most H, the other two coordinates solve y+z = s-x,
/// yz = p/x, which has rational solutions exactly when the discriminant
/// (s-x)^2 - 4p/x is a rational square.
inline OracleReport brute_force_solutions(const Triple& reference, const Int& height_bound) {
  auto [s, p] = elementary_invariants(reference);
  if (p.is_zero()) {
    throw PreconditionError(
        "brute_force_solutions: zero product; that case has an exhaustive closed form");
  }
  std::set<Triple> found;
  for (const Rat& x : RationalsByHeight::up_to(height_bound)) {
    if (x.is_zero()) continue;  // xyz = p != 0 rules x = 0 out
    Rat rest_sum = s - x;
    Rat rest_prod = p / x;
    Rat disc = rest_sum * rest_sum - Rat(4) * rest_prod;
    Rat root;
    if (!rational_square_root(disc, &root)) continue;
    Rat y = (rest_sum + root) / Rat(2);
    Rat z = rest_sum - y;
    found.insert(Triple(x, std::move(y), std::move(z)).sorted());
  }
  OracleReport report;
  report.bound = height_bound;
  report.solutions.assign(found.begin(), found.end());
  return report;
}

/// The cube-sum analogue: search the half-pair-sums reduction, then map
/// every hit back.  Each output triple satisfies both cube-system equations.
inline OracleReport brute_force_cube_solutions(const Triple& reference, const Int& height_bound) {
  Triple reduced = psi(reference);
  if ((reduced.x * reduced.y * reduced.z).is_zero()) {
    throw PreconditionError("brute_force_cube_solutions: reduction of " + reference.to_string() +
                            " has zero product");
  }
  OracleReport base = brute_force_solutions(reduced, height_bound);
  std::set<Triple> mapped;
  for (const Triple& sol : base.solutions) {
    Triple image = phi(sol).sorted();
    if (!verify_sum_cubes(reference, image)) {
      throw Error("cube oracle produced an unverified triple " + image.to_string());
    }
    mapped.insert(std::move(image));
  }
  OracleReport report;
  report.bound = height_bound;
  report.solutions.assign(mapped.begin(), mapped.end());
  return report;
}

struct ProbeEntry {
  CurvePoint point;
  std::optional<int> order;  // nullopt: infinite order
};

/// What a bounded search says about the curve attached to an elliptic
/// classification: the curve points of every arrangement of every solution
/// found, with their bounded orders.  Any infinite-order point certifies
/// infinitely many solutions; finding none proves nothing, and the report
/// says so through `exhausted_bound` only.
struct ProbeReport {
  std::vector<ProbeEntry> points;
  bool found_infinite_order = false;
  Int exhausted_bound;
};

inline ProbeReport curve_point_probe(const Triple& reference, const Int& height_bound) {
  Classification cls = classify_triple(reference);
  if (cls.verdict != Classification::Verdict::Elliptic) {
    throw PreconditionError("curve_point_probe: " + reference.to_string() +
                            " does not classify as elliptic");
  }
  auto [s, p] = elementary_invariants(reference);
  Curve curve = build_curve(s, p);
  OracleReport oracle = brute_force_solutions(reference, height_bound);
  ProbeReport report;
  report.exhausted_bound = height_bound;
  std::set<CurvePoint> seen;
  for (const Triple& sol : oracle.solutions) {
    for (const Triple& arrangement : permutations_of(sol)) {
      CurvePoint pt = rho(arrangement, s, p);
      if (!seen.insert(pt).second) continue;
      auto order = point_order_bounded(pt, curve);
      if (!order) report.found_infinite_order = true;
      report.points.push_back(ProbeEntry{std::move(pt), order});
    }
  }
  return report;
}

}  // namespace sumprod
