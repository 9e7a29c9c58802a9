#pragma once

#include <vector>

#include "sumprod/triple.hpp"

namespace sumprod {

/// Half-pair-sums map: (x,y,z) -> ((y+z)/2, (x+z)/2, (x+y)/2).  Inverse of
/// phi; preserves the sum.  Equal-sum, equal-cube-sum systems become
/// equal-sum, equal-product systems under this substitution.
inline Triple psi(const Triple& t) {
  Rat half(1, 2);
  return Triple((t.y + t.z) * half, (t.x + t.z) * half, (t.x + t.y) * half);
}

/// (x,y,z) -> (-x+y+z, x-y+z, x+y-z), i.e. coordinate-wise s - 2x where s
/// is the (preserved) sum.  Inverse of psi.
inline Triple phi(const Triple& t) {
  return Triple(-t.x + t.y + t.z, t.x - t.y + t.z, t.x + t.y - t.z);
}

/// A cube-sum problem together with its sum-product reduction.
struct CubeReduction {
  Triple original;
  Triple reduced;  // psi(original); phi(reduced) == original
};

inline CubeReduction cube_reduce(const Triple& t) {
  return CubeReduction{t, psi(t)};
}

/// Arrangements (A,B,C) of t with (A+B)(A-B)^3 = (B+C)(B-C)^3.  Equivalent
/// to the first inequality failing on psi(t); implemented directly so
/// diagnostics name the original entries.
inline std::vector<Triple> condition_third_violations(const Triple& t) {
  detail::require_pairwise_distinct(t, "condition_third_violations");
  std::vector<Triple> out;
  for (const Triple& p : permutations_of(t)) {
    if ((p.x + p.y) * (p.x - p.y).pow(3) == (p.y + p.z) * (p.y - p.z).pow(3)) {
      out.push_back(p);
    }
  }
  return out;
}

/// Arrangements (A,B,C) of t with AB^2 + BC^2 + CA^2 = A^3 + B^3 + C^3;
/// the cube-variant analogue of the second inequality.
inline std::vector<Triple> condition_fourth_violations(const Triple& t) {
  detail::require_pairwise_distinct(t, "condition_fourth_violations");
  std::vector<Triple> out;
  for (const Triple& p : permutations_of(t)) {
    if (p.x * p.y * p.y + p.y * p.z * p.z + p.z * p.x * p.x ==
        p.x.pow(3) + p.y.pow(3) + p.z.pow(3)) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace sumprod
