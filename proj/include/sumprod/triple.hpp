#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <ostream>
#include <string>

#include "sumprod/errors.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

/// An ordered triple of rationals.  Permutations are distinct values;
/// sorted() gives the canonical representative for set semantics.
struct Triple {
  Rat x, y, z;

  Triple() = default;
  Triple(Rat a, Rat b, Rat c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

  const Rat& operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }

  /// Entries in ascending order.
  Triple sorted() const {
    std::array<Rat, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return Triple(v[0], v[1], v[2]);
  }

  bool pairwise_distinct() const { return x != y && y != z && x != z; }
  bool all_nonzero() const { return !x.is_zero() && !y.is_zero() && !z.is_zero(); }
  bool all_positive() const { return x.sign() > 0 && y.sign() > 0 && z.sign() > 0; }

  /// Largest coordinate height.
  Int height() const {
    Int h = x.height();
    h = std::max(h, y.height());
    return std::max(h, z.height());
  }

  /// Smallest coordinate height; a bounded search that covers any one
  /// coordinate up to H discovers exactly the triples with min_height <= H.
  Int min_height() const {
    Int h = x.height();
    h = std::min(h, y.height());
    return std::min(h, z.height());
  }

  std::string to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << t.to_string();
  }
};

/// All six arrangements, in lexicographic index order:
/// (x,y,z) (x,z,y) (y,x,z) (y,z,x) (z,x,y) (z,y,x).
inline std::array<Triple, 6> permutations_of(const Triple& t) {
  return {Triple(t.x, t.y, t.z), Triple(t.x, t.z, t.y), Triple(t.y, t.x, t.z),
          Triple(t.y, t.z, t.x), Triple(t.z, t.x, t.y), Triple(t.z, t.y, t.x)};
}

inline bool is_permutation_of(const Triple& a, const Triple& b) {
  return a.sorted() == b.sorted();
}

namespace detail {
inline void require_pairwise_distinct(const Triple& t, const char* who) {
  if (!t.pairwise_distinct()) {
    throw RepeatedEntriesError(std::string(who) + ": entries of " + t.to_string() +
                               " are not pairwise distinct");
  }
}
}  // namespace detail

/// The elementary symmetric invariants shared by a triple and all of its
/// solution set: the sum and the product.
struct SumProduct {
  Rat s, p;
};

inline SumProduct elementary_invariants(const Triple& t) {
  return {t.x + t.y + t.z, t.x * t.y * t.z};
}

/// True iff both invariants of `candidate` equal those of `reference`, exactly.
inline bool verify_sum_product(const Triple& reference, const Triple& candidate) {
  auto [s, p] = elementary_invariants(reference);
  auto [cs, cp] = elementary_invariants(candidate);
  return cs == s && cp == p;
}

inline Rat sum_of_cubes(const Triple& t) {
  return t.x.pow(3) + t.y.pow(3) + t.z.pow(3);
}

/// True iff the sums agree and the sums of cubes agree, exactly.
inline bool verify_sum_cubes(const Triple& reference, const Triple& candidate) {
  return reference.x + reference.y + reference.z == candidate.x + candidate.y + candidate.z &&
         sum_of_cubes(reference) == sum_of_cubes(candidate);
}

}  // namespace sumprod
