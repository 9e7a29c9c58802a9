#pragma once

// Deterministic sample generators for the property suites.  Everything is
// seeded explicitly so failures reproduce.

#include <random>
#include <utility>

#include "sumprod/sumprod.hpp"

namespace testgen {

using sumprod::Rat;
using sumprod::Triple;

using Rng = std::mt19937_64;

inline Rng make_rng(unsigned seed) { return Rng(seed); }

inline long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, long max_num = 20, long max_den = 8) {
  return Rat(rand_long(rng, -max_num, max_num), rand_long(rng, 1, max_den));
}

inline Rat rand_nonzero_rat(Rng& rng, long max_num = 20, long max_den = 8) {
  for (;;) {
    Rat r = rand_rat(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

inline Triple rand_triple(Rng& rng) {
  return Triple(rand_rat(rng), rand_rat(rng), rand_rat(rng));
}

inline Triple rand_nonzero_product_triple(Rng& rng) {
  return Triple(rand_nonzero_rat(rng), rand_nonzero_rat(rng), rand_nonzero_rat(rng));
}

/// Pairwise-distinct nonzero entries attaching a nonsingular curve.
inline Triple rand_elliptic_triple(Rng& rng) {
  for (;;) {
    Triple t = rand_nonzero_product_triple(rng);
    if (!t.pairwise_distinct()) continue;
    auto [s, p] = sumprod::elementary_invariants(t);
    if (sumprod::is_elliptic(s, p)) return t;
  }
}

inline Triple rand_pairwise_distinct_triple(Rng& rng) {
  for (;;) {
    Triple t = rand_triple(rng);
    if (t.pairwise_distinct()) return t;
  }
}

/// Pairwise-coprime pairwise-distinct nonzero integers.  Re-draws the rare
/// triples attaching a singular curve (such as (8, -27, 1)) so callers can
/// assert the elliptic verdict.
inline Triple rand_coprime_triple(Rng& rng, long bound = 40) {
  auto draw = [&] {
    long v = rand_long(rng, -bound, bound);
    return v == 0 ? 1 : v;
  };
  for (;;) {
    sumprod::Int a(draw()), b(draw()), c(draw());
    if (a == b || b == c || a == c) continue;
    if (gcd(a, b) != 1 || gcd(b, c) != 1 || gcd(a, c) != 1) continue;
    Triple t{Rat(a), Rat(b), Rat(c)};
    auto [s, p] = sumprod::elementary_invariants(t);
    if (!sumprod::is_elliptic(s, p)) continue;
    return t;
  }
}

/// Valid (scale, t) for the genus-zero family.
inline std::pair<Rat, Rat> rand_genus_zero_params(Rng& rng) {
  for (;;) {
    Rat scale = rand_nonzero_rat(rng, 9, 4);
    Rat t = rand_rat(rng, 9, 4);
    if (t.is_zero() || t == Rat(1) || t == Rat(-1) || t == Rat(1, 2) || t == Rat(2)) continue;
    return {scale, t};
  }
}

/// Valid (r, t) for the first degenerate family.
inline std::pair<Rat, Rat> rand_family_first_params(Rng& rng) {
  for (;;) {
    Rat r = rand_nonzero_rat(rng, 9, 4);
    Rat t = rand_rat(rng, 9, 4);
    if (t.is_zero() || t == Rat(-1) || t == Rat(-1, 2)) continue;
    return {r, t};
  }
}

/// Valid (r, t) for the second degenerate family.
inline std::pair<Rat, Rat> rand_family_second_params(Rng& rng) {
  for (;;) {
    Rat r = rand_nonzero_rat(rng, 9, 4);
    Rat t = rand_rat(rng, 9, 4);
    if (t.is_zero() || t == Rat(-1)) continue;
    return {r, t};
  }
}

/// A family-first triple attaching a nonsingular curve (the family can hit
/// the singular locus for special parameters; those draws are skipped).
inline Triple rand_family_first_triple(Rng& rng) {
  for (;;) {
    auto [r, t] = rand_family_first_params(rng);
    Triple tr = sumprod::family_first(r, t);
    auto [s, p] = sumprod::elementary_invariants(tr);
    if (sumprod::is_elliptic(s, p)) return tr;
  }
}

inline Triple rand_family_second_triple(Rng& rng) {
  for (;;) {
    auto [r, t] = rand_family_second_params(rng);
    Triple tr = sumprod::family_second(r, t);
    auto [s, p] = sumprod::elementary_invariants(tr);
    if (sumprod::is_elliptic(s, p)) return tr;
  }
}

}  // namespace testgen
