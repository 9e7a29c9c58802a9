#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sumprod/classify.hpp"
#include "sumprod/correspondence.hpp"
#include "sumprod/cubes.hpp"
#include "sumprod/enumerate.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/families.hpp"
#include "sumprod/triple.hpp"

namespace sumprod {

/// Default number of stream records a positivity search may examine before
/// giving up.  Infinitely many positive solutions exist whenever the search
/// preconditions hold, but no effective bound is available, so exhaustion
/// is reported as a distinct outcome rather than looping forever.
inline constexpr std::uint64_t kDefaultPositiveCap = 10000;

/// Where an emitted solution came from: the group element m*P + k*Q whose
/// correspondence image it is, a family parameter value, or the isolated
/// constant solution of the genus-zero case.
struct GroupSource {
  long m = 0;
  int k = 0;
  friend bool operator==(const GroupSource&, const GroupSource&) = default;
};

struct FamilySource {
  enum class Family { GenusZero, ProductZero };
  Family family;
  Rat param;  // u for the genus-zero family, x for the product-zero family
  friend bool operator==(const FamilySource&, const FamilySource&) = default;
};

struct ConstantSource {
  friend bool operator==(const ConstantSource&, const ConstantSource&) = default;
};

using Source = std::variant<GroupSource, FamilySource, ConstantSource>;

struct SolutionRecord {
  Triple triple;
  Source source;
  bool verified = false;  // set once the record passes exact verification
};

/// Deterministic enumeration of solutions x+y+z = a+b+c, xyz = abc for a
/// reference triple (a, b, c).
///
/// The mode follows the classification of the reference:
///   - Z + Z/3: infinite walk over m*P + k*Q, in the order m = 1, -1, 2, -2,
///     ... with k = 0, 1, 2 inside each m, skipping the exceptional set.
///     Distinct group elements give distinct triples, so nothing repeats.
///   - Z/12 or Z/9: the generated subgroup is finite; the walk enumerates
///     it exhaustively (with deduplication) and the stream then ends.
///   - genus zero: the constant solution first, then the u-parametrization
///     with u running over the rationals by height, skipping the two poles.
///   - zero product: (x, s-x, 0) with x running over the rationals by height.
///
/// Every record is verified against the reference before being emitted.
class SolutionStream {
 public:
  explicit SolutionStream(Triple reference)
      : ref_(std::move(reference)), cls_(classify_triple(ref_)) {
    using V = Classification::Verdict;
    switch (cls_.verdict) {
      case V::NotPairwiseDistinct:
        throw RepeatedEntriesError("solution stream: entries of " + ref_.to_string() +
                                   " are not pairwise distinct");
      case V::ProductZero: {
        mode_ = Mode::ProductZeroFamily;
        s_ = ref_.x + ref_.y + ref_.z;
        break;
      }
      case V::GenusZero: {
        mode_ = Mode::GenusZeroFamily;
        params_ = *cls_.genus_zero_params;
        pending_constant_ = true;
        break;
      }
      case V::Elliptic: {
        auto inv = elementary_invariants(ref_);
        s_ = inv.s;
        p_ = inv.p;
        curve_ = build_curve(s_, p_);
        exceptional_ = exceptional_points(s_, p_);
        base_ = rho(ref_, s_, p_);
        q_ = exceptional_.plus;  // (s^2/12, p/2) generates the exceptional set
        if (*cls_.torsion == TorsionType::ZxZ3) {
          mode_ = Mode::GroupWalk;
          pos_ = base_;
          neg_ = neg(base_);
        } else {
          mode_ = Mode::FiniteGroup;
          enumerate_finite_subgroup();
        }
        break;
      }
    }
  }

  const Triple& reference() const { return ref_; }
  const Classification& classification() const { return cls_; }

  /// True once a finite stream has been fully emitted; the infinite modes
  /// never exhaust.
  bool exhausted() const {
    return mode_ == Mode::FiniteGroup && finite_index_ == finite_.size();
  }

  std::optional<SolutionRecord> next() {
    switch (mode_) {
      case Mode::GroupWalk:
        return next_group_walk();
      case Mode::FiniteGroup:
        if (finite_index_ == finite_.size()) return std::nullopt;
        return finite_[finite_index_++];
      case Mode::GenusZeroFamily:
        return next_genus_zero();
      case Mode::ProductZeroFamily:
        return next_product_zero();
    }
    return std::nullopt;
  }

 private:
  enum class Mode { GroupWalk, FiniteGroup, GenusZeroFamily, ProductZeroFamily };

  SolutionRecord make_record(Triple t, Source src) const {
    if (!verify_sum_product(ref_, t)) {
      throw Error("stream produced an unverified triple " + t.to_string());
    }
    return SolutionRecord{std::move(t), std::move(src), true};
  }

  std::optional<SolutionRecord> next_group_walk() {
    for (;;) {
      advance_walk();
      const CurvePoint& g = k_ == 0 ? (m_ > 0 ? pos_ : neg_) : shifted_;
      if (exceptional_.contains(g)) continue;  // no preimage
      auto tri = rho_inv(g, s_, p_);
      return make_record(std::move(*tri), GroupSource{m_, k_});
    }
  }

  // Steps (m, k) through (1,0) (1,1) (1,2) (-1,0) ... and keeps the current
  // group element m*P + k*Q up to date incrementally.
  void advance_walk() {
    if (m_ == 0) {  // first step
      m_ = 1;
      k_ = 0;
      return;
    }
    if (k_ < 2) {
      const CurvePoint& cur = k_ == 0 ? (m_ > 0 ? pos_ : neg_) : shifted_;
      shifted_ = add(cur, q_, curve_);
      ++k_;
      return;
    }
    k_ = 0;
    if (m_ > 0) {
      m_ = -m_;
      neg_ = neg(pos_);
    } else {
      m_ = -m_ + 1;
      pos_ = add(pos_, base_, curve_);
    }
  }

  void enumerate_finite_subgroup() {
    std::set<CurvePoint> seen;
    // The subgroup generated by the family has order at most 12, so walking
    // |m| up to 12 with k = 0..2 covers all of it.
    for (long mm = 1; mm <= 12; ++mm) {
      for (long m : {mm, -mm}) {
        CurvePoint mp = scalar_mul(m, base_, curve_);
        CurvePoint g = mp;
        for (int k = 0; k <= 2; ++k) {
          if (k > 0) g = add(g, q_, curve_);
          if (exceptional_.contains(g)) continue;
          if (!seen.insert(g).second) continue;
          auto tri = rho_inv(g, s_, p_);
          finite_.push_back(make_record(std::move(*tri), GroupSource{m, k}));
        }
      }
    }
  }

  std::optional<SolutionRecord> next_genus_zero() {
    if (pending_constant_) {
      pending_constant_ = false;
      return make_record(genus_zero_constant_solution(params_.scale, params_.t),
                         ConstantSource{});
    }
    for (;;) {
      Rat u = rationals_.next();
      if (u == Rat(-1) || u == -params_.t) continue;
      Triple sol = genus_zero_solution(params_.scale, params_.t, u);
      return make_record(std::move(sol),
                         FamilySource{FamilySource::Family::GenusZero, std::move(u)});
    }
  }

  std::optional<SolutionRecord> next_product_zero() {
    Rat x = rationals_.next();
    Triple sol = product_zero_solution(s_, x);
    return make_record(std::move(sol),
                       FamilySource{FamilySource::Family::ProductZero, std::move(x)});
  }

  Triple ref_;
  Classification cls_;
  Mode mode_ = Mode::GroupWalk;

  // group-walk state
  Rat s_, p_;
  Curve curve_;
  ExceptionalSet exceptional_;
  CurvePoint base_, q_;
  CurvePoint pos_, neg_, shifted_;  // m*P for current |m|, its negative, +kQ shift
  long m_ = 0;
  int k_ = 0;

  // finite-subgroup state
  std::vector<SolutionRecord> finite_;
  std::size_t finite_index_ = 0;

  // parametric state
  FamilyParams params_{FamilyParams::Kind::GenusZero, Rat(1), Rat(3)};
  bool pending_constant_ = false;
  RationalsByHeight rationals_;
};

/// First `limit` records of the stream (fewer if a finite stream ends).
inline std::vector<SolutionRecord> solution_stream(const Triple& reference, std::size_t limit) {
  SolutionStream stream(reference);
  std::vector<SolutionRecord> out;
  out.reserve(limit);
  while (out.size() < limit) {
    auto rec = stream.next();
    if (!rec) break;
    out.push_back(std::move(*rec));
  }
  return out;
}

/// Outcome of a capped positivity search.
struct PositiveSearch {
  std::vector<SolutionRecord> records;
  std::uint64_t examined = 0;   // stream records inspected
  bool cap_exhausted = false;   // stopped by the cap, not by reaching count
};

namespace detail {

inline void require_positive_distinct(const Triple& t, const char* who) {
  require_pairwise_distinct(t, who);
  if (!t.all_positive()) {
    throw PreconditionError(std::string(who) + ": entries of " + t.to_string() +
                            " must all be positive");
  }
}

template <typename Stream>
PositiveSearch collect_positive(Stream& stream, const Triple& reference, std::size_t count,
                                std::uint64_t cap) {
  PositiveSearch out;
  while (out.records.size() < count && out.examined < cap) {
    auto rec = stream.next();
    if (!rec) break;  // finite stream ended
    ++out.examined;
    if (is_permutation_of(rec->triple, reference)) continue;  // the trivial solutions
    if (rec->triple.all_positive()) out.records.push_back(std::move(*rec));
  }
  out.cap_exhausted = out.records.size() < count && out.examined >= cap;
  return out;
}

}  // namespace detail

/// Positive solutions other than the permutations of the reference itself.
/// Requires positive, pairwise distinct entries with the first inequality
/// holding everywhere (which makes the attached curve walk infinite), so
/// only the cap can stop the search early.
inline PositiveSearch positive_stream(const Triple& reference, std::size_t count,
                                      std::uint64_t cap = kDefaultPositiveCap) {
  detail::require_positive_distinct(reference, "positive_stream");
  if (auto bad = condition_first_violations(reference); !bad.empty()) {
    throw ConditionViolationError("positive_stream: arrangement " + bad.front().to_string() +
                                      " of " + reference.to_string() +
                                      " violates A(B-C)^3 != B(C-A)^3",
                                  bad.front().to_string());
  }
  SolutionStream stream(reference);
  return detail::collect_positive(stream, reference, count, cap);
}

/// Deterministic enumeration of solutions of x+y+z = a+b+c,
/// x^3+y^3+z^3 = a^3+b^3+c^3, obtained by running a solution stream on the
/// half-pair-sums reduction and mapping each record back.  Permutations of
/// the reference are suppressed; every emitted record passes the exact
/// cube-sum verification.  Sources refer to the reduced system's stream.
class CubeStream {
 public:
  explicit CubeStream(Triple reference)
      : ref_(std::move(reference)), reduced_(make_reduced_stream(ref_)) {}

  const Triple& reference() const { return ref_; }
  const SolutionStream& reduced_stream() const { return reduced_; }
  bool exhausted() const { return reduced_.exhausted(); }

  std::optional<SolutionRecord> next() {
    for (;;) {
      auto rec = reduced_.next();
      if (!rec) return std::nullopt;
      Triple image = phi(rec->triple);
      if (is_permutation_of(image, ref_)) continue;
      if (!verify_sum_cubes(ref_, image)) {
        throw Error("cube stream produced an unverified triple " + image.to_string());
      }
      return SolutionRecord{std::move(image), std::move(rec->source), true};
    }
  }

 private:
  static SolutionStream make_reduced_stream(const Triple& ref) {
    detail::require_pairwise_distinct(ref, "cube_stream");
    Triple reduced = psi(ref);
    Classification cls = classify_triple(reduced);
    if (cls.verdict == Classification::Verdict::Elliptic) {
      // A Z/12 or Z/9 reduction is exactly a violation of the cube-variant
      // inequalities on the original entries; report it in those terms.
      if (*cls.torsion == TorsionType::Z12) {
        auto bad = condition_third_violations(ref);
        if (!bad.empty()) {
          throw ConditionViolationError("cube_stream: arrangement " + bad.front().to_string() +
                                            " of " + ref.to_string() +
                                            " violates (A+B)(A-B)^3 != (B+C)(B-C)^3",
                                        bad.front().to_string());
        }
      }
      if (*cls.torsion == TorsionType::Z9) {
        auto bad = condition_fourth_violations(ref);
        if (!bad.empty()) {
          throw ConditionViolationError("cube_stream: arrangement " + bad.front().to_string() +
                                            " of " + ref.to_string() +
                                            " violates AB^2+BC^2+CA^2 != A^3+B^3+C^3",
                                        bad.front().to_string());
        }
      }
    }
    return SolutionStream(std::move(reduced));
  }

  Triple ref_;
  SolutionStream reduced_;
};

inline std::vector<SolutionRecord> cube_stream(const Triple& reference, std::size_t limit) {
  CubeStream stream(reference);
  std::vector<SolutionRecord> out;
  out.reserve(limit);
  while (out.size() < limit) {
    auto rec = stream.next();
    if (!rec) break;
    out.push_back(std::move(*rec));
  }
  return out;
}

/// Positive cube-sum solutions other than the permutations of the reference.
inline PositiveSearch positive_cube_stream(const Triple& reference, std::size_t count,
                                           std::uint64_t cap = kDefaultPositiveCap) {
  detail::require_positive_distinct(reference, "positive_cube_stream");
  if (auto bad = condition_third_violations(reference); !bad.empty()) {
    throw ConditionViolationError("positive_cube_stream: arrangement " +
                                      bad.front().to_string() + " of " + reference.to_string() +
                                      " violates (A+B)(A-B)^3 != (B+C)(B-C)^3",
                                  bad.front().to_string());
  }
  CubeStream stream(reference);
  return detail::collect_positive(stream, reference, count, cap);
}

}  // namespace sumprod
