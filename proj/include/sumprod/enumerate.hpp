#pragma once

#include <vector>

#include "sumprod/rational.hpp"

namespace sumprod {

/// Deterministic enumeration of all reduced rationals ordered by height
/// 1, 2, 3, ...; within one height by numerator ascending, ties broken by
/// denominator ascending.  Height 1 yields -1, 0, 1; height 2 yields
/// -2, -1/2, 1/2, 2; and so on.
class RationalsByHeight {
 public:
  RationalsByHeight() { fill_next_height(); }

  Rat next() {
    if (idx_ == bucket_.size()) fill_next_height();
    return bucket_[idx_++];
  }

  /// Every rational of height at most `bound`, in enumeration order.
  static std::vector<Rat> up_to(const Int& bound) {
    std::vector<Rat> out;
    if (!bound.fits_ulong_p()) throw Error("height bound too large to enumerate");
    unsigned long b = bound.get_ui();
    RationalsByHeight seq;
    for (unsigned long h = 1; h <= b; ++h) {
      seq.fill_height(h);
      out.insert(out.end(), seq.bucket_.begin(), seq.bucket_.end());
    }
    return out;
  }

 private:
  void fill_next_height() { fill_height(++height_); }

  void fill_height(unsigned long h) {
    height_ = h;
    bucket_.clear();
    idx_ = 0;
    Int hh(h);
    for (Int n = -hh; n <= hh; ++n) {
      if (abs(n) == hh) {
        // |numerator| carries the height: any coprime denominator up to h.
        for (Int d = 1; d <= hh; ++d) {
          if (gcd(abs(n), d) == 1) bucket_.emplace_back(n, d);
        }
      } else {
        // Denominator carries the height.
        if (gcd(abs(n), hh) == 1) bucket_.emplace_back(n, hh);
      }
    }
  }

  unsigned long height_ = 0;
  std::vector<Rat> bucket_;
  std::size_t idx_ = 0;
};

}  // namespace sumprod
