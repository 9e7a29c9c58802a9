#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "sumprod/errors.hpp"

namespace sumprod {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// An exact rational number, always in canonical lowest terms with a
/// positive denominator.  Canonical form is enforced at construction, so
/// equality is structural and no rounding can ever occur.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}            // NOLINT(google-explicit-constructor)
  Rat(long n) : q_(n) {}           // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : q_(n) {}     // NOLINT(google-explicit-constructor)

  Rat(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// max(|numerator|, denominator); the size measure used to order
  /// enumerations of the rationals.
  Int height() const {
    Int n = abs(q_.get_num());
    const Int& d = q_.get_den();
    return n >= d ? n : d;
  }

  Rat operator-() const { return Rat(mpq_class(-q_)); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c <=> 0;
  }

  /// Exact integer power; negative exponents invert (and reject zero).
  Rat pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw Error("zero to a negative power");
      return Rat(1) / pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(std::move(r));  // num/den already coprime, so r is canonical
  }

  /// "n" for integers, "n/d" otherwise; sign always on the numerator.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (reduced, positive denominator)
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

inline Int parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negate = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negate = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  }
  Int v(std::string(s), 10);
  return negate ? Int(-v) : v;
}

}  // namespace detail

/// Parses "n" or "n/d" (signs allowed on either part) into a canonical Rat.
inline Rat rat_parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(detail::parse_signed_integer(text, text), Int(1));
  }
  Int num = detail::parse_signed_integer(text.substr(0, slash), text);
  Int den = detail::parse_signed_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rat(num, den);
}

}  // namespace sumprod
