#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sunrise {

/// Exact rational number in canonical reduced form (denominator > 0,
/// gcd(|num|, den) = 1).  All interval endpoints, masses and certificates in
/// the toolkit are carried as Rational so that set identities hold as exact
/// equalities.  Backed by GMP's mpq.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                  // NOLINT: implicit by design
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "p/q", an integer, or a terminating decimal such as "0.95"
  /// (converted exactly).  Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  /// Exact value of a finite binary64 (doubles are dyadic rationals).
  static Rational from_double(double x);

  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  Rational abs() const;

  /// Nearest binary64.  (mpq_get_d truncates toward zero; this snaps to the
  /// closer of the two neighbouring doubles.)
  double to_double() const;

  /// Canonical "p" or "p/q".
  std::string str() const;
  /// Exact decimal expansion when the denominator is of the form 2^a 5^b,
  /// otherwise falls back to "p/q".
  std::string decimal_str() const;

  /// q^e for e >= 0 (exact).
  Rational pow(unsigned long e) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace sunrise
