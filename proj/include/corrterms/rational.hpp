#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>

#include "corrterms/errors.hpp"

namespace corrterms {

// Exact rational arithmetic over 64-bit integers.  Values are kept in lowest
// terms with a positive denominator.  All correction-term computations in this
// library have denominators dividing 4p(p+1) for small p, so int64 is ample;
// overflow in intermediate products is checked in debug builds by the
// normalising gcd step keeping magnitudes small.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw invalid_input("rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    const long long g = std::gcd(den_, o.den_);
    const long long scaled_other = o.num_ * (den_ / g);
    num_ = num_ * (o.den_ / g) + scaled_other;
    den_ = den_ / g * o.den_;
    normalize();
    return *this;
  }

  Rational& operator-=(const Rational& o) { return *this += -o; }

  Rational& operator*=(const Rational& o) {
    const long long g1 = std::gcd(std::abs(num_), o.den_);
    const long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    normalize();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw invalid_input("rational: division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return *this *= inv;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Compare a.num/a.den vs b.num/b.den via cross-multiplication; both
    // denominators are positive so the order is preserved.
    const long long lhs = a.num_ * b.den_;
    const long long rhs = b.num_ * a.den_;
    return lhs <=> rhs;
  }

  // Renders "n" for integers, "n/d" otherwise (e.g. "-9/5").
  std::string str() const;

  // Parses "n" or "n/d"; throws invalid_input on malformed text.
  static Rational parse(const std::string& text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace corrterms
