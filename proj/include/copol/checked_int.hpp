#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace copol {

using Int = std::int64_t;

// All lattice arithmetic is checked 64-bit. Every quantity in scope is tiny,
// so an overflow signals a bug, never a need for big integers.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

inline Int exact_div(Int a, Int b) {
  if (b == 0) throw std::logic_error("division by zero");
  if (a % b != 0) throw std::logic_error("inexact integer division: " + std::to_string(a) + " / " + std::to_string(b));
  return a / b;
}

inline Int abs_int(Int a) { return a < 0 ? -a : a; }

inline Int gcd_int(Int a, Int b) { return std::gcd(abs_int(a), abs_int(b)); }

/// Exact rational with positive denominator, reduced on construction.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = checked_mul(num, -1);
      den = checked_mul(den, -1);
    }
    Int g = gcd_int(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  Int as_integer() const {
    if (!is_integer()) throw std::logic_error("rational " + str() + " is not an integer");
    return num;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
};

}  // namespace copol
