#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace alia {

/// Exact rational scalar over arbitrary-precision integers.
/// Invariant: always in lowest terms with positive denominator.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(n) {}
  Rat(long num, long den);

  /// Parse a canonical literal: "p" or "p/q" (q > 0 after normalization).
  static Rat parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

  /// Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  const mpq_class& raw() const { return q_; }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace alia
