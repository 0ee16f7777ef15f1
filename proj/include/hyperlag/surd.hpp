#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "hyperlag/rational.hpp"

namespace hyperlag {

/// n = m^2 * d with d square-free; returns {m, d}. Requires n >= 1.
std::pair<std::int64_t, std::int64_t> square_free_decomposition(std::int64_t n);

bool is_perfect_square(std::int64_t n);

/// Exact element p + q*sqrt(d) of Q(sqrt(d)), d square-free.
///
/// A value with q == 0 is rational and carries d == 1; it mixes freely with
/// any radicand. Two irrational operands must share d, otherwise the
/// operation throws std::domain_error. Ordering is decided by exact sign
/// analysis (compare p^2 with q^2 d), never by floating point.
class Surd {
 public:
  Surd() : p_(0), q_(0), d_(1) {}
  Surd(const Rational& p) : p_(p), q_(0), d_(1) {}  // NOLINT: implicit by design of the field embedding
  Surd(std::int64_t p) : Surd(make_rational(p)) {}  // NOLINT
  Surd(const Rational& p, const Rational& q, std::int64_t d);

  /// sqrt(r) for a non-negative rational, reduced to m/den * sqrt(d).
  static Surd sqrt(const Rational& r);
  static Surd sqrt(std::int64_t n) { return sqrt(make_rational(n)); }

  const Rational& rational_part() const { return p_; }
  const Rational& surd_part() const { return q_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  int sign() const;
  Surd conjugate() const { return Surd(p_, -q_, d_); }
  /// p^2 - q^2 d, the field norm.
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

  double to_double() const;
  template <typename Float>
  Float to_float() const {
    auto conv = [](const Rational& x) {
      return Float(numerator_of(x)) / Float(denominator_of(x));
    };
    using std::sqrt;
    return conv(p_) + conv(q_) * sqrt(Float(d_));
  }

  std::string to_string() const;

  Surd operator-() const { return Surd(-p_, -q_, d_); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& a, const Surd& b) { return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_); }
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Surd& a, const Surd& b) { return b < a; }
  friend bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
  friend bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

 private:
  std::int64_t common_radicand(const Surd& o) const;
  void normalize();

  Rational p_;
  Rational q_;
  std::int64_t d_;
};

Surd pow(Surd base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Surd& s);

}  // namespace hyperlag
