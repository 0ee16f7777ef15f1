#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hyperlag/rational.hpp"
#include "hyperlag/surd.hpp"

namespace hyperlag {

/// Dense univariate polynomial over Q, coefficients low-to-high. The
/// highest stored coefficient is nonzero; the zero polynomial stores none.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients)
      : RationalPolynomial(std::vector<Rational>(coefficients)) {}

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  /// The identity polynomial x.
  static RationalPolynomial variable() { return RationalPolynomial({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  RationalPolynomial derivative() const;
  /// this(inner(x)).
  RationalPolynomial compose(const RationalPolynomial& inner) const;

  /// Horner evaluation; works for Rational, Surd and floating types.
  template <typename T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + lift<T>(*it);
    return acc;
  }

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += -o; }
  RationalPolynomial& operator*=(const RationalPolynomial& o);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  template <typename T>
  static T lift(const Rational& c) {
    if constexpr (std::is_floating_point_v<T>) {
      return static_cast<T>(to_double(c));
    } else {
      return T(c);
    }
  }
  void trim();

  std::vector<Rational> coefficients_;
};

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent);

}  // namespace hyperlag
