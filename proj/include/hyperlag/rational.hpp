#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlag {

/// Arbitrary-precision integer and canonical rational (gcd 1, positive
/// denominator). Expression templates are off so the types behave as plain
/// values inside Eigen containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denominator_of(const Rational& q) { return BigInt(boost::multiprecision::denominator(q)); }

inline int sign(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den", always with an explicit denominator.
inline std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Parses "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

/// Lifts an exact rational into a scalar type (double, Rational, Surd, ...).
template <typename T>
T scalar_from(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(to_double(q));
  } else {
    return T(q);
  }
}

using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace hyperlag

namespace Eigen {

template <>
struct NumTraits<hyperlag::Rational> : GenericNumTraits<hyperlag::Rational> {
  using Real = hyperlag::Rational;
  using NonInteger = hyperlag::Rational;
  using Nested = hyperlag::Rational;
  using Literal = hyperlag::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
