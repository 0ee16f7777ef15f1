#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlag/polynomial.hpp"
#include "hyperlag/rational.hpp"
#include "hyperlag/surd.hpp"

namespace hyperlag {

inline Rational binomial_q(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return Rational(result);
}

/// One named sub-check of an exact verification.
struct CheckStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<CheckStep>& steps) {
  for (const auto& s : steps) {
    if (!s.pass) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Limit density of B(2k, n)

/// sqrt(4k - 1) as an exact surd (radicand reduced to its square-free part).
inline Surd sqrt_4k_minus_1(std::int64_t k) { return Surd::sqrt(4 * k - 1); }

/// (2k - 6k^3 + 4k^4 + (4k^2 - k) sqrt(4k-1)) / (2k^2 + 1)^2, six times the
/// limiting Lagrangian of B(2k, n).
Surd alpha_k(std::int64_t k);

/// Maximizer (2k^2 + k - k sqrt(4k-1)) / (2k^2 + 1) of f_b2k(., k) on [0, 1].
Surd astar_weight(std::int64_t k);

/// (a/2k)^3 C(2k,3) + (a/2k)^2 C(2k,2) (1-a) + a (1-a)^2 / 2.
template <typename T>
T f_b2k(const T& a, std::int64_t k) {
  const T x = a / scalar_from<T>(make_rational(2 * k));
  const T one = scalar_from<T>(make_rational(1));
  const T half = scalar_from<T>(make_rational(1, 2));
  return x * x * x * scalar_from<T>(binomial_q(2 * k, 3)) + x * x * scalar_from<T>(binomial_q(2 * k, 2)) * (one - a) +
         a * (one - a) * (one - a) * half;
}

/// (1/(4k^2) + 1/2) a^2 - (1/(2k) + 1) a + 1/2.
template <typename T>
T f_b2k_prime(const T& a, std::int64_t k) {
  const T quad = scalar_from<T>(make_rational(1, 4 * k * k) + make_rational(1, 2));
  const T lin = scalar_from<T>(make_rational(1, 2 * k) + make_rational(1));
  return quad * a * a - lin * a + scalar_from<T>(make_rational(1, 2));
}

RationalPolynomial f_b2k_polynomial(std::int64_t k);
RationalPolynomial f_b2k_prime_polynomial(std::int64_t k);

/// Exact checks that f_b2k(., k) peaks on [0, 1] at astar_weight(k) with
/// value alpha_k(k) / 6.
std::vector<CheckStep> verify_b2k_maximum(std::int64_t k);

struct NonSquareCheck {
  bool by_mod4 = false;
  bool by_isqrt = false;
};

/// 4k - 1 is 3 mod 4, and squares are 0 or 1 mod 4. Both routes are run;
/// disagreement throws std::logic_error.
NonSquareCheck non_square_4k_minus_1_routes(std::int64_t k);
bool is_non_square_4k_minus_1(std::int64_t k);

// ---------------------------------------------------------------------------
// Three-part construction: bound polynomial and its case analysis

/// (a^2/4 + ab + b^2/2) c + (a+b) c d + c^2 d / 2 + a^2 b / 4.
template <typename T>
T theorem1_bound_poly_unchecked(const T& a, const T& b, const T& c, const T& d) {
  const T half = scalar_from<T>(make_rational(1, 2));
  const T quarter = scalar_from<T>(make_rational(1, 4));
  return (a * a * quarter + a * b + b * b * half) * c + (a + b) * c * d + c * c * d * half + a * a * b * quarter;
}

/// Throws std::invalid_argument unless (a, b, c, d) lies on the simplex
/// (sum within 1e-12 for floating types, exactly for exact types).
template <typename T>
T theorem1_bound_poly(const T& a, const T& b, const T& c, const T& d) {
  const T zero = scalar_from<T>(make_rational(0));
  if (a < zero || b < zero || c < zero || d < zero) throw std::invalid_argument("bound polynomial needs a,b,c,d >= 0");
  const T gap = a + b + c + d - scalar_from<T>(make_rational(1));
  if constexpr (std::is_floating_point_v<T>) {
    if (gap > T(1e-12) || gap < T(-1e-12)) throw std::invalid_argument("bound polynomial needs a+b+c+d = 1");
  } else {
    if (gap != zero) throw std::invalid_argument("bound polynomial needs a+b+c+d = 1");
  }
  return theorem1_bound_poly_unchecked(a, b, c, d);
}

/// 11b^3/2 - 21b^2/2 + 6b - 1: the bound on the d = 0 face after the
/// stationarity elimination a = 2 - 4b, c = 3b - 1.
RationalPolynomial theorem1_d0_cubic_polynomial();

template <typename T>
T theorem1_d0_cubic(const T& b) {
  return theorem1_d0_cubic_polynomial()(b);
}

/// (7 - sqrt 5) / 11, the critical point of the d = 0 cubic inside [1/3, 1/2].
Surd theorem1_d0_critical_point();

/// Exact checks on the d = 0 face: elimination identity, critical points,
/// monotonicity on [1/3, 1/2], value at the critical point below 0.076.
std::vector<CheckStep> verify_theorem1_d0_case();

struct QuarticRoot {
  Rational b;
  Rational c;
  Rational a;
  Rational d;
  /// Coordinates that violate a, b, c, d > 0.
  std::string contradiction;
  bool infeasible = false;
};

struct QuarticIdentityReport {
  RationalPolynomial lhs;  ///< (8b-4)^2 (19b^2-10b+1) - (b^2-10b+4)^2
  RationalPolynomial rhs;  ///< 9b (5b-2)(9b-4)(3b-2)
  bool identity = false;
  std::vector<QuarticRoot> roots;
  bool all_roots_infeasible = false;
};

/// Throws std::logic_error if the polynomial identity fails.
QuarticIdentityReport verify_theorem1_quartic_identity();

// ---------------------------------------------------------------------------
// (2k+1)-part construction: bound chain

/// (w/2k)^3 C(2k,3) + (w/2k)^2 C(2k,2) (1-w): contribution of the first 2k parts.
template <typename T>
T theorem3_head(const T& w1, std::int64_t k) {
  const T x = w1 / scalar_from<T>(make_rational(2 * k));
  return x * x * x * scalar_from<T>(binomial_q(2 * k, 3)) +
         x * x * scalar_from<T>(binomial_q(2 * k, 2)) * (scalar_from<T>(make_rational(1)) - w1);
}

/// Upper bound on λ(N) with head mass w1, anchor mass a and remaining mass
/// b = 1 - w1 - a.
template <typename T>
T theorem3_bound(const T& w1, const T& a, std::int64_t k) {
  const T b = scalar_from<T>(make_rational(1)) - w1 - a;
  const T quarter = scalar_from<T>(make_rational(1, 4));
  const T half = scalar_from<T>(make_rational(1, 2));
  return theorem3_head(w1, k) + w1 * (a * a * quarter + a * b + b * b * half) + a * a * b * quarter;
}

/// 11w^3/54 - 5w^2/9 + 5w/18 + 1/27.
RationalPolynomial theorem3_cubic_tail();
/// g(w) = head(w) + cubic tail, the bound after maximizing over a.
RationalPolynomial theorem3_g_polynomial(std::int64_t k);
/// (1/(4k^2) - 7/18) w^2 - (1/(2k) + 1/9) w + 5/18.
RationalPolynomial theorem3_g_prime_formula(std::int64_t k);

struct BoundChainReport {
  std::int64_t k = 0;
  std::vector<CheckStep> steps;
  Rational discriminant;          ///< derived radicand of the root formula
  Rational g_half;                ///< g(1/2)
  bool pass = false;
};

/// Runs every step of the monotonicity chain for the given k >= 2.
BoundChainReport theorem3_bound_chain(std::int64_t k);

/// Part weights of the (2k+1)-part pattern: head parts w = (2k+1-sqrt(4k-1))/(4k^2+2),
/// last part v = (k sqrt(4k-1) + 1 - k)/(2k^2+1).
Surd theorem3_head_part_weight(std::int64_t k);
Surd theorem3_last_part_weight(std::int64_t k);

/// Edge deficit coefficient: |E(G(t))| = alpha_k/6 t^3 - c0 t^2 for exact part sizes.
Surd theorem3_c0(std::int64_t k);
/// The printed closed form of c0 (numerator over 6 (2k^2+1)^2).
Surd theorem3_c0_closed_form(std::int64_t k);
/// k v^2 - c0: density gain per 1/t from an adder with k (vt)^2 edges.
Surd theorem3_c1(std::int64_t k);
Surd theorem3_c1_closed_form(std::int64_t k);

}  // namespace hyperlag
