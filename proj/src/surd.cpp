#include "hyperlag/surd.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hyperlag {

std::pair<std::int64_t, std::int64_t> square_free_decomposition(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("square_free_decomposition needs n >= 1");
  std::int64_t m = 1, d = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    int power = 0;
    while (n % f == 0) {
      n /= f;
      ++power;
    }
    for (int k = 0; k < power / 2; ++k) m *= f;
    if (power % 2) d *= f;
  }
  return {m, d * n};
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root * root == n;
}

Surd::Surd(const Rational& p, const Rational& q, std::int64_t d) : p_(p), q_(q), d_(d) {
  if (d < 1) throw std::invalid_argument("surd radicand must be positive");
  if (square_free_decomposition(d).first != 1) {
    throw std::invalid_argument("surd radicand " + std::to_string(d) + " is not square-free");
  }
  normalize();
}

void Surd::normalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) d_ = 1;
}

Surd Surd::sqrt(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt of a negative rational");
  if (r == 0) return Surd();
  // sqrt(a/b) = sqrt(a*b)/b.
  const BigInt product = numerator_of(r) * denominator_of(r);
  if (product > BigInt(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("radicand too large");
  const auto [m, d] = square_free_decomposition(product.convert_to<std::int64_t>());
  return Surd(Rational(0), Rational(BigInt(m), denominator_of(r)), d);
}

std::int64_t Surd::common_radicand(const Surd& o) const {
  if (q_ == 0) return o.d_;
  if (o.q_ == 0 || o.d_ == d_) return d_;
  throw std::domain_error("mixed radicands " + std::to_string(d_) + " and " + std::to_string(o.d_));
}

int Surd::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational lhs = p_ * p_;
  const Rational rhs = q_ * q_ * d_;
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  normalize();
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  const std::int64_t d = common_radicand(o);
  const Rational p = p_ * o.p_ + q_ * o.q_ * d;
  const Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  d_ = d;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero surd");
  *this *= o.conjugate();
  p_ /= n;
  q_ /= n;
  normalize();
  return *this;
}

double Surd::to_double() const {
  return static_cast<double>(to_float<long double>());
}

std::string Surd::to_string() const {
  std::string out = to_fraction_string(p_);
  if (q_ != 0) out += " + " + to_fraction_string(q_) + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

Surd pow(Surd base, unsigned exponent) {
  Surd result(1);
  while (exponent) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }

}  // namespace hyperlag
