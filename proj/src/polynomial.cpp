#include "hyperlag/polynomial.hpp"

#include <sstream>

namespace hyperlag {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(power)];
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) out.push_back(coefficients_[k] * static_cast<long>(k));
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::compose(const RationalPolynomial& inner) const {
  RationalPolynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + o.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * o.coefficients_[j];
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

RationalPolynomial pow(const RationalPolynomial& base, unsigned exponent) {
  RationalPolynomial result = RationalPolynomial::constant(Rational(1));
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace hyperlag
