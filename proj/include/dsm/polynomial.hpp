#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dsm/errors.hpp"

namespace dsm {

// Dense polynomial, lowest degree first, no trailing zeros. T is a field
// value type (Rational or Cyclotomic here); T{} must be its zero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeff_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  static Polynomial monomial(T value, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = std::move(value);
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }

  T coefficient(std::size_t i) const { return i < coeff_.size() ? coeff_[i] : T{}; }
  const std::vector<T>& coefficients() const { return coeff_; }

  Polynomial operator-() const {
    std::vector<T> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = -coeff_[i];
    return Polynomial(std::move(c));
  }

  Polynomial operator+(const Polynomial& rhs) const {
    std::vector<T> c(std::max(coeff_.size(), rhs.coeff_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + rhs.coefficient(i);
    return Polynomial(std::move(c));
  }

  Polynomial operator-(const Polynomial& rhs) const {
    std::vector<T> c(std::max(coeff_.size(), rhs.coeff_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - rhs.coefficient(i);
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<T> c(coeff_.size() + rhs.coeff_.size() - 1);
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i] == T{}) continue;
      for (std::size_t j = 0; j < rhs.coeff_.size(); ++j)
        c[i + j] = c[i + j] + coeff_[i] * rhs.coeff_[j];
    }
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  Polynomial times(const T& scalar) const {
    if (scalar == T{}) return Polynomial();
    std::vector<T> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = coeff_[i] * scalar;
    return Polynomial(std::move(c));
  }

  // Multiply by z^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return Polynomial();
    std::vector<T> c(coeff_.size() + k);
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i + k] = coeff_[i];
    return Polynomial(std::move(c));
  }

  // Keep degrees < n.
  Polynomial truncated(std::size_t n) const {
    std::vector<T> c(coeff_.begin(), coeff_.begin() + std::min(coeff_.size(), n));
    return Polynomial(std::move(c));
  }

  Polynomial pow(unsigned long e) const {
    Polynomial r = constant(unit());
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  T evaluate(const T& x) const {
    T acc{};
    for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
    return acc;
  }

  bool operator==(const Polynomial& rhs) const {
    if (coeff_.size() != rhs.coeff_.size()) return false;
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      if (!(coeff_[i] == rhs.coeff_[i])) return false;
    return true;
  }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Euclidean division; divisor must be nonzero. Exact over a field.
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) fail_validation("SchemaError", "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<T> rem = num.coeff_;
    const long dd = den.degree();
    std::vector<T> quot(static_cast<std::size_t>(num.degree() - dd + 1));
    const T& lead = den.coeff_.back();
    for (long i = num.degree(); i >= dd; --i) {
      T factor = rem[i] / lead;
      if (!(factor == T{})) {
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - factor * den.coeff_[j];
      }
      quot[i - dd] = std::move(factor);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

 private:
  static T unit() { return T(1); }  // T constructible from int

  void trim() {
    while (!coeff_.empty() && coeff_.back() == T{}) coeff_.pop_back();
  }

  std::vector<T> coeff_;
};

}  // namespace dsm
