#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsm/polynomial.hpp"
#include "dsm/rational.hpp"

namespace dsm {

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// The L-th cyclotomic polynomial, monic with integer coefficients,
// computed as (x^L - 1) / prod of Phi_d over proper divisors d | L.
Polynomial<Rational> cyclotomic_polynomial(unsigned long L);

// An element of Q(zeta_L), stored as the canonical residue modulo
// Phi_L, so the coefficient vector has length phi(L) and equality and
// rationality tests are exact. Elements of different conductors combine
// by embedding both into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeff_(1) {}
  Cyclotomic(const Rational& value) : conductor_(1), coeff_{value} {}
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}

  // zeta_L^a (a taken mod L).
  static Cyclotomic root_of_unity(unsigned long L, long a);

  // Value with the given residue coefficients (length <= phi(L)); used
  // by the loaders.
  static Cyclotomic from_coefficients(unsigned long L, std::vector<Rational> coeffs);

  unsigned long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> rational_part() const;
  Rational to_rational() const;  // throws NotRational

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator/(const Cyclotomic& rhs) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  // Reinterpret in Q(zeta_M); M must be a multiple of the conductor.
  Cyclotomic embedded(unsigned long M) const;

  std::string to_string() const;

 private:
  Cyclotomic(unsigned long L, Polynomial<Rational> reduced);

  unsigned long conductor_;
  std::vector<Rational> coeff_;  // length phi(conductor_)
};

inline Cyclotomic operator*(const Rational& s, const Cyclotomic& x) { return Cyclotomic(s) * x; }

// e^{2 pi i q} as an exact root of unity.
Cyclotomic unit_exponential(const Rational& q);

}  // namespace dsm
