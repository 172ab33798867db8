#include "dsm/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "dsm/errors.hpp"

namespace dsm {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

Polynomial<Rational> phi_impl(unsigned long L, std::map<unsigned long, Polynomial<Rational>>& cache) {
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  // x^L - 1 divided by the product of Phi_d over proper divisors d.
  std::vector<Rational> xl(L + 1);
  xl[0] = -1;
  xl[L] = 1;
  Polynomial<Rational> num{std::move(xl)};
  Polynomial<Rational> den = Polynomial<Rational>::constant(1);
  for (unsigned long d : divisors(L))
    if (d != L) den *= phi_impl(d, cache);
  auto [quot, rem] = Polynomial<Rational>::divrem(num, den);
  if (!rem.is_zero()) fail_inconsistency("Mismatch", "cyclotomic division not exact");
  cache.emplace(L, quot);
  return quot;
}

}  // namespace

Polynomial<Rational> cyclotomic_polynomial(unsigned long L) {
  if (L == 0) fail_validation("SchemaError", "conductor must be positive");
  static std::map<unsigned long, Polynomial<Rational>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return phi_impl(L, cache);
}

namespace {

Polynomial<Rational> reduce_mod_phi(unsigned long L, const Polynomial<Rational>& p) {
  if (p.degree() < static_cast<long>(euler_phi(L))) return p;
  return Polynomial<Rational>::divrem(p, cyclotomic_polynomial(L)).second;
}

std::vector<Rational> padded(const Polynomial<Rational>& p, unsigned long len) {
  std::vector<Rational> c(len);
  for (unsigned long i = 0; i < len; ++i) c[i] = p.coefficient(i);
  return c;
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned long L, Polynomial<Rational> reduced)
    : conductor_(L), coeff_(padded(reduced, euler_phi(L))) {}

Cyclotomic Cyclotomic::root_of_unity(unsigned long L, long a) {
  if (L == 0) fail_validation("SchemaError", "conductor must be positive");
  long m = a % static_cast<long>(L);
  if (m < 0) m += static_cast<long>(L);
  auto mono = Polynomial<Rational>::monomial(1, static_cast<std::size_t>(m));
  return Cyclotomic(L, reduce_mod_phi(L, mono));
}

Cyclotomic Cyclotomic::from_coefficients(unsigned long L, std::vector<Rational> coeffs) {
  if (coeffs.size() > euler_phi(L))
    fail_validation("SchemaError", "cyclotomic coefficient vector longer than phi(L)");
  coeffs.resize(euler_phi(L));
  Cyclotomic x;
  x.conductor_ = L;
  x.coeff_ = std::move(coeffs);
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_part() const {
  if (!is_rational()) return std::nullopt;
  return coeff_[0];
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational())
    fail_inconsistency("NotRational", "value " + to_string() + " is not rational");
  return coeff_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned long M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    fail_validation("SchemaError", "embedding target is not a multiple of the conductor");
  // zeta_L = zeta_M^{M/L}
  const unsigned long step = M / conductor_;
  std::vector<Rational> lifted(static_cast<std::size_t>(coeff_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeff_.size(); ++i) lifted[i * step] = coeff_[i];
  return Cyclotomic(M, reduce_mod_phi(M, Polynomial<Rational>{std::move(lifted)}));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  unsigned long M = lcm_ulong(conductor_, rhs.conductor_);
  Cyclotomic a = embedded(M), b = rhs.embedded(M);
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  unsigned long M = lcm_ulong(conductor_, rhs.conductor_);
  Cyclotomic a = embedded(M), b = rhs.embedded(M);
  Polynomial<Rational> prod =
      Polynomial<Rational>{std::move(a.coeff_)} * Polynomial<Rational>{std::move(b.coeff_)};
  return Cyclotomic(M, reduce_mod_phi(M, prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail_validation("SchemaError", "division by zero in Q(zeta)");
  // Extended Euclid against Phi_L; the gcd is a nonzero constant since
  // Phi_L is irreducible over Q.
  Polynomial<Rational> r0 = cyclotomic_polynomial(conductor_);
  Polynomial<Rational> r1{std::vector<Rational>(coeff_)};
  Polynomial<Rational> t0, t1 = Polynomial<Rational>::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = Polynomial<Rational>::divrem(r0, r1);
    Polynomial<Rational> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) fail_inconsistency("Mismatch", "cyclotomic gcd not constant");
  Rational inv_lead = Rational(1) / r0.coefficient(0);
  return Cyclotomic(conductor_, reduce_mod_phi(conductor_, t0.times(inv_lead)));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const {
  unsigned long M = lcm_ulong(conductor_, rhs.conductor_);
  return embedded(M) * rhs.embedded(M).inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclotomic r(Rational(1));
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  unsigned long M = lcm_ulong(conductor_, rhs.conductor_);
  return embedded(M).coeff_ == rhs.embedded(M).coeff_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return dsm::to_string(coeff_[0]);
  std::string s;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + dsm::to_string(coeff_[i]) + ")";
    if (i > 0) s += "*z" + std::to_string(conductor_) + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Cyclotomic unit_exponential(const Rational& q) {
  const unsigned long den = denominator_ulong(q);
  const Int& num = q.get_num();
  long a = mpz_fdiv_ui(num.get_mpz_t(), den);
  return Cyclotomic::root_of_unity(den, a);
}

}  // namespace dsm
