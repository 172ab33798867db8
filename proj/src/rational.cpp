#include "dsm/rational.hpp"

#include <numeric>

#include "dsm/errors.hpp"

namespace dsm {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail_validation("SchemaError", "empty rational literal");
  for (char c : t)
    if (!(isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail_validation("SchemaError", "bad rational literal '" + text + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    fail_validation("SchemaError", "bad rational literal '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    fail_validation("SchemaError", "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Int& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

unsigned long denominator_ulong(const Rational& value) {
  const Int& den = value.get_den();
  if (!den.fits_ulong_p()) fail_validation("SchemaError", "denominator out of range");
  return den.get_ui();
}

unsigned long gcd_ulong(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long lcm_ulong(unsigned long a, unsigned long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

Int binomial(long top, unsigned long k) {
  if (top < 0 || static_cast<unsigned long>(top) < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace dsm
