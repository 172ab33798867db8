#include "dsm/hp_formula.hpp"

#include "dsm/errors.hpp"
#include "dsm/weyl.hpp"

namespace dsm {

MultiplicityValue make_multiplicity_value(Cyclotomic v) {
  MultiplicityValue m;
  m.rational_part = v.rational_part();
  m.value = std::move(v);
  return m;
}

namespace {

// det(w) e^{w lambda - delta}(y) prod_{Phi_y+} <w lambda, alpha>
Cyclotomic psi0_summand(const RootSystem& rs, const EllipticClassData& cls,
                        const DerivedClassData& d, const Vec& lambda, const Mat& w) {
  Vec wl = mat_vec(w, lambda);
  Cyclotomic term = character_value(rs, vec_sub(wl, rs.half_sum), cls.torus_point);
  Rational prod = 1;
  for (int idx : d.fixed_positive) prod *= rs.pairing(wl, rs.roots[idx]);
  Rational det = determinant(w);
  return Cyclotomic(det * prod) * term;
}

Cyclotomic psi0_denominator(const RootSystem& rs, const EllipticClassData& cls,
                            const DerivedClassData& d) {
  Cyclotomic denom(Rational(1));
  for (int idx : rs.positive) {
    if (std::binary_search(d.fixed_positive.begin(), d.fixed_positive.end(), idx)) continue;
    Cyclotomic factor = Cyclotomic(Rational(1)) -
                        character_value(rs, vec_scale(-1, rs.roots[idx]), cls.torus_point);
    if (factor.is_zero())
      fail_inconsistency("DivisorVanishes",
                         "e^{-alpha}(y) = 1 outside Phi_y for class '" + cls.label + "'");
    denom = denom * factor;
  }
  return denom;
}

MultiplicityValue class_sum(const RootSystem& rs, const LatticeData& ld, const Vec& lambda,
                            WyMode mode) {
  Cyclotomic acc;
  for (const auto& cls : ld.classes) {
    DerivedClassData d = derive_class(rs, cls, mode);
    acc = acc + Cyclotomic(cls.vol) * psi(rs, cls, d, lambda);
  }
  return make_multiplicity_value(acc);
}

}  // namespace

Cyclotomic psi0(const RootSystem& rs, const EllipticClassData& cls, const DerivedClassData& d,
                const Vec& lambda) {
  Cyclotomic numerator;
  for (const Mat& w : rs.weyl_compact.elements)
    numerator = numerator + psi0_summand(rs, cls, d, lambda, w);
  Rational wy_inverse(1, static_cast<long>(d.wy.order()));
  return Cyclotomic(wy_inverse) * numerator / psi0_denominator(rs, cls, d);
}

Cyclotomic psi(const RootSystem& rs, const EllipticClassData& cls, const DerivedClassData& d,
               const Vec& lambda) {
  Rational delta_prod = 1;
  for (int idx : d.fixed_positive) delta_prod *= rs.pairing(d.half_sum_fixed, rs.roots[idx]);
  if (delta_prod == 0)
    fail_validation("DegenerateClass", "delta_y product vanishes for class '" + cls.label + "'");
  Rational factor = Rational(d.sign) /
                    (delta_prod * Rational(static_cast<long>(d.wy.order())) *
                     Rational(static_cast<long>(cls.component_index)));
  return Cyclotomic(factor) * psi0(rs, cls, d, lambda);
}

MultiplicityValue multiplicity(const RootSystem& rs, const LatticeData& ld, const HCParam& p,
                               WyMode mode) {
  if (!in_D(rs, p.lambda) || !in_Dstar(rs, p))
    fail_validation("NotInDstar", "multiplicity requires a parameter in D*(G)");
  return class_sum(rs, ld, p.lambda, mode);
}

MultiplicityValue lefschetz(const RootSystem& rs, const LatticeData& ld, const HCParam& p,
                            WyMode mode) {
  if (!in_D(rs, p.lambda))
    fail_validation("NotInDstar", "Lefschetz number requires a parameter in D(G)");
  Mat w0 = find_w0(rs, p.chamber);
  auto [length, det] = length_and_sign(rs, w0);
  (void)det;
  MultiplicityValue m = class_sum(rs, ld, p.lambda, mode);
  if (length % 2 == 1) {
    m.value = -m.value;
    if (m.rational_part) m.rational_part = -*m.rational_part;
  }
  return m;
}

Rational formal_degree(const RootSystem& rs, const Vec& lambda) {
  Rational num = 1, den = 1;
  for (int idx : rs.positive) {
    num *= rs.pairing(lambda, rs.roots[idx]);
    den *= rs.pairing(rs.half_sum, rs.roots[idx]);
  }
  return num / (den * Rational(static_cast<long>(rs.weyl.order())));
}

Cyclotomic character_at(const RootSystem& rs, const EllipticClassData& cls, const HCParam& p) {
  DerivedClassData d = derive_class(rs, cls);
  if (!d.fixed_roots.empty())
    fail_validation("SingularElement",
                    "character formula needs a regular class (Phi_y empty), class '" + cls.label +
                        "' is singular");
  Rational prod = 1;
  for (int idx : rs.positive) prod *= rs.pairing(p.lambda, rs.roots[idx]);

  Cyclotomic numerator;
  for (const Mat& w : rs.weyl_compact.elements) {
    Rational det = determinant(w);
    numerator =
        numerator + Cyclotomic(det) * character_value(rs, mat_vec(w, p.lambda), cls.torus_point);
  }

  Cyclotomic denominator(Rational(1));
  for (int idx : rs.positive) {
    Vec half = vec_scale(Rational(1, 2), rs.roots[idx]);
    Cyclotomic factor = character_value(rs, half, cls.torus_point) -
                        character_value(rs, vec_scale(-1, half), cls.torus_point);
    denominator = denominator * factor;
  }

  const int m = rs.noncompact_count / 2;
  Rational sign = m % 2 == 0 ? 1 : -1;
  return Cyclotomic(sign * prod) * numerator / denominator;
}

CosetAudit audit_coset_constancy(const RootSystem& rs, const EllipticClassData& cls,
                                 const DerivedClassData& d, const Vec& lambda) {
  CosetAudit audit;
  for (const Mat& w : rs.weyl_compact.elements) {
    Cyclotomic reference = psi0_summand(rs, cls, d, lambda, w);
    for (const Mat& u : d.wy.elements) {
      if (psi0_summand(rs, cls, d, lambda, mat_mul(u, w)) != reference)
        audit.left_invariant = false;
      if (psi0_summand(rs, cls, d, lambda, mat_mul(w, u)) != reference)
        audit.right_invariant = false;
    }
  }
  return audit;
}

Rational predicted_convention_constant(const RootSystem& rs, WyMode mode) {
  EllipticClassData identity;
  identity.label = "identity";
  identity.torus_point.assign(rs.rank, Rational(0));
  identity.order = 1;
  identity.vol = 1;
  DerivedClassData d = derive_class(rs, identity, mode);
  Rational wy(static_cast<long>(d.wy.order()));
  return Rational(static_cast<long>(rs.weyl_compact.order())) *
         Rational(static_cast<long>(rs.weyl.order())) / (wy * wy);
}

Rational measured_convention_constant(const RootSystem& rs, WyMode mode, int count) {
  LatticeData ld;
  ld.root_system = rs;
  EllipticClassData identity;
  identity.label = "identity";
  identity.torus_point.assign(rs.rank, Rational(0));
  identity.order = 1;
  identity.vol = 1;
  ld.classes.push_back(identity);
  ld.max_elliptic_order = 1;

  Vec two_delta = vec_scale(Rational(2), rs.half_sum);
  std::optional<Rational> ratio;
  int seen = 0;
  for (long j = 1; seen < count; ++j) {
    Vec v = vec_scale(Rational(j), two_delta);
    if (!in_D(rs, v)) continue;
    HCParam p = make_hc_param(rs, v);
    if (!in_Dstar(rs, p)) continue;
    MultiplicityValue m = multiplicity(ld.root_system, ld, p, mode);
    Rational r = m.value.to_rational() / formal_degree(rs, v);
    if (!ratio)
      ratio = r;
    else if (*ratio != r)
      fail_inconsistency("Mismatch", "convention ratio is not parameter independent");
    ++seen;
  }
  return *ratio;
}

}  // namespace dsm
