#pragma once

#include <optional>

#include "dsm/lattice.hpp"
#include "dsm/parameters.hpp"

namespace dsm {

// A class-sum value. Rationality is checked, never assumed: for
// datasets that are not Galois consistent the cyclotomic value is still
// exact and rational_part stays empty.
struct MultiplicityValue {
  Cyclotomic value;
  std::optional<Rational> rational_part;

  bool is_integral() const {
    return rational_part.has_value() && is_integer(*rational_part);
  }
};

MultiplicityValue make_multiplicity_value(Cyclotomic v);

// Psi0_lambda(y), computed as the full W_c sum divided by |W_y|:
//
//   (1/|W_y|) sum_{w in W_c} det(w) e^{w lambda - delta}(y)
//                            prod_{alpha in Phi_y+} <w lambda, alpha>
//   ------------------------------------------------------------------
//              prod_{alpha in Phi+ \ Phi_y+} (1 - e^{-alpha}(y))
//
// Empty products are 1. Equals the coset sum over W_c/W_y whenever the
// summand is constant on cosets (see audit_coset_constancy).
Cyclotomic psi0(const RootSystem& rs, const EllipticClassData& cls, const DerivedClassData& d,
                const Vec& lambda);

// Psi_lambda(y) = sign * prod_{Phi_y+} <delta_y, alpha>^{-1} * Psi0 /
// (|W_y| [G_y : G_y^0]), with sign = (-1)^{(d + d_y)/2}.
Cyclotomic psi(const RootSystem& rs, const EllipticClassData& cls, const DerivedClassData& d,
               const Vec& lambda);

// sum over classes of vol(Gamma_y \ G_y) Psi_lambda(y). Requires the
// parameter in D*(G); throws NotInDstar otherwise.
MultiplicityValue multiplicity(const RootSystem& rs, const LatticeData& ld, const HCParam& p,
                               WyMode mode = WyMode::CompactSubgroup);

// (-1)^{l(w0)} times the same class sum, where w0 maps the fixed
// positive system onto P^lambda. Defined for every parameter in D(G).
MultiplicityValue lefschetz(const RootSystem& rs, const LatticeData& ld, const HCParam& p,
                            WyMode mode = WyMode::CompactSubgroup);

// prod_{Phi+} <lambda, alpha> / (prod_{Phi+} <delta, alpha> * |W|),
// pairings taken for the fixed positive system; signed. Use abs() for
// the absolute normalization.
Rational formal_degree(const RootSystem& rs, const Vec& lambda);

// Global character at a regular torsion point (Phi_y must be empty):
//
//   (-1)^{d/2} prod <lambda,alpha> sum_{W_c} det(w) e^{w lambda}(y)
//   ---------------------------------------------------------------
//           prod_{Phi+} (e^{alpha/2}(y) - e^{-alpha/2}(y))
//
// Half weights land in conductor 2L.
Cyclotomic character_at(const RootSystem& rs, const EllipticClassData& cls, const HCParam& p);

// Whether the Psi0 summand is invariant under W_y translation on each
// side. Left invariance (w -> u w) is the provable one; both coincide
// when W_c is abelian.
struct CosetAudit {
  bool left_invariant = true;
  bool right_invariant = true;
};

CosetAudit audit_coset_constancy(const RootSystem& rs, const EllipticClassData& cls,
                                 const DerivedClassData& d, const Vec& lambda);

// The lambda-independent ratio multiplicity / (vol * formal_degree) on
// a torsion-free dataset; |W_c| |W| / |W_y(1)|^2 structurally.
Rational predicted_convention_constant(const RootSystem& rs, WyMode mode);
// Same constant measured by the ratio test over `count` parameters
// (throws Mismatch if the ratio is not constant).
Rational measured_convention_constant(const RootSystem& rs, WyMode mode, int count = 20);

}  // namespace dsm
