#pragma once

#include <string>
#include <vector>

#include "dsm/cyclotomic.hpp"
#include "dsm/root_system.hpp"

namespace dsm {

// One conjugacy class of elliptic elements, given by torus data: the
// class element is exp of the torus point t, characters evaluate as
// e^mu(y) = e^{2 pi i <mu, t>}. Volume and component index are declared
// inputs, never computed.
struct EllipticClassData {
  std::string label;
  Vec torus_point;
  unsigned long order = 1;          // n_y with n_y <alpha, t> integral for all roots
  Rational vol;                     // vol(Gamma_y \ G_y) > 0
  unsigned long component_index = 1;  // [G_y : G_y^0]
};

// Which subgroup plays the role of W_y in the local terms. The default
// takes the reflections in the compact roots vanishing on y, which is a
// genuine subgroup of W_c; the alternative takes the full reflection
// group of Phi_y.
enum class WyMode { CompactSubgroup, FullSubsystem };

std::string to_string(WyMode mode);
WyMode parse_wy_mode(const std::string& text);

struct DerivedClassData {
  std::vector<int> fixed_roots;           // Phi_y = {alpha : <alpha,t> integral}
  std::vector<int> fixed_positive;        // Phi_y+ = Phi+ cap Phi_y
  Vec half_sum_fixed;                     // delta_y
  WeylGroup wy;                           // per WyMode
  int fixed_noncompact = 0;               // d_y = |Phi_y cap Phi_n|
  int sign = 1;                           // (-1)^{(d + d_y)/2}
};

struct LatticeData {
  RootSystem root_system;
  std::vector<EllipticClassData> classes;
  unsigned long max_elliptic_order = 1;  // lcm of the class orders
  std::vector<std::string> warnings;
};

// Dataset JSON: {"root_system": <inline object | builtin name | path>,
// "classes": [{"label", "t", "order", "vol", "component_index"}]}.
// Rationals are strings "p/q" or "n". Relative root-system paths
// resolve against base_dir.
LatticeData load_lattice_json(const std::string& json_text, const std::string& base_dir = ".");
LatticeData load_lattice_file(const std::string& path);

DerivedClassData derive_class(const RootSystem& rs, const EllipticClassData& cls,
                              WyMode mode = WyMode::CompactSubgroup);

// e^mu(y) for y = exp(t).
Cyclotomic character_value(const RootSystem& rs, const Vec& mu, const Vec& torus_point);

// lcm over classes y and w in W_c of the denominator of <w * direction, t_y>.
unsigned long effective_period(const RootSystem& rs, const std::vector<EllipticClassData>& classes,
                               const Vec& direction);

}  // namespace dsm
