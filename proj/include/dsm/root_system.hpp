#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsm/linalg.hpp"
#include "dsm/rational.hpp"

namespace dsm {

// Elements stored as matrices acting on column vectors; closed under
// product and inverse, identity first.
struct WeylGroup {
  std::vector<Mat> elements;
  std::vector<int> generator_roots;  // indices into RootSystem::roots
  std::size_t order() const { return elements.size(); }
};

// A root system with compact/noncompact coloring and a fixed positive
// system. All derived data (half sums, Weyl groups) is computed at load
// time; the object is immutable afterwards.
struct RootSystem {
  int rank = 0;
  Mat gram;                   // symmetric positive definite
  std::vector<Vec> roots;     // Phi
  std::vector<bool> compact;  // Phi_c membership per root
  std::vector<int> positive;  // indices of Phi+, sorted

  std::vector<int> positive_compact;     // Phi_c+
  std::vector<int> positive_noncompact;  // Phi_n+
  Vec half_sum;                          // delta
  Vec half_sum_compact;                  // delta_c
  Vec half_sum_noncompact;               // delta_n
  int noncompact_count = 0;              // |Phi_n| = dim p

  WeylGroup weyl;          // W
  WeylGroup weyl_compact;  // W_c

  Rational pairing(const Vec& x, const Vec& y) const;
  int root_index(const Vec& v) const;  // -1 when absent
  bool is_positive_index(int idx) const;

  std::map<Vec, int> index_of_root;
};

// Validates every axiom (negation closure, coloring symmetry, Cartan
// integrality, reflection closure, positivity closure, |Phi_n| even) and
// caches derived data. Throws InvalidRootSystem naming the first
// violated axiom.
RootSystem load_root_system_json(const std::string& json_text);
RootSystem load_root_system_file(const std::string& path);

// Built-in systems: the rank-1 system of SL(2,R) (no compact roots) and
// a rank-2 system with one compact root pair (six roots total).
RootSystem sl2_root_system();
RootSystem su21_root_system();

// Shared linear-form predicates over a fixed root system.
bool is_regular_form(const RootSystem& rs, const Vec& lambda);
bool is_integral_form(const RootSystem& rs, const Vec& lambda);
// The positive system cut out by a regular form, as sorted root indices.
std::vector<int> chamber_of(const RootSystem& rs, const Vec& lambda);

Mat reflection_matrix(const Mat& gram, const std::vector<Vec>& roots, int root_index);

}  // namespace dsm
