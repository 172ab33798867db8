#pragma once

#include <utility>
#include <vector>

#include "dsm/root_system.hpp"

namespace dsm {

// A regular integral linear form with its chamber P^lambda and the
// chamber half sum delta^lambda cached.
struct HCParam {
  Vec lambda;
  std::vector<int> chamber;  // P^lambda as sorted root indices
  Vec chamber_half_sum;      // delta^lambda
};

// Validates regularity and integrality.
HCParam make_hc_param(const RootSystem& rs, const Vec& lambda);

// lambda integral, regular, and positive on the compact positive roots.
bool in_D(const RootSystem& rs, const Vec& lambda);

// <lambda - delta^lambda, alpha> > 0 for all noncompact alpha in
// P^lambda. Callers must have lambda in D(G).
bool in_Dstar(const RootSystem& rs, const HCParam& p);

// |<lambda, beta>| > 1/2 sum_{alpha in P^lambda} |<alpha, beta>| for
// every noncompact beta in P^lambda. Implies membership in D*(G).
bool satisfies_tv_estimate(const RootSystem& rs, const HCParam& p);

// The string lambda_k = base + k * direction, k >= 0. Both endpoints
// must lie in D(G) and share a chamber. Every member with k >= 1 lies
// in D*(G) as soon as the base or the direction does; the k = 0 member
// is the base itself and is only in D*(G) when the base is.
struct StringSpec {
  HCParam base;
  HCParam direction;
  std::vector<int> chamber;
  bool base_in_dstar = false;
  bool direction_in_dstar = false;
};

StringSpec make_string(const RootSystem& rs, const HCParam& base, const HCParam& direction);

HCParam string_member(const RootSystem& rs, const StringSpec& s, long k);

// No two members with indices <= upto are W_c-conjugate (full orbit
// comparison; W_c is small).
bool string_members_inequivalent(const RootSystem& rs, const StringSpec& s, long upto);

// Members sum_i k_i * direction_i over nonzero multi-indices. All
// directions share a chamber and at least one lies in D*(G).
struct MultiStringSpec {
  std::vector<HCParam> directions;
  std::vector<int> chamber;
};

MultiStringSpec make_multi_string(const RootSystem& rs, const std::vector<HCParam>& directions);

HCParam multi_string_member(const RootSystem& rs, const MultiStringSpec& s,
                            const std::vector<long>& k);

// Minimal m >= 1 with m*l1 - l2 in D*(G) and in the chamber of l1.
// Requires l1 in D*(G), equal chambers, and linear independence; the
// scan terminates because the first condition eventually dominates.
std::pair<long, HCParam> exhaustion_witness(const RootSystem& rs, const HCParam& l1,
                                            const HCParam& l2);

}  // namespace dsm
