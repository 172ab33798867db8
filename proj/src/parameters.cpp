#include "dsm/parameters.hpp"

#include <algorithm>

#include "dsm/errors.hpp"
#include "dsm/weyl.hpp"

namespace dsm {

HCParam make_hc_param(const RootSystem& rs, const Vec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank))
    fail_validation("SchemaError", "parameter dimension must equal rank");
  if (!is_regular_form(rs, lambda))
    fail_validation("SchemaError", "parameter must be regular");
  if (!is_integral_form(rs, lambda))
    fail_validation("SchemaError", "parameter must be integral");
  HCParam p;
  p.lambda = lambda;
  p.chamber = chamber_of(rs, lambda);
  Vec half(rs.rank, Rational(0));
  for (int idx : p.chamber) half = vec_add(half, rs.roots[idx]);
  p.chamber_half_sum = vec_scale(Rational(1, 2), half);
  return p;
}

bool in_D(const RootSystem& rs, const Vec& lambda) {
  if (!is_regular_form(rs, lambda) || !is_integral_form(rs, lambda)) return false;
  for (int idx : rs.positive_compact)
    if (rs.pairing(lambda, rs.roots[idx]) <= 0) return false;
  return true;
}

bool in_Dstar(const RootSystem& rs, const HCParam& p) {
  Vec shifted = vec_sub(p.lambda, p.chamber_half_sum);
  for (int idx : p.chamber) {
    if (rs.compact[idx]) continue;
    if (rs.pairing(shifted, rs.roots[idx]) <= 0) return false;
  }
  return true;
}

bool satisfies_tv_estimate(const RootSystem& rs, const HCParam& p) {
  for (int b : p.chamber) {
    if (rs.compact[b]) continue;
    const Vec& beta = rs.roots[b];
    Rational lhs = abs(rs.pairing(p.lambda, beta));
    Rational rhs = 0;
    for (int a : p.chamber) rhs += abs(rs.pairing(rs.roots[a], beta));
    if (!(lhs > rhs / 2)) return false;
  }
  return true;
}

StringSpec make_string(const RootSystem& rs, const HCParam& base, const HCParam& direction) {
  if (!in_D(rs, base.lambda) || !in_D(rs, direction.lambda))
    fail_validation("SchemaError", "string endpoints must lie in D(G)");
  if (base.chamber != direction.chamber)
    fail_validation("ChamberMismatch",
                    "base and direction cut different chambers; translate by a Weyl element first");
  StringSpec s;
  s.base = base;
  s.direction = direction;
  s.chamber = base.chamber;
  s.base_in_dstar = in_Dstar(rs, base);
  s.direction_in_dstar = in_Dstar(rs, direction);
  return s;
}

HCParam string_member(const RootSystem& rs, const StringSpec& s, long k) {
  if (k < 0) fail_validation("SchemaError", "string members are indexed by k >= 0");
  Vec v = vec_add(s.base.lambda, vec_scale(Rational(k), s.direction.lambda));
  return make_hc_param(rs, v);
}

bool string_members_inequivalent(const RootSystem& rs, const StringSpec& s, long upto) {
  std::vector<Vec> members;
  for (long k = 0; k <= upto; ++k) members.push_back(string_member(rs, s, k).lambda);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (const Mat& w : rs.weyl_compact.elements)
        if (mat_vec(w, members[i]) == members[j]) return false;
  return true;
}

MultiStringSpec make_multi_string(const RootSystem& rs, const std::vector<HCParam>& directions) {
  if (directions.empty()) fail_validation("SchemaError", "multi-string needs directions");
  bool any_dstar = false;
  for (const auto& d : directions) {
    if (!in_D(rs, d.lambda))
      fail_validation("SchemaError", "multi-string directions must lie in D(G)");
    if (d.chamber != directions.front().chamber)
      fail_validation("ChamberMismatch", "multi-string directions must share a chamber");
    any_dstar = any_dstar || in_Dstar(rs, d);
  }
  if (!any_dstar)
    fail_validation("NotInDstar", "at least one direction must lie in D*(G)");
  return MultiStringSpec{directions, directions.front().chamber};
}

HCParam multi_string_member(const RootSystem& rs, const MultiStringSpec& s,
                            const std::vector<long>& k) {
  if (k.size() != s.directions.size())
    fail_validation("SchemaError", "multi-index arity mismatch");
  bool all_zero = true;
  Vec v(rs.rank, Rational(0));
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) fail_validation("SchemaError", "multi-index entries must be >= 0");
    if (k[i] > 0) all_zero = false;
    v = vec_add(v, vec_scale(Rational(k[i]), s.directions[i].lambda));
  }
  if (all_zero) fail_validation("SchemaError", "the zero multi-index is excluded");
  return make_hc_param(rs, v);
}

std::pair<long, HCParam> exhaustion_witness(const RootSystem& rs, const HCParam& l1,
                                            const HCParam& l2) {
  if (!in_Dstar(rs, l1)) fail_validation("NotInDstar", "witness base must lie in D*(G)");
  if (l1.chamber != l2.chamber)
    fail_validation("ChamberMismatch", "witness parameters must share a chamber");
  Mat rows{l1.lambda, l2.lambda};
  if (matrix_rank(rows) < 2)
    fail_validation("SchemaError", "witness parameters must be linearly independent");
  for (long m = 1;; ++m) {
    Vec v = vec_sub(vec_scale(Rational(m), l1.lambda), l2.lambda);
    if (!is_regular_form(rs, v) || !is_integral_form(rs, v)) continue;
    if (chamber_of(rs, v) != l1.chamber) continue;
    HCParam mu = make_hc_param(rs, v);
    if (in_Dstar(rs, mu)) return {m, mu};
  }
}

}  // namespace dsm
