#include "dsm/root_system.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dsm/errors.hpp"
#include "dsm/weyl.hpp"

namespace dsm {

Rational RootSystem::pairing(const Vec& x, const Vec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) s += x[i] * gram[i][j] * y[j];
  }
  return s;
}

int RootSystem::root_index(const Vec& v) const {
  auto it = index_of_root.find(v);
  return it == index_of_root.end() ? -1 : it->second;
}

bool RootSystem::is_positive_index(int idx) const {
  return std::binary_search(positive.begin(), positive.end(), idx);
}

namespace {

[[noreturn]] void invalid(const std::string& axiom) {
  fail_validation("InvalidRootSystem", axiom);
}

void validate_and_derive(RootSystem& rs) {
  const int r = rs.rank;
  if (r <= 0) invalid("rank must be positive");
  if (rs.gram.size() != static_cast<std::size_t>(r)) invalid("gram must be rank x rank");
  for (const auto& row : rs.gram)
    if (row.size() != static_cast<std::size_t>(r)) invalid("gram must be rank x rank");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs.gram[i][j] != rs.gram[j][i]) invalid("gram must be symmetric");
  // positive definiteness via leading principal minors
  for (int k = 1; k <= r; ++k) {
    Mat minor(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = rs.gram[i][j];
    if (determinant(minor) <= 0) invalid("gram must be positive definite");
  }

  if (rs.roots.empty()) invalid("root list must be nonempty");
  if (rs.compact.size() != rs.roots.size()) invalid("compact flags must match root list");
  for (const auto& alpha : rs.roots) {
    if (alpha.size() != static_cast<std::size_t>(r)) invalid("root dimension must equal rank");
    if (is_zero_vec(alpha)) invalid("roots must be nonzero");
  }
  rs.index_of_root.clear();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (!rs.index_of_root.emplace(rs.roots[i], static_cast<int>(i)).second)
      invalid("roots must be distinct");
  }

  // negation closure, coloring symmetry
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    Vec neg = vec_scale(-1, rs.roots[i]);
    int j = rs.root_index(neg);
    if (j < 0) invalid("Phi must be closed under negation");
    if (rs.compact[i] != rs.compact[j]) invalid("compact coloring must be negation symmetric");
  }

  // Cartan integrality and reflection closure
  for (const auto& alpha : rs.roots) {
    for (const auto& beta : rs.roots) {
      Rational cartan = 2 * rs.pairing(alpha, beta) / rs.pairing(beta, beta);
      if (!is_integer(cartan)) invalid("Cartan integers must be integral");
      Vec reflected = vec_sub(alpha, vec_scale(cartan, beta));
      if (rs.root_index(reflected) < 0) invalid("Phi must be closed under reflections");
    }
  }

  // positive system: exactly one of each pair, closed under sums in Phi
  std::sort(rs.positive.begin(), rs.positive.end());
  std::vector<bool> pos(rs.roots.size(), false);
  for (int idx : rs.positive) {
    if (idx < 0 || idx >= static_cast<int>(rs.roots.size())) invalid("positive index out of range");
    if (pos[idx]) invalid("positive indices must be distinct");
    pos[idx] = true;
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    int j = rs.root_index(vec_scale(-1, rs.roots[i]));
    if (pos[i] == pos[j]) invalid("positive system must contain exactly one of each root pair");
  }
  for (int i : rs.positive)
    for (int j : rs.positive) {
      int k = rs.root_index(vec_add(rs.roots[i], rs.roots[j]));
      if (k >= 0 && !pos[k]) invalid("positive system must be closed under sums");
    }

  int noncompact = 0;
  for (bool c : rs.compact)
    if (!c) ++noncompact;
  if (noncompact % 2 != 0) invalid("|Phi_n| must be even");
  rs.noncompact_count = noncompact;

  rs.positive_compact.clear();
  rs.positive_noncompact.clear();
  rs.half_sum.assign(r, 0);
  rs.half_sum_compact.assign(r, 0);
  for (int idx : rs.positive) {
    rs.half_sum = vec_add(rs.half_sum, rs.roots[idx]);
    if (rs.compact[idx]) {
      rs.positive_compact.push_back(idx);
      rs.half_sum_compact = vec_add(rs.half_sum_compact, rs.roots[idx]);
    } else {
      rs.positive_noncompact.push_back(idx);
    }
  }
  rs.half_sum = vec_scale(Rational(1, 2), rs.half_sum);
  rs.half_sum_compact = vec_scale(Rational(1, 2), rs.half_sum_compact);
  rs.half_sum_noncompact = vec_sub(rs.half_sum, rs.half_sum_compact);

  std::vector<int> all_roots(rs.roots.size());
  for (std::size_t i = 0; i < rs.roots.size(); ++i) all_roots[i] = static_cast<int>(i);
  rs.weyl = generate_reflection_group(rs.gram, rs.roots, all_roots);
  std::vector<int> compact_roots;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.compact[i]) compact_roots.push_back(static_cast<int>(i));
  rs.weyl_compact = generate_reflection_group(rs.gram, rs.roots, compact_roots);
}

Vec parse_vec(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) fail_validation("SchemaError", what + " must be an array");
  Vec v;
  for (const auto& e : j) {
    if (e.is_number_integer())
      v.push_back(Rational(e.get<long>()));
    else if (e.is_string())
      v.push_back(parse_rational(e.get<std::string>()));
    else
      fail_validation("SchemaError", what + " entries must be integers or 'p/q' strings");
  }
  return v;
}

}  // namespace

RootSystem load_root_system_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail_validation("SchemaError", std::string("root system JSON: ") + e.what());
  }
  if (!j.is_object()) fail_validation("SchemaError", "root system must be a JSON object");
  for (const char* key : {"rank", "gram", "roots", "compact", "positive"})
    if (!j.contains(key)) fail_validation("SchemaError", std::string("missing key '") + key + "'");

  RootSystem rs;
  rs.rank = j["rank"].get<int>();
  Vec flat = parse_vec(j["gram"], "gram");
  if (flat.size() != static_cast<std::size_t>(rs.rank) * rs.rank)
    fail_validation("SchemaError", "gram must have rank*rank entries (row-major)");
  rs.gram.assign(rs.rank, Vec(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.rank; ++k) rs.gram[i][k] = flat[i * rs.rank + k];
  for (const auto& root : j["roots"]) rs.roots.push_back(parse_vec(root, "root"));
  for (const auto& flag : j["compact"]) rs.compact.push_back(flag.get<bool>());
  for (const auto& idx : j["positive"]) rs.positive.push_back(idx.get<int>());
  validate_and_derive(rs);
  return rs;
}

RootSystem load_root_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open root system file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_root_system_json(buf.str());
}

RootSystem sl2_root_system() {
  RootSystem rs;
  rs.rank = 1;
  rs.gram = {{Rational(2)}};
  rs.roots = {{Rational(1)}, {Rational(-1)}};  // alpha, -alpha
  rs.compact = {false, false};
  rs.positive = {0};
  validate_and_derive(rs);
  return rs;
}

RootSystem su21_root_system() {
  // Rank-2 system of six roots in simple-root coordinates; a1 is the
  // compact pair, a2 and a1+a2 are noncompact.
  RootSystem rs;
  rs.rank = 2;
  rs.gram = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
  rs.roots = {
      {Rational(1), Rational(0)},    // a1
      {Rational(0), Rational(1)},    // a2
      {Rational(1), Rational(1)},    // a1+a2
      {Rational(-1), Rational(0)},  {Rational(0), Rational(-1)}, {Rational(-1), Rational(-1)},
  };
  rs.compact = {true, false, false, true, false, false};
  rs.positive = {0, 1, 2};
  validate_and_derive(rs);
  return rs;
}

bool is_regular_form(const RootSystem& rs, const Vec& lambda) {
  for (int idx : rs.positive)
    if (rs.pairing(lambda, rs.roots[idx]) == 0) return false;
  return true;
}

bool is_integral_form(const RootSystem& rs, const Vec& lambda) {
  Vec shifted = vec_sub(lambda, rs.half_sum);
  for (const auto& alpha : rs.roots) {
    Rational c = 2 * rs.pairing(shifted, alpha) / rs.pairing(alpha, alpha);
    if (!is_integer(c)) return false;
  }
  return true;
}

std::vector<int> chamber_of(const RootSystem& rs, const Vec& lambda) {
  std::vector<int> out;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    Rational p = rs.pairing(lambda, rs.roots[i]);
    if (p == 0) fail_validation("SchemaError", "chamber of a non-regular form");
    if (p > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

Mat reflection_matrix(const Mat& gram, const std::vector<Vec>& roots, int root_index) {
  const Vec& beta = roots[root_index];
  const std::size_t n = beta.size();
  Rational beta_sq = 0;
  Vec gbeta(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gbeta[i] += gram[i][j] * beta[j];
  }
  for (std::size_t i = 0; i < n; ++i) beta_sq += beta[i] * gbeta[i];
  // columns are s(e_j) = e_j - (2<e_j,beta>/<beta,beta>) beta
  Mat m = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational coeff = 2 * gbeta[j] / beta_sq;
    for (std::size_t i = 0; i < n; ++i) m[i][j] -= coeff * beta[i];
  }
  return m;
}

}  // namespace dsm
