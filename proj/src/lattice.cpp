#include "dsm/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "dsm/errors.hpp"
#include "dsm/weyl.hpp"

namespace dsm {

std::string to_string(WyMode mode) {
  return mode == WyMode::CompactSubgroup ? "compact-subgroup" : "full-subsystem";
}

WyMode parse_wy_mode(const std::string& text) {
  if (text == "compact-subgroup") return WyMode::CompactSubgroup;
  if (text == "full-subsystem") return WyMode::FullSubsystem;
  fail_validation("SchemaError", "unknown wy-mode '" + text + "'");
}

namespace {

Rational json_rational(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail_validation("SchemaError", what + " must be an integer or a 'p/q' string");
}

Vec json_vec(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) fail_validation("SchemaError", what + " must be an array");
  Vec v;
  for (const auto& e : j) v.push_back(json_rational(e, what + " entry"));
  return v;
}

// Smallest n >= 1 with n <alpha, t> integral for all roots.
unsigned long minimal_root_order(const RootSystem& rs, const Vec& t) {
  unsigned long n = 1;
  for (const auto& alpha : rs.roots) n = lcm_ulong(n, denominator_ulong(rs.pairing(alpha, t)));
  return n;
}

}  // namespace

LatticeData load_lattice_json(const std::string& json_text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail_validation("SchemaError", std::string("dataset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("root_system") || !j.contains("classes"))
    fail_validation("SchemaError", "dataset needs 'root_system' and 'classes'");

  LatticeData ld;
  const auto& rsj = j["root_system"];
  if (rsj.is_object()) {
    ld.root_system = load_root_system_json(rsj.dump());
  } else if (rsj.is_string()) {
    const std::string name = rsj.get<std::string>();
    if (name == "sl2")
      ld.root_system = sl2_root_system();
    else if (name == "su21")
      ld.root_system = su21_root_system();
    else {
      std::string path = name;
      if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
      ld.root_system = load_root_system_file(path);
    }
  } else {
    fail_validation("SchemaError", "root_system must be an object, builtin name, or path");
  }

  if (!j["classes"].is_array() || j["classes"].empty())
    fail_validation("SchemaError", "classes must be a nonempty array");

  std::set<std::string> labels;
  const RootSystem& rs = ld.root_system;
  for (const auto& cj : j["classes"]) {
    EllipticClassData cls;
    if (!cj.contains("label") || !cj.contains("t") || !cj.contains("order") ||
        !cj.contains("vol"))
      fail_validation("SchemaError", "class needs 'label', 't', 'order', 'vol'");
    cls.label = cj["label"].get<std::string>();
    if (!labels.insert(cls.label).second)
      fail_validation("SchemaError", "duplicate class label '" + cls.label + "'");
    cls.torus_point = json_vec(cj["t"], "torus point");
    if (cls.torus_point.size() != static_cast<std::size_t>(rs.rank))
      fail_validation("SchemaError", "torus point dimension must equal rank");
    long order = cj["order"].get<long>();
    if (order < 1) fail_validation("SchemaError", "class order must be positive");
    cls.order = static_cast<unsigned long>(order);
    cls.vol = json_rational(cj["vol"], "vol");
    if (cls.vol <= 0) fail_validation("SchemaError", "vol must be positive");
    if (cj.contains("component_index")) {
      long ci = cj["component_index"].get<long>();
      if (ci < 1) fail_validation("SchemaError", "component_index must be >= 1");
      cls.component_index = static_cast<unsigned long>(ci);
    }

    for (const auto& alpha : rs.roots) {
      Rational scaled = Rational(static_cast<long>(cls.order)) * rs.pairing(alpha, cls.torus_point);
      if (!is_integer(scaled))
        fail_validation("OrderInconsistent",
                        "class '" + cls.label + "': order * <alpha, t> is not integral");
    }
    unsigned long minimal = minimal_root_order(rs, cls.torus_point);
    if (minimal != cls.order)
      ld.warnings.push_back("class '" + cls.label + "': declared order " +
                            std::to_string(cls.order) +
                            " is not minimal for the root divisibility condition (minimal " +
                            std::to_string(minimal) + ")");
    ld.classes.push_back(std::move(cls));
  }

  ld.max_elliptic_order = 1;
  for (const auto& cls : ld.classes)
    ld.max_elliptic_order = lcm_ulong(ld.max_elliptic_order, cls.order);
  return ld;
}

LatticeData load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open dataset file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir = ".";
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return load_lattice_json(buf.str(), dir);
}

DerivedClassData derive_class(const RootSystem& rs, const EllipticClassData& cls, WyMode mode) {
  DerivedClassData d;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (is_integer(rs.pairing(rs.roots[i], cls.torus_point)))
      d.fixed_roots.push_back(static_cast<int>(i));
  }
  for (int idx : d.fixed_roots)
    if (rs.is_positive_index(idx)) d.fixed_positive.push_back(idx);

  Vec half(rs.rank, Rational(0));
  for (int idx : d.fixed_positive) half = vec_add(half, rs.roots[idx]);
  d.half_sum_fixed = vec_scale(Rational(1, 2), half);
  for (int idx : d.fixed_positive) {
    if (rs.pairing(d.half_sum_fixed, rs.roots[idx]) == 0)
      fail_validation("DegenerateClass",
                      "class '" + cls.label + "': delta_y vanishes on a fixed positive root");
  }

  std::vector<int> generators;
  for (int idx : d.fixed_roots) {
    if (mode == WyMode::CompactSubgroup) {
      if (rs.compact[idx]) generators.push_back(idx);
    } else {
      generators.push_back(idx);
    }
  }
  d.wy = generate_reflection_group(rs.gram, rs.roots, generators);

  d.fixed_noncompact = 0;
  for (int idx : d.fixed_roots)
    if (!rs.compact[idx]) ++d.fixed_noncompact;
  const int exponent = (rs.noncompact_count + d.fixed_noncompact) / 2;
  d.sign = exponent % 2 == 0 ? 1 : -1;
  return d;
}

Cyclotomic character_value(const RootSystem& rs, const Vec& mu, const Vec& torus_point) {
  return unit_exponential(rs.pairing(mu, torus_point));
}

unsigned long effective_period(const RootSystem& rs, const std::vector<EllipticClassData>& classes,
                               const Vec& direction) {
  unsigned long n = 1;
  for (const auto& cls : classes) {
    for (const Mat& w : rs.weyl_compact.elements) {
      Rational x = rs.pairing(mat_vec(w, direction), cls.torus_point);
      n = lcm_ulong(n, denominator_ulong(x));
    }
  }
  return n;
}

}  // namespace dsm
