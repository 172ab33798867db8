#include "dsm/weyl.hpp"

#include <algorithm>
#include <set>

#include "dsm/errors.hpp"

namespace dsm {

WeylGroup generate_reflection_group(const Mat& gram, const std::vector<Vec>& roots,
                                    const std::vector<int>& generator_roots) {
  const std::size_t n = gram.size();
  WeylGroup group;
  group.generator_roots = generator_roots;

  // Deduplicate generators coming from +/- pairs of the same line.
  std::vector<Mat> gens;
  for (int idx : generator_roots) {
    Mat s = reflection_matrix(gram, roots, idx);
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }

  std::set<Mat> seen;
  std::vector<Mat> frontier{identity_matrix(n)};
  seen.insert(frontier[0]);
  group.elements.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& w : frontier) {
      for (const Mat& s : gens) {
        Mat prod = mat_mul(s, w);
        if (seen.insert(prod).second) {
          group.elements.push_back(prod);
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

const WeylGroup& generate_weyl(const RootSystem& rs, bool compact_only) {
  return compact_only ? rs.weyl_compact : rs.weyl;
}

std::pair<unsigned, int> length_and_sign(const RootSystem& rs, const Mat& w) {
  unsigned length = 0;
  for (int idx : rs.positive) {
    Vec image = mat_vec(w, vec_scale(-1, rs.roots[idx]));
    int j = rs.root_index(image);
    if (j < 0) fail_validation("InvalidRootSystem", "element does not permute Phi");
    if (rs.is_positive_index(j)) ++length;
  }
  Rational det = determinant(w);
  if (det != 1 && det != -1)
    fail_validation("InvalidRootSystem", "element determinant is not a unit");
  return {length, det == 1 ? 1 : -1};
}

std::vector<int> image_positive(const RootSystem& rs, const Mat& w) {
  std::vector<int> out;
  out.reserve(rs.positive.size());
  for (int idx : rs.positive) {
    int j = rs.root_index(mat_vec(w, rs.roots[idx]));
    if (j < 0) fail_validation("InvalidRootSystem", "element does not permute Phi");
    out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mat find_w0(const RootSystem& rs, const std::vector<int>& target_positive) {
  std::vector<int> target = target_positive;
  std::sort(target.begin(), target.end());
  const Mat* found = nullptr;
  for (const Mat& w : rs.weyl.elements) {
    if (image_positive(rs, w) == target) {
      if (found)
        fail_inconsistency("Mismatch", "positive system reached by two Weyl elements");
      found = &w;
    }
  }
  if (!found) fail_validation("NoSuchElement", "target is not a chamber of Phi");
  return *found;
}

std::vector<std::vector<int>> chambers(const RootSystem& rs) {
  std::set<std::vector<int>> out;
  for (const Mat& w : rs.weyl.elements) out.insert(image_positive(rs, w));
  return {out.begin(), out.end()};
}

std::vector<Vec> chamber_basis(const RootSystem& rs, const std::vector<int>& sigma_plus) {
  std::vector<int> target = sigma_plus;
  std::sort(target.begin(), target.end());

  // pick rank independent roots as a scanning frame
  std::vector<Vec> frame;
  Mat stacked;
  for (const auto& alpha : rs.roots) {
    Mat trial = stacked;
    trial.push_back(alpha);
    if (matrix_rank(trial) > matrix_rank(stacked)) {
      stacked = std::move(trial);
      frame.push_back(alpha);
    }
    if (static_cast<int>(frame.size()) == rs.rank) break;
  }

  std::vector<Vec> basis;
  Mat basis_rows;
  const int r = rs.rank;
  for (long box = 1; static_cast<int>(basis.size()) < r; ++box) {
    std::vector<long> c(r, -box);
    while (true) {
      bool on_shell = false;
      for (long ci : c)
        if (ci == box || ci == -box) on_shell = true;
      if (on_shell) {
        Vec candidate(r, Rational(0));
        for (int i = 0; i < r; ++i)
          candidate = vec_add(candidate, vec_scale(Rational(c[i]), frame[i]));
        if (!is_zero_vec(candidate) && is_regular_form(rs, candidate) &&
            is_integral_form(rs, candidate) && chamber_of(rs, candidate) == target) {
          Mat trial = basis_rows;
          trial.push_back(candidate);
          if (matrix_rank(trial) > matrix_rank(basis_rows)) {
            basis_rows = std::move(trial);
            basis.push_back(candidate);
            if (static_cast<int>(basis.size()) == r) break;
          }
        }
      }
      // advance odometer
      int pos = 0;
      while (pos < r && c[pos] == box) {
        c[pos] = -box;
        ++pos;
      }
      if (pos == r) break;
      ++c[pos];
    }
  }
  return basis;
}

}  // namespace dsm
