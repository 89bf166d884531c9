#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ocb/funcfield.hpp"
#include "ocb/recipe.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(OCB_DATA_DIR) + "/n11/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ocb::BivariatePoly load_relation(const std::string& name) { return ocb::BivariatePoly::parse(read_file(data_path(name))); }

inline ocb::Poly P(std::initializer_list<long> c) {
  std::vector<ocb::Rational> v;
  for (long x : c) v.emplace_back(x);
  return ocb::Poly(v);
}

// y^2 - x and the nodal cubic y^2 - x^2 (x + 1).
inline ocb::BivariatePoly parabola() { return ocb::BivariatePoly({{{0, 2}, 1}, {{1, 0}, -1}}); }
inline ocb::BivariatePoly nodal_cubic() { return ocb::BivariatePoly({{{0, 2}, 1}, {{3, 0}, -1}, {{2, 0}, -1}}); }

}  // namespace testing
