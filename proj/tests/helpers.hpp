#pragma once

#include <initializer_list>
#include <string>

#include "suptrop/io.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop::testing {

inline SuperMatrix mat(std::initializer_list<std::initializer_list<SuperScalar>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  SuperMatrix a(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

/// n×n all-ε with a few 1-based entries set.
inline SuperMatrix sparse(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, SuperScalar>> cells) {
  SuperMatrix a = zero_matrix<SuperScalar>(n);
  for (const auto& [i, j, x] : cells) a(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = x;
  return a;
}

}  // namespace suptrop::testing

namespace Eigen {
// doctest prints operands of failed CHECKs through this.
inline std::string toString(const suptrop::SuperMatrix& a) { return suptrop::format_matrix(a); }
}  // namespace Eigen
