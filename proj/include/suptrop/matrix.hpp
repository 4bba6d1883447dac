#pragma once

// Square matrices over a max-plus style semiring. Storage is a dense Eigen
// matrix; the arithmetic is the semiring's own, never Eigen's +/*.
//
// The C++ API is 0-based like Eigen. Text formats and reports are 1-based.

#include <cstddef>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "suptrop/error.hpp"
#include "suptrop/scalar.hpp"

namespace suptrop {

template <Semiring Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using TropMatrix = Matrix<ExtReal>;
using SuperMatrix = Matrix<SuperScalar>;

template <class Derived>
inline std::size_t dimension(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<std::size_t>(a.rows());
}

/// The all-ε matrix ℰ.
template <Semiring Scalar>
Matrix<Scalar> zero_matrix(std::size_t n) {
  return Matrix<Scalar>::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n),
                                  semiring_traits<Scalar>::zero());
}

template <Semiring Scalar>
Matrix<Scalar> identity_matrix(std::size_t n) {
  Matrix<Scalar> id = zero_matrix<Scalar>(n);
  for (Eigen::Index i = 0; i < id.rows(); ++i) id(i, i) = semiring_traits<Scalar>::one();
  return id;
}

template <Semiring Scalar>
bool is_zero_matrix(const Matrix<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_eps(a(i, j))) return false;
  return true;
}

template <Semiring Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

namespace detail {
template <Semiring Scalar>
void require_same_dimension(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch(dimension(a), dimension(b));
}
}  // namespace detail

/// Entrywise ⊕.
template <Semiring Scalar>
Matrix<Scalar> mat_add(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  detail::require_same_dimension(a, b);
  return a.binaryExpr(b, [](const Scalar& x, const Scalar& y) { return oplus(x, y); });
}

/// (A ⊗ B)_pq = ⊕_k A_pk ⊗ B_kq.
template <Semiring Scalar>
Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  detail::require_same_dimension(a, b);
  const Eigen::Index n = a.rows();
  Matrix<Scalar> c = zero_matrix<Scalar>(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar& bkj = b(k, j);
      if (is_eps(bkj)) continue;
      for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar& aik = a(i, k);
        if (is_eps(aik)) continue;
        c(i, j) = oplus(c(i, j), otimes(aik, bkj));
      }
    }
  }
  return c;
}

/// A^k for k >= 1 by repeated squaring.
template <Semiring Scalar>
Matrix<Scalar> mat_pow(const Matrix<Scalar>& a, unsigned long long k) {
  if (k == 0) throw InvalidArgument("matrix power exponent must be >= 1");
  Matrix<Scalar> base = a;
  Matrix<Scalar> result;
  bool have_result = false;
  while (true) {
    if (k & 1ULL) {
      result = have_result ? mat_mul(result, base) : base;
      have_result = true;
    }
    k >>= 1;
    if (k == 0) break;
    base = mat_mul(base, base);
  }
  return result;
}

/// [A, B] = AB ⊕ BA.
template <Semiring Scalar>
Matrix<Scalar> bracket(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return mat_add(mat_mul(a, b), mat_mul(b, a));
}

/// A bijection of {0..n-1}, checked at construction.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t image : map_) {
      if (image >= map_.size() || seen[image]) throw InvalidArgument("permutation map is not a bijection");
      seen[image] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return Permutation(std::move(map));
  }

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_.at(i); }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// P with P(k, π(k)) = one and ε elsewhere, so that conjugate(A, π) = Pᵀ ⊗ A ⊗ P.
  template <Semiring Scalar>
  Matrix<Scalar> as_matrix() const {
    Matrix<Scalar> p = zero_matrix<Scalar>(map_.size());
    for (std::size_t k = 0; k < map_.size(); ++k)
      p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(map_[k])) = semiring_traits<Scalar>::one();
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// Relabels indices: B(π(i), π(j)) = A(i, j).
template <Semiring Scalar>
Matrix<Scalar> conjugate(const Matrix<Scalar>& a, const Permutation& pi) {
  if (pi.size() != dimension(a)) throw DimensionMismatch(dimension(a), pi.size());
  Matrix<Scalar> b(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      b(static_cast<Eigen::Index>(pi[static_cast<std::size_t>(i)]),
        static_cast<Eigen::Index>(pi[static_cast<std::size_t>(j)])) = a(i, j);
  return b;
}

/// True iff every entry on or below the diagonal is ε.
template <Semiring Scalar>
bool is_strictly_upper(const Matrix<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = j; i < a.rows(); ++i)
      if (!is_eps(a(i, j))) return false;
  return true;
}

/// True iff A^n = ℰ. A walk with n edges repeats a vertex, so if A^n ≠ ℰ the
/// support has a cycle and no power vanishes.
template <Semiring Scalar>
bool is_nilpotent_by_power(const Matrix<Scalar>& a) {
  if (a.rows() == 0) return true;
  return is_zero_matrix(mat_pow(a, static_cast<unsigned long long>(a.rows())));
}

/// Entrywise a + ib ↦ a ⊕ b.
inline TropMatrix magnitude(const SuperMatrix& a) {
  return a.unaryExpr([](const SuperScalar& x) { return magnitude(x); });
}

/// T embeds into T[i] as a ↦ a + iε.
inline SuperMatrix embed(const TropMatrix& a) {
  return a.unaryExpr([](const ExtReal& x) { return SuperScalar(x); });
}

template <Semiring Scalar>
std::size_t hash_value(const Matrix<Scalar>& a) {
  std::size_t h = static_cast<std::size_t>(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) h = h * 1000003ULL ^ hash_value(a(i, j));
  return h;
}

}  // namespace suptrop
