#pragma once

// Scalars of the max-plus semifield T = R ∪ {ε} and of its supertropical
// extension T[i] = { a + ib }, with i² = 0.

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>

#include <Eigen/Core>

#include "suptrop/error.hpp"

namespace suptrop {

/// An element of T. ε is stored as -inf; every other value is a finite double.
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;

  // NOLINTNEXTLINE(google-explicit-constructor): plain numbers are scalars.
  constexpr ExtReal(double value) : value_(value) {
    if (value != value || value == std::numeric_limits<double>::infinity()) {
      throw BadScalar("extended real must be finite or -inf");
    }
    if (value == 0.0) value_ = 0.0;  // fold -0 into +0 so equal values share bits
  }

  static constexpr ExtReal eps() noexcept { return ExtReal(); }

  constexpr bool is_eps() const noexcept { return value_ == kNegInf; }
  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(ExtReal, ExtReal) noexcept = default;
  friend constexpr auto operator<=>(ExtReal a, ExtReal b) noexcept { return a.value_ <=> b.value_; }

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double value_ = kNegInf;
};

inline constexpr ExtReal eps{};

/// a ⊕ b = max(a, b).
constexpr ExtReal trop_add(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }

/// a ⊗ b = a + b, with ε absorbing.
constexpr ExtReal trop_mul(ExtReal a, ExtReal b) noexcept {
  if (a.is_eps() || b.is_eps()) return eps;
  return ExtReal(a.value() + b.value());
}

/// a + ib. No normalization: two pairs are equal iff both components are equal.
struct SuperScalar {
  ExtReal re;
  ExtReal gh;

  constexpr SuperScalar() noexcept = default;
  constexpr SuperScalar(ExtReal real, ExtReal ghost) noexcept : re(real), gh(ghost) {}
  // NOLINTNEXTLINE(google-explicit-constructor): T embeds into T[i] as a + iε.
  constexpr SuperScalar(ExtReal real) noexcept : re(real) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr SuperScalar(double real) : re(real) {}

  static constexpr SuperScalar zero() noexcept { return {}; }
  static constexpr SuperScalar one() noexcept { return SuperScalar(ExtReal(0.0), eps); }
  /// The symbol i itself, ε + i0.
  static constexpr SuperScalar unit_ghost() noexcept { return SuperScalar(eps, ExtReal(0.0)); }
  static constexpr SuperScalar ghost(ExtReal a) noexcept { return SuperScalar(a, a); }

  friend constexpr bool operator==(const SuperScalar&, const SuperScalar&) noexcept = default;
};

constexpr SuperScalar super_add(const SuperScalar& x, const SuperScalar& y) noexcept {
  return {trop_add(x.re, y.re), trop_add(x.gh, y.gh)};
}

constexpr SuperScalar super_mul(const SuperScalar& x, const SuperScalar& y) noexcept {
  return {trop_add(trop_mul(x.re, y.re), trop_mul(x.gh, y.gh)),
          trop_add(trop_mul(x.gh, y.re), trop_mul(x.re, y.gh))};
}

constexpr bool is_eps(ExtReal a) noexcept { return a.is_eps(); }
constexpr bool is_eps(const SuperScalar& x) noexcept { return x.re.is_eps() && x.gh.is_eps(); }

/// Membership in the ghost ideal Φ = { a + ia }.
constexpr bool is_ghost(const SuperScalar& x) noexcept { return x.re == x.gh; }

/// Projection T[i] -> T used for cycle weights: a + ib ↦ a ⊕ b.
constexpr ExtReal magnitude(const SuperScalar& x) noexcept { return trop_add(x.re, x.gh); }

// Uniform semiring vocabulary for the generic matrix layer.

constexpr ExtReal oplus(ExtReal a, ExtReal b) noexcept { return trop_add(a, b); }
constexpr ExtReal otimes(ExtReal a, ExtReal b) noexcept { return trop_mul(a, b); }
constexpr SuperScalar oplus(const SuperScalar& x, const SuperScalar& y) noexcept { return super_add(x, y); }
constexpr SuperScalar otimes(const SuperScalar& x, const SuperScalar& y) noexcept { return super_mul(x, y); }

template <class Scalar>
struct semiring_traits;

template <>
struct semiring_traits<ExtReal> {
  static constexpr ExtReal zero() noexcept { return eps; }
  static constexpr ExtReal one() noexcept { return ExtReal(0.0); }
};

template <>
struct semiring_traits<SuperScalar> {
  static constexpr SuperScalar zero() noexcept { return SuperScalar::zero(); }
  static constexpr SuperScalar one() noexcept { return SuperScalar::one(); }
};

template <class T>
concept Semiring = std::regular<T> && requires(const T& a, const T& b) {
  { oplus(a, b) } -> std::same_as<T>;
  { otimes(a, b) } -> std::same_as<T>;
  { is_eps(a) } -> std::convertible_to<bool>;
  { semiring_traits<T>::zero() } -> std::same_as<T>;
  { semiring_traits<T>::one() } -> std::same_as<T>;
};

inline std::size_t hash_value(ExtReal a) noexcept {
  return std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(a.value()));
}

inline std::size_t hash_value(const SuperScalar& x) noexcept {
  return hash_value(x.re) * 0x9e3779b97f4a7c15ULL ^ hash_value(x.gh);
}

}  // namespace suptrop

namespace Eigen {

template <>
struct NumTraits<suptrop::ExtReal> : GenericNumTraits<suptrop::ExtReal> {
  using Real = suptrop::ExtReal;
  using NonInteger = suptrop::ExtReal;
  using Literal = suptrop::ExtReal;
  using Nested = suptrop::ExtReal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1,
  };
};

template <>
struct NumTraits<suptrop::SuperScalar> : GenericNumTraits<suptrop::SuperScalar> {
  using Real = suptrop::SuperScalar;
  using NonInteger = suptrop::SuperScalar;
  using Literal = suptrop::SuperScalar;
  using Nested = suptrop::SuperScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 8,
  };
};

}  // namespace Eigen
