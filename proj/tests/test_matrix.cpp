#include "doctest.h"

#include "helpers.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/selfcheck/generators.hpp"
#include "suptrop/selfcheck/oracle.hpp"

using namespace suptrop;
using suptrop::testing::mat;
using suptrop::testing::sparse;

namespace {
const SuperScalar E = SuperScalar::zero();
}

TEST_CASE("mat_add") {
  const SuperMatrix a = mat({{E, 0}, {E, E}});
  const SuperMatrix b = mat({{E, E}, {4, E}});
  CHECK(equal(mat_add(a, b), mat({{E, 0}, {4, E}})));
  CHECK(equal(mat_add(a, zero_matrix<SuperScalar>(2)), a));
  CHECK(equal(mat_add(a, a), a));
}

TEST_CASE("mat_mul") {
  const SuperMatrix a = mat({{E, 0}, {E, E}});
  const SuperMatrix b = mat({{E, E}, {0, E}});
  CHECK(equal(mat_mul(a, b), mat({{0, E}, {E, E}})));
  CHECK(equal(mat_mul(a, identity_matrix<SuperScalar>(2)), a));
  CHECK(is_zero_matrix(mat_mul(zero_matrix<SuperScalar>(2), a)));
}

TEST_CASE("dimension mismatch is reported with both sizes") {
  const SuperMatrix a = zero_matrix<SuperScalar>(2);
  const SuperMatrix b = zero_matrix<SuperScalar>(3);
  try {
    (void)mat_add(a, b);
    FAIL("expected DimensionMismatch");
  } catch (const DimensionMismatch& e) {
    CHECK(e.lhs() == 2);
    CHECK(e.rhs() == 3);
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  CHECK_THROWS_AS(mat_mul(a, b), DimensionMismatch);
  CHECK_THROWS_AS(bracket(a, b), DimensionMismatch);
  CHECK_THROWS_AS(conjugate(a, Permutation::identity(3)), DimensionMismatch);
}

TEST_CASE("mat_pow") {
  const SuperMatrix a = sparse(3, {{1, 2, 2}, {2, 3, -1}});
  CHECK(equal(mat_pow(a, 1), a));
  CHECK(equal(mat_pow(a, 2), sparse(3, {{1, 3, 1}})));
  CHECK(is_zero_matrix(mat_pow(a, 3)));
  CHECK_THROWS_AS(mat_pow(a, 0), InvalidArgument);

  const SuperMatrix loop = sparse(2, {{1, 1, 0}, {1, 2, 5}});
  for (unsigned k = 1; k <= 9; ++k) CHECK_FALSE(is_eps(mat_pow(loop, k)(0, 0)));
}

TEST_CASE("mat_pow agrees with repeated multiplication for large exponents") {
  selfcheck::Rng rng(7);
  const SuperMatrix a = selfcheck::random_matrix(rng, 4, 0.5);
  SuperMatrix slow = a;
  for (unsigned k = 2; k <= 13; ++k) {
    slow = mat_mul(slow, a);
    CHECK(equal(mat_pow(a, k), slow));
  }
}

TEST_CASE("powers expand over walks") {
  selfcheck::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperMatrix a = selfcheck::random_matrix(rng, 4, 0.4);
    const SuperMatrix cube = mat_pow(a, 3);
    for (Vertex p = 0; p < 4; ++p)
      for (Vertex q = 0; q < 4; ++q)
        CHECK(cube(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) == selfcheck::walk_sum(a, p, q, 3));
  }
}

TEST_CASE("bracket") {
  const SuperMatrix a = mat({{E, 0}, {E, E}});
  const SuperMatrix b = mat({{E, E}, {0, E}});
  CHECK(equal(bracket(a, b), mat({{0, E}, {E, 0}})));
  CHECK(equal(bracket(a, b), bracket(b, a)));
  CHECK(is_zero_matrix(bracket(a, zero_matrix<SuperScalar>(2))));

  const SuperMatrix g = mat({{1, SuperScalar(2, 2)}, {E, SuperScalar(eps, 3)}});
  CHECK(equal(bracket(g, g), mat_pow(g, 2)));
}

TEST_CASE("Permutation validates and inverts") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidArgument);
  const Permutation pi({2, 0, 1});
  CHECK(pi.inverse() == Permutation({1, 2, 0}));
  CHECK(pi.inverse().inverse() == pi);
}

TEST_CASE("conjugate relabels indices") {
  const SuperMatrix a = sparse(3, {{2, 1, 4}});
  // ℓ = {2↦1, 3↦2, 1↦3}
  const Permutation label({2, 0, 1});
  CHECK(equal(conjugate(a, label), sparse(3, {{1, 3, 4}})));
  CHECK(equal(conjugate(a, Permutation::identity(3)), a));
  CHECK(equal(conjugate(conjugate(a, label), label.inverse()), a));

  const SuperMatrix p = label.as_matrix<SuperScalar>();
  const SuperMatrix pt = p.transpose();
  CHECK(equal(conjugate(a, label), mat_mul(mat_mul(pt, a), p)));
}

TEST_CASE("is_strictly_upper") {
  CHECK(is_strictly_upper(zero_matrix<SuperScalar>(3)));
  CHECK(is_strictly_upper(mat({{E, 0}, {E, E}})));
  CHECK_FALSE(is_strictly_upper(mat({{E, 0}, {E, SuperScalar(eps, 1)}})));
  CHECK_FALSE(is_strictly_upper(mat({{E, E}, {2, E}})));
}

TEST_CASE("is_nilpotent_by_power") {
  CHECK(is_nilpotent_by_power(zero_matrix<SuperScalar>(4)));
  CHECK(is_nilpotent_by_power(mat({{E, 1, 2}, {E, E, SuperScalar::ghost(3)}, {E, E, E}})));
  CHECK_FALSE(is_nilpotent_by_power(mat({{E, 1}, {SuperScalar(eps, 0), E}})));
  CHECK_FALSE(is_nilpotent_by_power(mat({{SuperScalar::ghost(0)}})));
}

TEST_CASE("the max-plus case embeds with an ε ghost part") {
  TropMatrix t = zero_matrix<ExtReal>(2);
  t(0, 1) = 3;
  t(1, 0) = -1;
  const SuperMatrix s = embed(t);
  CHECK(s(0, 1) == SuperScalar(3));
  CHECK(equal(magnitude(s), t));
  CHECK(equal(embed(mat_mul(t, t)), mat_mul(s, s)));
  CHECK_FALSE(is_nilpotent_by_power(t));
}
