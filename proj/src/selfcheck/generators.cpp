#include "suptrop/selfcheck/generators.hpp"

#include <algorithm>
#include <numeric>

namespace suptrop::selfcheck {

ExtReal random_ext_real(Rng& rng) {
  std::uniform_int_distribution<int> pick(kMinValue - 1, kMaxValue);
  const int v = pick(rng);
  return v < kMinValue ? eps : ExtReal(static_cast<double>(v));
}

SuperScalar random_scalar(Rng& rng) {
  const ExtReal re = random_ext_real(rng);
  return SuperScalar(re, random_ext_real(rng));
}

SuperScalar random_entry(Rng& rng) {
  std::uniform_int_distribution<int> value(kMinValue, kMaxValue);
  std::uniform_int_distribution<int> kind(0, 3);
  const ExtReal a(static_cast<double>(value(rng)));
  switch (kind(rng)) {
    case 0: return SuperScalar(a);
    case 1: return SuperScalar::ghost(a);
    case 2: return SuperScalar(eps, a);
    default: return SuperScalar(a, ExtReal(static_cast<double>(value(rng))));
  }
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

SuperMatrix random_matrix(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution present(density);
  SuperMatrix a = zero_matrix<SuperScalar>(n);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (present(rng)) a(i, j) = random_entry(rng);
  return a;
}

namespace {
template <class Entry>
SuperMatrix upper_then_relabel(Rng& rng, std::size_t n, double density, const Permutation& order, Entry entry) {
  std::bernoulli_distribution present(density);
  SuperMatrix a = zero_matrix<SuperScalar>(n);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (present(rng)) a(i, j) = entry(rng);
  return conjugate(a, order);
}
}  // namespace

SuperMatrix random_dag_matrix(Rng& rng, std::size_t n, double density, const Permutation& order) {
  return upper_then_relabel(rng, n, density, order, [](Rng& r) { return random_entry(r); });
}

SuperMatrix random_real_dag_matrix(Rng& rng, std::size_t n, double density, const Permutation& order) {
  return upper_then_relabel(rng, n, density, order, [](Rng& r) {
    std::uniform_int_distribution<int> value(kMinValue, kMaxValue);
    return SuperScalar(ExtReal(static_cast<double>(value(r))));
  });
}

SuperSystem random_nilpotent_system(Rng& rng, std::size_t n, std::size_t count, double density) {
  const Permutation order = random_permutation(rng, n);
  std::vector<SuperMatrix> generators;
  for (std::size_t t = 0; t < count; ++t) generators.push_back(random_dag_matrix(rng, n, density, order));
  return SuperSystem(std::move(generators));
}

SuperSystem random_system(Rng& rng, std::size_t n, std::size_t count, double density) {
  std::vector<SuperMatrix> generators;
  for (std::size_t t = 0; t < count; ++t) generators.push_back(random_matrix(rng, n, density));
  return SuperSystem(std::move(generators));
}

BracketWord random_word(Rng& rng, std::size_t generator_count, std::size_t max_depth) {
  std::uniform_int_distribution<std::size_t> leaf(0, generator_count - 1);
  if (max_depth == 0) return BracketWord::generator(leaf(rng));
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0:
      return BracketWord::generator(leaf(rng));
    case 1: {
      std::uniform_int_distribution<std::size_t> terms(2, 3);
      std::vector<BracketWord> parts;
      for (std::size_t t = terms(rng); t > 0; --t) parts.push_back(random_word(rng, generator_count, max_depth - 1));
      return BracketWord::sum(std::move(parts));
    }
    case 2: {
      std::uniform_int_distribution<unsigned> exponent(1, 3);
      return BracketWord::power(random_word(rng, generator_count, max_depth - 1), exponent(rng));
    }
    default: {
      BracketWord lhs = random_word(rng, generator_count, max_depth - 1);
      return BracketWord::bracket(std::move(lhs), random_word(rng, generator_count, max_depth - 1));
    }
  }
}

double random_density(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> d(lo, hi);
  return d(rng);
}

}  // namespace suptrop::selfcheck
