#pragma once

// Nilpotency of the Lie algebra generated by finitely many matrices under
// span and the bracket [A, B] = AB ⊕ BA, decided on supports.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "suptrop/digraph.hpp"
#include "suptrop/error.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop {

/// A nonempty list of generators sharing one dimension.
template <Semiring Scalar>
class LieSystem {
 public:
  explicit LieSystem(std::vector<Matrix<Scalar>> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw InvalidArgument("a Lie system needs at least one generator");
    const std::size_t n = suptrop::dimension(generators_.front());
    if (n == 0) throw InvalidArgument("matrix dimension must be positive");
    for (const auto& g : generators_) {
      if (g.rows() != g.cols()) throw DimensionMismatch(static_cast<std::size_t>(g.rows()), static_cast<std::size_t>(g.cols()));
      if (suptrop::dimension(g) != n) throw DimensionMismatch(n, suptrop::dimension(g));
    }
  }

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(generators_.front().rows()); }
  std::size_t size() const noexcept { return generators_.size(); }
  const Matrix<Scalar>& operator[](std::size_t i) const { return generators_.at(i); }
  const std::vector<Matrix<Scalar>>& generators() const noexcept { return generators_; }

 private:
  std::vector<Matrix<Scalar>> generators_;
};

/// An element of the generated algebra written as an expression over the
/// generators. Every node is a span or bracket step; powers are nested
/// brackets because [A, A^k] = A^(k+1).
class BracketWord {
 public:
  enum class Kind { Generator, Bracket, Sum, Power };

  static BracketWord generator(std::size_t index);
  static BracketWord bracket(BracketWord lhs, BracketWord rhs);
  static BracketWord sum(std::vector<BracketWord> terms);
  static BracketWord power(BracketWord base, unsigned exponent);

  Kind kind() const noexcept { return node_->kind; }
  std::size_t index() const noexcept { return node_->index; }
  unsigned exponent() const noexcept { return node_->exponent; }
  const std::vector<BracketWord>& children() const noexcept { return node_->children; }

  std::size_t depth() const;
  std::size_t max_generator_index() const;
  /// (bracket g1 (bracket g2 g3)), (sum g1 g2), (power g1 3); indices 1-based.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind = Kind::Generator;
    std::size_t index = 0;
    unsigned exponent = 1;
    std::vector<BracketWord> children;
  };
  explicit BracketWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

template <Semiring Scalar>
Matrix<Scalar> evaluate(const BracketWord& word, const LieSystem<Scalar>& system) {
  switch (word.kind()) {
    case BracketWord::Kind::Generator:
      return system[word.index()];
    case BracketWord::Kind::Bracket:
      return bracket(evaluate(word.children()[0], system), evaluate(word.children()[1], system));
    case BracketWord::Kind::Sum: {
      Matrix<Scalar> total = evaluate(word.children()[0], system);
      for (std::size_t t = 1; t < word.children().size(); ++t)
        total = mat_add(total, evaluate(word.children()[t], system));
      return total;
    }
    case BracketWord::Kind::Power:
      return mat_pow(evaluate(word.children()[0], system), word.exponent());
  }
  throw InvalidArgument("unknown bracket word node");
}

template <Semiring Scalar>
struct Triangularization {
  /// ℓ: original vertex -> position.
  Permutation permutation;
  std::vector<Matrix<Scalar>> conjugated;
};

template <Semiring Scalar>
struct NilpotencyCertificate {
  CycleWitness cycle;
  BracketWord word;
  /// word evaluated; has a non-ε diagonal entry at cycle.vertices.front().
  Matrix<Scalar> value;
};

template <Semiring Scalar>
struct TriangularizationOutcome {
  std::variant<Triangularization<Scalar>, NilpotencyCertificate<Scalar>> result;

  bool nilpotent() const noexcept { return result.index() == 0; }
  const Triangularization<Scalar>& success() const { return std::get<0>(result); }
  const NilpotencyCertificate<Scalar>& failure() const { return std::get<1>(result); }
};

/// ⊕ of all generators; its support is the union of the generator supports.
template <Semiring Scalar>
Matrix<Scalar> dominant_matrix(const LieSystem<Scalar>& system) {
  Matrix<Scalar> c = system[0];
  for (std::size_t t = 1; t < system.size(); ++t) c = mat_add(c, system[t]);
  return c;
}

/// Acyclic union support: the topological labeling strictly upper
/// triangularizes every generator, and with them the whole algebra.
/// Otherwise: the right-folded bracket of one generator per cycle edge has a
/// non-ε diagonal entry, so the algebra contains a non-nilpotent matrix.
template <Semiring Scalar>
TriangularizationOutcome<Scalar> decide(const LieSystem<Scalar>& system) {
  const SupportDigraph united = support(dominant_matrix(system));
  auto cycle = find_cycle(united);
  if (!cycle) {
    Permutation label = topological_order(united);
    std::vector<Matrix<Scalar>> conjugated;
    conjugated.reserve(system.size());
    for (const auto& g : system.generators()) conjugated.push_back(conjugate(g, label));
    return {Triangularization<Scalar>{std::move(label), std::move(conjugated)}};
  }

  std::vector<std::size_t> chosen;
  for (const auto& [u, v] : cycle->edges()) {
    for (std::size_t t = 0; t < system.size(); ++t) {
      if (!is_eps(system[t](static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)))) {
        chosen.push_back(t);
        break;
      }
    }
  }
  BracketWord word = BracketWord::generator(chosen.back());
  for (std::size_t t = chosen.size() - 1; t-- > 0;)
    word = BracketWord::bracket(BracketWord::generator(chosen[t]), std::move(word));
  Matrix<Scalar> value = evaluate(word, system);
  return {NilpotencyCertificate<Scalar>{std::move(*cycle), std::move(word), std::move(value)}};
}

/// Brute-force fixpoint R <- R ∪ (R ∘ R0) ∪ (R0 ∘ R) from the union of the
/// generator supports. Meant for small n; expected to equal reachability.
template <Semiring Scalar>
Relation support_closure_oracle(const LieSystem<Scalar>& system) {
  Relation base(system.dimension());
  for (const auto& g : system.generators()) base = base | Relation::from_graph(support(g));
  Relation current = base;
  while (true) {
    Relation next = current | compose(current, base) | compose(base, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

template <Semiring Scalar>
struct LowerCentralSeries {
  /// levels[k] spans D^k; duplicates and redundant ℰ entries removed.
  std::vector<std::vector<Matrix<Scalar>>> levels;
  /// First k with D^k = {ℰ}, if reached within the depth limit.
  std::optional<std::size_t> index;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultLevelCap = 10000;

namespace detail {
template <Semiring Scalar>
class MatrixSet {
 public:
  bool insert(const Matrix<Scalar>& m) {
    auto& bucket = buckets_[hash_value(m)];
    for (std::size_t idx : bucket)
      if (equal(items_[idx], m)) return false;
    bucket.push_back(items_.size());
    items_.push_back(m);
    return true;
  }
  std::size_t size() const noexcept { return items_.size(); }
  std::vector<Matrix<Scalar>> take() && { return std::move(items_); }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<Matrix<Scalar>> items_;
};

template <Semiring Scalar>
std::vector<Matrix<Scalar>> normalize_level(std::vector<Matrix<Scalar>> level, std::size_t n) {
  std::vector<Matrix<Scalar>> kept;
  for (auto& m : level)
    if (!is_zero_matrix(m)) kept.push_back(std::move(m));
  if (kept.empty()) kept.push_back(zero_matrix<Scalar>(n));
  return kept;
}
}  // namespace detail

/// D^0 = generators, D^k = { [g, d] : g a generator, d in D^(k-1) }. Stops at
/// the first level equal to {ℰ}, after max_depth levels, or when a level would
/// exceed `cap` distinct elements (then `truncated` is set).
template <Semiring Scalar>
LowerCentralSeries<Scalar> lower_central_series(const LieSystem<Scalar>& system, std::size_t max_depth,
                                                std::size_t cap = kDefaultLevelCap) {
  if (max_depth == 0) throw InvalidArgument("max_depth must be >= 1");
  const std::size_t n = system.dimension();
  LowerCentralSeries<Scalar> series;

  detail::MatrixSet<Scalar> first;
  for (const auto& g : system.generators()) first.insert(g);
  if (first.size() > cap) {
    series.truncated = true;
    return series;
  }
  series.levels.push_back(detail::normalize_level(std::move(first).take(), n));
  auto vanished = [](const std::vector<Matrix<Scalar>>& level) {
    return level.size() == 1 && is_zero_matrix(level.front());
  };
  if (vanished(series.levels.back())) {
    series.index = 0;
    return series;
  }

  for (std::size_t k = 1; k <= max_depth; ++k) {
    detail::MatrixSet<Scalar> next;
    const auto& previous = series.levels.back();
    for (const auto& g : system.generators()) {
      for (const auto& d : previous) {
        Matrix<Scalar> b = bracket(g, d);
        if (is_zero_matrix(b)) continue;
        next.insert(b);
        if (next.size() > cap) {
          series.truncated = true;
          return series;
        }
      }
    }
    series.levels.push_back(detail::normalize_level(std::move(next).take(), n));
    if (vanished(series.levels.back())) {
      series.index = k;
      return series;
    }
  }
  return series;
}

struct TwoWayObstruction {
  std::size_t first;   // generator with a path v -> w
  std::size_t second;  // generator with a path w -> v
  Vertex v;
  Vertex w;

  friend bool operator==(const TwoWayObstruction&, const TwoWayObstruction&) = default;
};

/// First (A, B, v, w), in lexicographic order, with v ≠ w, a path v -> w in
/// G_A and a path w -> v in G_B. A and B may coincide.
template <Semiring Scalar>
std::optional<TwoWayObstruction> check_two_way_obstruction(const LieSystem<Scalar>& system) {
  std::vector<Relation> reach;
  reach.reserve(system.size());
  for (const auto& g : system.generators()) reach.push_back(reachability(support(g)));
  const std::size_t n = system.dimension();
  for (std::size_t a = 0; a < system.size(); ++a)
    for (std::size_t b = 0; b < system.size(); ++b)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w)
          if (v != w && reach[a].contains(v, w) && reach[b].contains(w, v)) return TwoWayObstruction{a, b, v, w};
  return std::nullopt;
}

}  // namespace suptrop
