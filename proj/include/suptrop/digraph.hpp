#pragma once

// Support digraphs of matrices and the graph algorithms the nilpotency
// decision rests on. Vertices are 0-based here; dumps are 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suptrop/error.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/scalar.hpp"

namespace suptrop {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class SupportDigraph {
 public:
  explicit SupportDigraph(std::size_t n) : successors_(n) {}
  /// Duplicate edges collapse; endpoints must lie in [0, n).
  SupportDigraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return successors_.size(); }
  std::size_t edge_count() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted ascending.
  const std::vector<Vertex>& successors(Vertex u) const { return successors_.at(u); }
  /// Sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const SupportDigraph&, const SupportDigraph&) = default;

 private:
  std::vector<std::vector<Vertex>> successors_;
};

/// A dense binary relation on {0..n-1}, one bitset per row.
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  static Relation from_graph(const SupportDigraph& g);

  std::size_t order() const noexcept { return n_; }
  bool contains(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1ULL;
  }
  void insert(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= 1ULL << (v % 64); }
  /// row(u) |= row(v) of `other`; returns whether row u changed.
  bool merge_row(Vertex u, const Relation& other, Vertex v);
  std::size_t size() const noexcept;
  bool has_diagonal_pair() const;
  /// Sorted lexicographically.
  std::vector<Edge> pairs() const;

  /// {(u, w) : (u, v) ∈ lhs and (v, w) ∈ rhs for some v}.
  friend Relation compose(const Relation& lhs, const Relation& rhs);
  friend Relation operator|(const Relation& lhs, const Relation& rhs);
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// v_0 -> v_1 -> ... -> v_{m-1} -> v_0 with distinct vertices; m = 1 is a self-loop.
struct CycleWitness {
  std::vector<Vertex> vertices;

  bool witnesses(const SupportDigraph& g) const;
  /// Edges of the cycle in traversal order, closing edge last.
  std::vector<Edge> edges() const;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

class NotADAG : public Error {
 public:
  explicit NotADAG(CycleWitness witness);
  const CycleWitness& witness() const noexcept { return witness_; }

 private:
  CycleWitness witness_;
};

/// Edge i -> j iff A(i, j) ≠ ε. Ghost entries are non-ε and give edges.
template <Semiring Scalar>
SupportDigraph support(const Matrix<Scalar>& a) {
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_eps(a(i, j))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return SupportDigraph(dimension(a), edges);
}

/// Depth-first search from the lowest vertex, successors in ascending order;
/// the first back edge found closes the returned cycle.
std::optional<CycleWitness> find_cycle(const SupportDigraph& g);

/// Kahn's algorithm, always removing the smallest zero in-degree vertex.
/// Returns ℓ with ℓ(u) < ℓ(v) for every edge u -> v. Throws NotADAG.
Permutation topological_order(const SupportDigraph& g);

/// Number of edges on a longest directed path. Throws NotADAG.
std::size_t longest_path_length(const SupportDigraph& g);

/// Transitive closure: (u, v) iff a path with at least one edge runs u -> v.
Relation reachability(const SupportDigraph& g);

/// Maximum cycle mean by Karp's formula; ε iff the support is acyclic.
ExtReal max_cycle_mean(const TropMatrix& a);
/// Same, on the magnitude projection a + ib ↦ a ⊕ b.
inline ExtReal max_cycle_mean(const SuperMatrix& a) { return max_cycle_mean(magnitude(a)); }

/// One "u v" line per edge, 1-based, lexicographic.
std::string dump_edges(const SupportDigraph& g);

}  // namespace suptrop
