#pragma once

// Brute-force reference computations. These enumerate walks and cycles
// explicitly and share no code with the matrix product or graph algorithms
// they are compared against. Exponential; keep n small.

#include <cstddef>
#include <vector>

#include "suptrop/digraph.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop::selfcheck {

/// ⊕ over every walk p -> q with exactly `length` edges of the ⊗-product of its entries.
SuperScalar walk_sum(const SuperMatrix& a, Vertex p, Vertex q, std::size_t length);

/// Every walk p -> q of that length, as vertex sequences.
std::vector<std::vector<Vertex>> enumerate_walks(std::size_t n, Vertex p, Vertex q, std::size_t length);

/// (u, v) iff some walk of 1..n edges through existing edges joins them.
Relation walk_reachability(const SupportDigraph& g);

/// Maximum over all simple cycles of weight / length; ε if there are none.
ExtReal enumerated_max_cycle_mean(const TropMatrix& a);

}  // namespace suptrop::selfcheck
