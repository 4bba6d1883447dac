#include "suptrop/digraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace suptrop {

SupportDigraph::SupportDigraph(std::size_t n, const std::vector<Edge>& edges) : successors_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint outside the vertex set");
    successors_[u].push_back(v);
  }
  for (auto& row : successors_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::size_t SupportDigraph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& row : successors_) m += row.size();
  return m;
}

bool SupportDigraph::has_edge(Vertex u, Vertex v) const {
  const auto& row = successors_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> SupportDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < successors_.size(); ++u)
    for (Vertex v : successors_[u]) out.emplace_back(u, v);
  return out;
}

Relation Relation::from_graph(const SupportDigraph& g) {
  Relation r(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.successors(u)) r.insert(u, v);
  return r;
}

bool Relation::merge_row(Vertex u, const Relation& other, Vertex v) {
  bool changed = false;
  std::uint64_t* dst = bits_.data() + u * words_;
  const std::uint64_t* src = other.bits_.data() + v * other.words_;
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t merged = dst[w] | src[w];
    changed |= merged != dst[w];
    dst[w] = merged;
  }
  return changed;
}

std::size_t Relation::size() const noexcept {
  std::size_t count = 0;
  for (std::uint64_t word : bits_) count += static_cast<std::size_t>(std::popcount(word));
  return count;
}

bool Relation::has_diagonal_pair() const {
  for (Vertex v = 0; v < n_; ++v)
    if (contains(v, v)) return true;
  return false;
}

std::vector<Edge> Relation::pairs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (contains(u, v)) out.emplace_back(u, v);
  return out;
}

Relation compose(const Relation& lhs, const Relation& rhs) {
  if (lhs.n_ != rhs.n_) throw DimensionMismatch(lhs.n_, rhs.n_);
  Relation out(lhs.n_);
  for (Vertex u = 0; u < lhs.n_; ++u)
    for (Vertex v = 0; v < lhs.n_; ++v)
      if (lhs.contains(u, v)) out.merge_row(u, rhs, v);
  return out;
}

Relation operator|(const Relation& lhs, const Relation& rhs) {
  if (lhs.n_ != rhs.n_) throw DimensionMismatch(lhs.n_, rhs.n_);
  Relation out = lhs;
  for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] |= rhs.bits_[w];
  return out;
}

bool CycleWitness::witnesses(const SupportDigraph& g) const {
  if (vertices.empty()) return false;
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.order()) return false;
  for (const auto& [u, v] : edges())
    if (!g.has_edge(u, v)) return false;
  return true;
}

std::vector<Edge> CycleWitness::edges() const {
  std::vector<Edge> out;
  for (std::size_t t = 0; t < vertices.size(); ++t)
    out.emplace_back(vertices[t], vertices[(t + 1) % vertices.size()]);
  return out;
}

namespace {
std::string describe(const CycleWitness& c) {
  std::string s = "directed cycle";
  for (Vertex v : c.vertices) s += " " + std::to_string(v + 1);
  return s;
}
}  // namespace

NotADAG::NotADAG(CycleWitness witness)
    : Error(ErrorCode::NotADAG, describe(witness)), witness_(std::move(witness)) {}

std::optional<CycleWitness> find_cycle(const SupportDigraph& g) {
  enum class Color : unsigned char { White, Gray, Black };
  const std::size_t n = g.order();
  std::vector<Color> color(n, Color::White);
  // (vertex, index of the next successor to try)
  std::vector<std::pair<Vertex, std::size_t>> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != Color::White) continue;
    stack.emplace_back(root, 0);
    color[root] = Color::Gray;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& succ = g.successors(u);
      if (next == succ.size()) {
        color[u] = Color::Black;
        stack.pop_back();
        continue;
      }
      const Vertex v = succ[next++];
      if (color[v] == Color::Gray) {
        auto start = std::find_if(stack.begin(), stack.end(), [v](const auto& f) { return f.first == v; });
        CycleWitness cycle;
        for (auto it = start; it != stack.end(); ++it) cycle.vertices.push_back(it->first);
        return cycle;
      }
      if (color[v] == Color::White) {
        color[v] = Color::Gray;
        stack.emplace_back(v, 0);
      }
    }
  }
  return std::nullopt;
}

namespace {
// Vertices in Kahn order, or nullopt if a cycle blocks it.
std::optional<std::vector<Vertex>> kahn_order(const SupportDigraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indegree(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.successors(u)) ++indegree[v];

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex v : g.successors(u))
      if (--indegree[v] == 0) ready.push(v);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

[[noreturn]] void throw_not_a_dag(const SupportDigraph& g) {
  auto cycle = find_cycle(g);
  throw NotADAG(cycle.value_or(CycleWitness{}));
}
}  // namespace

Permutation topological_order(const SupportDigraph& g) {
  auto order = kahn_order(g);
  if (!order) throw_not_a_dag(g);
  std::vector<std::size_t> label(g.order());
  for (std::size_t position = 0; position < order->size(); ++position) label[(*order)[position]] = position;
  return Permutation(std::move(label));
}

std::size_t longest_path_length(const SupportDigraph& g) {
  auto order = kahn_order(g);
  if (!order) throw_not_a_dag(g);
  std::vector<std::size_t> longest_ending(g.order(), 0);
  std::size_t best = 0;
  for (Vertex u : *order) {
    best = std::max(best, longest_ending[u]);
    for (Vertex v : g.successors(u)) longest_ending[v] = std::max(longest_ending[v], longest_ending[u] + 1);
  }
  return best;
}

Relation reachability(const SupportDigraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  // Iterative Tarjan. Components come out sinks first.
  std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> scc_stack;
  std::vector<std::pair<Vertex, std::size_t>> call_stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.emplace_back(root, 0);
    while (!call_stack.empty()) {
      auto& [u, next] = call_stack.back();
      if (next == 0) {
        index[u] = lowlink[u] = counter++;
        scc_stack.push_back(u);
        on_stack[u] = true;
      }
      const auto& succ = g.successors(u);
      if (next < succ.size()) {
        const Vertex v = succ[next++];
        if (index[v] == kUnvisited) {
          call_stack.emplace_back(v, 0);
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      if (lowlink[u] == index[u]) {
        std::vector<Vertex> members;
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          component[w] = components.size();
          members.push_back(w);
        } while (w != u);
        components.push_back(std::move(members));
      }
      const Vertex finished = u;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const Vertex parent = call_stack.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
      }
    }
  }

  // Row c of `reach` holds the vertices reachable from component c.
  Relation reach(components.size() == 0 ? 0 : n);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& members = components[c];
    const bool cyclic = members.size() > 1 || g.has_edge(members.front(), members.front());
    if (cyclic)
      for (Vertex m : members) reach.insert(c, m);
    for (Vertex u : members) {
      for (Vertex v : g.successors(u)) {
        const std::size_t d = component[v];
        if (d == c) continue;
        reach.insert(c, v);
        reach.merge_row(c, reach, d);
      }
    }
  }

  Relation out(n);
  for (Vertex u = 0; u < n; ++u) out.merge_row(u, reach, component[u]);
  return out;
}

ExtReal max_cycle_mean(const TropMatrix& a) {
  const std::size_t n = dimension(a);
  if (n == 0) return eps;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  std::vector<std::vector<std::pair<Vertex, double>>> incoming(n);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_eps()) incoming[static_cast<std::size_t>(j)].emplace_back(i, a(i, j).value());

  // best[k][v]: heaviest walk with exactly k edges ending at v, from any start.
  std::vector<std::vector<double>> best(n + 1, std::vector<double>(n, kNegInf));
  std::fill(best[0].begin(), best[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (Vertex v = 0; v < n; ++v) {
      double value = kNegInf;
      for (const auto& [u, weight] : incoming[v])
        if (best[k - 1][u] != kNegInf) value = std::max(value, best[k - 1][u] + weight);
      best[k][v] = value;
    }
  }

  double lambda = kNegInf;
  for (Vertex v = 0; v < n; ++v) {
    if (best[n][v] == kNegInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (best[k][v] == kNegInf) continue;
      worst = std::min(worst, (best[n][v] - best[k][v]) / static_cast<double>(n - k));
    }
    lambda = std::max(lambda, worst);
  }
  return ExtReal(lambda);
}

std::string dump_edges(const SupportDigraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

}  // namespace suptrop
