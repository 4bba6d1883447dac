#include "suptrop/selfcheck/oracle.hpp"

#include <algorithm>
#include <limits>

namespace suptrop::selfcheck {

namespace {
void extend_walks(std::size_t n, std::vector<Vertex>& prefix, Vertex q, std::size_t remaining,
                  std::vector<std::vector<Vertex>>& out) {
  if (remaining == 0) {
    if (prefix.back() == q) out.push_back(prefix);
    return;
  }
  for (Vertex next = 0; next < n; ++next) {
    prefix.push_back(next);
    extend_walks(n, prefix, q, remaining - 1, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<std::vector<Vertex>> enumerate_walks(std::size_t n, Vertex p, Vertex q, std::size_t length) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix{p};
  extend_walks(n, prefix, q, length, out);
  return out;
}

SuperScalar walk_sum(const SuperMatrix& a, Vertex p, Vertex q, std::size_t length) {
  SuperScalar total = SuperScalar::zero();
  if (length == 0) return p == q ? SuperScalar::one() : total;
  for (const auto& walk : enumerate_walks(dimension(a), p, q, length)) {
    SuperScalar weight = SuperScalar::one();
    for (std::size_t t = 0; t + 1 < walk.size(); ++t)
      weight = super_mul(weight, a(static_cast<Eigen::Index>(walk[t]), static_cast<Eigen::Index>(walk[t + 1])));
    total = super_add(total, weight);
  }
  return total;
}

Relation walk_reachability(const SupportDigraph& g) {
  const std::size_t n = g.order();
  Relation out(n);
  // Depth-first over walks of at most n edges, following existing edges only.
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex start = 0; start < n; ++start) {
    stack.assign(1, {start, 0});
    while (!stack.empty()) {
      auto [u, used] = stack.back();
      stack.pop_back();
      if (used == n) continue;
      for (Vertex v : g.successors(u)) {
        out.insert(start, v);
        stack.emplace_back(v, used + 1);
      }
    }
  }
  return out;
}

namespace {
void extend_cycles(const TropMatrix& a, Vertex start, std::vector<Vertex>& path, std::vector<bool>& used,
                   double weight, double& best) {
  const Vertex u = path.back();
  const auto n = static_cast<Vertex>(a.rows());
  for (Vertex v = start; v < n; ++v) {
    const ExtReal w = a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
    if (w.is_eps()) continue;
    if (v == start) {
      best = std::max(best, (weight + w.value()) / static_cast<double>(path.size()));
    } else if (!used[v]) {
      used[v] = true;
      path.push_back(v);
      extend_cycles(a, start, path, used, weight + w.value(), best);
      path.pop_back();
      used[v] = false;
    }
  }
}
}  // namespace

ExtReal enumerated_max_cycle_mean(const TropMatrix& a) {
  double best = -std::numeric_limits<double>::infinity();
  const auto n = static_cast<Vertex>(a.rows());
  std::vector<bool> used(n, false);
  // Each simple cycle is enumerated from its smallest vertex.
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> path{start};
    used[start] = true;
    extend_cycles(a, start, path, used, 0.0, best);
    used[start] = false;
  }
  return ExtReal(best);
}

}  // namespace suptrop::selfcheck
