#include "specgap/constructions.hpp"

#include <stdexcept>
#include <utility>

namespace specgap {
namespace {

bool is_power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

int require_param(const std::map<std::string, int>& params, const std::string& key,
                  const std::string& family) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("construction '" + family + "' needs parameter --" + key);
  return it->second;
}

}  // namespace

bool HadamardMatrix::is_valid() const {
  const int m = order;
  if (m <= 0 || entries.size() != static_cast<std::size_t>(m) * m) return false;
  long long trace = 0;
  for (int i = 0; i < m; ++i) {
    trace += at(i, i);
    for (int j = 0; j < m; ++j) {
      if (at(i, j) != 1 && at(i, j) != -1) return false;
      if (at(i, j) != at(j, i)) return false;
    }
  }
  if (m >= 2 && trace != 0) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      long long dot = 0;
      for (int k = 0; k < m; ++k) dot += static_cast<long long>(at(i, k)) * at(j, k);
      if (dot != (i == j ? m : 0)) return false;
    }
  return true;
}

HadamardMatrix sylvester_hadamard(int m) {
  if (m < 1) throw std::invalid_argument("sylvester_hadamard: exponent must be >= 1");
  HadamardMatrix h;
  h.order = 2;
  h.entries = {1, 1, 1, -1};
  for (int step = 1; step < m; ++step) {
    const int s = h.order, s2 = 2 * s;
    std::vector<int> next(static_cast<std::size_t>(s2) * s2);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        const int x = h.at(i, j);
        next[static_cast<std::size_t>(i) * s2 + j] = x;
        next[static_cast<std::size_t>(i) * s2 + (s + j)] = x;
        next[static_cast<std::size_t>(s + i) * s2 + j] = x;
        next[static_cast<std::size_t>(s + i) * s2 + (s + j)] = -x;
      }
    h.order = s2;
    h.entries = std::move(next);
  }
  return h;
}

LoopedGraph hadamard_equality_graph(int k) {
  if (!is_power_of_two(k))
    throw std::invalid_argument(
        "hadamard_equality_graph: no symmetric trace-zero Hadamard matrix of order " +
        std::to_string(2 * k) + " in the factory (k must be a power of two)");
  int m = 1;
  while ((1 << m) != 2 * k) ++m;
  const HadamardMatrix h = sylvester_hadamard(m);
  const int half = 2 * k, n = 4 * k;
  // K = [[1,-1],[-1,1]]; entry of (K (x) H + J)/2 is (1 +- h_ij)/2, exactly 0/1.
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      const int sign = (bi == bj) ? 1 : -1;
      for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
          const int num = 1 + sign * h.at(i, j);
          adj[static_cast<std::size_t>(bi * half + i) * n + (bj * half + j)] =
              static_cast<std::uint8_t>(num / 2);
        }
    }
  return LoopedGraph::from_matrix(n, std::move(adj));
}

LoopedGraph closed_path_p4() {
  const std::pair<int, int> edges[] = {{0, 1}, {1, 3}, {2, 3}};
  const int loops[] = {0, 2};
  return LoopedGraph::build(4, edges, loops);
}

LoopedGraph clique_union_closed(int j) {
  if (j < 1) throw std::invalid_argument("clique_union_closed: j must be >= 1");
  const int a = j + 2, b = j + 1, n = a + b;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  for (int u = a; u < n; ++u) {
    loops.push_back(u);
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return LoopedGraph::build(n, edges, loops);
}

LoopedGraph half_closed_bipartite(int i) {
  if (i < 1) throw std::invalid_argument("half_closed_bipartite: i must be >= 1");
  const int a = i + 1, n = 2 * i + 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  for (int u = 0; u < a; ++u) {
    loops.push_back(u);
    for (int v = a; v < n; ++v) edges.emplace_back(u, v);
  }
  return LoopedGraph::build(n, edges, loops);
}

LoopedGraph clique_with_loops(int n, int t) {
  if (n < 1) throw std::invalid_argument("clique_with_loops: n must be >= 1");
  if (t < 0 || t > n) throw std::invalid_argument("clique_with_loops: need 0 <= t <= n");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < t; ++u) loops.push_back(u);
  return LoopedGraph::build(n, edges, loops);
}

LoopedGraph make_construction(const std::string& name, const std::map<std::string, int>& params) {
  if (name == "p4*") return closed_path_p4();
  if (name == "q3*") return hadamard_equality_graph(2);
  if (name == "hadamard-equality") return hadamard_equality_graph(require_param(params, "k", name));
  if (name == "clique-union") return clique_union_closed(require_param(params, "j", name));
  if (name == "half-closed-bipartite") return half_closed_bipartite(require_param(params, "i", name));
  if (name == "clique-loops")
    return clique_with_loops(require_param(params, "n", name), require_param(params, "t", name));
  throw std::invalid_argument("unknown construction '" + name + "'");
}

std::vector<std::string> construction_names() {
  return {"p4*", "q3*", "clique-union", "half-closed-bipartite", "clique-loops",
          "hadamard-equality"};
}

std::string construction_help() {
  return "p4*                    closed path on 4 vertices (no parameters)\n"
         "q3*                    closed cube on 8 vertices (no parameters)\n"
         "clique-union --j J     K_{J+2} disjoint union fully-looped K_{J+1}, J >= 1\n"
         "half-closed-bipartite --i I   K_{I+1,I} with the larger side looped, I >= 1\n"
         "clique-loops --n N --t T      K_N with loops on T vertices\n"
         "hadamard-equality --k K       gap-maximizing graph on 4K vertices, K in {1,2,4,8,...}\n";
}

}  // namespace specgap
