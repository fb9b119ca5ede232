// Canonical labelling by exact branch-and-bound over vertex orderings.
//
// The search minimizes the bit code read column by column along the upper
// triangle (including the diagonal), because each newly placed vertex then
// appends a contiguous code segment and partial orderings can be compared
// against the incumbent. The returned string renders the winning relabelled
// matrix row-major. Vertices that are interchangeable by a transposition
// automorphism (twins) are expanded only once per search node.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {
namespace {

struct CanonState {
  const LoopedGraph* g = nullptr;
  int n = 0;
  std::vector<std::uint8_t> best;     // best complete staircase code so far
  bool have_best = false;
  std::vector<int> best_perm;
  std::vector<int> perm;              // perm[k] = original vertex at position k
  std::vector<std::uint8_t> code;     // staircase code of the current prefix
  std::vector<bool> used;
  std::vector<std::uint8_t> twin;     // n*n: transposition (u v) is an automorphism

  bool is_twin(int u, int v) const { return twin[static_cast<std::size_t>(u) * n + v] != 0; }
};

void precompute_twins(CanonState& s) {
  const auto& g = *s.g;
  const int n = s.n;
  s.twin.assign(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.at(u, u) != g.at(v, v)) continue;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (w == u || w == v) continue;
        ok = g.at(u, w) == g.at(v, w);
      }
      if (ok) {
        s.twin[static_cast<std::size_t>(u) * n + v] = 1;
        s.twin[static_cast<std::size_t>(v) * n + u] = 1;
      }
    }
}

// Whenever the incumbent is replaced it extends the code of the path being
// explored, so at every node the current code is <= the incumbent's prefix of
// equal length. A candidate whose extended code compares greater can
// therefore only lose, and so can its later (segment-sorted) siblings.
void descend(CanonState& s, int k) {
  const int n = s.n;
  if (k == n) {
    if (!s.have_best || s.code < s.best) {
      s.best = s.code;
      s.best_perm = s.perm;
      s.have_best = true;
    }
    return;
  }

  // Candidate segment for v: bits a(perm[0],v), ..., a(perm[k-1],v), a(v,v).
  struct Cand {
    int v;
    std::vector<std::uint8_t> seg;
  };
  std::vector<Cand> cands;
  cands.reserve(n - k);
  for (int v = 0; v < n; ++v) {
    if (s.used[v]) continue;
    Cand c;
    c.v = v;
    c.seg.resize(k + 1);
    for (int r = 0; r < k; ++r) c.seg[r] = static_cast<std::uint8_t>(s.g->at(s.perm[r], v));
    c.seg[k] = static_cast<std::uint8_t>(s.g->at(v, v));
    cands.push_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.seg < b.seg; });

  const std::size_t off = s.code.size();
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    const Cand& c = cands[ci];
    // A twin of an earlier unused vertex explores an equivalent subtree.
    bool dup = false;
    for (std::size_t cj = 0; cj < ci && !dup; ++cj)
      dup = s.is_twin(cands[cj].v, c.v);
    if (dup) continue;

    if (s.have_best) {
      int cmp = 0;
      for (std::size_t r = 0; r < off && cmp == 0; ++r)
        cmp = static_cast<int>(s.code[r]) - static_cast<int>(s.best[r]);
      for (int r = 0; r <= k && cmp == 0; ++r)
        cmp = static_cast<int>(c.seg[r]) - static_cast<int>(s.best[off + r]);
      if (cmp > 0) break;
    }

    s.code.insert(s.code.end(), c.seg.begin(), c.seg.end());
    s.used[c.v] = true;
    s.perm[k] = c.v;
    descend(s, k + 1);
    s.used[c.v] = false;
    s.code.resize(off);
  }
}

}  // namespace

std::string canonical_form(const LoopedGraph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form: order exceeds brute-force limit of " +
                                std::to_string(kCanonicalMaxOrder));
  CanonState s;
  s.g = &g;
  s.n = n;
  s.perm.assign(n, 0);
  s.used.assign(n, false);
  s.code.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  precompute_twins(s);
  descend(s, 0);

  const LoopedGraph canon = relabel(g, s.best_perm);
  std::string out(static_cast<std::size_t>(n) * n, '0');
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (canon.at(i, j)) out[static_cast<std::size_t>(i) * n + j] = '1';
  return out;
}

bool isomorphic(const LoopedGraph& g, const LoopedGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.loop_count() != h.loop_count() || g.edge_count() != h.edge_count()) return false;
  auto degs = [](const LoopedGraph& x) {
    auto d = degree_profile(x).degrees;
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(g) != degs(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace specgap
