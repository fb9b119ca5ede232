#include "specgap/search.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "specgap/codec.hpp"

namespace specgap::search {
namespace {

// Fixed bit order over the upper triangle (row by row), diagonal included
// only for the loops space. The lowest bitmask therefore wins deterministic
// tie-breaks everywhere below.
std::vector<std::pair<int, int>> bit_layout(int n, Space space) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = (space == Space::Loops ? i : i + 1); j < n; ++j) cells.emplace_back(i, j);
  return cells;
}

void fill_dense(const std::vector<std::pair<int, int>>& cells, std::uint64_t mask, int n,
                double* a) {
  std::fill(a, a + static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t b = 0; b < cells.size(); ++b) {
    if ((mask >> b) & 1u) {
      auto [i, j] = cells[b];
      a[static_cast<std::size_t>(i) * n + j] = 1.0;
      a[static_cast<std::size_t>(j) * n + i] = 1.0;
    }
  }
}

LoopedGraph graph_of(const std::vector<std::pair<int, int>>& cells, std::uint64_t mask, int n) {
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t b = 0; b < cells.size(); ++b) {
    if ((mask >> b) & 1u) {
      auto [i, j] = cells[b];
      adj[static_cast<std::size_t>(i) * n + j] = 1;
      adj[static_cast<std::size_t>(j) * n + i] = 1;
    }
  }
  return LoopedGraph::from_matrix(n, std::move(adj));
}

struct RangeResult {
  double max_value = -1e300;
  std::vector<std::pair<std::uint64_t, double>> near_max;  // within kValueSlack of local max
};

RangeResult scan_range(const std::vector<std::pair<int, int>>& cells, int n, SpreadQuery q,
                       std::uint64_t lo, std::uint64_t hi, double slack) {
  RangeResult r;
  SpectrumEvaluator eval(n);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    fill_dense(cells, mask, n, a.data());
    const auto vals = eval.eval_dense(n, a.data());
    const double v = vals[q.i] - vals[n - 1 - q.j];
    if (v > r.max_value) r.max_value = v;
    if (v >= r.max_value - slack) {
      r.near_max.emplace_back(mask, v);
      if (r.near_max.size() > 8192) {
        std::erase_if(r.near_max,
                      [&](const auto& p) { return p.second < r.max_value - slack; });
      }
    }
  }
  return r;
}

void check_query(int n, SpreadQuery q) {
  if (n < 1) throw std::invalid_argument("search: order must be positive");
  if (!q.valid_for(n)) throw std::invalid_argument("search: invalid (i,j) for this order");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t restart) {
  return seed + 0x9e3779b97f4a7c15ULL * (restart + 1);
}

struct ClimbResult {
  double value = -1e300;
  std::uint64_t mask = 0;
  int restart = -1;
  std::uint64_t work = 0;
};

ClimbResult climb_once(const std::vector<std::pair<int, int>>& cells, int n, SpreadQuery q,
                       std::uint64_t seed, int restart, int max_steps) {
  const int nbits = static_cast<int>(cells.size());
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
  std::uint64_t mask = rng() & ((nbits == 64) ? ~0ULL : ((1ULL << nbits) - 1));

  SpectrumEvaluator eval(n);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  auto value_of = [&](std::uint64_t m) {
    fill_dense(cells, m, n, a.data());
    const auto vals = eval.eval_dense(n, a.data());
    return vals[q.i] - vals[n - 1 - q.j];
  };

  ClimbResult res;
  res.restart = restart;
  double cur = value_of(mask);
  res.work = 1;
  res.value = cur;
  res.mask = mask;
  int plateau_budget = 2 * n * n;

  for (int step = 0; step < max_steps; ++step) {
    double best = -1e300;
    int best_bit = -1;
    for (int b = 0; b < nbits; ++b) {
      const double v = value_of(mask ^ (1ULL << b));
      ++res.work;
      if (v > best) {
        best = v;
        best_bit = b;
      }
    }
    if (best > cur + 1e-12) {
      mask ^= 1ULL << best_bit;
      cur = best;
    } else if (best >= cur - 1e-12 && plateau_budget > 0) {
      --plateau_budget;
      mask ^= 1ULL << best_bit;
      cur = best;
    } else {
      break;
    }
    if (cur > res.value) {
      res.value = cur;
      res.mask = mask;
    }
  }
  return res;
}

}  // namespace

std::string SearchRecord::serialize() const {
  char buf[64];
  std::string out;
  out += "cell: n=" + std::to_string(n) + " i=" + std::to_string(query.i) +
         " j=" + std::to_string(query.j) + "\n";
  out += std::string("space: ") + (space == Space::Loops ? "loops" : "simple") + "\n";
  out += "method: " + method + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  out += "work: " + std::to_string(work) + "\n";
  std::snprintf(buf, sizeof buf, "%.12g", best_value);
  out += std::string("value: ") + buf + "\n";
  std::snprintf(buf, sizeof buf, "%.12g", best_ratio);
  out += std::string("ratio: ") + buf + "\n";
  out += "maximizers: " + std::to_string(maximizer_count) + "\n";
  for (const auto& w : witnesses) out += "witness: " + sparse6_encode(w) + "\n";
  return out;
}

SearchRecord exhaustive(int n, SpreadQuery q, Space space, int threads, double slack) {
  check_query(n, q);
  if (!(slack >= 1e-14)) throw std::invalid_argument("exhaustive: slack must be >= 1e-14");
  const auto cells = bit_layout(n, space);
  const int nbits = static_cast<int>(cells.size());
  if (nbits > kMaxExhaustiveBits)
    throw std::invalid_argument("exhaustive: " + std::to_string(nbits) +
                                " entry bits exceed the enumeration budget of " +
                                std::to_string(kMaxExhaustiveBits));
  const std::uint64_t total = 1ULL << nbits;
  if (threads < 1) threads = 1;
  const int nt = static_cast<int>(std::min<std::uint64_t>(threads, total));

  std::vector<RangeResult> parts(nt);
  if (nt == 1) {
    parts[0] = scan_range(cells, n, q, 0, total, slack);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
      const std::uint64_t lo = total * t / nt, hi = total * (t + 1) / nt;
      pool.emplace_back([&, t, lo, hi] { parts[t] = scan_range(cells, n, q, lo, hi, slack); });
    }
    for (auto& th : pool) th.join();
  }

  double max_value = -1e300;
  for (const auto& p : parts) max_value = std::max(max_value, p.max_value);
  std::vector<std::uint64_t> winners;
  for (const auto& p : parts)
    for (const auto& [mask, v] : p.near_max)
      if (v >= max_value - slack) winners.push_back(mask);
  std::sort(winners.begin(), winners.end());

  SearchRecord rec;
  rec.n = n;
  rec.query = q;
  rec.space = space;
  rec.best_value = max_value;
  rec.best_ratio = max_value / n;
  rec.maximizer_count = winners.size();
  rec.method = "exhaustive";
  rec.seed = 0;
  rec.work = total;

  if (n <= kCanonicalMaxOrder) {
    std::map<std::string, LoopedGraph> classes;  // canonical string -> representative
    for (std::uint64_t mask : winners) {
      const LoopedGraph g = graph_of(cells, mask, n);
      const std::string canon = canonical_form(g);
      if (!classes.contains(canon)) {
        std::vector<std::uint8_t> adj(canon.size());
        for (std::size_t t = 0; t < canon.size(); ++t)
          adj[t] = static_cast<std::uint8_t>(canon[t] == '1');
        classes.emplace(canon, LoopedGraph::from_matrix(n, std::move(adj)));
      }
    }
    for (auto& [canon, g] : classes) rec.witnesses.push_back(g);
  } else if (!winners.empty()) {
    rec.witnesses.push_back(graph_of(cells, winners.front(), n));
  }
  return rec;
}

SearchRecord hill_climb(int n, SpreadQuery q, Space space, std::uint64_t seed, int restarts,
                        int max_steps, int threads) {
  check_query(n, q);
  if (n < 2) throw std::invalid_argument("hill_climb: order must be >= 2");
  if (restarts < 1 || max_steps < 1)
    throw std::invalid_argument("hill_climb: restarts and steps must be positive");
  const auto cells = bit_layout(n, space);
  if (cells.size() > 63) throw std::invalid_argument("hill_climb: order too large for bitmasks");
  if (threads < 1) threads = 1;
  const int nt = std::min(threads, restarts);

  std::vector<ClimbResult> results(restarts);
  if (nt == 1) {
    for (int r = 0; r < restarts; ++r) results[r] = climb_once(cells, n, q, seed, r, max_steps);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        for (int r = t; r < restarts; r += nt)
          results[r] = climb_once(cells, n, q, seed, r, max_steps);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Best value wins; the earliest restart breaks ties, so the record does not
  // depend on the thread count.
  const ClimbResult* best = &results[0];
  std::uint64_t work = 0;
  for (const auto& r : results) {
    work += r.work;
    if (r.value > best->value + 1e-15) best = &r;
  }

  SearchRecord rec;
  rec.n = n;
  rec.query = q;
  rec.space = space;
  rec.best_value = best->value;
  rec.best_ratio = best->value / n;
  rec.maximizer_count = 1;
  rec.method = "hill-climb";
  rec.seed = seed;
  rec.work = work;
  rec.witnesses.push_back(graph_of(cells, best->mask, n));
  return rec;
}

bool verify_no_better(int n, SpreadQuery q, Space space, double candidate_ratio, int threads,
                      double slack) {
  const SearchRecord rec = exhaustive(n, q, space, threads, slack);
  return rec.best_value <= candidate_ratio * n + slack;
}

}  // namespace specgap::search
