// The acceptance checks: each one re-derives a published number or property
// from scratch (construction -> eigensolver -> comparison) and carries its own
// runtime budget. Sample-based checks use fixed seeds so reruns are
// reproducible bit for bit.

#include "specgap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <span>

#include "specgap/bounds.hpp"
#include "specgap/codec.hpp"
#include "specgap/constructions.hpp"
#include "specgap/graph.hpp"
#include "specgap/search.hpp"
#include "specgap/spectral.hpp"

namespace specgap::verify {
namespace {

constexpr double kTol = 1e-9;

LoopedGraph random_looped_graph(std::mt19937_64& rng, int n, bool allow_loops = true) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p_edge = 0.1 + 0.8 * unit(rng);
  const double p_loop = allow_loops ? unit(rng) : 0.0;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (allow_loops && unit(rng) < p_loop) adj[static_cast<std::size_t>(i) * n + i] = 1;
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < p_edge)
        adj[static_cast<std::size_t>(i) * n + j] = adj[static_cast<std::size_t>(j) * n + i] = 1;
  }
  return LoopedGraph::from_matrix(n, std::move(adj));
}

bool match_printed(double v, const std::string& printed) {
  // The published table mixes rounding and truncation (without saying which),
  // so a value matches when either rendering reproduces the printed digits.
  return bounds::format_3dp(v) == printed || bounds::format_3dp_trunc(v) == printed;
}

struct Ctx {
  std::vector<CheckResult>* out;
  const Options* opts;
};

void run_check(Ctx& ctx, const std::string& name, double budget_seconds,
               const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.status = Status::Pass;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.status == Status::Pass && r.seconds >= budget_seconds) {
    r.status = Status::Fail;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("over the ") +
                bounds::format_sig12(budget_seconds) + "s budget";
  }
  ctx.out->push_back(std::move(r));
}

void fail(CheckResult& r, const std::string& why) {
  r.status = Status::Fail;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += why;
}

// --- criterion 1 -----------------------------------------------------------

void check_p4(Ctx& ctx) {
  run_check(ctx, "p4-spectrum", 1.0, [](CheckResult& r) {
    const LoopedGraph g = closed_path_p4();
    const auto t0 = std::chrono::steady_clock::now();
    const auto vals = eigenvalues_only(g);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const double expect[4] = {2.0, std::sqrt(2.0), 0.0, -std::sqrt(2.0)};
    for (int t = 0; t < 4; ++t)
      if (std::abs(vals[t] - expect[t]) > kTol)
        fail(r, "eigenvalue " + std::to_string(t + 1) + " off by " +
                    bounds::format_sig12(vals[t] - expect[t]));
    if (ms >= 1.0) fail(r, "spectrum took " + bounds::format_sig12(ms) + " ms (budget 1 ms)");
    if (r.status == Status::Pass)
      r.detail = "eigenvalues {2, sqrt2, 0, -sqrt2} reproduced in " + bounds::format_sig12(ms) + " ms";
  });
}

// --- criterion 2 -----------------------------------------------------------

void check_hadamard(Ctx& ctx) {
  run_check(ctx, "hadamard-equality", 1.0, [&](CheckResult& r) {
    for (int k : ctx.opts->hadamard_ks) {
      const LoopedGraph g = hadamard_equality_graph(k);
      const int n = 4 * k;
      const double got = spread(g, SpreadQuery{k, k - 1});
      const double want = n / std::sqrt(2.0 * k);
      if (std::abs(got - want) > kTol)
        fail(r, "k=" + std::to_string(k) + ": gap " + bounds::format_sig12(got) + " != " +
                    bounds::format_sig12(want));
    }
    // Closed cube spectrum shape: {4, 2, 2, 0, 0, 0, -2, -2}.
    const auto q3 = eigenvalues_only(hadamard_equality_graph(2));
    const double want[8] = {4, 2, 2, 0, 0, 0, -2, -2};
    for (int t = 0; t < 8; ++t)
      if (std::abs(q3[t] - want[t]) > kTol) fail(r, "closed-cube spectrum shape mismatch");
    if (r.status == Status::Pass) {
      r.detail = "gap = n/sqrt(2k) for k in {";
      for (std::size_t t = 0; t < ctx.opts->hadamard_ks.size(); ++t)
        r.detail += (t ? "," : "") + std::to_string(ctx.opts->hadamard_ks[t]);
      r.detail += "}; closed-cube spectrum {4,2^2,0^3,-2^2}";
    }
  });
}

// --- criterion 3 -----------------------------------------------------------

void check_uniqueness(Ctx& ctx) {
  run_check(ctx, "uniqueness-n4", 1.0, [](CheckResult& r) {
    const auto rec = search::exhaustive(4, SpreadQuery{1, 0}, search::Space::Loops, 1);
    const double want = 2.0 * std::sqrt(2.0);
    if (std::abs(rec.best_value - want) > kTol)
      fail(r, "max over L4 is " + bounds::format_sig12(rec.best_value));
    if (rec.maximizer_count != 12)
      fail(r, "expected 12 labeled maximizers, got " + std::to_string(rec.maximizer_count));
    const std::string p4 = canonical_form(closed_path_p4());
    for (const auto& w : rec.witnesses)
      if (canonical_form(w) != p4) fail(r, "witness not isomorphic to the closed path");
    if (r.status == Status::Pass)
      r.detail = "max 2*sqrt(2) over all 1024 matrices; all 12 maximizers are the closed path";
  });
}

// --- criterion 4 -----------------------------------------------------------

void check_blowup(Ctx& ctx) {
  run_check(ctx, "blowup-law", 30.0, [](CheckResult& r) {
    std::mt19937_64 rng(0xb10f0f5eedULL);
    int checked = 0;
    for (int it = 0; it < 200 && r.status == Status::Pass; ++it) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const int t = 1 + static_cast<int>(rng() % 4);
      const LoopedGraph g = random_looped_graph(rng, n);
      const auto base = eigenvalues_only(g);
      std::vector<double> expect;
      expect.reserve(static_cast<std::size_t>(n) * t);
      for (double v : base) expect.push_back(t * v);
      expect.resize(static_cast<std::size_t>(n) * t, 0.0);
      std::sort(expect.begin(), expect.end(), [](double a, double b) { return a > b; });
      const auto got = eigenvalues_only(blowup(g, t));
      for (std::size_t p = 0; p < got.size(); ++p)
        if (std::abs(got[p] - expect[p]) > 1e-8) {
          fail(r, "blowup spectrum mismatch at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
          break;
        }
      ++checked;
    }
    if (r.status == Status::Pass)
      r.detail = std::to_string(checked) + " random blowups match {t*lambda} + zeros";
  });
}

// --- criterion 5 -----------------------------------------------------------

void check_interlacing(Ctx& ctx) {
  run_check(ctx, "interlacing", 30.0, [](CheckResult& r) {
    std::mt19937_64 rng(0x1a71ace5);
    for (int it = 0; it < 500 && r.status == Status::Pass; ++it) {
      const int n = 1 + static_cast<int>(rng() % 20);
      const LoopedGraph g = random_looped_graph(rng, n);
      const auto looped = eigenvalues_only(g);
      const auto simple = eigenvalues_only(underlying_simple(g));
      for (int k = 0; k < n; ++k) {
        if (looped[k] < simple[k] - kTol || simple[k] < looped[k] - 1.0 - kTol) {
          fail(r, "interlacing violated at sample " + std::to_string(it));
          break;
        }
      }
    }
    if (r.status == Status::Pass)
      r.detail = "lambda_k(G*) >= lambda_k(G) >= lambda_k(G*) - 1 on 500 samples";
  });
}

// --- criterion 6 -----------------------------------------------------------

struct PrintedCell {
  int i, j;
  const char* lower;  // nullptr for exact / skipped cells
  const char* upper;
};

void check_tables(Ctx& ctx) {
  run_check(ctx, "tables", 10.0, [](CheckResult& r) {
    const PrintedCell printed[] = {
        {0, 1, "1.090", "1.112"}, {0, 2, "1.066", "1.077"}, {0, 3, "1.052", "1.059"},
        {0, 4, "1.043", "1.048"}, {1, 1, "0.600", "0.612"}, {1, 2, "0.571", "0.577"},
        {1, 3, "0.556", "0.559"}, {1, 4, "0.545", "0.547"}, {2, 0, "0.600", "0.612"},
        {2, 2, "0.441", "0.456"}, {2, 3, "0.415", "0.433"}, {2, 4, "0.404", "0.418"},
        {3, 0, "0.571", "0.577"}, {3, 1, "0.441", "0.456"}, {3, 2, "0.404", "0.408"},
        {3, 4, "0.341", "0.365"}, {4, 0, "0.556", "0.559"}, {4, 1, "0.415", "0.433"},
        {4, 4, "0.315", "0.335"},
    };
    int cells_ok = 0;
    for (const auto& pc : printed) {
      const auto cell = bounds::best_known(pc.i, pc.j);
      if (!cell.lower) {
        fail(r, "missing certificate at (" + std::to_string(pc.i) + "," + std::to_string(pc.j) + ")");
        continue;
      }
      if (!match_printed(*cell.lower, pc.lower))
        fail(r, "(" + std::to_string(pc.i) + "," + std::to_string(pc.j) + ") lower " +
                    bounds::format_sig12(*cell.lower) + " does not print as " + pc.lower);
      if (!match_printed(cell.upper, pc.upper))
        fail(r, "(" + std::to_string(pc.i) + "," + std::to_string(pc.j) + ") upper " +
                    bounds::format_sig12(cell.upper) + " does not print as " + pc.upper);
      if (*cell.lower > cell.upper + 1e-12)
        fail(r, "lower exceeds upper at (" + std::to_string(pc.i) + "," + std::to_string(pc.j) + ")");
      ++cells_ok;
    }

    // The four proven-exact cells, certificate-honest.
    const struct { int i, j; double value; } exact[] = {
        {0, 0, 2.0 / std::sqrt(3.0)},
        {1, 0, 1.0 / std::sqrt(2.0)},
        {2, 1, 0.5},
        {4, 3, std::sqrt(2.0) / 4.0},
    };
    for (const auto& e : exact) {
      const auto cell = bounds::best_known(e.i, e.j);
      if (!cell.exact || std::abs(*cell.exact - e.value) > 1e-12)
        fail(r, "exact value wrong at (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
      if (!cell.lower || std::abs(*cell.lower - e.value) > kTol)
        fail(r, "certificate does not attain the exact value at (" + std::to_string(e.i) + "," +
                    std::to_string(e.j) + ")");
      ++cells_ok;
    }

    for (const auto [i, j] : {std::pair{3, 3}, std::pair{4, 2}}) {
      const auto cell = bounds::best_known(i, j);
      if (cell.status != bounds::CellStatus::LowerUnavailable || cell.lower)
        fail(r, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                    ") should report an unavailable certificate");
    }
    if (r.status == Status::Pass)
      r.detail = std::to_string(cells_ok) + " cells reproduce the published digits; 2 skipped";
  });
  for (const auto [i, j] : {std::pair{3, 3}, std::pair{4, 2}}) {
    CheckResult s;
    s.name = "tables/cell(" + std::to_string(i) + "," + std::to_string(j) + ")";
    s.status = Status::Skip;
    s.detail = "G5 unavailable";
    ctx.out->push_back(std::move(s));
  }
}

// --- criterion 7 -----------------------------------------------------------

void check_families(Ctx& ctx) {
  run_check(ctx, "families", 10.0, [](CheckResult& r) {
    for (int j = 1; j <= 8; ++j) {
      const int n = 2 * j + 3;
      const auto got = eigenvalues_only(clique_union_closed(j));
      std::vector<double> want = {static_cast<double>(j + 1), static_cast<double>(j + 1)};
      want.insert(want.end(), j, 0.0);
      want.insert(want.end(), j + 1, -1.0);
      for (int p = 0; p < n; ++p)
        if (std::abs(got[p] - want[p]) > kTol) fail(r, "clique-union spectrum off at j=" + std::to_string(j));
      const double ratio = (got[1] - got[n - 1 - j]) / n;
      if (std::abs(ratio - static_cast<double>(j + 2) / (2 * j + 3)) > kTol)
        fail(r, "clique-union ratio off at j=" + std::to_string(j));
    }

    for (int j = 0; j <= 8; ++j) {
      const int n = 2 * j + 4;
      const auto got = eigenvalues_only(clique_with_loops(n, j + 2));
      const double disc = std::sqrt(4.0 * j * j + 16.0 * j + 17.0);
      const double top = (2.0 * j + 3.0 + disc) / 2.0, bottom = (2.0 * j + 3.0 - disc) / 2.0;
      if (std::abs(got[0] - top) > kTol) fail(r, "clique-loops lambda_1 off at j=" + std::to_string(j));
      // The second root of the reduced quadratic sits inside the spectrum;
      // the smallest eigenvalue itself is -1 (the trace rules anything else out).
      double nearest = 1e300;
      for (double v : got) nearest = std::min(nearest, std::abs(v - bottom));
      if (nearest > kTol) fail(r, "clique-loops quadratic root missing at j=" + std::to_string(j));
      if (std::abs(got[n - 1] + 1.0) > kTol) fail(r, "clique-loops lambda_n != -1 at j=" + std::to_string(j));
      if (j >= 1) {
        const double ratio = (got[0] - got[n - 1 - j]) / n;
        const double want = (2.0 * j + 5.0 + disc) / (4.0 * (j + 2));
        if (std::abs(ratio - want) > kTol) fail(r, "clique-loops ratio off at j=" + std::to_string(j));
      }
    }

    for (int i = 1; i <= 8; ++i) {
      const int n = 2 * i + 1;
      const LoopedGraph g = half_closed_bipartite(i);
      const auto got = eigenvalues_only(g);
      if (std::abs(got[0] - (i + 1.0)) > kTol || std::abs(got[n - 1] + i) > kTol)
        fail(r, "half-closed-bipartite extremes off at i=" + std::to_string(i));
      const double ratio = spread_ratio(g, SpreadQuery{i, 0});
      if (std::abs(ratio - static_cast<double>(i + 1) / (2 * i + 1)) > kTol)
        fail(r, "half-closed-bipartite ratio off at i=" + std::to_string(i));
    }
    if (r.status == Status::Pass)
      r.detail = "closed-form spectra and gap ratios match for all three families";
  });
}

// --- criterion 8 -----------------------------------------------------------

void check_loops_vs_simple(Ctx& ctx) {
  run_check(ctx, "loops-vs-simple", 30.0, [](CheckResult& r) {
    std::mt19937_64 rng(0x10095f0e);
    for (int it = 0; it < 500 && r.status == Status::Pass; ++it) {
      const int n = 1 + static_cast<int>(rng() % 16);
      const LoopedGraph g = random_looped_graph(rng, n);
      const auto a = eigenvalues_only(g);
      const auto b = eigenvalues_only(underlying_simple(g));
      for (int i = 0; i < n && r.status == Status::Pass; ++i)
        for (int j = 0; j < n; ++j) {
          const double ra = (a[i] - a[n - 1 - j]) / n;
          const double rb = (b[i] - b[n - 1 - j]) / n;
          if (std::abs(ra - rb) > 1.0 / n + kTol) {
            fail(r, "ratio drift beyond 1/n at sample " + std::to_string(it));
            break;
          }
        }
    }
    if (r.status == Status::Pass)
      r.detail = "|ratio(G*) - ratio(G)| <= 1/n over all index pairs, 500 samples";
  });
}

// --- criterion 9 -----------------------------------------------------------

void check_upper_bounds(Ctx& ctx) {
  run_check(ctx, "upper-bounds", 120.0, [](CheckResult& r) {
    std::uint64_t graphs_checked = 0;
    auto check_spectrum = [&](std::span<const double> vals, int n) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double v = vals[i] - vals[n - 1 - j];
          const double cap = (i == 0) ? n * bounds::ub_row0(j) : n * bounds::ub_general(i, j);
          if (v > cap + kTol) {
            fail(r, "ceiling violated at n=" + std::to_string(n) + " (" + std::to_string(i) +
                        "," + std::to_string(j) + "): " + bounds::format_sig12(v) + " > " +
                        bounds::format_sig12(cap));
            return false;
          }
        }
      return true;
    };

    for (int n = 4; n <= 5 && r.status == Status::Pass; ++n) {
      const int nbits = n * (n + 1) / 2;
      SpectrumEvaluator eval(n);
      std::vector<double> a(static_cast<std::size_t>(n) * n);
      std::vector<std::pair<int, int>> cells;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) cells.emplace_back(i, j);
      for (std::uint64_t mask = 0; mask < (1ULL << nbits); ++mask) {
        std::fill(a.begin(), a.end(), 0.0);
        for (std::size_t b = 0; b < cells.size(); ++b)
          if ((mask >> b) & 1u) {
            auto [i, j] = cells[b];
            a[static_cast<std::size_t>(i) * n + j] = a[static_cast<std::size_t>(j) * n + i] = 1.0;
          }
        ++graphs_checked;
        if (!check_spectrum(eval.eval_dense(n, a.data()), n)) break;
      }
    }

    std::mt19937_64 rng(0xb0c4d5e6);
    for (int it = 0; it < 10000 && r.status == Status::Pass; ++it) {
      const int n = 1 + static_cast<int>(rng() % 20);
      const LoopedGraph g = random_looped_graph(rng, n);
      const auto vals = eigenvalues_only(g);
      ++graphs_checked;
      if (!check_spectrum(vals, n)) break;
    }
    if (r.status == Status::Pass)
      r.detail = "no gap exceeds its ceiling over " + std::to_string(graphs_checked) +
                 " graphs (all of L4, L5, plus 10^4 random)";
  });
}

// --- criterion 10 ----------------------------------------------------------

void check_codec(Ctx& ctx) {
  run_check(ctx, "codec", 30.0, [](CheckResult& r) {
    // Exhaustive round trip over L4.
    for (std::uint64_t mask = 0; mask < (1u << 10) && r.status == Status::Pass; ++mask) {
      std::vector<std::uint8_t> adj(16, 0);
      int b = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j, ++b)
          if ((mask >> b) & 1u) adj[i * 4 + j] = adj[j * 4 + i] = 1;
      const LoopedGraph g = LoopedGraph::from_matrix(4, std::move(adj));
      if (sparse6_decode(sparse6_encode(g)) != g) fail(r, "L4 round trip broken");
    }
    std::mt19937_64 rng(0xc0dec);
    for (int it = 0; it < 1000 && r.status == Status::Pass; ++it) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const LoopedGraph g = random_looped_graph(rng, n);
      if (sparse6_decode(sparse6_encode(g)) != g) fail(r, "random round trip broken");
    }

    const struct { const char* name; int n; const char* printed; } entries[] = {
        {"G1", 12, "0.441"}, {"G2", 15, "0.415"}, {"G3", 16, "0.404"}, {"G4", 7, "0.404"},
        {"G6", 12, "0.341"}, {"G7", 11, "0.315"}, {"G1c", 12, "0.441"}, {"G2c", 15, "0.415"},
    };
    const auto& reg = table3_registry();
    for (const auto& e : entries) {
      const auto* entry = reg.find(e.name);
      const auto g = reg.graph(e.name);
      if (entry == nullptr || !g) {
        fail(r, std::string(e.name) + " missing from the registry");
        continue;
      }
      if (g->order() != e.n)
        fail(r, std::string(e.name) + " decodes to order " + std::to_string(g->order()));
      const double ratio = spread_ratio(*g, SpreadQuery{entry->i, entry->j});
      if (!match_printed(ratio, e.printed))
        fail(r, std::string(e.name) + " ratio " + bounds::format_sig12(ratio) +
                    " does not print as " + e.printed);
    }
    if (const auto* g5 = reg.find("G5"); g5 == nullptr || g5->available)
      fail(r, "G5 must be registered as unavailable");
    if (r.status == Status::Pass)
      r.detail = "round trips exact (L4 + 1000 random); all published strings hit their cells";
  });
}

// --- criterion 11 ----------------------------------------------------------

void check_parallel(Ctx& ctx) {
  run_check(ctx, "parallel-determinism", 30.0, [&](CheckResult& r) {
    const auto serial = search::exhaustive(5, SpreadQuery{1, 1}, search::Space::Loops, 1);
    const auto threaded =
        search::exhaustive(5, SpreadQuery{1, 1}, search::Space::Loops, ctx.opts->threads);
    if (serial.serialize() != threaded.serialize())
      fail(r, "records differ between 1 and " + std::to_string(ctx.opts->threads) + " threads");
    if (std::abs(serial.best_value - 3.0) > kTol)
      fail(r, "L5 (1,1) maximum should be 3, got " + bounds::format_sig12(serial.best_value));
    if (r.status == Status::Pass)
      r.detail = "byte-identical records (max 3 at n=5, " +
                 std::to_string(serial.maximizer_count) + " labeled maximizers)";
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"p4",       "hadamard", "uniqueness",      "blowup",       "interlacing", "tables",
          "families", "loops-vs-simple", "upper-bounds", "codec",    "parallel",    "all"};
}

std::vector<CheckResult> run_suite(std::string_view suite, const Options& opts) {
  std::vector<CheckResult> out;
  Ctx ctx{&out, &opts};
  const bool all = suite == "all" || suite.empty();
  bool known = all;
  auto want = [&](std::string_view name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("p4")) check_p4(ctx);
  if (want("hadamard")) check_hadamard(ctx);
  if (want("uniqueness")) check_uniqueness(ctx);
  if (want("blowup")) check_blowup(ctx);
  if (want("interlacing")) check_interlacing(ctx);
  if (want("tables")) check_tables(ctx);
  if (want("families")) check_families(ctx);
  if (want("loops-vs-simple")) check_loops_vs_simple(ctx);
  if (want("upper-bounds")) check_upper_bounds(ctx);
  if (want("codec")) check_codec(ctx);
  if (want("parallel")) check_parallel(ctx);
  if (!known) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::Fail) return false;
  return true;
}

std::string format_result(const CheckResult& r) {
  const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
  std::string line = std::string("[") + tag + "] " + r.name + " (" + secs + "s)";
  if (!r.detail.empty()) line += ": " + r.detail;
  return line;
}

}  // namespace specgap::verify
