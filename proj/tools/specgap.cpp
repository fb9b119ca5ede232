// specgap: spectra, eigenvalue gaps, extremal constructions, bounds tables,
// exhaustive/heuristic searches and the verification suite, from one binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specgap/bounds.hpp"
#include "specgap/codec.hpp"
#include "specgap/constructions.hpp"
#include "specgap/graph.hpp"
#include "specgap/search.hpp"
#include "specgap/spectral.hpp"
#include "specgap/verify.hpp"

namespace {

using namespace specgap;

struct GraphSource {
  std::string sparse6;
  std::string graph6;
  std::string file;
  std::string construct;
  std::map<std::string, int> params;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--sparse6", src.sparse6, "sparse6 string (loops supported)");
  cmd->add_option("--graph6", src.graph6, "graph6 string (simple graphs)");
  cmd->add_option("--file", src.file, "file with one graph per line (first line used)");
  cmd->add_option("--construct", src.construct,
                  "construction name; see 'specgap construct --list'");
  cmd->add_option("--param-i", src.params["i"], "construction parameter i");
  cmd->add_option("--param-j", src.params["j"], "construction parameter j");
  cmd->add_option("--param-k", src.params["k"], "construction parameter k");
  cmd->add_option("--param-n", src.params["n"], "construction parameter n");
  cmd->add_option("--param-t", src.params["t"], "construction parameter t");
}

LoopedGraph load_graph(const GraphSource& src) {
  int provided = 0;
  provided += !src.sparse6.empty();
  provided += !src.graph6.empty();
  provided += !src.file.empty();
  provided += !src.construct.empty();
  if (provided != 1)
    throw std::invalid_argument("exactly one graph source required "
                                "(--sparse6 / --graph6 / --file / --construct)");
  if (!src.sparse6.empty()) return sparse6_decode(src.sparse6);
  if (!src.graph6.empty()) return graph6_decode(src.graph6);
  if (!src.construct.empty()) return make_construction(src.construct, src.params);
  std::ifstream in(src.file);
  if (!in) throw std::invalid_argument("cannot open " + src.file);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) return decode_any(line);
  throw std::invalid_argument(src.file + " contains no graph");
}

int threads_default() {
  if (const char* env = std::getenv("SPECGAP_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

void print_spectrum_report(const LoopedGraph& g) {
  const auto prof = degree_profile(g);
  const Spectrum s = eigenvalues(g);
  std::printf("n: %d\n", g.order());
  std::printf("degrees:");
  for (int d : prof.degrees) std::printf(" %d", d);
  std::printf("\naverage degree: %s\n", bounds::format_sig12(prof.average).c_str());
  std::printf("eigenvalues:");
  for (double v : s.values) std::printf(" %s", bounds::format_sig12(v).c_str());
  std::printf("\nresidual: %.3e\n", s.residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenvalue gap toolkit for graphs with self-loops"};
  app.require_subcommand(1);

  // spectrum ----------------------------------------------------------------
  GraphSource spectrum_src;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "print degrees and eigenvalues");
  add_graph_source(cmd_spectrum, spectrum_src);

  // spread ------------------------------------------------------------------
  GraphSource spread_src;
  int sp_i = 0, sp_j = 0;
  auto* cmd_spread =
      app.add_subcommand("spread", "print the gap lambda_{i+1} - lambda_{n-j} and its ratio");
  add_graph_source(cmd_spread, spread_src);
  cmd_spread->add_option("--i", sp_i, "index i (0-based gap index)")->required();
  cmd_spread->add_option("--j", sp_j, "index j")->required();

  // construct ---------------------------------------------------------------
  GraphSource construct_src;
  bool construct_list = false, construct_spectrum = false;
  auto* cmd_construct = app.add_subcommand("construct", "emit a named construction as sparse6");
  cmd_construct->add_option("--name", construct_src.construct, "construction name");
  cmd_construct->add_option("--param-i", construct_src.params["i"], "parameter i");
  cmd_construct->add_option("--param-j", construct_src.params["j"], "parameter j");
  cmd_construct->add_option("--param-k", construct_src.params["k"], "parameter k");
  cmd_construct->add_option("--param-n", construct_src.params["n"], "parameter n");
  cmd_construct->add_option("--param-t", construct_src.params["t"], "parameter t");
  cmd_construct->add_flag("--list", construct_list, "list available constructions");
  cmd_construct->add_flag("--spectrum", construct_spectrum, "also print the spectrum");

  // bounds-table --------------------------------------------------------------
  int bt_imax = 4, bt_jmax = 4;
  std::string bt_format = "text";
  bool bt_formulas_only = false;
  auto* cmd_bounds = app.add_subcommand("bounds-table", "recompute the best-known bounds table");
  cmd_bounds->add_option("--imax", bt_imax, "largest row index (default 4)");
  cmd_bounds->add_option("--jmax", bt_jmax, "largest column index (default 4)");
  cmd_bounds->add_option("--format", bt_format, "text | csv | markdown")
      ->check(CLI::IsMember({"text", "csv", "markdown"}));
  cmd_bounds->add_flag("--formulas-only", bt_formulas_only,
                       "closed forms only, no certificate spectra (any extent)");

  // search --------------------------------------------------------------------
  int se_n = 0, se_i = 0, se_j = 0, se_threads = threads_default();
  int se_restarts = 200, se_steps = 1000;
  std::uint64_t se_seed = 0;
  double se_tol = search::kValueSlack;
  std::string se_space = "loops", se_method = "exhaustive";
  auto* cmd_search = app.add_subcommand("search", "maximize the gap over a matrix space");
  cmd_search->add_option("--n", se_n, "number of vertices")->required();
  cmd_search->add_option("--i", se_i, "index i")->required();
  cmd_search->add_option("--j", se_j, "index j")->required();
  cmd_search->add_option("--space", se_space, "loops | simple")
      ->check(CLI::IsMember({"loops", "simple"}));
  cmd_search->add_option("--method", se_method, "exhaustive | hill-climb")
      ->check(CLI::IsMember({"exhaustive", "hill-climb"}));
  cmd_search->add_option("--seed", se_seed, "hill-climb seed (default 0)");
  cmd_search->add_option("--restarts", se_restarts, "hill-climb restarts (default 200)");
  cmd_search->add_option("--steps", se_steps, "hill-climb step cap per restart (default 1000)");
  cmd_search->add_option("--threads", se_threads,
                         "worker threads (default from SPECGAP_THREADS or 1)");
  cmd_search->add_option("--tol", se_tol, "tie-grouping slack (default 1e-9)")
      ->check(CLI::Range(1e-14, 1.0));

  // verify ----------------------------------------------------------------------
  std::string ve_suite = "all";
  int ve_k = 0, ve_threads = 8;
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  cmd_verify->add_option("--suite", ve_suite, "p4 | hadamard | uniqueness | blowup | "
                                              "interlacing | tables | families | loops-vs-simple | "
                                              "upper-bounds | codec | parallel | all");
  cmd_verify->add_option("--k", ve_k, "restrict the hadamard check to this k (power of two)");
  cmd_verify->add_option("--threads", ve_threads, "thread count for the determinism check");

  // encode / decode ----------------------------------------------------------
  GraphSource enc_src;
  std::string enc_format = "sparse6";
  auto* cmd_encode = app.add_subcommand("encode", "re-encode a graph (file: every line)");
  add_graph_source(cmd_encode, enc_src);
  cmd_encode->add_option("--format", enc_format, "sparse6 | graph6")
      ->check(CLI::IsMember({"sparse6", "graph6"}));

  GraphSource dec_src;
  auto* cmd_decode = app.add_subcommand("decode", "decode a graph and print its structure");
  add_graph_source(cmd_decode, dec_src);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_spectrum->parsed()) {
      print_spectrum_report(load_graph(spectrum_src));
      return 0;
    }

    if (cmd_spread->parsed()) {
      const LoopedGraph g = load_graph(spread_src);
      const SpreadQuery q{sp_i, sp_j};
      const double v = spread(g, q);
      std::printf("n: %d\n", g.order());
      std::printf("spread(%d,%d): %s\n", sp_i, sp_j, bounds::format_sig12(v).c_str());
      std::printf("ratio: %s\n", bounds::format_sig12(v / g.order()).c_str());
      return 0;
    }

    if (cmd_construct->parsed()) {
      if (construct_list) {
        std::fputs(construction_help().c_str(), stdout);
        return 0;
      }
      if (construct_src.construct.empty())
        throw std::invalid_argument("construct: pass --name or --list");
      const LoopedGraph g = make_construction(construct_src.construct, construct_src.params);
      std::printf("%s\n", sparse6_encode(g).c_str());
      if (construct_spectrum) print_spectrum_report(g);
      return 0;
    }

    if (cmd_bounds->parsed()) {
      const auto cells = bounds::full_table(bt_imax, bt_jmax, bt_formulas_only);
      std::string out;
      if (bt_format == "csv") out = bounds::to_csv(cells);
      else if (bt_format == "markdown") out = bounds::to_markdown(cells);
      else out = bounds::to_text(cells);
      std::fputs(out.c_str(), stdout);
      return 0;
    }

    if (cmd_search->parsed()) {
      const auto space = se_space == "loops" ? search::Space::Loops : search::Space::Simple;
      search::SearchRecord rec;
      if (se_method == "exhaustive")
        rec = search::exhaustive(se_n, SpreadQuery{se_i, se_j}, space, se_threads, se_tol);
      else
        rec = search::hill_climb(se_n, SpreadQuery{se_i, se_j}, space, se_seed, se_restarts,
                                 se_steps, se_threads);
      std::fputs(rec.serialize().c_str(), stdout);
      return 0;
    }

    if (cmd_verify->parsed()) {
      verify::Options opts;
      if (ve_k > 0) opts.hadamard_ks = {ve_k};
      opts.threads = ve_threads;
      const auto results = verify::run_suite(ve_suite, opts);
      for (const auto& r : results) std::printf("%s\n", verify::format_result(r).c_str());
      return verify::all_passed(results) ? 0 : 1;
    }

    if (cmd_encode->parsed()) {
      auto emit = [&](const LoopedGraph& g) {
        std::printf("%s\n",
                    (enc_format == "graph6" ? graph6_encode(g) : sparse6_encode(g)).c_str());
      };
      if (!enc_src.file.empty()) {
        std::ifstream in(enc_src.file);
        if (!in) throw std::invalid_argument("cannot open " + enc_src.file);
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) emit(decode_any(line));
      } else {
        emit(load_graph(enc_src));
      }
      return 0;
    }

    if (cmd_decode->parsed()) {
      const LoopedGraph g = load_graph(dec_src);
      std::printf("n: %d\n", g.order());
      std::printf("loops:");
      for (int v = 0; v < g.order(); ++v)
        if (g.has_loop(v)) std::printf(" %d", v);
      std::printf("\nedges:");
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          if (g.at(u, v)) std::printf(" %d-%d", u, v);
      std::printf("\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
