#include "specgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "specgap/codec.hpp"
#include "specgap/constructions.hpp"
#include "specgap/spectral.hpp"

namespace specgap::bounds {
namespace {

bool is_power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

struct Certificate {
  std::string name;
  std::optional<LoopedGraph> graph;
  std::string note;  // set when unavailable
};

// Best known construction per cell, 0..4 x 0..4.
Certificate certificate_for(int i, int j) {
  auto from_reg = [&](const char* name) -> Certificate {
    const auto& reg = table3_registry();
    const auto* e = reg.find(name);
    if (e == nullptr || !e->available) return {name, std::nullopt, "G5 unavailable"};
    return {name, reg.graph(name), ""};
  };
  if (i == 0 && j == 0) return {"clique-loops(3,2)", clique_with_loops(3, 2), ""};
  if (i == 0) return {"clique-loops(" + std::to_string(2 * j + 4) + "," + std::to_string(j + 2) + ")",
                      clique_with_loops(2 * j + 4, j + 2), ""};
  if (i == 1 && j == 0) return {"p4*", closed_path_p4(), ""};
  if (i == 1) return {"clique-union(" + std::to_string(j) + ")", clique_union_closed(j), ""};
  if (j == 0) return {"half-closed-bipartite(" + std::to_string(i) + ")", half_closed_bipartite(i), ""};
  if (i == 2 && j == 1) return {"hadamard-equality(2)", hadamard_equality_graph(2), ""};
  if (i == 4 && j == 3) return {"hadamard-equality(4)", hadamard_equality_graph(4), ""};
  const struct { int i, j; const char* name; } reg_cells[] = {
      {2, 2, "G1"}, {2, 3, "G2"}, {2, 4, "G3"}, {3, 1, "G1c"}, {3, 2, "G4"},
      {3, 3, "G5"}, {3, 4, "G6"}, {4, 1, "G2c"}, {4, 2, "G5c"}, {4, 4, "G7"},
  };
  for (const auto& rc : reg_cells)
    if (rc.i == i && rc.j == j) return from_reg(rc.name);
  throw std::logic_error("certificate_for: unmapped cell");
}

}  // namespace

double ub_general(int i, int j) {
  if (i < 1) throw std::invalid_argument("ub_general: needs i >= 1 (use ub_row0 for i = 0)");
  if (j < 0) throw std::invalid_argument("ub_general: needs j >= 0");
  return 0.5 * std::sqrt(static_cast<double>(i + j + 1) / (static_cast<double>(i) * (j + 1)));
}

double ub_row0(int j) {
  if (j < 0) throw std::invalid_argument("ub_row0: needs j >= 0");
  return 0.5 * (1.0 + std::sqrt(static_cast<double>(j + 2) / (j + 1)));
}

double lb_1j(int j) {
  if (j < 1) throw std::invalid_argument("lb_1j: needs j >= 1");
  return static_cast<double>(j + 2) / (2 * j + 3);
}

double lb_i0(int i) {
  if (i < 1) throw std::invalid_argument("lb_i0: needs i >= 1");
  return static_cast<double>(i + 1) / (2 * i + 1);
}

double lb_0j(int j) {
  if (j < 1) throw std::invalid_argument("lb_0j: needs j >= 1");
  const double disc = std::sqrt(4.0 * j * j + 16.0 * j + 17.0);
  return (2.0 * j + 5.0 + disc) / (4.0 * (j + 2));
}

std::optional<double> exact_hadamard(int k) {
  if (!is_power_of_two(k)) return std::nullopt;
  return 1.0 / std::sqrt(2.0 * k);
}

Sandwich sandwich(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("sandwich: needs i, j >= 0");
  const int hi = std::max(i, j + 1);
  const int lo = std::min(i, j + 1);
  Sandwich s;
  s.lower_open = 1.0 / (2.0 * std::sqrt(static_cast<double>(hi)));
  s.upper = (lo == 0) ? std::numeric_limits<double>::infinity()
                      : 1.0 / std::sqrt(2.0 * lo);
  return s;
}

BoundsCell best_known(int i, int j) {
  if (i < 0 || i > 4 || j < 0 || j > 4)
    throw std::invalid_argument("best_known: tabulated range is 0 <= i, j <= 4");
  BoundsCell c;
  c.i = i;
  c.j = j;

  if (i == 0) {
    c.upper = ub_row0(j);
    c.upper_source = "gap ceiling, top row";
  } else {
    c.upper = ub_general(i, j);
    c.upper_source = "gap ceiling, general";
  }

  if (i == 0 && j == 0) {
    c.exact = 2.0 / std::sqrt(3.0);
    c.exact_source = "maximum classical spread";
  } else if (i == j + 1 && exact_hadamard(i).has_value()) {
    c.exact = *exact_hadamard(i);
    c.exact_source = "gap ceiling attained, hadamard-equality(" + std::to_string(i) + ")";
  }
  if (c.exact) {
    c.upper = *c.exact;
    c.upper_source = c.exact_source;
  }

  if (!c.exact) {
    if (i == 0 && j >= 1) c.conjectured = lb_0j(j);
    if (i == 1 && j >= 1) c.conjectured = lb_1j(j);
    if (i >= 2 && j == 0) c.conjectured = lb_i0(i);
  }

  Certificate cert = certificate_for(i, j);
  c.certificate = cert.name;
  if (cert.graph) {
    c.lower = spread_ratio(*cert.graph, SpreadQuery{i, j});
    c.status = c.exact ? CellStatus::Exact : CellStatus::Bounded;
  } else {
    c.status = CellStatus::LowerUnavailable;
  }
  return c;
}

std::vector<BoundsCell> full_table(int imax, int jmax, bool formulas_only) {
  if (imax < 0 || jmax < 0) throw std::invalid_argument("full_table: negative extent");
  if (!formulas_only && (imax > 4 || jmax > 4))
    throw std::invalid_argument(
        "full_table: certificates are tabulated for i, j <= 4; pass formulas_only beyond");
  std::vector<BoundsCell> cells;
  cells.reserve(static_cast<std::size_t>(imax + 1) * (jmax + 1));
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j) {
      if (!formulas_only) {
        cells.push_back(best_known(i, j));
        continue;
      }
      BoundsCell c;
      c.i = i;
      c.j = j;
      c.upper = (i == 0) ? ub_row0(j) : ub_general(i, j);
      c.upper_source = (i == 0) ? "gap ceiling, top row" : "gap ceiling, general";
      if (i == 0 && j >= 1) c.lower = lb_0j(j);
      if (i == 1 && j >= 1) c.lower = lb_1j(j);
      if (i >= 1 && j == 0) c.lower = lb_i0(i);
      if (c.lower) c.certificate = "formula";
      c.status = CellStatus::Bounded;
      cells.push_back(c);
    }
  return cells;
}

std::string format_3dp(double v) {
  const double scaled = std::round(std::abs(v) * 1000.0) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.3f", v < 0 ? "-" : "", scaled);
  return buf;
}

std::string format_3dp_trunc(double v) {
  const double scaled = std::trunc(std::abs(v) * 1000.0) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.3f", v < 0 ? "-" : "", scaled);
  return buf;
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string exact_form(int i, int j) {
  if (i == 0 && j == 0) return "2/sqrt(3)";
  if (i == 1 && j == 0) return "1/sqrt(2)";
  if (i == 2 && j == 1) return "1/2";
  if (i == 4 && j == 3) return "sqrt(2)/4";
  return "";
}

}  // namespace

std::string cell_display(const BoundsCell& c) {
  if (c.status == CellStatus::LowerUnavailable) return "n/a (G5 unavailable)";
  if (c.exact) {
    const std::string sym = exact_form(c.i, c.j);
    return sym.empty() ? format_3dp(*c.exact) : sym;
  }
  const std::string lo = c.lower ? format_3dp(*c.lower) : "-";
  return lo + "/" + format_3dp(c.upper);
}

std::string to_text(const std::vector<BoundsCell>& cells) {
  int imax = 0, jmax = 0;
  for (const auto& c : cells) {
    imax = std::max(imax, c.i);
    jmax = std::max(jmax, c.j);
  }
  auto at = [&](int i, int j) -> const BoundsCell* {
    for (const auto& c : cells)
      if (c.i == i && c.j == j) return &c;
    return nullptr;
  };
  constexpr int w = 22;
  std::ostringstream os;
  os << "best known bounds on s_ij (cell: lower/upper, exact value, or n/a)\n";
  os << "i\\j";
  for (int j = 0; j <= jmax; ++j) {
    std::string h = std::to_string(j);
    os << std::string(w - h.size(), ' ') << h;
  }
  os << '\n';
  for (int i = 0; i <= imax; ++i) {
    os << i << "  ";
    for (int j = 0; j <= jmax; ++j) {
      const auto* c = at(i, j);
      std::string s = c ? cell_display(*c) : "";
      if (s.size() < w)
        s = std::string(w - s.size(), ' ') + s;
      os << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_markdown(const std::vector<BoundsCell>& cells) {
  int imax = 0, jmax = 0;
  for (const auto& c : cells) {
    imax = std::max(imax, c.i);
    jmax = std::max(jmax, c.j);
  }
  auto at = [&](int i, int j) -> const BoundsCell* {
    for (const auto& c : cells)
      if (c.i == i && c.j == j) return &c;
    return nullptr;
  };
  std::ostringstream os;
  os << "| i\\j |";
  for (int j = 0; j <= jmax; ++j) os << ' ' << j << " |";
  os << "\n|---|";
  for (int j = 0; j <= jmax; ++j) os << "---|";
  os << '\n';
  for (int i = 0; i <= imax; ++i) {
    os << "| " << i << " |";
    for (int j = 0; j <= jmax; ++j) {
      const auto* c = at(i, j);
      os << ' ' << (c ? cell_display(*c) : "") << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<BoundsCell>& cells) {
  auto num = [](const std::optional<double>& v) -> std::string {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
  };
  std::ostringstream os;
  os << "i,j,lower,upper,exact,conjectured,certificate,status\n";
  for (const auto& c : cells) {
    char ub[64];
    std::snprintf(ub, sizeof ub, "%.17g", c.upper);
    const char* st = c.status == CellStatus::Exact ? "exact"
                     : c.status == CellStatus::LowerUnavailable ? "unavailable"
                                                                : "bounded";
    os << c.i << ',' << c.j << ',' << num(c.lower) << ',' << ub << ',' << num(c.exact) << ','
       << num(c.conjectured) << ',' << '"' << c.certificate << '"' << ',' << st << '\n';
  }
  return os.str();
}

}  // namespace specgap::bounds
