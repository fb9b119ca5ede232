#pragma once

#include <optional>
#include <string>
#include <vector>

namespace specgap::bounds {

/// Closed-form ceiling (n/2)sqrt((i+j+1)/(i(j+1))) scaled by 1/n; i >= 1.
double ub_general(int i, int j);

/// Closed-form ceiling for the i = 0 row: (1 + sqrt((j+2)/(j+1)))/2.
double ub_row0(int j);

/// Certificate-family lower bounds: (j+2)/(2j+3), (i+1)/(2i+1),
/// (2j+5+sqrt(4j^2+16j+17))/(4(j+2)). Parameters >= 1.
double lb_1j(int j);
double lb_i0(int i);
double lb_0j(int j);

/// 1/sqrt(2k) when the Hadamard factory covers order 2k (k a power of two).
std::optional<double> exact_hadamard(int k);

/// Bracketing of s_{i,j} between neighbouring attained gap ceilings; the
/// lower endpoint is open. Upper endpoint is +infinity when min(i, j+1) = 0.
struct Sandwich {
  double lower_open = 0.0;
  double upper = 0.0;
};
Sandwich sandwich(int i, int j);

enum class CellStatus { Exact, Bounded, LowerUnavailable };

struct BoundsCell {
  int i = 0, j = 0;
  double upper = 0.0;
  std::string upper_source;
  std::optional<double> lower;      // recomputed from the certificate spectrum
  std::string certificate;
  std::optional<double> exact;
  std::string exact_source;
  std::optional<double> conjectured;  // conjectured exact value, never used as a bound
  CellStatus status = CellStatus::Bounded;
};

/// Assembles one cell of the best-known table, 0 <= i, j <= 4. Lower bounds
/// are always recomputed by running the eigensolver on the certificate graph.
BoundsCell best_known(int i, int j);

/// Rows 0..imax x cols 0..jmax. With formulas_only, skips certificates and
/// reports formula-backed bounds only (any imax/jmax allowed).
std::vector<BoundsCell> full_table(int imax, int jmax, bool formulas_only);

std::string to_text(const std::vector<BoundsCell>& cells);
std::string to_markdown(const std::vector<BoundsCell>& cells);
std::string to_csv(const std::vector<BoundsCell>& cells);

/// Three-decimal formatting, rounding half away from zero (the table-matching
/// convention) and plain truncation (some published tables truncate).
std::string format_3dp(double v);
std::string format_3dp_trunc(double v);

/// 12 significant digits, the report format for raw values.
std::string format_sig12(double v);

/// Display string of a cell: "lower/upper", the exact form, or "n/a (...)".
std::string cell_display(const BoundsCell& c);

}  // namespace specgap::bounds
