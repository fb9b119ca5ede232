#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// sparse6 ("...:" payload, loop-capable) and graph6 (simple graphs only)
/// interchange strings. Both follow the published format rules: 6-bit bytes
/// offset by 63, short and long size prefixes, bit-level padding. The decoder
/// accepts either legal trailing-padding variant; the encoder emits the
/// canonical one. Repeated edges (multigraph encodings) are rejected.

LoopedGraph sparse6_decode(std::string_view s);
std::string sparse6_encode(const LoopedGraph& g);

LoopedGraph graph6_decode(std::string_view s);
std::string graph6_encode(const LoopedGraph& g);  // throws if the graph has a loop

/// Decodes a line that may carry either format (">>...<<" headers allowed).
LoopedGraph decode_any(std::string_view line);

/// The named computer-search certificates and their complements, keyed by the
/// bounds-table cell they witness. G5 is known only by order (its string was
/// never published in-band) and is carried as an unavailable entry so table
/// reproduction can report honest partial coverage.
struct Table3Entry {
  std::string name;          // G1..G7, G1c, G2c, G5c
  std::string sparse6;       // empty for unavailable or derived entries
  int i = 0, j = 0;          // target cell
  bool available = false;
  std::string complement_of; // non-empty for derived complements
  std::string note;
};

class Table3Registry {
 public:
  const std::vector<Table3Entry>& entries() const { return entries_; }
  const Table3Entry* find(std::string_view name) const;

  /// Decoded graph (complements already applied); nullopt when unavailable.
  std::optional<LoopedGraph> graph(std::string_view name) const;

  /// Entry targeting cell (i, j), if any.
  const Table3Entry* for_cell(int i, int j) const;

 private:
  friend const Table3Registry& table3_registry();
  Table3Registry();
  std::vector<Table3Entry> entries_;
  std::vector<std::optional<LoopedGraph>> graphs_;
};

/// Built once, read-only afterwards.
const Table3Registry& table3_registry();

}  // namespace specgap
