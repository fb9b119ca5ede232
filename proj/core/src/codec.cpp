#include "specgap/codec.hpp"

#include <stdexcept>
#include <utility>

namespace specgap {
namespace {

constexpr std::string_view kSparse6Header = ">>sparse6<<";
constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("codec: " + what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

// 6-bit big-endian reader over printable bytes 63..126.
class BitReader {
 public:
  explicit BitReader(std::string_view payload) : payload_(payload) {
    for (char c : payload_)
      if (c < 63 || c > 126) bad("payload byte out of range 63..126");
  }
  std::size_t bits_left() const { return payload_.size() * 6 - pos_; }
  int read_bit() {
    const std::size_t byte = pos_ / 6, off = pos_ % 6;
    ++pos_;
    return (static_cast<unsigned>(payload_[byte] - 63) >> (5 - off)) & 1u;
  }
  long long read_value(int k) {
    long long v = 0;
    for (int t = 0; t < k; ++t) v = (v << 1) | read_bit();
    return v;
  }
  bool rest_all_ones() {
    while (bits_left() > 0)
      if (read_bit() != 1) return false;
    return true;
  }

 private:
  std::string_view payload_;
  std::size_t pos_ = 0;
};

// Size prefix N(n); consumes 1, 4 or 8 bytes from the front of s.
long long decode_order(std::string_view& s) {
  if (s.empty()) bad("missing size prefix");
  auto take6 = [&]() -> long long {
    if (s.empty()) bad("truncated size prefix");
    const char c = s.front();
    if (c < 63 || c > 126) bad("size byte out of range 63..126");
    s.remove_prefix(1);
    return c - 63;
  };
  long long v = take6();
  if (v < 63) return v;
  v = take6();
  int groups = 2;  // remaining 6-bit groups after this one
  if (v == 63) {
    v = take6();
    groups = 5;
  }
  long long n = v;
  for (int t = 0; t < groups; ++t) n = (n << 6) | take6();
  return n;
}

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int width_for(int n) {
  int k = 1;
  while ((n - 1) >> k) ++k;
  return k;
}

class BitWriter {
 public:
  void put(int bit) {
    cur_ = (cur_ << 1) | bit;
    if (++nbits_ == 6) flush_group();
  }
  void put_value(long long v, int k) {
    for (int t = k - 1; t >= 0; --t) put(static_cast<int>((v >> t) & 1));
  }
  int partial_bits() const { return nbits_; }
  std::string take() {
    if (nbits_ != 0) bad("internal: unpadded bit stream");
    return std::move(out_);
  }

 private:
  void flush_group() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    nbits_ = 0;
  }
  std::string out_;
  int cur_ = 0;
  int nbits_ = 0;
};

}  // namespace

LoopedGraph sparse6_decode(std::string_view s) {
  s = trim(s);
  if (s.starts_with(kSparse6Header)) s.remove_prefix(kSparse6Header.size());
  if (s.empty() || s.front() != ':') bad("sparse6 string must start with ':'");
  s.remove_prefix(1);
  const long long n64 = decode_order(s);
  if (n64 < 1) bad("graph order must be at least 1");
  if (n64 > 4096) bad("graph order too large for this tool");
  const int n = static_cast<int>(n64);
  const int k = width_for(n);

  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  BitReader bits(s);
  long long v = 0;
  while (bits.bits_left() >= static_cast<std::size_t>(1 + k)) {
    const int b = bits.read_bit();
    const long long x = bits.read_value(k);
    if (b) ++v;
    if (v >= n) {
      // End of data; anything but padding is an encoding error.
      if (x != (1LL << k) - 1 || !bits.rest_all_ones()) bad("vertex index out of range");
      break;
    }
    if (x >= n) {
      if (x != (1LL << k) - 1 || !bits.rest_all_ones()) bad("vertex index out of range");
      break;
    }
    if (x > v) {
      v = x;
    } else {
      auto& cell = adj[static_cast<std::size_t>(x) * n + v];
      if (cell) bad("repeated edge (multigraphs are not supported)");
      cell = 1;
      adj[static_cast<std::size_t>(v) * n + x] = 1;
    }
  }
  return LoopedGraph::from_matrix(n, std::move(adj));
}

std::string sparse6_encode(const LoopedGraph& g) {
  const int n = g.order();
  const int k = width_for(n);
  std::string out = ":";
  append_order(out, n);

  BitWriter w;
  int cv = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u <= v; ++u) {
      if (!g.at(u, v)) continue;
      if (v == cv) {
        w.put(0);
        w.put_value(u, k);
      } else if (v == cv + 1) {
        cv = v;
        w.put(1);
        w.put_value(u, k);
      } else {
        cv = v;
        w.put(1);
        w.put_value(v, k);
        w.put(0);
        w.put_value(u, k);
      }
    }
  }
  // Pad with 1s; when n = 2^k the all-ones x value is a valid vertex and a
  // run of 1s could decode as a loop on n-1, so the canonical form starts the
  // padding with a 0 bit in that regime.
  int pad = (6 - w.partial_bits()) % 6;
  if (k < 6 && n == (1 << k) && pad >= k && cv < n - 1) {
    w.put(0);
    pad = (6 - w.partial_bits()) % 6;
  }
  while (pad-- > 0) w.put(1);
  out += w.take();
  return out;
}

LoopedGraph graph6_decode(std::string_view s) {
  s = trim(s);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  if (!s.empty() && s.front() == ':') bad("graph6 expected but sparse6 marker found");
  const long long n64 = decode_order(s);
  if (n64 < 1) bad("graph order must be at least 1");
  if (n64 > 4096) bad("graph order too large for this tool");
  const int n = static_cast<int>(n64);
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() != (nbits + 5) / 6) bad("graph6 payload length mismatch");

  BitReader bits(s);
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int c = 1; c < n; ++c)
    for (int r = 0; r < c; ++r) {
      if (bits.read_bit()) {
        adj[static_cast<std::size_t>(r) * n + c] = 1;
        adj[static_cast<std::size_t>(c) * n + r] = 1;
      }
    }
  while (bits.bits_left() > 0)
    if (bits.read_bit() != 0) bad("graph6 padding bits must be zero");
  return LoopedGraph::from_matrix(n, std::move(adj));
}

std::string graph6_encode(const LoopedGraph& g) {
  const int n = g.order();
  if (g.loop_count() != 0)
    bad("graph6 cannot represent loops; use sparse6");
  std::string out;
  append_order(out, n);
  BitWriter w;
  for (int c = 1; c < n; ++c)
    for (int r = 0; r < c; ++r) w.put(g.at(r, c));
  int pad = (6 - w.partial_bits()) % 6;
  while (pad-- > 0) w.put(0);
  out += w.take();
  return out;
}

LoopedGraph decode_any(std::string_view line) {
  std::string_view s = trim(line);
  if (s.starts_with(kSparse6Header) || (!s.empty() && s.front() == ':')) return sparse6_decode(s);
  return graph6_decode(s);
}

const Table3Entry* Table3Registry::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const Table3Entry* Table3Registry::for_cell(int i, int j) const {
  for (const auto& e : entries_)
    if (e.i == i && e.j == j) return &e;
  return nullptr;
}

std::optional<LoopedGraph> Table3Registry::graph(std::string_view name) const {
  for (std::size_t t = 0; t < entries_.size(); ++t)
    if (entries_[t].name == name) return graphs_[t];
  return std::nullopt;
}

Table3Registry::Table3Registry() {
  auto direct = [&](std::string name, std::string s6, int i, int j) {
    entries_.push_back({std::move(name), std::move(s6), i, j, true, "", ""});
  };
  direct("G1", R"(:K_ES`s_QOqDL?G`f_C`SOAGXsoAOiCqEOhdJ)", 2, 2);
  direct("G2", R"(:N_EC?aF?G`c_E?Qe_CXAecaPSQEPATQEPATTK`IdtK\ATkiWyCkYz)", 2, 3);
  direct("G3", R"(:Oc?GgbaMGqOL?PbsIWyIDK\AXcIXATOAGXW@CKawAK\ATk_CXAiUq?PEMlbV^)", 2, 4);
  direct("G4", R"(:FehIA_t_S)", 3, 2);
  entries_.push_back({"G5", "", 3, 3, false, "",
                      "20-vertex search graph; published out-of-band only"});
  direct("G6", R"(:K@GKPT?QXAecOhxBGWyG@CLC?bGSqTOAG`RhV)", 3, 4);
  direct("G7", R"(:J`?S@oBG[aDeOpwbJCPsHaOhc^)", 4, 4);
  entries_.push_back({"G1c", "", 3, 1, true, "G1", ""});
  entries_.push_back({"G2c", "", 4, 1, true, "G2", ""});
  entries_.push_back({"G5c", "", 4, 2, false, "G5", "complement of the unavailable G5"});

  graphs_.resize(entries_.size());
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    const auto& e = entries_[t];
    if (!e.available) continue;
    if (e.complement_of.empty()) {
      graphs_[t] = sparse6_decode(e.sparse6);
    } else {
      graphs_[t] = closed_complement(*graph(e.complement_of));
    }
  }
}

const Table3Registry& table3_registry() {
  static const Table3Registry reg;
  return reg;
}

}  // namespace specgap
