#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpanv/softfloat.hpp"

#include <nlohmann/json_fwd.hpp>

namespace fpanv {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// A TwoSum gate over two distinct wires: the rounded sum lands on wire a
/// (the upper wire as drawn) and the exact error on wire b.
struct Gate {
  int a = -1;
  int b = -1;
};

struct Discard {
  int wire = -1;
  int after_gate = 0;  // position in the gate sequence where the value drops
  bool implicit = false;
};

/// A floating-point accumulation network: named wires top to bottom, a
/// sequence of TwoSum gates, discard markers and named outputs.
struct Fpan {
  std::string name;
  std::vector<std::string> wires;
  std::vector<Gate> gates;
  std::vector<Discard> discards;
  std::vector<std::pair<std::string, int>> outputs;  // (output name, wire)
  std::vector<std::string> input_names;              // defaults to wire names

  int wire_count() const { return static_cast<int>(wires.size()); }
  int gate_count() const { return static_cast<int>(gates.size()); }
  int segment_count() const { return wire_count() + 2 * gate_count(); }
  int wire_index(std::string_view name) const;  // -1 if absent
  bool is_discarded(int wire) const;
};

Fpan parse_fpan(std::string_view text);
std::string fpan_to_dsl(const Fpan& f);

/// The built-in corpus: add2, ddadd, madd, ddadd_aug, madd_aug, kbn(n) n>=2.
Fpan builtin_fpan(std::string_view name);
std::vector<std::string> builtin_fpan_names();

/// Longest chain of data-dependent gates.
int depth(const Fpan& f);

enum class SegRole { Input, GateSum, GateErr };

struct Segment {
  int wire;
  int index_on_wire;
  SegRole role;
  int gate;  // producing gate, -1 for inputs
};

/// Wire-segment labeling: every gate delineates two new segments, so a
/// network with n wires and g gates has n + 2g segments.
struct SegmentTable {
  struct GateSegs {
    int in_a, in_b, out_sum, out_err;
  };
  std::vector<Segment> segments;
  std::vector<GateSegs> gate_segs;
  std::vector<int> input_seg;  // per wire
  std::vector<int> final_seg;  // per wire

  int count() const { return static_cast<int>(segments.size()); }
  std::string label(const Fpan& f, int seg) const;
};

SegmentTable build_segments(const Fpan& f);

struct Trace {
  std::vector<FloatVal> values;  // indexed by segment id
  struct Dropped {
    int segment;
    FloatVal value;
  };
  std::vector<Dropped> discarded;
  std::vector<FloatVal> outputs;  // top-to-bottom output order
};

Trace simulate(const Fpan& f, std::span<const FloatVal> inputs, const FormatParams& fmt);

nlohmann::json trace_to_json(const Fpan& f, const Trace& t, const FormatParams& fmt);

}  // namespace fpanv
