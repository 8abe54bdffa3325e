#include "fpanv/network.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fpanv {

int Fpan::wire_index(std::string_view name) const {
  for (size_t i = 0; i < wires.size(); ++i)
    if (wires[i] == name) return static_cast<int>(i);
  return -1;
}

bool Fpan::is_discarded(int wire) const {
  return std::any_of(discards.begin(), discards.end(),
                     [&](const Discard& d) { return d.wire == wire; });
}

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    ++line_no;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
      if (line[i] == '#') break;
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#')
        ++i;
      toks.push_back({std::string(line.substr(start, i - start)), line_no,
                      static_cast<int>(start + 1)});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

Fpan parse_fpan(std::string_view text) {
  Fpan f;
  bool saw_network = false, saw_wires = false, saw_outputs = false, saw_inputs = false;
  std::vector<bool> dropped;  // per wire, during gate sequencing

  auto need_wire = [&](const Token& t) {
    int w = f.wire_index(t.text);
    if (w < 0) throw ParseError("unknown wire '" + t.text + "'", t.line, t.column);
    if (dropped[w]) throw ParseError("wire '" + t.text + "' was discarded", t.line, t.column);
    return w;
  };

  for (const auto& toks : tokenize(text)) {
    const Token& head = toks[0];
    if (head.text == "network") {
      if (saw_network) throw ParseError("duplicate network declaration", head.line, head.column);
      if (toks.size() != 2) throw ParseError("expected: network <name>", head.line, head.column);
      f.name = toks[1].text;
      saw_network = true;
    } else if (head.text == "wires") {
      if (!saw_network) throw ParseError("wires before network declaration", head.line, head.column);
      if (saw_wires) throw ParseError("duplicate wires declaration", head.line, head.column);
      if (toks.size() < 2) throw ParseError("expected at least one wire", head.line, head.column);
      for (size_t i = 1; i < toks.size(); ++i) {
        if (f.wire_index(toks[i].text) >= 0)
          throw ParseError("duplicate wire name '" + toks[i].text + "'", toks[i].line,
                           toks[i].column);
        f.wires.push_back(toks[i].text);
      }
      dropped.assign(f.wires.size(), false);
      saw_wires = true;
    } else if (head.text == "inputs") {
      if (!saw_wires) throw ParseError("inputs before wires", head.line, head.column);
      if (saw_inputs) throw ParseError("duplicate inputs declaration", head.line, head.column);
      if (toks.size() != f.wires.size() + 1)
        throw ParseError("inputs clause must rename every wire", head.line, head.column);
      for (size_t i = 1; i < toks.size(); ++i) f.input_names.push_back(toks[i].text);
      saw_inputs = true;
    } else if (head.text == "twosum") {
      if (!saw_wires) throw ParseError("gate before wires", head.line, head.column);
      if (saw_outputs) throw ParseError("gate after outputs", head.line, head.column);
      if (toks.size() != 3) throw ParseError("expected: twosum <wA> <wB>", head.line, head.column);
      int a = need_wire(toks[1]);
      int b = need_wire(toks[2]);
      if (a == b)
        throw ParseError("twosum needs two distinct wires", toks[2].line, toks[2].column);
      f.gates.push_back({a, b});
    } else if (head.text == "discard") {
      if (!saw_wires) throw ParseError("discard before wires", head.line, head.column);
      if (saw_outputs) throw ParseError("discard after outputs", head.line, head.column);
      if (toks.size() != 2) throw ParseError("expected: discard <w>", head.line, head.column);
      int w = need_wire(toks[1]);
      dropped[w] = true;
      f.discards.push_back({w, f.gate_count(), false});
    } else if (head.text == "outputs") {
      if (!saw_wires) throw ParseError("outputs before wires", head.line, head.column);
      if (saw_outputs) throw ParseError("duplicate outputs declaration", head.line, head.column);
      for (size_t i = 1; i < toks.size(); ++i) {
        const Token& t = toks[i];
        auto eq = t.text.find('=');
        std::string out_name = eq == std::string::npos ? t.text : t.text.substr(0, eq);
        std::string wire_name = eq == std::string::npos ? t.text : t.text.substr(eq + 1);
        Token wt{wire_name, t.line, t.column};
        int w = need_wire(wt);
        for (const auto& [n, ow] : f.outputs) {
          if (n == out_name) throw ParseError("duplicate output name '" + n + "'", t.line, t.column);
          if (ow == w) throw ParseError("wire '" + wire_name + "' listed twice in outputs", t.line, t.column);
        }
        f.outputs.emplace_back(out_name, w);
      }
      saw_outputs = true;
    } else {
      throw ParseError("unknown statement '" + head.text + "'", head.line, head.column);
    }
  }
  if (!saw_network) throw ParseError("missing network declaration", 1, 1);
  if (!saw_wires) throw ParseError("missing wires declaration", 1, 1);
  if (f.input_names.empty()) f.input_names = f.wires;

  if (!saw_outputs) {
    for (int w = 0; w < f.wire_count(); ++w)
      if (!dropped[w]) f.outputs.emplace_back(f.wires[w], w);
  }
  // Wires that are neither discarded nor returned are implicitly discarded
  // after the last gate.
  for (int w = 0; w < f.wire_count(); ++w) {
    bool in_outputs = std::any_of(f.outputs.begin(), f.outputs.end(),
                                  [&](const auto& o) { return o.second == w; });
    if (!dropped[w] && !in_outputs) f.discards.push_back({w, f.gate_count(), true});
  }
  return f;
}

std::string fpan_to_dsl(const Fpan& f) {
  std::ostringstream os;
  os << "network " << f.name << "\n";
  os << "wires";
  for (const auto& w : f.wires) os << ' ' << w;
  os << "\n";
  if (f.input_names != f.wires) {
    os << "inputs";
    for (const auto& n : f.input_names) os << ' ' << n;
    os << "\n";
  }
  size_t di = 0;
  auto flush_discards = [&](int upto_gate) {
    while (di < f.discards.size() && f.discards[di].after_gate <= upto_gate) {
      if (!f.discards[di].implicit) os << "discard " << f.wires[f.discards[di].wire] << "\n";
      ++di;
    }
  };
  for (int g = 0; g < f.gate_count(); ++g) {
    flush_discards(g - 1);
    // discards registered at position g precede gate g+1
    while (di < f.discards.size() && f.discards[di].after_gate == g) {
      if (!f.discards[di].implicit) os << "discard " << f.wires[f.discards[di].wire] << "\n";
      ++di;
    }
    os << "twosum " << f.wires[f.gates[g].a] << ' ' << f.wires[f.gates[g].b] << "\n";
  }
  flush_discards(f.gate_count());
  os << "outputs";
  for (const auto& [n, w] : f.outputs) os << ' ' << n << '=' << f.wires[w];
  os << "\n";
  return os.str();
}

namespace {

constexpr std::string_view kAdd2Src = R"(# Dekker's double-double addition (weak guarantees)
network add2
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum y0 x1
discard x1
twosum x0 y0
outputs z0=x0 z1=y0
)";

constexpr std::string_view kDdaddSrc = R"(# Li et al. double-double addition (XBLAS)
network ddadd
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum y0 x1
discard x1
twosum x0 y0
twosum y0 y1
discard y1
twosum x0 y0
outputs z0=x0 z1=y0
)";

constexpr std::string_view kMaddSrc = R"(# depth-4 double-double addition
network madd
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum x0 x1
twosum y0 y1
discard y1
twosum y0 x1
discard x1
twosum x0 y0
outputs z0=x0 z1=y0
)";

constexpr std::string_view kDdaddAugSrc = R"(# ddadd with both error terms kept and combined
network ddadd_aug
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum y0 x1
twosum x0 y0
twosum y0 y1
twosum x0 y0
twosum x1 y1
outputs z0=x0 z1=y0 w0=x1 w1=y1
)";

constexpr std::string_view kMaddAugSrc = R"(# madd with both error terms kept and combined
network madd_aug
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum x0 x1
twosum y0 y1
twosum y0 x1
twosum x0 y0
twosum x1 y1
outputs z0=x0 z1=y0 w0=x1 w1=y1
)";

std::string kbn_source(int n) {
  // Double staircase: a running-sum stair up the wires interleaved with a
  // compensation stair two steps behind, accumulating the rounding errors.
  // Wires are named x<n> (top) .. x1 (bottom); the surviving output is x<n>.
  std::ostringstream os;
  os << "network kbn(" << n << ")\n";
  os << "wires";
  for (int i = n; i >= 1; --i) os << " x" << i;
  os << "\n";
  auto stair = [&](int i) { os << "twosum x" << (i + 1) << " x" << i << "\n"; };
  for (int i = 1; i <= n - 1; ++i) {
    stair(i);
    if (i >= 3) {
      stair(i - 2);
      os << "discard x" << (i - 2) << "\n";
    }
  }
  for (int i = std::max(1, n - 2); i <= n - 1; ++i) {
    stair(i);
    os << "discard x" << i << "\n";
  }
  os << "outputs s=x" << n << "\n";
  return os.str();
}

}  // namespace

Fpan builtin_fpan(std::string_view name) {
  if (name == "add2") return parse_fpan(kAdd2Src);
  if (name == "ddadd") return parse_fpan(kDdaddSrc);
  if (name == "madd") return parse_fpan(kMaddSrc);
  if (name == "ddadd_aug") return parse_fpan(kDdaddAugSrc);
  if (name == "madd_aug") return parse_fpan(kMaddAugSrc);
  if (name.starts_with("kbn(") && name.ends_with(")")) {
    int n = 0;
    try {
      n = std::stoi(std::string(name.substr(4, name.size() - 5)));
    } catch (...) {
      throw std::invalid_argument("bad kbn arity in '" + std::string(name) + "'");
    }
    if (n < 2) throw std::invalid_argument("kbn needs at least 2 inputs");
    return parse_fpan(kbn_source(n));
  }
  throw std::invalid_argument("unknown builtin network '" + std::string(name) + "'");
}

std::vector<std::string> builtin_fpan_names() {
  return {"add2", "ddadd", "madd", "ddadd_aug", "madd_aug", "kbn(n)"};
}

int depth(const Fpan& f) {
  std::vector<int> wire_depth(f.wires.size(), 0);
  int best = 0;
  for (const Gate& g : f.gates) {
    int d = std::max(wire_depth[g.a], wire_depth[g.b]) + 1;
    wire_depth[g.a] = wire_depth[g.b] = d;
    best = std::max(best, d);
  }
  return best;
}

SegmentTable build_segments(const Fpan& f) {
  SegmentTable t;
  std::vector<int> current(f.wires.size());
  std::vector<int> per_wire_count(f.wires.size(), 0);
  for (int w = 0; w < f.wire_count(); ++w) {
    t.segments.push_back({w, 0, SegRole::Input, -1});
    current[w] = w;
    per_wire_count[w] = 1;
  }
  t.input_seg = current;
  for (int g = 0; g < f.gate_count(); ++g) {
    const Gate& gate = f.gates[g];
    SegmentTable::GateSegs gs;
    gs.in_a = current[gate.a];
    gs.in_b = current[gate.b];
    gs.out_sum = t.count();
    t.segments.push_back({gate.a, per_wire_count[gate.a]++, SegRole::GateSum, g});
    gs.out_err = t.count();
    t.segments.push_back({gate.b, per_wire_count[gate.b]++, SegRole::GateErr, g});
    current[gate.a] = gs.out_sum;
    current[gate.b] = gs.out_err;
    t.gate_segs.push_back(gs);
  }
  t.final_seg = current;
  return t;
}

std::string SegmentTable::label(const Fpan& f, int seg) const {
  const Segment& s = segments[seg];
  return f.wires[s.wire] + "_" + std::to_string(s.index_on_wire);
}

Trace simulate(const Fpan& f, std::span<const FloatVal> inputs, const FormatParams& fmt) {
  if (static_cast<int>(inputs.size()) != f.wire_count())
    throw std::invalid_argument("expected " + std::to_string(f.wire_count()) + " inputs, got " +
                                std::to_string(inputs.size()));
  SegmentTable t = build_segments(f);
  Trace tr;
  tr.values.resize(t.count());
  std::vector<int> current(f.wires.size());
  for (int w = 0; w < f.wire_count(); ++w) {
    tr.values[w] = inputs[w];
    current[w] = w;
  }
  for (int g = 0; g < f.gate_count(); ++g) {
    const auto& gs = t.gate_segs[g];
    TwoSumResult r = two_sum(tr.values[gs.in_a], tr.values[gs.in_b], fmt);
    tr.values[gs.out_sum] = r.sum;
    tr.values[gs.out_err] = r.err;
    current[f.gates[g].a] = gs.out_sum;
    current[f.gates[g].b] = gs.out_err;
  }
  for (const Discard& d : f.discards) {
    // value present on the wire at the discard position
    int seg = t.input_seg[d.wire];
    for (int g = 0; g < d.after_gate; ++g) {
      const Gate& gate = f.gates[g];
      if (gate.a == d.wire) seg = t.gate_segs[g].out_sum;
      if (gate.b == d.wire) seg = t.gate_segs[g].out_err;
    }
    tr.discarded.push_back({seg, tr.values[seg]});
  }
  for (const auto& [name, w] : f.outputs) tr.outputs.push_back(tr.values[current[w]]);
  return tr;
}

nlohmann::json trace_to_json(const Fpan& f, const Trace& t, const FormatParams& fmt) {
  SegmentTable st = build_segments(f);
  nlohmann::json j = nlohmann::json::object();
  nlohmann::json segs = nlohmann::json::object();
  for (int s = 0; s < st.count(); ++s) segs[st.label(f, s)] = to_literal(t.values[s], fmt);
  j["segments"] = segs;
  nlohmann::json outs = nlohmann::json::object();
  for (size_t i = 0; i < f.outputs.size(); ++i)
    outs[f.outputs[i].first] = to_literal(t.outputs[i], fmt);
  j["outputs"] = outs;
  nlohmann::json drops = nlohmann::json::array();
  for (const auto& d : t.discarded)
    drops.push_back({{"segment", st.label(f, d.segment)}, {"value", to_literal(d.value, fmt)}});
  j["discarded"] = drops;
  return j;
}

}  // namespace fpanv
