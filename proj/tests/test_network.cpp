#include <doctest.h>

#include <set>

#include "fpanv/network.hpp"

#include <nlohmann/json.hpp>

using namespace fpanv;

namespace {

const FormatParams kP4 = FormatParams::custom(4, -60);

FloatVal lit(const char* s, const FormatParams& fmt) { return parse_float_literal(s, fmt); }

constexpr const char* kAdd2Spec = R"(network add2
wires x0 y0 x1 y1
twosum x0 y0
twosum x1 y1
twosum y0 x1
discard x1
twosum x0 y0
outputs z0=x0 z1=y0
)";

}  // namespace

TEST_CASE("parse add2 from the DSL grammar") {
  Fpan f = parse_fpan(kAdd2Spec);
  CHECK(f.name == "add2");
  CHECK(f.wire_count() == 4);
  CHECK(f.gate_count() == 4);
  CHECK(f.discards.size() == 2);  // x1 explicit, y1 implicit
  CHECK(f.segment_count() == 4 + 2 * 4);
  REQUIRE(f.outputs.size() == 2);
  CHECK(f.outputs[0].first == "z0");
  CHECK(f.wires[f.outputs[0].second] == "x0");
  CHECK(f.outputs[1].first == "z1");
  CHECK(f.wires[f.outputs[1].second] == "y0");
}

TEST_CASE("identity network and validator errors") {
  Fpan id = parse_fpan("network id\nwires a\noutputs out=a\n");
  CHECK(id.gate_count() == 0);
  CHECK(id.outputs.size() == 1);

  CHECK_THROWS_AS(parse_fpan("network n\nwires a b\ntwosum a a\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("network n\nwires a b\ntwosum a c\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("network n\nwires a a\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("network n\nwires a b\ndiscard a\ntwosum a b\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("network n\nwires a b\ndiscard a\noutputs o=a\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("wires a b\n"), ParseError);
  CHECK_THROWS_AS(parse_fpan("network n\nwires a b\nfrobnicate a\n"), ParseError);
}

TEST_CASE("builtin corpus shapes") {
  Fpan ddadd = builtin_fpan("ddadd");
  CHECK(ddadd.wire_count() == 4);
  CHECK(ddadd.gate_count() == 6);
  CHECK(ddadd.discards.size() == 2);
  CHECK(depth(ddadd) == 5);

  Fpan madd = builtin_fpan("madd");
  CHECK(madd.gate_count() == 6);
  CHECK(madd.discards.size() == 2);
  CHECK(depth(madd) == 4);

  Fpan ddadd_aug = builtin_fpan("ddadd_aug");
  CHECK(ddadd_aug.gate_count() == 7);
  CHECK(ddadd_aug.discards.empty());
  CHECK(ddadd_aug.outputs.size() == 4);

  Fpan madd_aug = builtin_fpan("madd_aug");
  CHECK(madd_aug.wire_count() == 4);
  CHECK(madd_aug.gate_count() == 7);
  CHECK(madd_aug.discards.empty());

  Fpan kbn5 = builtin_fpan("kbn(5)");
  CHECK(kbn5.wire_count() == 5);
  CHECK(kbn5.gate_count() == 8);
  CHECK(kbn5.discards.size() == 4);
  CHECK(kbn5.outputs.size() == 1);

  Fpan single = parse_fpan("network one\nwires a b\ntwosum a b\noutputs s=a e=b\n");
  CHECK(depth(single) == 1);

  CHECK_THROWS(builtin_fpan("nope"));
  CHECK_THROWS(builtin_fpan("kbn(1)"));
}

TEST_CASE("segment labeling") {
  Fpan f = builtin_fpan("add2");
  SegmentTable t = build_segments(f);
  CHECK(t.count() == f.segment_count());
  CHECK(t.label(f, 0) == "x0_0");
  // first gate touches x0 and y0
  CHECK(t.segments[t.gate_segs[0].out_sum].role == SegRole::GateSum);
  CHECK(t.label(f, t.gate_segs[0].out_sum) == "x0_1");
  CHECK(t.label(f, t.gate_segs[0].out_err) == "y0_1");
  // labels are unique
  std::set<std::string> labels;
  for (int s = 0; s < t.count(); ++s) labels.insert(t.label(f, s));
  CHECK(static_cast<int>(labels.size()) == t.count());
}

TEST_CASE("simulate add2 zero flow") {
  Fpan f = builtin_fpan("add2");
  std::vector<FloatVal> in = {lit("1", kP4), FloatVal::zero(kP4, 0), FloatVal::zero(kP4, 0),
                              FloatVal::zero(kP4, 0)};
  Trace t = simulate(f, in, kP4);
  REQUIRE(t.outputs.size() == 2);
  CHECK(t.outputs[0] == lit("1", kP4));
  CHECK(t.outputs[1].is_zero());
  CHECK_THROWS(simulate(f, std::vector<FloatVal>(3, FloatVal::zero(kP4, 0)), kP4));
}

TEST_CASE("kbn(3) beats the naive sum at p=4") {
  Fpan kbn = builtin_fpan("kbn(3)");
  std::vector<FloatVal> in = {lit("1.000_2 * 2^0", kP4), lit("1.000_2 * 2^-4", kP4),
                              lit("1.000_2 * 2^-4", kP4)};
  Trace t = simulate(kbn, in, kP4);
  REQUIRE(t.outputs.size() == 1);
  CHECK(t.outputs[0] == lit("1.001_2 * 2^0", kP4));
  // the naive sum loses both small addends to the halfway rule
  FloatVal naive = add(add(in[0], in[1], kP4), in[2], kP4);
  CHECK(naive == lit("1.000_2 * 2^0", kP4));
}

TEST_CASE("sum conservation along the gate sequence") {
  auto conserved = [&](const Fpan& f, std::span<const FloatVal> in) {
    SegmentTable t = build_segments(f);
    Trace tr = simulate(f, in, kP4);
    ExactReal total;
    for (const FloatVal& v : in) total += v.value(kP4);
    // after every prefix of gates, live wires plus discarded values sum to
    // the input total
    for (int g = 0; g <= f.gate_count(); ++g) {
      std::vector<int> cur = t.input_seg;
      for (int i = 0; i < g; ++i) {
        cur[f.gates[i].a] = t.gate_segs[i].out_sum;
        cur[f.gates[i].b] = t.gate_segs[i].out_err;
      }
      ExactReal sum;
      for (int w = 0; w < f.wire_count(); ++w) sum += tr.values[cur[w]].value(kP4);
      CHECK(sum == total);
    }
  };
  std::vector<FloatVal> in = {lit("1.010_2 * 2^3", kP4), lit("-1.100_2 * 2^1", kP4),
                              lit("1.111_2 * 2^-2", kP4), lit("1.001_2 * 2^-5", kP4)};
  conserved(builtin_fpan("ddadd"), in);
  conserved(builtin_fpan("madd"), in);
  conserved(builtin_fpan("ddadd_aug"), in);
  std::vector<FloatVal> in5 = {lit("1.010_2 * 2^3", kP4), lit("-1.100_2 * 2^1", kP4),
                               lit("1.111_2 * 2^-2", kP4), lit("1.001_2 * 2^-5", kP4),
                               lit("-1.001_2 * 2^-4", kP4)};
  conserved(builtin_fpan("kbn(5)"), in5);
}

TEST_CASE("shift equivariance of simulation") {
  Fpan f = builtin_fpan("madd");
  std::vector<FloatVal> in = {lit("1.010_2 * 2^0", kP4), lit("-1.100_2 * 2^-1", kP4),
                              lit("1.111_2 * 2^-6", kP4), lit("1.001_2 * 2^-7", kP4)};
  Trace base = simulate(f, in, kP4);
  for (long long k : {-3LL, 1LL, 7LL}) {
    std::vector<FloatVal> shifted;
    for (const FloatVal& v : in)
      shifted.push_back(v.is_zero() ? v : FloatVal::make(kP4, v.sign(), v.exponent() + k,
                                                         v.fraction()));
    Trace t = simulate(f, shifted, kP4);
    for (size_t s = 0; s < t.values.size(); ++s) {
      CHECK(t.values[s].value(kP4) == base.values[s].value(kP4).mul_pow2(k));
      CHECK(t.values[s].sign() == base.values[s].sign());
    }
  }
}

TEST_CASE("trace export") {
  Fpan f = builtin_fpan("add2");
  std::vector<FloatVal> in = {lit("1.010_2 * 2^3", kP4), lit("1.100_2 * 2^1", kP4),
                              lit("1.111_2 * 2^-2", kP4), lit("1.001_2 * 2^-5", kP4)};
  Trace t = simulate(f, in, kP4);
  nlohmann::json j = trace_to_json(f, t, kP4);
  CHECK(j["segments"].size() == static_cast<size_t>(f.segment_count()));
  CHECK(j["outputs"].contains("z0"));
  CHECK(j["discarded"].size() == 2);
  // segment values round-trip through the literal grammar
  for (auto& [label, text] : j["segments"].items())
    CHECK_NOTHROW(parse_float_literal(text.get<std::string>(), kP4));
}

TEST_CASE("dsl round trip") {
  for (const char* name : {"add2", "ddadd", "madd", "ddadd_aug", "madd_aug", "kbn(4)"}) {
    Fpan f = builtin_fpan(name);
    Fpan g = parse_fpan(fpan_to_dsl(f));
    CHECK(g.wires == f.wires);
    CHECK(g.gate_count() == f.gate_count());
    CHECK(g.discards.size() == f.discards.size());
    CHECK(g.outputs == f.outputs);
  }
}
