#include <doctest.h>

#include "fpanv/lemmas.hpp"

using namespace fpanv;

namespace {

FormatParams fmt_for(int p) { return FormatParams::custom(p, -4 * p - 16); }

// Fields allowed in each statement vocabulary.
bool vocab_allows(Domain vocab, Field f) {
  switch (f) {
    case Field::Sign:
    case Field::Exp:
      return true;
    case Field::Ntz:
    case Field::TrailExp:
      return vocab != Domain::SE;
    case Field::Nlz:
    case Field::Nlo:
    case Field::Nto:
      return vocab == Domain::SELTZO;
  }
  return false;
}

void collect_fields(const LinExpr& e, std::set<Field>& out) {
  for (const auto& t : e.terms)
    if (t.kind == LinTerm::Kind::Field) out.insert(t.field);
}

void collect_fields(const Constraint& c, std::set<Field>& out) {
  collect_fields(c.lhs, out);
  collect_fields(c.rhs, out);
  for (const auto& k : c.kids) collect_fields(k, out);
}

}  // namespace

TEST_CASE("catalog sizes and membership") {
  CHECK(catalog(Domain::SE).size() == 13);
  CHECK(catalog(Domain::SETZ).size() == 67);
  CHECK(catalog(Domain::SELTZO).size() == 45);
  CHECK(catalog(Domain::SELTZO, SeltzoExtension::SetzCompat).size() == 67);
  CHECK(find_lemma("SETZ-2B1") != nullptr);
  CHECK(find_lemma("SE-S5") != nullptr);
  CHECK(find_lemma("nope") == nullptr);
  // SETZ-F and SETZ-E support only SETZ
  CHECK(!find_lemma("SETZ-FS2")->supports_seltzo);
  CHECK(!find_lemma("SETZ-EN0")->supports_seltzo);
  CHECK(find_lemma("SETZ-O1")->supports_seltzo);
  // a known case body from the appendix: SETZ-3AB case 5 mentions e_y+1 <= f_s <= e_x
  const Lemma* l = find_lemma("SETZ-3AB");
  REQUIRE(l != nullptr);
  CHECK(l->cases.size() == 5);
}

TEST_CASE("lemma statements stay inside their vocabulary") {
  for (const Lemma& l : full_lemma_list()) {
    std::set<Field> used;
    collect_fields(l.hypothesis, used);
    for (const auto& c : l.cases) collect_fields(c.body, used);
    for (Field f : used) CHECK(vocab_allows(l.vocabulary, f));
  }
}

TEST_CASE("constraint evaluation basics") {
  using namespace cdsl;
  FormatParams fmt = fmt_for(4);
  AbstractVal vals[4] = {
      AbstractVal::seltzo(0, 3, 1, 0, 0, 2),  // x: 1.011 * 2^3
      AbstractVal::seltzo(1, -2, 3, 0, 3, 0), // y: -1.000 * 2^-2
      AbstractVal::seltzo(0, 3, 1, 0, 0, 2),
      AbstractVal::seltzo(0, fmt.e_min - 1, 3, 0, 3, 0),  // e = +0
  };
  EvalContext ctx;
  ctx.fmt = &fmt;
  ctx.vals = {vals, 4};
  ctx.op_eq_domain = Domain::SETZ;

  auto ev = [&](Constraint c) { return eval_constraint(c, ctx); };
  CHECK(ev(e_(Slot::X) == LinExpr(3)));
  CHECK(eval_lin(f_(Slot::X), ctx) == 3 - (4 - 0 - 1));
  CHECK(ev(f_(Slot::X) == LinExpr(0)));
  CHECK(ev(diff_sign(Slot::X, Slot::Y)));
  CHECK(ev(is_pos_zero(Slot::E)));
  CHECK(!ev(is_zero(Slot::X)));
  CHECK(ev(op_eq(Slot::S, Slot::X)));
  CHECK(ev(exists(0, e_(Slot::Y), e_(Slot::X), bvar(0) == LinExpr(1))));
  CHECK(!ev(exists(0, e_(Slot::Y), e_(Slot::X), bvar(0) == LinExpr(9))));
  CHECK(to_string(e_(Slot::X) - p_sym() + 1) == "e_x - p + 1");
}

TEST_CASE("every SE and SETZ lemma is sound at p=4 and p=5") {
  for (int p : {4, 5}) {
    FormatParams fmt = fmt_for(p);
    WindowSpec w = WindowSpec::default_for(fmt);
    for (Domain d : {Domain::SE, Domain::SETZ}) {
      for (const Lemma* l : catalog(d)) {
        if (l->min_p > p) continue;
        SoundnessReport rep = check_soundness(*l, fmt, w);
        INFO(l->name, " at p=", p, " violations=", rep.violation_count);
        if (!rep.violations.empty()) {
          const auto& v = rep.violations.front();
          INFO("x=", to_literal(v.x, fmt), " y=", to_literal(v.y, fmt),
               " s=", to_literal(v.s, fmt), " e=", to_literal(v.e, fmt), " swap=", v.swapped);
        }
        CHECK(rep.sound());
        CHECK(rep.hypothesis_matches > 0);
      }
    }
  }
}

TEST_CASE("soundness is orientation symmetric") {
  FormatParams fmt = fmt_for(4);
  WindowSpec w = WindowSpec::default_for(fmt);
  w.canonical = false;
  w.lo = -8;
  const Lemma* l = find_lemma("SETZ-3");
  SoundnessReport rep = check_soundness(*l, fmt, w);
  CHECK(rep.sound());
}

TEST_CASE("a corrupted lemma is caught") {
  using namespace cdsl;
  Lemma bad = *find_lemma("SETZ-FS2");
  // claim e_s = e_x instead of e_x + 1
  bad.cases[0].body = same_sign(Slot::S, Slot::X) && (e_(Slot::S) == e_(Slot::X)) &&
                      between(f_(Slot::X) + 1, f_(Slot::S), e_(Slot::X)) && is_pos_zero(Slot::E);
  FormatParams fmt = fmt_for(4);
  SoundnessReport rep = check_soundness(bad, fmt, WindowSpec::default_for(fmt));
  CHECK(!rep.sound());
  CHECK(!rep.violations.empty());
}

TEST_CASE("SETZ-FS2 sound over a non-canonical two-sided window") {
  FormatParams fmt = fmt_for(4);
  WindowSpec w{-6, 6, true, false, 1000000000ULL};
  SoundnessReport rep = check_soundness(*find_lemma("SETZ-FS2"), fmt, w);
  CHECK(rep.sound());
  CHECK(rep.hypothesis_matches > 0);
}

TEST_CASE("coverage of the SE and SETZ catalogs is complete") {
  for (int p : {4, 5}) {
    FormatParams fmt = fmt_for(p);
    WindowSpec w = WindowSpec::default_for(fmt);
    for (Domain d : {Domain::SE, Domain::SETZ}) {
      auto gaps = check_coverage(d, fmt, w);
      if (!gaps.empty()) {
        INFO("first gap: ", gaps.front().first.to_string(), " , ",
             gaps.front().second.to_string());
      }
      CHECK(gaps.empty());
    }
  }
}

TEST_CASE("coverage detects a removed family") {
  FormatParams fmt = fmt_for(4);
  WindowSpec w = WindowSpec::default_for(fmt);
  // Some pair must be covered only by family SETZ-E; dropping the family
  // then leaves a gap.
  auto lemmas = catalog(Domain::SETZ);
  auto values = window_values(fmt, w);
  EvalContext ctx;
  ctx.fmt = &fmt;
  AbstractVal vals[4];
  ctx.vals = {vals, 4};
  bool gap_found = false;
  for (const FloatVal& x : values) {
    if (x.is_zero() || x.exponent() != 0 || gap_found) continue;
    for (const FloatVal& y : values) {
      bool e_only = false, other = false;
      for (int swap = 0; swap <= 1; ++swap) {
        vals[0] = abstract(swap ? y : x, Domain::SELTZO, fmt);
        vals[1] = abstract(swap ? x : y, Domain::SELTZO, fmt);
        vals[2] = vals[0];
        vals[3] = vals[0];
        for (const Lemma* l : lemmas) {
          ctx.op_eq_domain = l->vocabulary;
          if (eval_constraint(l->hypothesis, ctx))
            (l->family == "SETZ-E" ? e_only : other) = true;
        }
      }
      if (e_only && !other) {
        gap_found = true;
        break;
      }
    }
  }
  CHECK(gap_found);
}

TEST_CASE("tightness witnesses") {
  FormatParams fmt5 = fmt_for(5);
  WindowSpec w = WindowSpec::default_for(fmt5);
  TightnessReport o2 = check_tightness(*find_lemma("SETZ-O2"), fmt5, w);
  REQUIRE(o2.cases.size() == 2);
  CHECK(!o2.cases[1].vacuous);  // case 2 witnessed at p=5

  TightnessReport z1 = check_tightness(*find_lemma("Z1"), fmt5, w);
  for (const auto& c : z1.cases) CHECK(c.count > 0);
}

TEST_CASE("mine_transfer on simple classes") {
  using namespace cdsl;
  FormatParams fmt = fmt_for(4);
  WindowSpec w = WindowSpec::default_for(fmt);
  w.lo = -8;

  // class: y = +-0.0  ->  s = x (same abstraction), e = +0.0
  auto mined = mine_transfer(is_zero(Slot::Y), Domain::SETZ, fmt, w);
  CHECK(!mined.empty());
  AbstractVal pos_zero = AbstractVal::setz(0, fmt.e_min - 1, fmt.p - 1);
  for (const auto& [s, e] : mined) CHECK(e == pos_zero);

  // class: SETZ-I condition 1 (huge gap) -> outputs reproduce the gap
  auto far = mine_transfer(
      nonzero(Slot::X) && nonzero(Slot::Y) && (e_(Slot::X) > e_(Slot::Y) + p_sym() + 1),
      Domain::SETZ, fmt, w);
  CHECK(!far.empty());
  for (const auto& [s, e] : far) CHECK(s.exp() > e.exp() + fmt.p + 1);

  // class of SE-S5: equal exponents, same sign -> e_s = e_x + 1 always
  auto s5 = mine_transfer(nonzero(Slot::X) && nonzero(Slot::Y) &&
                              same_sign(Slot::X, Slot::Y) && (e_(Slot::X) == e_(Slot::Y)) &&
                              (e_(Slot::X) == LinExpr(0)),
                          Domain::SE, fmt, w);
  CHECK(!s5.empty());
  for (const auto& [s, e] : s5) CHECK(s.exp() == 1);
}

TEST_CASE("mined transfers satisfy the covering lemma conclusions") {
  // every mined (s, e) pair for a lemma's hypothesis class must satisfy the
  // lemma's conclusion, otherwise soundness would have failed
  FormatParams fmt = fmt_for(4);
  WindowSpec w = WindowSpec::default_for(fmt);
  const Lemma* l = find_lemma("SETZ-FD0");
  SoundnessReport rep = check_soundness(*l, fmt, w);
  CHECK(rep.sound());
  CHECK(rep.hypothesis_matches > 0);
}

TEST_CASE("catalog fingerprint is stable and content sensitive") {
  auto se = catalog(Domain::SE);
  std::string f1 = catalog_fingerprint(se);
  std::string f2 = catalog_fingerprint(se);
  CHECK(f1 == f2);
  CHECK(f1.size() == 16);
  auto setz = catalog(Domain::SETZ);
  CHECK(catalog_fingerprint(setz) != f1);
}

TEST_CASE("fixed_point_constraint agrees with the abstract predicate") {
  FormatParams fmt = fmt_for(4);
  Constraint fp = fixed_point_constraint(Domain::SETZ);
  WindowSpec w = WindowSpec::default_for(fmt);
  auto values = window_values(fmt, w);
  for (const FloatVal& x : values) {
    if (x.exponent() != 0 && !x.is_zero()) continue;
    for (const FloatVal& y : values) {
      AbstractVal ax = abstract(x, Domain::SELTZO, fmt);
      AbstractVal ay = abstract(y, Domain::SELTZO, fmt);
      AbstractVal vals[4] = {ax, ay, ax, ax};
      EvalContext ctx;
      ctx.fmt = &fmt;
      ctx.vals = {vals, 4};
      bool via_constraint = eval_constraint(fp, ctx);
      bool via_predicate =
          is_fixed_point(abstract(x, Domain::SETZ, fmt), abstract(y, Domain::SETZ, fmt), fmt);
      CHECK(via_constraint == via_predicate);
    }
  }
}
