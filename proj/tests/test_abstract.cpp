#include <doctest.h>

#include <set>

#include "fpanv/abstract.hpp"

using namespace fpanv;

namespace {

const FormatParams kP4 = FormatParams::custom(4, -60);
const FormatParams kP6 = FormatParams::custom(6, -60);
const FormatParams kP11 = FormatParams::custom(11, -60);

FloatVal lit(const char* s, const FormatParams& fmt) { return parse_float_literal(s, fmt); }

std::vector<FloatVal> all_values(const FormatParams& fmt, long long lo, long long hi) {
  std::vector<FloatVal> vals;
  vals.push_back(FloatVal::zero(fmt, 0));
  vals.push_back(FloatVal::zero(fmt, 1));
  for (int s = 0; s <= 1; ++s)
    for (long long e = lo; e <= hi; ++e)
      for (FloatVal::Frac f = 0; f < (FloatVal::Frac(1) << (fmt.p - 1)); ++f)
        vals.push_back(FloatVal::make(fmt, s, e, f));
  return vals;
}

}  // namespace

TEST_CASE("seltzo abstraction of worked examples") {
  // -1.0010011111_2 * 2^7 at p=11
  FloatVal a = lit("-1.0010011111_2 * 2^7", kP11);
  CHECK(abstract(a, Domain::SELTZO, kP11) == AbstractVal::seltzo(1, 7, 2, 0, 0, 5));
  // +1.1111111111_2 * 2^-2 at p=11
  FloatVal b = lit("1.1111111111_2 * 2^-2", kP11);
  CHECK(abstract(b, Domain::SELTZO, kP11) == AbstractVal::seltzo(0, -2, 0, 10, 0, 10));
  // zero convention
  CHECK(abstract(FloatVal::zero(kP11, 0), Domain::SELTZO, kP11) ==
        AbstractVal::seltzo(0, kP11.e_min - 1, 10, 0, 10, 0));
  CHECK(abstract(FloatVal::zero(kP4, 1), Domain::SETZ, kP4) ==
        AbstractVal::setz(1, kP4.e_min - 1, 3));
  CHECK(abstract(b, Domain::SE, kP11) == AbstractVal::se(0, -2));
  // trailing exponent accessor
  FloatVal c = lit("1.0110_2 * 2^5", FormatParams::custom(5, -60));
  AbstractVal ac = abstract(c, Domain::SETZ, FormatParams::custom(5, -60));
  CHECK(ac.ntz() == 1);
  CHECK(ac.trail_exp(FormatParams::custom(5, -60)) == 5 - (5 - 1 - 1));
}

TEST_CASE("consistency conditions") {
  // abstractions of concrete values are always consistent
  for (const FloatVal& x : all_values(kP4, -4, 4)) {
    CHECK(is_consistent(abstract(x, Domain::SE, kP4), kP4));
    CHECK(is_consistent(abstract(x, Domain::SETZ, kP4), kP4));
    CHECK(is_consistent(abstract(x, Domain::SELTZO, kP4), kP4));
  }
  // leading bit cannot be both zero and one
  CHECK(!is_consistent(AbstractVal::seltzo(0, 0, 2, 1, 1, 0), kP4));
  // nlz + nto = p - 2 is impossible (the middle bit belongs to one run)
  CHECK(!is_consistent(AbstractVal::seltzo(0, 0, 1, 0, 0, 1), kP4));
  CHECK(is_consistent(AbstractVal::seltzo(0, 0, 1, 0, 0, 2), kP4));
  // zero must have an all-zero mantissa shape
  CHECK(!is_consistent(AbstractVal::seltzo(0, kP4.e_min - 1, 3, 0, 2, 0), kP4));
  CHECK(is_consistent(AbstractVal::seltzo(1, kP4.e_min - 1, 3, 0, 3, 0), kP4));
  // exponent floor
  CHECK(!is_consistent(AbstractVal::se(0, kP4.e_min - 2), kP4));
}

TEST_CASE("dominance in the abstract domains") {
  const long long p = kP4.p;
  AbstractVal zero = AbstractVal::setz(1, kP4.e_min - 1, p - 1);
  AbstractVal x = AbstractVal::setz(0, 4, 2);
  for (DomRel rel : {DomRel::S, DomRel::P, DomRel::Ulp, DomRel::QD})
    CHECK(dominates(x, zero, rel, kP4));
  // QD boundary: e_x - e_y = p needs ntz_y = p - 1
  CHECK(dominates(AbstractVal::setz(0, 4, 0), AbstractVal::setz(0, 0, 3), DomRel::QD, kP4));
  CHECK(!dominates(AbstractVal::setz(0, 4, 0), AbstractVal::setz(0, 0, 2), DomRel::QD, kP4));
  // SE supports only P
  CHECK(dominates(AbstractVal::se(0, 5), AbstractVal::se(0, 1), DomRel::P, kP4));
  CHECK_THROWS_AS(dominates(AbstractVal::se(0, 5), AbstractVal::se(0, 1), DomRel::S, kP4),
                  UnsupportedRelation);
  CHECK_THROWS_AS(dominates(AbstractVal::se(0, 5), AbstractVal::se(0, 1), DomRel::QD, kP4),
                  UnsupportedRelation);
}

TEST_CASE("dominance agrees with the concrete definition") {
  auto vals = all_values(kP4, -6, 2);
  for (const FloatVal& x : vals)
    for (const FloatVal& y : vals) {
      AbstractVal ax = abstract(x, Domain::SELTZO, kP4), ay = abstract(y, Domain::SELTZO, kP4);
      for (DomRel rel : {DomRel::S, DomRel::P, DomRel::Ulp, DomRel::QD})
        CHECK(dominates(ax, ay, rel, kP4) == concrete_dominates(x, y, rel, kP4));
      CHECK(dominates(abstract(x, Domain::SE, kP4), abstract(y, Domain::SE, kP4), DomRel::P,
                      kP4) == concrete_dominates(x, y, DomRel::P, kP4));
    }
}

TEST_CASE("fixed point examples") {
  CHECK(is_fixed_point(abstract(lit("1.010_2 * 2^0", kP4), Domain::SETZ, kP4),
                       abstract(FloatVal::zero(kP4, 1), Domain::SETZ, kP4), kP4));
  CHECK(is_fixed_point(abstract(lit("1.000_2 * 2^0", kP4), Domain::SETZ, kP4),
                       abstract(lit("1.000_2 * 2^-4", kP4), Domain::SETZ, kP4), kP4));
  CHECK(!is_fixed_point(abstract(lit("1.000_2 * 2^0", kP4), Domain::SETZ, kP4),
                        abstract(lit("-1.000_2 * 2^-4", kP4), Domain::SETZ, kP4), kP4));
}

TEST_CASE("fixed point agrees with concrete two_sum behavior") {
  auto vals = all_values(kP4, -7, 0);
  for (const FloatVal& x : vals)
    for (const FloatVal& y : vals) {
      TwoSumResult r = two_sum(x, y, kP4);
      bool concrete = value_equal(r.sum, x) && value_equal(r.err, y);
      bool abstracted = is_fixed_point(abstract(x, Domain::SETZ, kP4),
                                       abstract(y, Domain::SETZ, kP4), kP4);
      CHECK(concrete == abstracted);
    }
}

TEST_CASE("concretization round trip and counting") {
  for (const FloatVal& x : all_values(kP4, -2, 2)) {
    for (Domain d : {Domain::SE, Domain::SETZ, Domain::SELTZO}) {
      AbstractVal a = abstract(x, d, kP4);
      auto back = enumerate_concretizations(a, kP4);
      CHECK(static_cast<size_t>(concretization_count(a, kP4).get_ui()) == back.size());
      bool found = false;
      for (const FloatVal& v : back) found = found || v == x;
      CHECK(found);
      // every concretization abstracts back to a
      for (const FloatVal& v : back) CHECK(abstract(v, d, kP4) == a);
    }
  }
  // zero abstractions concretize to the signed zero
  auto z = enumerate_concretizations(AbstractVal::setz(1, kP4.e_min - 1, 3), kP4);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == FloatVal::zero(kP4, 1));
  // inconsistent tuples have no concretizations
  CHECK(enumerate_concretizations(AbstractVal::seltzo(0, 0, 2, 0, 2, 0), kP4).empty());
  auto one = enumerate_concretizations(AbstractVal::seltzo(0, 0, 3, 0, 3, 0), kP4);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == lit("1.000_2 * 2^0", kP4));
  // p=6 SETZ with one trailing zero: 8 values shaped bbbb10
  auto eight = enumerate_concretizations(AbstractVal::setz(0, 0, 1), kP6);
  CHECK(eight.size() == 8);
  for (const FloatVal& v : eight) {
    CHECK((v.fraction() & 1) == 0);
    CHECK(((v.fraction() >> 1) & 1) == 1);
  }
}

TEST_CASE("partition: consistent abstract values tile the concrete space") {
  // all consistent SELTZO values at p=4 with exponents in a small window
  const long long lo = -2, hi = 1;
  std::set<std::string> seen;
  size_t covered = 0;
  for (int s = 0; s <= 1; ++s) {
    for (long long e = kP4.e_min - 1; e <= hi; ++e) {
      if (e >= kP4.e_min && e < lo) continue;
      for (int nlz = 0; nlz <= 3; ++nlz)
        for (int nlo = 0; nlo <= 3; ++nlo)
          for (int ntz = 0; ntz <= 3; ++ntz)
            for (int nto = 0; nto <= 3; ++nto) {
              AbstractVal a = AbstractVal::seltzo(s, e, nlz, nlo, ntz, nto);
              if (!is_consistent(a, kP4)) continue;
              for (const FloatVal& v : enumerate_concretizations(a, kP4)) {
                if (!v.is_zero() && (v.exponent() < lo || v.exponent() > hi)) continue;
                ++covered;
                CHECK(seen.insert(to_literal(v, kP4)).second);  // disjointness
              }
            }
    }
  }
  CHECK(covered == all_values(kP4, lo, hi).size());
}

TEST_CASE("abstract values print and parse") {
  AbstractVal a = AbstractVal::seltzo(1, -5, 2, 0, 0, 3);
  CHECK(a.to_string() == "SELTZO(s=1, e=-5, nlz=2, nlo=0, ntz=0, nto=3)");
  CHECK(AbstractVal::parse(a.to_string()) == a);
  AbstractVal b = AbstractVal::setz(0, 7, 3);
  CHECK(AbstractVal::parse(b.to_string()) == b);
  AbstractVal c = AbstractVal::se(1, 0);
  CHECK(AbstractVal::parse(c.to_string()) == c);
  CHECK_THROWS(AbstractVal::parse("SETZ(s=0)"));
}
