#include "fpanv/softfloat.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace fpanv {

namespace {

mpz_class frac_to_mpz(FloatVal::Frac f) {
  mpz_class hi(static_cast<unsigned long>(f >> 64));
  mpz_class lo(static_cast<unsigned long>(f & ~0ULL));
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), hi.get_mpz_t(), 64);
  return r + lo;
}

FloatVal::Frac mpz_to_frac(const mpz_class& m) {
  mpz_class hi, lo;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), m.get_mpz_t(), 64);
  mpz_tdiv_r_2exp(lo.get_mpz_t(), m.get_mpz_t(), 64);
  return (static_cast<FloatVal::Frac>(hi.get_ui()) << 64) | lo.get_ui();
}

}  // namespace

FormatParams FormatParams::named(std::string_view name) {
  FormatParams f;
  f.name = std::string(name);
  if (name == "binary16") {
    f.p = 11; f.e_min = -14; f.e_max = 15;
  } else if (name == "bfloat16") {
    f.p = 8; f.e_min = -126; f.e_max = 127;
  } else if (name == "binary32") {
    f.p = 24; f.e_min = -126; f.e_max = 127;
  } else if (name == "binary64") {
    f.p = 53; f.e_min = -1022; f.e_max = 1023;
  } else if (name == "binary128") {
    f.p = 113; f.e_min = -16382; f.e_max = 16383;
  } else {
    throw std::invalid_argument("unknown format name: " + std::string(name));
  }
  return f;
}

FormatParams FormatParams::custom(int p, long long e_min, std::optional<long long> e_max) {
  if (p < 2) throw std::invalid_argument("precision must be at least 2");
  if (e_max && *e_max < e_min) throw std::invalid_argument("e_max below e_min");
  FormatParams f;
  f.p = p;
  f.e_min = e_min;
  f.e_max = e_max;
  return f;
}

FormatParams FormatParams::parse(std::string_view spec) {
  if (!spec.starts_with("custom:")) return named(spec);
  spec.remove_prefix(7);
  std::optional<int> p;
  std::optional<long long> e_min, e_max;
  bool unbounded = false;
  std::string s(spec);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad format spec item: " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "p") {
      p = std::stoi(val);
    } else if (key == "emin") {
      e_min = std::stoll(val);
    } else if (key == "emax") {
      if (val == "unbounded") unbounded = true;
      else e_max = std::stoll(val);
    } else {
      throw std::invalid_argument("unknown format key: " + key);
    }
  }
  if (!p || !e_min) throw std::invalid_argument("custom format needs p= and emin=");
  (void)unbounded;
  return custom(*p, *e_min, e_max);
}

std::string FormatParams::spec_string() const {
  if (!name.empty()) return name;
  std::string s = "custom:p=" + std::to_string(p) + ",emin=" + std::to_string(e_min);
  s += ",emax=" + (e_max ? std::to_string(*e_max) : std::string("unbounded"));
  return s;
}

FloatVal FloatVal::zero(const FormatParams& fmt, int sign) {
  FloatVal v;
  v.sign_ = sign ? 1 : 0;
  v.zero_ = true;
  v.exponent_ = fmt.zero_exponent();
  v.fraction_ = 0;
  return v;
}

FloatVal FloatVal::make(const FormatParams& fmt, int sign, long long exponent, Frac fraction) {
  FloatVal v;
  v.sign_ = sign ? 1 : 0;
  v.zero_ = false;
  v.exponent_ = exponent;
  v.fraction_ = fraction;
  if (exponent < fmt.e_min)
    throw std::invalid_argument("exponent below e_min for nonzero value");
  if (fmt.e_max && exponent > *fmt.e_max)
    throw OverflowError("exponent above e_max");
  if (fmt.p - 1 < 127 && fraction >= (Frac(1) << (fmt.p - 1)))
    throw std::invalid_argument("fraction too wide for precision");
  return v;
}

ExactReal FloatVal::value(const FormatParams& fmt) const {
  if (zero_) return {};
  mpz_class m = frac_to_mpz(fraction_);
  mpz_class lead;
  mpz_setbit(lead.get_mpz_t(), fmt.p - 1);
  m += lead;
  if (sign_) m = -m;
  return ExactReal::scaled(m, exponent_ - (fmt.p - 1));
}

bool value_equal(const FloatVal& a, const FloatVal& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a == b;
}

FloatVal rne_round(const ExactReal& v, const FormatParams& fmt) {
  if (v.is_zero()) return FloatVal::zero(fmt, 0);
  int sign = v.sign() < 0 ? 1 : 0;
  long long e = v.floor_log2_abs();
  // Mantissa in units of 2^(e-(p-1)) lies in [2^(p-1), 2^p).
  auto q = v.quantize_abs(e - (fmt.p - 1));
  mpz_class m = q.quotient;
  if (!q.exact) {
    bool round_up;
    if (q.remainder_cmp_half < 0) round_up = false;
    else if (q.remainder_cmp_half > 0) round_up = true;
    else round_up = mpz_odd_p(m.get_mpz_t());
    if (round_up) m += 1;
  }
  mpz_class limit;
  mpz_setbit(limit.get_mpz_t(), fmt.p);
  if (m == limit) {  // rounded up across a power of two
    e += 1;
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), 1);
  }
  if (fmt.e_max && e > *fmt.e_max)
    throw OverflowError("rounded value exceeds e_max = " + std::to_string(*fmt.e_max));
  if (e < fmt.e_min)
    throw UnderflowError("nonzero result below e_min (subnormals are not modeled)");
  mpz_class lead;
  mpz_setbit(lead.get_mpz_t(), fmt.p - 1);
  return FloatVal::make(fmt, sign, e, mpz_to_frac(m - lead));
}

FloatVal negate(const FloatVal& x) { return x.negated(); }

FloatVal add(const FloatVal& x, const FloatVal& y, const FormatParams& fmt) {
  ExactReal exact = x.value(fmt) + y.value(fmt);
  if (exact.is_zero()) {
    // IEEE RNE: an exact zero sum is -0.0 only when both addends are -0.0
    // (equivalently, when both sign bits are set; nonzero cancellation
    // always yields +0.0).
    return FloatVal::zero(fmt, x.sign() & y.sign());
  }
  return rne_round(exact, fmt);
}

FloatVal sub(const FloatVal& x, const FloatVal& y, const FormatParams& fmt) {
  return add(x, negate(y), fmt);
}

TwoSumResult two_sum_network(const FloatVal& x, const FloatVal& y, const FormatParams& fmt) {
  FloatVal s = add(x, y, fmt);
  FloatVal x_eff = sub(s, y, fmt);
  FloatVal y_eff = sub(s, x_eff, fmt);
  FloatVal dx = sub(x, x_eff, fmt);
  FloatVal dy = sub(y, y_eff, fmt);
  FloatVal e = add(dx, dy, fmt);
  return {s, e};
}

TwoSumResult two_sum(const FloatVal& x, const FloatVal& y, const FormatParams& fmt) {
  FloatVal s = add(x, y, fmt);
  ExactReal residual = (x.value(fmt) + y.value(fmt)) - s.value(fmt);
  FloatVal e;
  if (residual.is_zero()) {
    e = FloatVal::zero(fmt, 0);
  } else {
    e = rne_round(residual, fmt);
    if (e.value(fmt) != residual)
      throw std::logic_error("TwoSum residual not representable");
  }
  TwoSumResult semantic{s, e};
  TwoSumResult classic = two_sum_network(x, y, fmt);
  if (!(semantic.sum == classic.sum) || !(semantic.err == classic.err))
    throw std::logic_error("semantic TwoSum disagrees with six-operation sequence");
  return semantic;
}

ExactReal ulp(const FloatVal& x, const FormatParams& fmt) {
  if (x.is_zero()) throw std::domain_error("ulp of zero is undefined");
  return ExactReal::scaled(1, x.exponent() - (fmt.p - 1));
}

std::vector<FloatVal> expand_constant(const ExactReal& c, int n, const FormatParams& fmt) {
  if (n < 1) throw std::invalid_argument("expansion needs at least one term");
  std::vector<FloatVal> terms;
  ExactReal residual = c;
  for (int k = 0; k < n; ++k) {
    FloatVal t = rne_round(residual, fmt);
    terms.push_back(t);
    residual = residual - t.value(fmt);
  }
  return terms;
}

std::string_view dom_rel_name(DomRel rel) {
  switch (rel) {
    case DomRel::S: return "S";
    case DomRel::P: return "P";
    case DomRel::Ulp: return "ulp";
    case DomRel::QD: return "QD";
  }
  return "?";
}

DomRel parse_dom_rel(std::string_view s) {
  if (s == "S" || s == "s") return DomRel::S;
  if (s == "P" || s == "p") return DomRel::P;
  if (s == "ulp") return DomRel::Ulp;
  if (s == "QD" || s == "qd") return DomRel::QD;
  throw std::invalid_argument("unknown dominance relation: " + std::string(s));
}

bool concrete_dominates(const FloatVal& x, const FloatVal& y, DomRel rel,
                        const FormatParams& fmt) {
  if (y.is_zero()) return true;
  switch (rel) {
    case DomRel::S: {
      if (x.is_zero()) return false;
      int ntz = 0;
      FloatVal::Frac f = x.fraction();
      if (f == 0) {
        ntz = fmt.p - 1;
      } else {
        while ((f & 1) == 0) { f >>= 1; ++ntz; }
      }
      return x.exponent() - y.exponent() >= fmt.p - ntz;
    }
    case DomRel::P:
      if (x.is_zero()) return false;
      return x.exponent() - y.exponent() >= fmt.p;
    case DomRel::Ulp:
      if (x.is_zero()) return false;
      return y.value(fmt).abs() <= ulp(x, fmt);
    case DomRel::QD:
      if (x.is_zero()) return false;
      return y.value(fmt).abs() <= ulp(x, fmt).mul_pow2(-1);
  }
  return false;
}

std::string to_literal(const FloatVal& x, const FormatParams& fmt) {
  if (x.is_zero()) return x.sign() ? "-0.0" : "+0.0";
  std::string s;
  if (x.sign()) s += '-';
  s += "1.";
  for (int i = fmt.p - 2; i >= 0; --i)
    s += ((x.fraction() >> i) & 1) ? '1' : '0';
  s += "_2 * 2^";
  s += std::to_string(x.exponent());
  return s;
}

FloatVal parse_float_literal(std::string_view text, const FormatParams& fmt) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "+0.0" || t == "0.0" || t == "0" || t == "+0") return FloatVal::zero(fmt, 0);
  if (t == "-0.0" || t == "-0") return FloatVal::zero(fmt, 1);

  int sign = 0;
  size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
    sign = t[i] == '-' ? 1 : 0;
    ++i;
  }
  auto base_pos = t.find("_2*2^", i);
  if (base_pos != std::string::npos) {
    if (t.compare(i, 2, "1.") != 0)
      throw std::invalid_argument("binary literal must start with '1.': " + std::string(text));
    std::string bits = t.substr(i + 2, base_pos - (i + 2));
    if (bits.size() > static_cast<size_t>(fmt.p - 1))
      throw std::invalid_argument("too many mantissa bits for precision " + std::to_string(fmt.p));
    FloatVal::Frac frac = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad mantissa bit: " + std::string(text));
      frac = (frac << 1) | (c == '1' ? 1 : 0);
    }
    frac <<= (fmt.p - 1 - bits.size());
    long long e = std::stoll(t.substr(base_pos + 5));
    return FloatVal::make(fmt, sign, e, frac);
  }

  // Plain decimal integer; must be exactly representable.
  for (size_t k = i; k < t.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t[k])))
      throw std::invalid_argument("unrecognized float literal: " + std::string(text));
  mpz_class n(t.substr(i));
  if (n == 0) return FloatVal::zero(fmt, sign);
  if (sign) n = -n;
  ExactReal v = ExactReal::scaled(n, 0);
  FloatVal r = rne_round(v, fmt);
  if (r.value(fmt) != v)
    throw std::invalid_argument("decimal literal not exactly representable: " + std::string(text));
  return r;
}

}  // namespace fpanv
