#include "fpanv/abstract.hpp"

#include <map>
#include <sstream>

namespace fpanv {

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::SE: return "SE";
    case Domain::SETZ: return "SETZ";
    case Domain::SELTZO: return "SELTZO";
  }
  return "?";
}

Domain parse_domain(std::string_view s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "SE") return Domain::SE;
  if (u == "SETZ") return Domain::SETZ;
  if (u == "SELTZO") return Domain::SELTZO;
  throw std::invalid_argument("unknown domain: " + std::string(s));
}

int domain_arity(Domain d) {
  switch (d) {
    case Domain::SE: return 2;
    case Domain::SETZ: return 3;
    case Domain::SELTZO: return 6;
  }
  return 0;
}

std::string AbstractVal::to_string() const {
  std::ostringstream os;
  switch (domain_) {
    case Domain::SE:
      os << "SE(s=" << s_ << ", e=" << e_ << ")";
      break;
    case Domain::SETZ:
      os << "SETZ(s=" << s_ << ", e=" << e_ << ", ntz=" << ntz_ << ")";
      break;
    case Domain::SELTZO:
      os << "SELTZO(s=" << s_ << ", e=" << e_ << ", nlz=" << nlz_ << ", nlo=" << nlo_
         << ", ntz=" << ntz_ << ", nto=" << nto_ << ")";
      break;
  }
  return os.str();
}

AbstractVal AbstractVal::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto open = t.find('(');
  if (open == std::string::npos || !t.ends_with(")"))
    throw std::invalid_argument("bad abstract value: " + std::string(text));
  Domain d = parse_domain(t.substr(0, open));
  std::string body = t.substr(open + 1, t.size() - open - 2);
  std::map<std::string, long long> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad field: " + item);
    kv[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
  }
  auto get = [&](const char* k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw std::invalid_argument(std::string("missing field ") + k);
    return it->second;
  };
  switch (d) {
    case Domain::SE: return se(static_cast<int>(get("s")), get("e"));
    case Domain::SETZ:
      return setz(static_cast<int>(get("s")), get("e"), static_cast<int>(get("ntz")));
    case Domain::SELTZO:
      return seltzo(static_cast<int>(get("s")), get("e"), static_cast<int>(get("nlz")),
                    static_cast<int>(get("nlo")), static_cast<int>(get("ntz")),
                    static_cast<int>(get("nto")));
  }
  throw std::invalid_argument("unreachable");
}

AbstractVal abstract(const FloatVal& x, Domain d, const FormatParams& fmt) {
  const int width = fmt.p - 1;
  int nlz, nlo, ntz, nto;
  if (x.is_zero()) {
    nlz = ntz = width;
    nlo = nto = 0;
  } else {
    FloatVal::Frac f = x.fraction();
    nlz = nlo = ntz = nto = 0;
    for (int i = width - 1; i >= 0 && !((f >> i) & 1); --i) ++nlz;
    for (int i = width - 1; i >= 0 && ((f >> i) & 1); --i) ++nlo;
    for (int i = 0; i < width && !((f >> i) & 1); ++i) ++ntz;
    for (int i = 0; i < width && ((f >> i) & 1); ++i) ++nto;
  }
  switch (d) {
    case Domain::SE: return AbstractVal::se(x.sign(), x.exponent());
    case Domain::SETZ: return AbstractVal::setz(x.sign(), x.exponent(), ntz);
    case Domain::SELTZO:
      return AbstractVal::seltzo(x.sign(), x.exponent(), nlz, nlo, ntz, nto);
  }
  throw std::invalid_argument("unreachable");
}

bool is_consistent(const AbstractVal& v, const FormatParams& fmt) {
  const long long p = fmt.p;
  if (v.sign() != 0 && v.sign() != 1) return false;
  if (v.exp() < fmt.zero_exponent()) return false;
  if (v.domain() == Domain::SE) return true;

  long long ntz = v.ntz();
  if (ntz < 0 || ntz > p - 1) return false;
  bool zero = v.is_zero(fmt);
  if (v.domain() == Domain::SETZ) return !zero || ntz == p - 1;

  long long nlz = v.nlz(), nlo = v.nlo(), nto = v.nto();
  for (long long c : {nlz, nlo, nto})
    if (c < 0 || c > p - 1) return false;
  if (zero && !(nlz == p - 1 && ntz == p - 1 && nlo == 0 && nto == 0)) return false;
  bool lead_ok = (nlz > 0 && nlo == 0) || (nlz == 0 && nlo > 0);
  bool trail_ok = (ntz > 0 && nto == 0) || (ntz == 0 && nto > 0);
  if (!lead_ok || !trail_ok) return false;
  if (!((nlz == p - 1 && ntz == p - 1) || nlz + ntz < p - 1)) return false;
  if (!((nlo == p - 1 && nto == p - 1) || nlo + nto < p - 1)) return false;
  if (!(nlz + nto == p - 1 || nlz + nto < p - 2)) return false;
  if (!(ntz + nlo == p - 1 || ntz + nlo < p - 2)) return false;
  return true;
}

bool dominates(const AbstractVal& x, const AbstractVal& y, DomRel rel, const FormatParams& fmt) {
  const long long p = fmt.p;
  bool y_zero = y.is_zero(fmt);
  switch (rel) {
    case DomRel::S:
      if (x.domain() == Domain::SE || y.domain() == Domain::SE)
        throw UnsupportedRelation("S-dominance needs ntz; SE supports only P");
      return y_zero || x.exp() - y.exp() >= p - x.ntz();
    case DomRel::P:
      return y_zero || x.exp() - y.exp() >= p;
    case DomRel::Ulp:
      if (y.domain() == Domain::SE)
        throw UnsupportedRelation("ulp-dominance needs ntz; SE supports only P");
      return y_zero || x.exp() - y.exp() > p - 1 ||
             (x.exp() - y.exp() == p - 1 && y.ntz() == p - 1);
    case DomRel::QD:
      if (y.domain() == Domain::SE)
        throw UnsupportedRelation("QD-dominance needs ntz; SE supports only P");
      return y_zero || x.exp() - y.exp() > p ||
             (x.exp() - y.exp() == p && y.ntz() == p - 1);
  }
  return false;
}

bool is_fixed_point(const AbstractVal& x, const AbstractVal& y, const FormatParams& fmt) {
  const long long p = fmt.p;
  if (y.is_zero(fmt)) return true;
  if (x.is_zero(fmt)) return false;  // TwoSum(0, y) moves y to the sum slot
  long long d = x.exp() - y.exp();
  if (d > p + 1) return true;
  long long ntz_x = x.ntz(), ntz_y = y.ntz();
  if (d == p + 1)
    return x.sign() == y.sign() || ntz_x < p - 1 || ntz_y == p - 1;
  if (d == p)
    return ntz_y == p - 1 && ntz_x >= 1 && (x.sign() == y.sign() || ntz_x < p - 1);
  return false;
}

namespace {

// Enumerates fractions matching the abstract value, smallest first.
bool enumerate_fractions(const AbstractVal& v, const FormatParams& fmt,
                         const std::function<bool(FloatVal::Frac)>& fn,
                         unsigned long long budget, unsigned long long& used) {
  using Frac = FloatVal::Frac;
  const int width = fmt.p - 1;
  if (v.domain() == Domain::SE) {
    for (Frac f = 0; f < (Frac(1) << width); ++f) {
      if (used++ >= budget) return false;
      if (!fn(f)) return true;
    }
    return true;
  }
  if (v.domain() == Domain::SETZ) {
    int ntz = v.ntz();
    if (ntz == width) {
      if (used++ >= budget) return false;
      fn(0);
      return true;
    }
    // low ntz bits zero, bit ntz set, bits above free
    int free_bits = width - ntz - 1;
    for (Frac m = 0; m < (Frac(1) << free_bits); ++m) {
      if (used++ >= budget) return false;
      Frac f = (m << (ntz + 1)) | (Frac(1) << ntz);
      if (!fn(f)) return true;
    }
    return true;
  }
  // SELTZO: exact leading and trailing runs.
  int nlz = v.nlz(), nlo = v.nlo(), ntz = v.ntz(), nto = v.nto();
  int lead = std::max(nlz, nlo), trail = std::max(ntz, nto);
  int lead_bit = nlo > 0 ? 1 : 0, trail_bit = nto > 0 ? 1 : 0;
  auto matches = [&](Frac f) {
    AbstractVal a = abstract(FloatVal::make(fmt, v.sign(), std::max(v.exp(), fmt.e_min), f),
                             Domain::SELTZO, fmt);
    return a.nlz() == nlz && a.nlo() == nlo && a.ntz() == ntz && a.nto() == nto;
  };
  if (lead + trail >= width) {
    // runs cover the whole mantissa (or are inconsistent)
    Frac f = 0;
    if (lead == width) {
      if (lead_bit) f = (Frac(1) << width) - 1;
    } else if (lead + trail == width) {
      for (int i = 0; i < width; ++i) {
        int bit = i >= width - lead ? lead_bit : trail_bit;
        if (bit) f |= Frac(1) << i;
      }
    } else {
      return true;  // overlapping runs: no concretization
    }
    if (used++ >= budget) return false;
    if (matches(f)) fn(f);
    return true;
  }
  int free_lo = trail + 1;          // bit positions [free_lo, free_hi] vary
  int free_hi = width - lead - 2;   // boundary bits are forced
  Frac base = 0;
  for (int i = 0; i < width; ++i) {
    int bit;
    if (i < trail) bit = trail_bit;
    else if (i == trail) bit = trail_bit ^ 1;
    else if (i >= width - lead) bit = lead_bit;
    else if (i == width - lead - 1) bit = lead_bit ^ 1;
    else continue;
    if (bit) base |= Frac(1) << i;
  }
  int free_bits = std::max(0, free_hi - free_lo + 1);
  for (Frac m = 0; m < (Frac(1) << free_bits); ++m) {
    if (used++ >= budget) return false;
    Frac f = base;
    for (int i = 0; i < free_bits; ++i)
      if ((m >> i) & 1) f |= Frac(1) << (free_lo + i);
    if (matches(f)) {
      if (!fn(f)) return true;
    }
  }
  return true;
}

}  // namespace

bool for_each_concretization(const AbstractVal& v, const FormatParams& fmt,
                             const std::function<bool(const FloatVal&)>& fn,
                             unsigned long long budget) {
  if (!is_consistent(v, fmt)) return true;
  if (v.is_zero(fmt)) {
    fn(FloatVal::zero(fmt, v.sign()));
    return true;
  }
  unsigned long long used = 0;
  return enumerate_fractions(
      v, fmt,
      [&](FloatVal::Frac f) { return fn(FloatVal::make(fmt, v.sign(), v.exp(), f)); }, budget,
      used);
}

std::vector<FloatVal> enumerate_concretizations(const AbstractVal& v, const FormatParams& fmt) {
  std::vector<FloatVal> out;
  for_each_concretization(v, fmt, [&](const FloatVal& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

mpz_class concretization_count(const AbstractVal& v, const FormatParams& fmt) {
  if (!is_consistent(v, fmt)) return 0;
  if (v.is_zero(fmt)) return 1;
  const int width = fmt.p - 1;
  mpz_class n = 0;
  switch (v.domain()) {
    case Domain::SE:
      mpz_setbit(n.get_mpz_t(), width);
      return n;
    case Domain::SETZ:
      if (v.ntz() == width) return 1;
      mpz_setbit(n.get_mpz_t(), width - v.ntz() - 1);
      return n;
    case Domain::SELTZO: {
      int lead = std::max(v.nlz(), v.nlo()), trail = std::max(v.ntz(), v.nto());
      if (lead == width || lead + trail == width) return 1;
      if (lead + trail > width) return 0;
      if (lead + trail == width - 1) {
        // single middle bit forced opposite to both runs
        int lead_bit = v.nlo() > 0, trail_bit = v.nto() > 0;
        return lead_bit == trail_bit ? 1 : 0;
      }
      if (lead + trail == width - 2) return 1;  // both boundary bits, no free bits
      mpz_setbit(n.get_mpz_t(), width - lead - trail - 2);
      return n;
    }
  }
  return 0;
}

}  // namespace fpanv
