#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fpanv/softfloat.hpp"

namespace fpanv {

enum class Domain { SE, SETZ, SELTZO };

std::string_view domain_name(Domain d);
Domain parse_domain(std::string_view s);
int domain_arity(Domain d);  // 2, 3, 6

struct UnsupportedRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeVal {
  int s;
  long long e;
  friend auto operator<=>(const SeVal&, const SeVal&) = default;
};

struct SetzVal {
  int s;
  long long e;
  int ntz;
  long long trailing_exponent(const FormatParams& fmt) const {
    return e - (fmt.p - ntz - 1);
  }
  friend auto operator<=>(const SetzVal&, const SetzVal&) = default;
};

/// Sign, exponent, and the number of leading/trailing zeros and ones in the
/// p-1 explicit mantissa bits. Run lengths are exact, not cumulative.
struct SeltzoVal {
  int s;
  long long e;
  int nlz, nlo, ntz, nto;
  friend auto operator<=>(const SeltzoVal&, const SeltzoVal&) = default;
};

/// One abstract value in any of the three domains. Field accessors throw
/// when the domain does not carry the field.
class AbstractVal {
 public:
  AbstractVal() = default;
  static AbstractVal se(int s, long long e) { return AbstractVal(Domain::SE, s, e, -1, -1, -1, -1); }
  static AbstractVal setz(int s, long long e, int ntz) {
    return AbstractVal(Domain::SETZ, s, e, -1, -1, ntz, -1);
  }
  static AbstractVal seltzo(int s, long long e, int nlz, int nlo, int ntz, int nto) {
    return AbstractVal(Domain::SELTZO, s, e, nlz, nlo, ntz, nto);
  }

  Domain domain() const { return domain_; }
  int sign() const { return s_; }
  long long exp() const { return e_; }
  int ntz() const { return field(ntz_, "ntz"); }
  int nlz() const { return field(nlz_, "nlz"); }
  int nlo() const { return field(nlo_, "nlo"); }
  int nto() const { return field(nto_, "nto"); }
  bool has_ntz() const { return domain_ != Domain::SE; }

  bool is_zero(const FormatParams& fmt) const { return e_ == fmt.zero_exponent(); }
  long long trail_exp(const FormatParams& fmt) const { return e_ - (fmt.p - ntz() - 1); }

  std::string to_string() const;
  static AbstractVal parse(std::string_view text);

  friend auto operator<=>(const AbstractVal&, const AbstractVal&) = default;

 private:
  AbstractVal(Domain d, int s, long long e, int nlz, int nlo, int ntz, int nto)
      : domain_(d), s_(s), e_(e), nlz_(nlz), nlo_(nlo), ntz_(ntz), nto_(nto) {}
  int field(int v, const char* name) const {
    if (v < 0) throw UnsupportedRelation(std::string(name) + " not tracked by domain " +
                                         std::string(domain_name(domain_)));
    return v;
  }

  Domain domain_ = Domain::SE;
  int s_ = 0;
  long long e_ = 0;
  int nlz_ = -1, nlo_ = -1, ntz_ = -1, nto_ = -1;
};

AbstractVal abstract(const FloatVal& x, Domain d, const FormatParams& fmt);

bool is_consistent(const AbstractVal& v, const FormatParams& fmt);

/// Nonoverlapping dominance between abstract values. SE carries no mantissa
/// information, so only the P relation is supported there.
bool dominates(const AbstractVal& x, const AbstractVal& y, DomRel rel, const FormatParams& fmt);

/// True iff (x, y) is a fixed point of TwoSum. Requires ntz, so SETZ or
/// SELTZO values.
bool is_fixed_point(const AbstractVal& x, const AbstractVal& y, const FormatParams& fmt);

/// All concrete values whose abstraction equals v, in fraction-ascending
/// order. Inconsistent v yields an empty list.
std::vector<FloatVal> enumerate_concretizations(const AbstractVal& v, const FormatParams& fmt);

/// Iterates concretizations until the callback returns false or the budget
/// is exhausted. Returns false iff stopped early by the budget.
bool for_each_concretization(const AbstractVal& v, const FormatParams& fmt,
                             const std::function<bool(const FloatVal&)>& fn,
                             unsigned long long budget = ~0ULL);

mpz_class concretization_count(const AbstractVal& v, const FormatParams& fmt);

}  // namespace fpanv
