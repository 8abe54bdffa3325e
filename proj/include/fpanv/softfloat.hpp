#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpanv/exact.hpp"

namespace fpanv {

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binary floating-point format: precision p in bits and exponent bounds.
/// e_max may be absent, which models an unbounded upper exponent range
/// (overflow then never occurs); the lower bound always exists because
/// e_min - 1 is the reserved exponent of zero.
struct FormatParams {
  int p = 53;
  long long e_min = -1022;
  std::optional<long long> e_max = 1023;
  std::string name;

  long long zero_exponent() const { return e_min - 1; }

  static FormatParams named(std::string_view name);  // binary16|bfloat16|binary32|binary64|binary128
  static FormatParams custom(int p, long long e_min, std::optional<long long> e_max = std::nullopt);
  /// Accepts a named format or "custom:p=<n>,emin=<n>[,emax=<n>|unbounded]".
  static FormatParams parse(std::string_view spec);
  std::string spec_string() const;
};

/// A concrete normalized-or-zero float. Nonzero values represent
/// (-1)^sign * (2^(p-1) + fraction) * 2^(exponent - (p-1)); zero is a flagged
/// value that keeps its sign bit and carries exponent e_min - 1.
/// Subnormals, infinities and NaNs are rejected at construction.
class FloatVal {
 public:
  using Frac = unsigned __int128;

  FloatVal() = default;

  static FloatVal zero(const FormatParams& fmt, int sign = 0);
  static FloatVal make(const FormatParams& fmt, int sign, long long exponent, Frac fraction);

  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  long long exponent() const { return exponent_; }  // e_min - 1 when zero
  Frac fraction() const { return fraction_; }

  ExactReal value(const FormatParams& fmt) const;

  FloatVal negated() const {
    FloatVal v = *this;
    v.sign_ ^= 1;
    return v;
  }

  /// Structural equality: distinguishes +0.0 from -0.0.
  friend bool operator==(const FloatVal& a, const FloatVal& b) {
    return a.sign_ == b.sign_ && a.zero_ == b.zero_ && a.exponent_ == b.exponent_ &&
           a.fraction_ == b.fraction_;
  }

 private:
  int sign_ = 0;
  bool zero_ = true;
  long long exponent_ = 0;
  Frac fraction_ = 0;
};

/// Numeric equality: zeros compare equal regardless of sign.
bool value_equal(const FloatVal& a, const FloatVal& b);

/// Round a dyadic rational to the nearest precision-p float, ties to even.
/// Exact zero rounds to +0.0. Throws OverflowError past the finite range
/// (when e_max is bounded) and UnderflowError for nonzero results below
/// e_min, which the normalized-or-zero model cannot represent.
FloatVal rne_round(const ExactReal& v, const FormatParams& fmt);

FloatVal negate(const FloatVal& x);
FloatVal add(const FloatVal& x, const FloatVal& y, const FormatParams& fmt);
FloatVal sub(const FloatVal& x, const FloatVal& y, const FormatParams& fmt);

struct TwoSumResult {
  FloatVal sum;
  FloatVal err;
};

/// The Moller-Knuth error-free transformation: sum = x (+) y rounded, and
/// err such that sum + err == x + y exactly. Computed semantically from the
/// exact residual and cross-checked against the classic six-operation
/// sequence, which must agree bit for bit.
TwoSumResult two_sum(const FloatVal& x, const FloatVal& y, const FormatParams& fmt);

/// The literal six-operation sequence (sum, then effective addends, then
/// residuals). Exposed for tests; two_sum() already asserts agreement.
TwoSumResult two_sum_network(const FloatVal& x, const FloatVal& y, const FormatParams& fmt);

/// Unit in the last place, 2^(e_x - (p-1)). Undefined on zero.
ExactReal ulp(const FloatVal& x, const FormatParams& fmt);

/// Greedy expansion of a constant: x_k = RNE(C - x_0 - ... - x_(k-1)).
std::vector<FloatVal> expand_constant(const ExactReal& c, int n, const FormatParams& fmt);

enum class DomRel { S, P, Ulp, QD };

std::string_view dom_rel_name(DomRel rel);
DomRel parse_dom_rel(std::string_view s);

/// Concrete dominance predicates, evaluated with exact arithmetic.
bool concrete_dominates(const FloatVal& x, const FloatVal& y, DomRel rel, const FormatParams& fmt);

/// Text form "1.0110_2 * 2^-3" (sign prefix for negatives), or "+0.0"/"-0.0".
std::string to_literal(const FloatVal& x, const FormatParams& fmt);
/// Parses the literal grammar above plus plain decimal integers; decimal
/// inputs must be exactly representable.
FloatVal parse_float_literal(std::string_view text, const FormatParams& fmt);

}  // namespace fpanv
