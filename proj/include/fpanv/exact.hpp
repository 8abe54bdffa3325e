#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fpanv {

/// A dyadic rational: mantissa * 2^exponent with arbitrary-precision mantissa.
/// Canonical form keeps the mantissa odd (or zero with exponent zero), so
/// equality is plain field equality. Closed under +, -, negation and exact
/// comparison; this is the "as if to infinite precision" value type every
/// rounding operation is defined against.
class ExactReal {
 public:
  ExactReal() : num_(0), exp_(0) {}

  static ExactReal scaled(long long num, long long exp2) {
    return scaled(mpz_class(static_cast<long>(num)), exp2);
  }
  static ExactReal scaled(mpz_class num, long long exp2);
  static ExactReal from_integer(long long n) { return scaled(n, 0); }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  /// Canonical mantissa (odd unless the value is zero).
  const mpz_class& mantissa() const { return num_; }
  long long exponent2() const { return exp_; }

  ExactReal operator-() const;
  ExactReal operator+(const ExactReal& o) const;
  ExactReal operator-(const ExactReal& o) const { return *this + (-o); }
  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }

  ExactReal abs() const;
  ExactReal mul_pow2(long long k) const;

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// floor(log2 |v|); precondition: nonzero.
  long long floor_log2_abs() const;

  /// Splits |v| / 2^k into (quotient, has-remainder, remainder-vs-half cmp)
  /// for round-to-nearest-even; see rne_round.
  struct Quantized {
    mpz_class quotient;     // floor(|v| / 2^k)
    int remainder_cmp_half; // -1 below half ulp, 0 exactly half, +1 above; 2^63 means exact
    bool exact;
  };
  Quantized quantize_abs(long long k) const;

  std::string to_string() const;  // "m*2^k"
  double to_double_approx() const;

 private:
  mpz_class num_;
  long long exp_;

  static int compare(const ExactReal& a, const ExactReal& b);
};

/// Exact rational, used only for reporting quotients (e.g. relative errors);
/// all core arithmetic stays dyadic.
using ExactRatio = mpq_class;

std::string ratio_to_string(const ExactRatio& q);
double ratio_to_double(const ExactRatio& q);

}  // namespace fpanv
