#include "fpanv/exact.hpp"

#include <stdexcept>

namespace fpanv {

ExactReal ExactReal::scaled(mpz_class num, long long exp2) {
  ExactReal r;
  if (num == 0) return r;
  // Strip trailing zero bits so the representation is canonical.
  mp_bitcnt_t tz = mpz_scan1(num.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), tz);
    exp2 += static_cast<long long>(tz);
  }
  r.num_ = std::move(num);
  r.exp_ = exp2;
  return r;
}

ExactReal ExactReal::operator-() const {
  ExactReal r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long long e = std::min(exp_, o.exp_);
  mpz_class a = num_, b = o.num_;
  if (exp_ > e) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - e));
  if (o.exp_ > e) mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(o.exp_ - e));
  return scaled(a + b, e);
}

ExactReal ExactReal::abs() const {
  ExactReal r;
  r.num_ = ::abs(num_);
  r.exp_ = exp_;
  return r;
}

ExactReal ExactReal::mul_pow2(long long k) const {
  if (is_zero()) return {};
  ExactReal r;
  r.num_ = num_;
  r.exp_ = exp_ + k;
  return r;
}

int ExactReal::compare(const ExactReal& a, const ExactReal& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  return (a - b).sign();
}

long long ExactReal::floor_log2_abs() const {
  if (is_zero()) throw std::domain_error("floor_log2_abs of zero");
  // Canonical mantissa is odd, so its bit length is exact.
  size_t bits = mpz_sizeinbase(num_.get_mpz_t(), 2);
  return static_cast<long long>(bits) - 1 + exp_;
}

ExactReal::Quantized ExactReal::quantize_abs(long long k) const {
  Quantized q;
  mpz_class m = ::abs(num_);
  long long shift = exp_ - k;  // |v| = m * 2^shift  in units of 2^k
  if (shift >= 0) {
    mpz_mul_2exp(q.quotient.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    q.exact = true;
    q.remainder_cmp_half = -1;
    return q;
  }
  mp_bitcnt_t down = static_cast<mp_bitcnt_t>(-shift);
  mpz_class rem;
  mpz_tdiv_q_2exp(q.quotient.get_mpz_t(), m.get_mpz_t(), down);
  mpz_tdiv_r_2exp(rem.get_mpz_t(), m.get_mpz_t(), down);
  if (rem == 0) {
    q.exact = true;
    q.remainder_cmp_half = -1;
    return q;
  }
  q.exact = false;
  mpz_class half;
  mpz_setbit(half.get_mpz_t(), down - 1);  // half = 2^(down-1)
  q.remainder_cmp_half = cmp(rem, half) < 0 ? -1 : (rem == half ? 0 : 1);
  return q;
}

std::string ExactReal::to_string() const {
  return num_.get_str() + "*2^" + std::to_string(exp_);
}

double ExactReal::to_double_approx() const {
  if (is_zero()) return 0.0;
  // Clamp the scale into double range for display purposes only.
  mpq_class q(num_);
  if (exp_ >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), mpz_class(1).get_mpz_t(), static_cast<mp_bitcnt_t>(std::min(exp_, 16000LL)));
    q *= s;
  } else {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), mpz_class(1).get_mpz_t(), static_cast<mp_bitcnt_t>(std::min(-exp_, 16000LL)));
    q /= s;
  }
  return q.get_d();
}

std::string ratio_to_string(const ExactRatio& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double ratio_to_double(const ExactRatio& q) { return q.get_d(); }

}  // namespace fpanv
