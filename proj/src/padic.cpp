#include "qcd/padic.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qcd/error.hpp"

namespace qcd {

namespace {

using Index = PadicNumber::Index;
constexpr Index kInfinite = std::numeric_limits<Index>::max();

BigInt ppow(long p, Index k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max<Index>(k, 0)));
  return r;
}

// Strips factors of p from v (nonzero) and returns how many there were.
Index strip(BigInt& v, long p) {
  Index k = 0;
  const BigInt bp(p);
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
    v /= bp;
    ++k;
  }
  return k;
}

BigInt mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

void same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime())
    throw Error(ErrorCode::InvalidArgument,
                "p-adic operands over different primes " + std::to_string(a.prime()) + " and " +
                    std::to_string(b.prime()));
}

// floor(log_p k) for k >= 1
Index ilog(long p, Index k) {
  Index e = 0;
  for (Index v = k; v >= p; v /= p) ++e;
  return e;
}

}  // namespace

void require_odd_prime(long p) {
  if (p == 2) throw Error(ErrorCode::OutOfDomain, "p = 2 is not supported; p must be an odd prime");
  if (p < 3 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

PadicNumber PadicNumber::exact_zero(long p) {
  require_odd_prime(p);
  PadicNumber z;
  z.p_ = p;
  return z;
}

PadicNumber PadicNumber::zero_mod(long p, Index absolute_precision) {
  PadicNumber z = exact_zero(p);
  z.exact_ = false;
  z.val_ = absolute_precision;
  return z;
}

PadicNumber PadicNumber::from_integer(long p, const BigInt& value, int digits) {
  return from_rational(p, Rational(value), digits);
}

PadicNumber PadicNumber::from_rational(long p, const Rational& value, int digits) {
  require_odd_prime(p);
  if (digits < 1) throw Error(ErrorCode::InvalidArgument, "p-adic digits must be >= 1");
  // Zero is taken as known to `digits` absolute digits.
  if (value.is_zero()) return zero_mod(p, digits);
  BigInt num = value.num();
  BigInt den = value.den();
  const Index vn = strip(num, p);
  const Index vd = strip(den, p);
  const BigInt m = ppow(p, digits);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = vn - vd;
  r.digits_ = digits;
  r.unit_ = mod(num * inv, m);
  return r;
}

Index PadicNumber::absolute_precision() const {
  if (zero_) return exact_ ? kInfinite : val_;
  return val_ + digits_;
}

std::vector<int> PadicNumber::unit_digits() const {
  std::vector<int> out;
  BigInt u = unit_;
  const BigInt bp(p_);
  for (int i = 0; i < digits_; ++i) {
    BigInt d = mod(u, bp);
    out.push_back(static_cast<int>(d.get_si()));
    u /= bp;
  }
  return out;
}

bool PadicNumber::is_one() const { return !zero_ && val_ == 0 && unit_ == 1; }

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  PadicNumber r = *this;
  r.unit_ = mod(-unit_, ppow(p_, digits_));
  return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long p = a.p_;
  const Index A = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_ || b.zero_) {
    const PadicNumber& other = a.zero_ ? b : a;
    if (other.zero_ || other.val_ >= A) return PadicNumber::zero_mod(p, A);
    PadicNumber r = other;
    r.digits_ = static_cast<int>(A - other.val_);
    r.unit_ = mod(other.unit_, ppow(p, r.digits_));
    return r;
  }
  const Index v = std::min(a.val_, b.val_);
  const BigInt m = ppow(p, A - v);
  BigInt s = mod(a.unit_ * ppow(p, a.val_ - v) + b.unit_ * ppow(p, b.val_ - v), m);
  if (s == 0) return PadicNumber::zero_mod(p, A);
  const Index k = strip(s, p);
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = v + k;
  r.digits_ = static_cast<int>(A - r.val_);
  r.unit_ = mod(s, ppow(p, r.digits_));
  return r;
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const long p = a.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::exact_zero(p);
  if (a.zero_ || b.zero_) {
    // 0 mod p^A times p^v * unit is 0 mod p^{A+v}; valuation() holds A or v.
    return PadicNumber::zero_mod(p, a.val_ + b.val_);
  }
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = a.val_ + b.val_;
  r.digits_ = std::min(a.digits_, b.digits_);
  r.unit_ = mod(a.unit_ * b.unit_, ppow(p, r.digits_));
  return r;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  same_prime(a, b);
  const long p = a.p_;
  if (b.is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "p-adic division by exact zero");
  if (b.zero_)
    throw Error(ErrorCode::PrecisionExhausted,
                "divisor has no known digits (zero mod p^" + std::to_string(b.val_) + ")");
  if (a.is_exact_zero()) return PadicNumber::exact_zero(p);
  if (a.zero_) return PadicNumber::zero_mod(p, a.val_ - b.val_);
  PadicNumber r;
  r.p_ = p;
  r.zero_ = false;
  r.exact_ = false;
  r.val_ = a.val_ - b.val_;
  r.digits_ = std::min(a.digits_, b.digits_);
  const BigInt m = ppow(p, r.digits_);
  BigInt inv;
  const BigInt bu = mod(b.unit_, m);
  mpz_invert(inv.get_mpz_t(), bu.get_mpz_t(), m.get_mpz_t());
  r.unit_ = mod(a.unit_ * inv, m);
  return r;
}

PadicNumber PadicNumber::pow(const BigInt& exponent) const {
  if (exponent < 0) return from_integer(p_, 1, std::max(digits_, 1)) / pow(-exponent);
  if (exponent == 0) return from_integer(p_, 1, zero_ ? 1 : digits_);
  if (zero_) return exact_ ? *this : zero_mod(p_, val_ * exponent.get_si());
  PadicNumber r = *this;
  r.val_ = val_ * exponent.get_si();
  const BigInt m = ppow(p_, digits_);
  mpz_powm(r.unit_.get_mpz_t(), unit_.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
  return a.p_ == b.p_ && a.zero_ == b.zero_ && a.exact_ == b.exact_ && a.val_ == b.val_ &&
         a.digits_ == b.digits_ && a.unit_ == b.unit_;
}

DifferenceValuation difference_valuation(const PadicNumber& a, const PadicNumber& b) {
  const PadicNumber d = a - b;
  return {d.valuation(), d.is_zero()};
}

bool agrees(const PadicNumber& a, const PadicNumber& b) { return (a - b).is_zero(); }

PadicNumber padic_log(const PadicNumber& x) {
  const long p = x.prime();
  const PadicNumber y = x - PadicNumber::from_integer(p, 1, std::max(x.digits(), 1));
  if (y.is_zero()) return y;
  if (y.valuation() < 1) throw Error(ErrorCode::OutOfDomain, "log needs valuation(x - 1) >= 1");
  const Index A = y.absolute_precision();
  const Index v = y.valuation();
  PadicNumber sum = y;
  PadicNumber power = y;
  for (Index k = 2; k * v - ilog(p, k) < A; ++k) {
    power = power * y;
    const PadicNumber term = power / PadicNumber::from_integer(p, BigInt(static_cast<long>(k)), y.digits() + 2);
    sum = k % 2 == 0 ? sum - term : sum + term;
  }
  return sum;
}

PadicNumber padic_exp(const PadicNumber& x) {
  const long p = x.prime();
  const Index A = x.is_zero() ? x.valuation() : x.absolute_precision();
  if (A == kInfinite) throw Error(ErrorCode::InvalidArgument, "exp of an exact zero needs a precision");
  const PadicNumber one = PadicNumber::from_integer(p, 1, static_cast<int>(A));
  if (x.is_zero()) return one;
  if (x.valuation() < 1) throw Error(ErrorCode::OutOfDomain, "exp needs valuation(x) >= 1");
  const Index v = x.valuation();
  PadicNumber sum = one;
  PadicNumber term = one;
  // v_p(k!) <= (k-1)/(p-1), so term k has valuation >= k v - (k-1)/(p-1).
  for (Index k = 1; k * v - (k - 1) / (p - 1) < A; ++k) {
    term = term * x / PadicNumber::from_integer(p, BigInt(static_cast<long>(k)), x.digits() + 2);
    sum = sum + term;
  }
  return sum;
}

PadicNumber padic_sqrt_1m4t(const PadicNumber& t) {
  const long p = t.prime();
  const Index A = t.is_zero() ? t.valuation() : t.absolute_precision();
  if (A == kInfinite) throw Error(ErrorCode::InvalidArgument, "sqrt(1-4t) of an exact zero needs a precision");
  const PadicNumber one = PadicNumber::from_integer(p, 1, static_cast<int>(A));
  if (t.is_zero()) return one;
  if (t.valuation() < 1) throw Error(ErrorCode::OutOfDomain, "sqrt(1-4t) needs valuation(t) >= 1");
  const PadicNumber z = PadicNumber::from_integer(p, -4, static_cast<int>(A)) * t;
  PadicNumber sum = one;
  PadicNumber power = one;
  for (Index m = 1; m * t.valuation() < A; ++m) {
    power = power * z;
    const Rational c = binomial(Rational(1, 2), static_cast<unsigned>(m));
    sum = sum + PadicNumber::from_rational(p, c, static_cast<int>(A)) * power;
  }
  return sum;
}

}  // namespace qcd
