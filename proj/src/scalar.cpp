#include "braidkit/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace braidkit {

namespace {

using i128 = __int128;

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 igcd(i128 a, i128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<long long>::min() &&
         v <= std::numeric_limits<long long>::max();
}

long long mod_reduce(long long v, uint32_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return r;
}

long long mod_mul(long long a, long long b, uint32_t p) {
  // p < 2^31, residues < p, so the product fits in int64.
  return (a * b) % (long long)p;
}

long long mod_pow(long long base, long long exp, uint32_t p) {
  long long r = 1 % (long long)p;
  base %= (long long)p;
  while (exp > 0) {
    if (exp & 1) r = mod_mul(r, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return r;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field field_q() { return Field{}; }

Field field_fp(uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime < 2^31");
  return Field{p};
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.f_ == b.f_))
    throw std::invalid_argument("field mismatch: " + a.f_.str() + " vs " +
                                b.f_.str());
}

Scalar::Scalar(long long n, Field f) {
  f_ = f;
  if (f.is_rational()) {
    n_ = n;
    d_ = 1;
  } else {
    n_ = mod_reduce(n, f.p);
    d_ = 1;
  }
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return from_i128((i128)num, (i128)den, Field{});
}

Scalar Scalar::make(const bigint& num, const bigint& den, Field f) {
  if (f.is_rational()) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return from_bigrat(num, den, f);
  }
  if (den == 0) throw std::invalid_argument("zero denominator");
  bigint p(f.p);
  bigint n = num % p;
  if (n < 0) n += p;
  bigint d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw std::invalid_argument("denominator is zero mod p");
  Scalar dd((long long)d, f);
  Scalar nn((long long)n, f);
  return nn / dd;
}

Scalar Scalar::from_i128(i128 n, i128 d, Field f) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = igcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  Scalar s;
  s.f_ = f;
  if (fits64(n) && fits64(d)) {
    s.n_ = (long long)n;
    s.d_ = (long long)d;
  } else {
    bool neg = n < 0;
    i128 an = iabs(n);
    bigint bn = (uint64_t)(an >> 64);
    bn <<= 64;
    bn += (uint64_t)(an & ~(uint64_t)0);
    if (neg) bn = -bn;
    i128 ad = iabs(d);
    bigint bd = (uint64_t)(ad >> 64);
    bd <<= 64;
    bd += (uint64_t)(ad & ~(uint64_t)0);
    s.big_ = std::make_shared<BigRat>(BigRat{bn, bd});
  }
  return s;
}

Scalar Scalar::from_bigrat(bigint n, bigint d, Field f) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  bigint g = boost::multiprecision::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  Scalar s;
  s.f_ = f;
  // Demote when the reduced value fits the fast path again.
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max() &&
      d <= std::numeric_limits<long long>::max()) {
    s.n_ = (long long)n;
    s.d_ = (long long)d;
  } else {
    s.big_ = std::make_shared<BigRat>(BigRat{std::move(n), std::move(d)});
  }
  return s;
}

Scalar::BigRat Scalar::as_bigrat() const {
  if (big_) return *big_;
  return BigRat{bigint(n_), bigint(d_)};
}

bigint Scalar::num_big() const { return big_ ? big_->num : bigint(n_); }
bigint Scalar::den_big() const { return big_ ? big_->den : bigint(d_); }

Scalar Scalar::parse(const std::string& s, Field f) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      bigint n(s);
      return make(n, bigint(1), f);
    }
    bigint n(s.substr(0, slash));
    bigint d(s.substr(slash + 1));
    return make(n, d, f);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot parse scalar '" + s + "'");
  }
}

std::string Scalar::str() const {
  if (!f_.is_rational()) return std::to_string(n_);
  if (big_) {
    std::string r = big_->num.str();
    if (big_->den != 1) r += "/" + big_->den.str();
    return r;
  }
  std::string r = std::to_string(n_);
  if (d_ != 1) r += "/" + std::to_string(d_);
  return r;
}

Scalar Scalar::operator-() const {
  if (!f_.is_rational()) {
    Scalar s = *this;
    s.n_ = n_ == 0 ? 0 : (long long)f_.p - n_;
    return s;
  }
  if (!big_) {
    // -INT64_MIN overflows; route through the i128 constructor.
    return from_i128(-(i128)n_, (i128)d_, f_);
  }
  return from_bigrat(-big_->num, big_->den, f_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!f_.is_rational()) {
    Scalar s = *this;
    s.n_ = mod_pow(n_, (long long)f_.p - 2, f_.p);
    return s;
  }
  if (!big_) return from_i128((i128)d_, (i128)n_, f_);
  return from_bigrat(big_->den, big_->num, f_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (!a.f_.is_rational()) {
    Scalar s = a;
    s.n_ = (a.n_ + b.n_) % (long long)a.f_.p;
    return s;
  }
  if (!a.big_ && !b.big_) {
    i128 n = (i128)a.n_ * b.d_ + (i128)b.n_ * a.d_;
    i128 d = (i128)a.d_ * b.d_;
    return Scalar::from_i128(n, d, a.f_);
  }
  auto x = a.as_bigrat(), y = b.as_bigrat();
  return Scalar::from_bigrat(x.num * y.den + y.num * x.den, x.den * y.den, a.f_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (!a.f_.is_rational()) {
    Scalar s = a;
    s.n_ = mod_mul(a.n_, b.n_, a.f_.p);
    return s;
  }
  if (!a.big_ && !b.big_) {
    i128 n = (i128)a.n_ * b.n_;
    i128 d = (i128)a.d_ * b.d_;
    return Scalar::from_i128(n, d, a.f_);
  }
  auto x = a.as_bigrat(), y = b.as_bigrat();
  return Scalar::from_bigrat(x.num * y.num, x.den * y.den, a.f_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  auto x = a.as_bigrat(), y = b.as_bigrat();
  return x.num == y.num && x.den == y.den;
}

Scalar scalar_one(Field f) { return Scalar(1, f); }
Scalar scalar_zero(Field f) { return Scalar(0, f); }

}  // namespace braidkit
