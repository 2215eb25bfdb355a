#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidkit {

using bigint = boost::multiprecision::cpp_int;

// Ground field: p == 0 means the rationals, otherwise the prime field F_p.
struct Field {
  uint32_t p = 0;
  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

Field field_q();
Field field_fp(uint32_t p);  // throws if p is not prime or p >= 2^31

// Exact field element. Rationals keep an int64 numerator/denominator fast path
// and promote to arbitrary precision on overflow; F_p elements store the
// reduced residue. The field tag travels with the value and mixing tags in an
// arithmetic operation is an error.
class Scalar {
 public:
  Scalar() = default;  // 0 over Q
  explicit Scalar(long long n, Field f = Field{});
  static Scalar rational(long long num, long long den);
  static Scalar make(const bigint& num, const bigint& den, Field f);
  static Scalar parse(const std::string& s, Field f = Field{});

  Field field() const { return f_; }
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_small() const { return !big_; }
  long long num64() const { return n_; }  // only valid when is_small()
  long long den64() const { return d_; }
  bigint num_big() const;
  bigint den_big() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar inv() const;  // throws on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  struct BigRat {
    bigint num, den;  // reduced, den > 0
  };
  // Rationals: n_/d_ when big_ is null, otherwise *big_. F_p: residue in n_.
  long long n_ = 0, d_ = 1;
  std::shared_ptr<const BigRat> big_;
  Field f_;

  static Scalar from_i128(__int128 n, __int128 d, Field f);
  static Scalar from_bigrat(bigint n, bigint d, Field f);
  BigRat as_bigrat() const;
  friend void check_same_field(const Scalar& a, const Scalar& b);
};

Scalar scalar_one(Field f);
Scalar scalar_zero(Field f);

}  // namespace braidkit
