#pragma once

// Exact scalar types used across the library. Both wrap GMP values and
// evaluate eagerly, so they are safe to use inside Eigen expressions
// (gmpxx's own expression templates and Eigen's do not mix).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace popdec {

class Integer {
public:
  Integer() : v_(0) {}
  Integer(int x) : v_(x) {}
  Integer(long x) : v_(x) {}
  Integer(long long x) : v_(static_cast<long>(x)) {}
  explicit Integer(const mpz_class& z) : v_(z) {}
  explicit Integer(const std::string& s) : v_(s) {}

  const mpz_class& raw() const { return v_; }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }
  Integer operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }
  Integer operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  // Truncated division/remainder, matching C semantics.
  Integer operator/(const Integer& o) const { mpz_class q; mpz_tdiv_q(q.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t()); return Integer(q); }
  Integer operator%(const Integer& o) const { mpz_class r; mpz_tdiv_r(r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t()); return Integer(r); }

  bool operator==(const Integer& o) const { return v_ == o.v_; }
  bool operator!=(const Integer& o) const { return v_ != o.v_; }
  bool operator<(const Integer& o) const { return v_ < o.v_; }
  bool operator<=(const Integer& o) const { return v_ <= o.v_; }
  bool operator>(const Integer& o) const { return v_ > o.v_; }
  bool operator>=(const Integer& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Integer abs() const { return Integer(mpz_class(::abs(v_))); }
  bool divides(const Integer& o) const { return mpz_divisible_p(o.v_.get_mpz_t(), v_.get_mpz_t()) != 0; }
  bool fits_int64() const { return v_.fits_slong_p(); }
  std::int64_t to_int64() const { return v_.get_si(); }
  std::string str() const { return v_.get_str(); }

  friend Integer gcd(const Integer& a, const Integer& b) { mpz_class g; mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t()); return Integer(g); }
  friend Integer lcm(const Integer& a, const Integer& b) { mpz_class l; mpz_lcm(l.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t()); return Integer(l); }
  friend Integer divexact(const Integer& a, const Integer& b) { mpz_class q; mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t()); return Integer(q); }
  // Floor division, used by lattice reduction.
  friend Integer fdiv(const Integer& a, const Integer& b) { mpz_class q; mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t()); return Integer(q); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& z);

private:
  mpz_class v_;
};

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int x) : v_(x) {}
  Rational(long x) : v_(x) {}
  Rational(const Integer& z) : v_(z.raw()) {}
  Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) { v_.canonicalize(); }
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  // Accepts "p", "p/q", and optional leading minus.
  explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Integer floor() const { mpz_class q; mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t()); return Integer(q); }
  Integer ceil() const { mpz_class q; mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t()); return Integer(q); }
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.abs(); }
inline Integer abs(const Integer& z) { return z.abs(); }

}  // namespace popdec

namespace Eigen {

template <typename T> struct NumTraits;

template <> struct NumTraits<popdec::Rational> {
  using Real = popdec::Rational;
  using NonInteger = popdec::Rational;
  using Nested = popdec::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 120,
    MulCost = 100,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};

template <> struct NumTraits<popdec::Integer> {
  using Real = popdec::Integer;
  using NonInteger = popdec::Rational;
  using Nested = popdec::Integer;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 80,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen
