#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>

#include "copath/errors.hpp"

namespace copath {

using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational scalar. Thin value wrapper around an arbitrary-precision
/// rational; the wrapper keeps the backend's converting constructors out of
/// Eigen's overload resolution.
class Rat {
 public:
  Rat() = default;
  Rat(int n) : v_(n) {}
  Rat(long long n) : v_(static_cast<std::int64_t>(n)) {}
  explicit Rat(BigRat v) : v_(std::move(v)) {}
  Rat(const boost::multiprecision::cpp_int& num, const boost::multiprecision::cpp_int& den)
      : v_(num, den) {}

  const BigRat& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  /// Accepts "n", "-n", "n/d".
  static Rat parse(const std::string& text) {
    try {
      Rat r{BigRat(text)};
      return r;
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "cannot parse rational '" + text + "'");
    }
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(Errc::BadArgument, "division by zero");
    return Rat(BigRat(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(BigRat(-v_)); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }
  std::string str() const { return v_.str(); }

 private:
  BigRat v_;
};

/// Prime-field scalar with runtime modulus. A default-constructed or
/// int-constructed value is an unbound integer literal that adopts the
/// modulus of the first bound operand it meets; this lets generic code
/// (Eigen included) create zeros and ones without knowing the modulus.
class Fp {
 public:
  Fp() = default;
  Fp(int n) : raw_(n) {}
  Fp(long long n) : raw_(n) {}
  Fp(std::int64_t n, std::uint64_t p) : p_(p) {
    check_modulus(p);
    std::int64_t r = n % std::int64_t(p);
    if (r < 0) r += std::int64_t(p);
    v_ = std::uint64_t(r);
  }

  static void check_modulus(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t(1) << 31)) fail(Errc::FieldMismatch, "modulus out of range");
  }

  std::uint64_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  std::uint64_t value_mod(std::uint64_t p) const {
    if (p_) {
      if (p_ != p) fail(Errc::FieldMismatch, "mixed moduli");
      return v_;
    }
    std::int64_t r = raw_ % std::int64_t(p);
    if (r < 0) r += std::int64_t(p);
    return std::uint64_t(r);
  }

  bool is_zero() const { return p_ ? v_ == 0 : raw_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return Fp::unbound(a.raw_ + b.raw_);
    return Fp(std::int64_t((a.value_mod(p) + b.value_mod(p)) % p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return Fp::unbound(a.raw_ - b.raw_);
    return Fp(std::int64_t((a.value_mod(p) + p - b.value_mod(p)) % p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return Fp::unbound(a.raw_ * b.raw_);
    return Fp(std::int64_t((a.value_mod(p) * b.value_mod(p)) % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) {
      // Unbound literals divide only when the quotient is an exact integer
      // (enough for elimination over structural 0/±1 matrices).
      if (b.raw_ == 0) fail(Errc::BadArgument, "division by zero");
      if (a.raw_ % b.raw_ != 0)
        fail(Errc::FieldMismatch, "division of unbound prime-field literals");
      return Fp::unbound(a.raw_ / b.raw_);
    }
    std::uint64_t bv = b.value_mod(p);
    if (bv == 0) fail(Errc::BadArgument, "division by zero");
    return Fp(std::int64_t((a.value_mod(p) * inverse_mod(bv, p)) % p), p);
  }
  Fp operator-() const { return Fp(0) - *this; }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return a.raw_ == b.raw_;
    return a.value_mod(p) == b.value_mod(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
    if (x.p_) return os << x.v_;
    return os << x.raw_;
  }
  std::string str() const {
    return p_ ? std::to_string(v_) : std::to_string(raw_);
  }

  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }

 private:
  static Fp unbound(std::int64_t raw) {
    Fp x;
    x.raw_ = raw;
    return x;
  }
  static std::uint64_t join(const Fp& a, const Fp& b) { return a.p_ ? a.p_ : b.p_; }

  std::uint64_t p_ = 0;
  std::int64_t raw_ = 0;
  std::uint64_t v_ = 0;
};

template <class Scalar>
bool is_zero(const Scalar& s) {
  return s.is_zero();
}

}  // namespace copath

namespace Eigen {

template <>
struct NumTraits<copath::Rat> {
  using Real = copath::Rat;
  using NonInteger = copath::Rat;
  using Nested = copath::Rat;
  using Literal = copath::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static inline copath::Rat epsilon() { return copath::Rat(0); }
  static inline copath::Rat dummy_precision() { return copath::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<copath::Fp> {
  using Real = copath::Fp;
  using NonInteger = copath::Fp;
  using Nested = copath::Fp;
  using Literal = copath::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 8
  };
  static inline copath::Fp epsilon() { return copath::Fp(0); }
  static inline copath::Fp dummy_precision() { return copath::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
