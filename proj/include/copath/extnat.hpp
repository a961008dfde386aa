#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>

#include "copath/errors.hpp"

namespace copath {

using BigInt = boost::multiprecision::cpp_int;

/// Natural number extended with omega (countable infinity). Sums and
/// products with omega yield omega; comparisons are total with omega
/// greatest.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(std::uint64_t v) : value_(v) {}
  ExtNat(const BigInt& v) : value_(v) {
    if (v < 0) fail(Errc::BadArgument, "ExtNat from negative value");
  }
  static ExtNat omega() {
    ExtNat n;
    n.omega_ = true;
    return n;
  }

  bool is_omega() const { return omega_; }
  bool is_finite() const { return !omega_; }
  const BigInt& finite() const {
    if (omega_) fail(Errc::BadArgument, "finite() on omega");
    return value_;
  }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.omega_ || b.omega_) return omega();
    return ExtNat(BigInt(a.value_ + b.value_));
  }
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b) {
    if (a.omega_ || b.omega_) return omega();
    return ExtNat(BigInt(a.value_ * b.value_));
  }
  ExtNat& operator+=(const ExtNat& o) { return *this = *this + o; }
  ExtNat& operator*=(const ExtNat& o) { return *this = *this * o; }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.omega_ != b.omega_) return false;
    return a.omega_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (a.omega_) return false;
    if (b.omega_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) { return !(b < a); }
  friend bool operator>=(const ExtNat& a, const ExtNat& b) { return !(a < b); }

  std::string str() const { return omega_ ? "omega" : value_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const ExtNat& n) { return os << n.str(); }

 private:
  bool omega_ = false;
  BigInt value_ = 0;
};

}  // namespace copath
