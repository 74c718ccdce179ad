#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "catgsb/error.hpp"

namespace catgsb {

/// Exact arbitrary-precision rational; always stored reduced with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational field_inverse(const Rational& x) {
  if (x == 0) throw Error("division by zero");
  return Rational(1) / x;
}

inline std::string to_string(const Rational& x) { return x.str(); }

Rational rational_from_string(std::string_view text);

/// Prime-field element with compile-time modulus; satisfies the same field
/// interface BasicPoly expects from Rational. P must be prime.
template <std::uint64_t P>
class PrimeField {
  static_assert(P >= 2 && P < (1ull << 32), "modulus must fit 32 bits");

public:
  PrimeField() : value_(0) {}
  PrimeField(long long v) {
    long long m = v % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    value_ = static_cast<std::uint64_t>(m);
  }

  std::uint64_t value() const { return value_; }

  friend PrimeField operator+(PrimeField a, PrimeField b) {
    return from_raw((a.value_ + b.value_) % P);
  }
  friend PrimeField operator-(PrimeField a, PrimeField b) {
    return from_raw((a.value_ + P - b.value_) % P);
  }
  friend PrimeField operator*(PrimeField a, PrimeField b) {
    return from_raw((a.value_ * b.value_) % P);
  }
  PrimeField operator-() const { return from_raw(value_ == 0 ? 0 : P - value_); }
  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }

  friend bool operator==(PrimeField a, PrimeField b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(PrimeField a, PrimeField b) { return !(a == b); }

private:
  static PrimeField from_raw(std::uint64_t v) {
    PrimeField f;
    f.value_ = v;
    return f;
  }
  std::uint64_t value_;
};

template <std::uint64_t P>
PrimeField<P> field_inverse(PrimeField<P> x) {
  if (x == PrimeField<P>()) throw Error("division by zero");
  // Fermat: x^(P-2) mod P.
  std::uint64_t base = x.value(), result = 1, e = P - 2;
  while (e) {
    if (e & 1) result = result * base % P;
    base = base * base % P;
    e >>= 1;
  }
  PrimeField<P> out(static_cast<long long>(result));
  return out;
}

template <std::uint64_t P>
std::string to_string(PrimeField<P> x) {
  return std::to_string(x.value());
}

}  // namespace catgsb
