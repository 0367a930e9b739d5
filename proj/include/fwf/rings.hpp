#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown by CheckedIntegers when an int64 result would not fit.
struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow") {}
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(BigInt n) {
  std::vector<std::uint64_t> out;
  if (n < 0) n = -n;
  for (std::uint64_t d = 2; BigInt(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n.convert_to<std::uint64_t>());
  return out;
}

/// Coefficient ring tag: Z, Q or Z/p.
struct CoefficientRing {
  enum class Kind { integers, rationals, prime_field };
  Kind kind = Kind::integers;
  std::uint32_t p = 0;

  static CoefficientRing Z() { return {}; }
  static CoefficientRing Q() { return {Kind::rationals, 0}; }
  static CoefficientRing Zp(std::uint64_t p) {
    if (!is_prime(p) || p > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("Z/" + std::to_string(p) + " is not a supported prime field");
    return {Kind::prime_field, static_cast<std::uint32_t>(p)};
  }

  /// Accepts "Z", "Q", "Zp:<p>" (also "Z/<p>").
  static CoefficientRing parse(const std::string& s) {
    if (s == "Z") return Z();
    if (s == "Q") return Q();
    std::string digits;
    if (s.rfind("Zp:", 0) == 0) digits = s.substr(3);
    else if (s.rfind("Z/", 0) == 0) digits = s.substr(2);
    else throw std::invalid_argument("unknown coefficient ring '" + s + "' (expected Z, Q or Zp:<p>)");
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 10)
      throw std::invalid_argument("bad prime in coefficient ring '" + s + "'");
    return Zp(std::stoull(digits));
  }

  bool is_field() const { return kind != Kind::integers; }

  std::string to_string() const {
    switch (kind) {
      case Kind::integers: return "Z";
      case Kind::rationals: return "Q";
      case Kind::prime_field: return "Zp:" + std::to_string(p);
    }
    return "?";
  }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

// Ring models. Every model exposes value_type, zero/one/from_int, add/sub/mul/
// neg, is_zero/is_unit/unit_inverse, and a Euclidean structure (norm,
// quotient) used by the normal-form code. Fields report norm 1 for every
// nonzero element and divide exactly.

/// Z on int64, throwing ArithmeticOverflow instead of wrapping.
struct CheckedIntegers {
  using value_type = std::int64_t;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  value_type mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  value_type neg(value_type a) const { return sub(0, a); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return a == 1 || a == -1; }
  value_type unit_inverse(value_type a) const { return a; }
  std::uint64_t norm(value_type a) const {
    return a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
  }
  /// Truncating quotient; remainder a - q*b has smaller norm than b.
  value_type quotient(value_type a, value_type b) const {
    if (a == std::numeric_limits<value_type>::min() && b == -1) throw ArithmeticOverflow();
    return a / b;
  }
  /// Unit u making u*a canonical (nonnegative).
  value_type canonical_unit(value_type a) const { return a < 0 ? -1 : 1; }
  BigInt to_bigint(value_type a) const { return BigInt(a); }
};

/// Z with arbitrary precision.
struct BigIntegers {
  using value_type = BigInt;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  value_type unit_inverse(const value_type& a) const { return a; }
  BigInt norm(const value_type& a) const { return abs(a); }
  value_type quotient(const value_type& a, const value_type& b) const { return a / b; }
  value_type canonical_unit(const value_type& a) const { return value_type(a < 0 ? -1 : 1); }
  BigInt to_bigint(const value_type& a) const { return a; }
};

/// Z/p for a prime p < 2^32.
struct PrimeField {
  using value_type = std::uint32_t;
  static constexpr bool is_field = true;
  std::uint32_t p = 2;

  explicit PrimeField(std::uint32_t prime) : p(prime) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type from_bigint(const BigInt& v) const {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<value_type>();
  }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return a != 0; }
  value_type unit_inverse(value_type a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  int norm(value_type a) const { return a != 0; }
  value_type quotient(value_type a, value_type b) const { return mul(a, unit_inverse(b)); }
  value_type canonical_unit(value_type a) const { return a == 0 ? 1 : unit_inverse(a); }
};

/// Q with arbitrary precision.
struct Rationals {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return Rational(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_unit(const value_type& a) const { return !a.is_zero(); }
  value_type unit_inverse(const value_type& a) const { return value_type(1) / a; }
  int norm(const value_type& a) const { return !a.is_zero(); }
  value_type quotient(const value_type& a, const value_type& b) const { return a / b; }
  value_type canonical_unit(const value_type& a) const {
    return a.is_zero() ? value_type(1) : value_type(value_type(1) / a);
  }
};

/// Call fn with the field model for a field coefficient ring.
template <class Fn>
decltype(auto) with_field(const CoefficientRing& R, Fn&& fn) {
  if (R.kind == CoefficientRing::Kind::prime_field) return fn(PrimeField(R.p));
  if (R.kind == CoefficientRing::Kind::rationals) return fn(Rationals{});
  throw std::invalid_argument("coefficient ring " + R.to_string() + " is not a field");
}

/// Run fn on checked int64 first and rerun on arbitrary precision if any
/// intermediate value overflows.
template <class Fn>
decltype(auto) with_integers(Fn&& fn) {
  try {
    return fn(CheckedIntegers{});
  } catch (const ArithmeticOverflow&) {
    return fn(BigIntegers{});
  }
}

}  // namespace fwf
