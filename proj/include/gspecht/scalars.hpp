#pragma once

// Exact scalar arithmetic: the prime field F_p (runtime modulus) and the
// rationals.  Both expose the same small interface so the linear algebra in
// linalg.hpp can be instantiated over either.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "gspecht/errors.hpp"

namespace gspecht {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

/// F_p with canonical representatives 0..p-1.  p must fit in 31 bits so that
/// products fit in 64-bit intermediates.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p) || p >= (1ull << 31))
      throw ParameterError("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_int(std::int64_t x) const {
    auto m = static_cast<std::int64_t>(p_);
    x %= m;
    if (x < 0) x += m;
    return static_cast<value_type>(x);
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(p_ - b + a);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(p_ - a); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }

  value_type pow(value_type a, std::int64_t n) const {
    if (n < 0) return pow(inv(a), -n);
    std::uint64_t r = 1, b = a;
    while (n > 0) {
      if (n & 1) r = r * b % p_;
      b = b * b % p_;
      n >>= 1;
    }
    return static_cast<value_type>(r);
  }

  value_type inv(value_type a) const {
    if (a == 0) throw ArithmeticError("PrimeField: inversion of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }

  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  std::string to_string(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_ = 2;
};

/// The rational numbers, arbitrary precision.
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type from_int(std::int64_t x) const { return value_type(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw ArithmeticError("RationalField: inversion of zero");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type pow(const value_type& a, std::int64_t n) const {
    if (n < 0) return pow(inv(a), -n);
    value_type r = 1, b = a;
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }
  std::string to_string(const value_type& a) const { return a.str(); }

  bool operator==(const RationalField&) const = default;
};

/// Multiplicative order of a in F_p (a != 0).
inline std::uint64_t multiplicative_order(const PrimeField& f, PrimeField::value_type a) {
  if (a == 0) throw ArithmeticError("multiplicative_order: zero has no order");
  std::uint64_t k = 1;
  auto x = a;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

/// Smallest residue 2 <= xi < p of multiplicative order exactly e.
inline std::uint32_t find_xi(std::uint64_t p, int e) {
  if (!is_prime(p)) throw ParameterError("find_xi: p=" + std::to_string(p) + " is not prime");
  if (e < 2)
    throw ParameterError("find_xi: e=" + std::to_string(e) + " must be at least 2 (xi != 1), p=" +
                         std::to_string(p));
  if ((p - 1) % static_cast<std::uint64_t>(e) != 0)
    throw ParameterError("find_xi: e=" + std::to_string(e) + " does not divide p-1 for p=" +
                         std::to_string(p));
  PrimeField f(p);
  for (std::uint64_t x = 2; x < p; ++x)
    if (multiplicative_order(f, static_cast<std::uint32_t>(x)) == static_cast<std::uint64_t>(e))
      return static_cast<std::uint32_t>(x);
  throw ParameterError("find_xi: no element of order " + std::to_string(e) + " mod " + std::to_string(p));
}

/// Smallest prime p >= 5 with p = 1 (mod e).
inline std::uint64_t default_prime(int e) {
  if (e < 2) throw ParameterError("default_prime: e=" + std::to_string(e) + " must be at least 2");
  for (std::uint64_t p = 5;; ++p)
    if (p % static_cast<std::uint64_t>(e) == 1 && is_prime(p)) return p;
}

/// Ground field together with the quantum parameter xi and its order e.
struct FieldSpec {
  enum class Mode { prime, rational };

  Mode mode = Mode::prime;
  std::uint64_t p = 5;
  int e = 2;
  std::uint32_t xi = 4;   // prime mode
  Rational xi_rational;   // rational mode

  static FieldSpec prime_field(std::uint64_t p, int e) {
    FieldSpec s;
    s.mode = Mode::prime;
    s.p = p;
    s.e = e;
    s.xi = find_xi(p, e);
    return s;
  }

  /// Rational mode: e = 0, xi of infinite multiplicative order.
  static FieldSpec rational_field(const Rational& xi) {
    FieldSpec s;
    s.mode = Mode::rational;
    s.p = 0;
    s.e = 0;
    s.xi = 0;
    s.xi_rational = xi;
    s.validate();
    return s;
  }

  PrimeField prime() const {
    if (mode != Mode::prime) throw ParameterError("FieldSpec: not in prime-field mode");
    return PrimeField(p);
  }

  void validate() const {
    if (mode == Mode::prime) {
      PrimeField f(p);
      if (e < 2) throw ParameterError("FieldSpec: prime-field mode needs e >= 2, got " + std::to_string(e));
      if ((p - 1) % static_cast<std::uint64_t>(e) != 0)
        throw ParameterError("FieldSpec: e=" + std::to_string(e) + " does not divide p-1, p=" + std::to_string(p));
      if (xi == 0 || xi >= p || multiplicative_order(f, xi) != static_cast<std::uint64_t>(e))
        throw ParameterError("FieldSpec: xi=" + std::to_string(xi) + " does not have order " + std::to_string(e));
    } else {
      if (e != 0) throw ParameterError("FieldSpec: rational mode requires e = 0");
      auto a = abs(xi_rational);
      if (a == 0 || a == 1)
        throw ParameterError("FieldSpec: rational xi must satisfy |xi| not in {0,1}");
    }
  }
};

}  // namespace gspecht
