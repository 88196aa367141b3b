#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dyadic {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (bad field config, precision too small, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// An enumeration or computation would exceed the configured element budget.
// Carries the offending cardinality so callers can report it.
struct ResourceError : Error {
  ResourceError(const std::string& what, std::uint64_t cardinality)
      : Error(what), cardinality(cardinality) {}
  std::uint64_t cardinality;
};

// A cross-check failed: two independent computations of the same quantity disagree.
struct VerifyError : Error {
  using Error::Error;
};

// Requested a finite answer for a quantity that is infinite in positive characteristic.
struct InfiniteSetError : Error {
  using Error::Error;
};

// Exact rational with int64 parts; enough for degree ratios and formal degrees.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw InvalidInput("rational division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  bool is_integer() const { return den == 1; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Integer power with overflow check (quantities here stay well under 2^63).
inline std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidInput("negative exponent in integer power");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > INT64_MAX / (base < 0 ? -base : base))
      throw ResourceError("integer power overflow", UINT64_MAX);
    r *= base;
  }
  return r;
}

// Default element budget for exhaustive enumerations.
constexpr std::uint64_t kDefaultBudget = 5'000'000;

inline void check_budget(std::uint64_t cardinality, std::uint64_t budget, const char* what) {
  if (cardinality > budget)
    throw ResourceError(std::string(what) + " requires " + std::to_string(cardinality) +
                            " elements, budget is " + std::to_string(budget),
                        cardinality);
}

}  // namespace dyadic
