#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcount/bigint.hpp"
#include "tightcount/errors.hpp"

namespace tightcount {

// Exact rational with den > 0 and gcd(|num|, den) = 1, sign carried by the
// numerator. Every operation is pure; no floating point anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(long long n) : num_(n), den_(1) {}          // NOLINT

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw invalid_input_error("rational with zero denominator");
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (num_.is_zero()) den_ = BigInt(1);
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // "p/q" or "p": ASCII digits, optional leading minus, no whitespace.
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
      std::string_view num = s.substr(0, slash);
      std::string_view den = s.substr(slash + 1);
      if (den.empty() || den.front() == '-')
        throw invalid_input_error("bad denominator");
      return Rational(BigInt::from_string(num), BigInt::from_string(den));
    } catch (const invalid_input_error&) {
      throw invalid_input_error("not a rational: \"" + std::string(s) + "\"");
    }
  }

  std::string to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int signum() const { return num_.signum(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  BigInt floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (!r.is_zero() && num_.is_negative()) q -= BigInt(1);
    return q;
  }

  // x - floor(x), always in [0, 1)
  Rational frac() const { return *this - Rational(floor()); }

  Rational reciprocal() const {
    if (num_.is_zero()) throw domain_error("reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const = default;  // representation is canonical

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
  }

 private:
  BigInt num_;
  BigInt den_;
};

// Negative continued fraction coefficient list [a_0, ..., a_n] standing for
// the nested value a_0 - 1/(a_1 - 1/(... - 1/a_n)). Well-formed lists have
// a_0 <= -1 and a_k <= -2 for k >= 1; cf_evaluate accepts arbitrary lists
// (the truncated/reversed slope computations need that) and reports a
// malformed list when evaluation hits a pole.
struct NegCF {
  std::vector<BigInt> coeffs;

  bool well_formed() const {
    if (coeffs.empty()) return false;
    if (coeffs.front() > BigInt(-1)) return false;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
      if (coeffs[k] > BigInt(-2)) return false;
    return true;
  }

  bool operator==(const NegCF& o) const = default;
};

inline Rational cf_evaluate_list(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw invalid_input_error("empty continued fraction");
  Rational value(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (value.is_zero())
      throw invalid_input_error("malformed continued fraction: pole during evaluation");
    value = Rational(coeffs[i]) - value.reciprocal();
  }
  return value;
}

inline Rational cf_evaluate(const NegCF& cf) { return cf_evaluate_list(cf.coeffs); }

// Unique expansion of x < 0 with a_0 <= -1 and a_k <= -2: take the floor,
// then recurse on -1/(x - floor(x)) until x is an integer. The denominators
// strictly decrease, so the length is at most den(x).
inline NegCF neg_cf_expand(const Rational& x) {
  if (x.signum() >= 0)
    throw domain_error("negative continued fraction needs a negative input");
  NegCF out;
  Rational cur = x;
  for (;;) {
    BigInt a = cur.floor();
    out.coeffs.push_back(a);
    if (cur.is_integer()) break;
    cur = -(cur - Rational(a)).reciprocal();
  }
  return out;
}

}  // namespace tightcount
