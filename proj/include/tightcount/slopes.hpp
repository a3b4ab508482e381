#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tightcount/rational.hpp"

namespace tightcount {

// Isotopy class of an essential curve on a torus: primitive vector (x, y)
// with slope y/x, canonicalized to x > 0, or (0, 1) for the infinite slope.
class ExtendedSlope {
 public:
  ExtendedSlope(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_zero() && y_.is_zero())
      throw invalid_input_error("slope vector (0, 0)");
    BigInt g = gcd(x_, y_);
    if (g != BigInt(1)) {
      x_ = x_ / g;
      y_ = y_ / g;
    }
    if (x_.is_negative() || (x_.is_zero() && y_.is_negative())) {
      x_ = -x_;
      y_ = -y_;
    }
  }

  static ExtendedSlope infinity() { return ExtendedSlope(BigInt(0), BigInt(1)); }

  static ExtendedSlope from_value(const Rational& v) {
    return ExtendedSlope(v.den(), v.num());
  }

  bool is_infinite() const { return x_.is_zero(); }

  Rational value() const {
    if (is_infinite()) throw domain_error("infinite slope has no rational value");
    return Rational(y_, x_);
  }

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }

  std::string to_string() const {
    if (is_infinite()) return "∞";
    return value().to_string();
  }

  bool operator==(const ExtendedSlope&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const ExtendedSlope& s) {
    return os << s.to_string();
  }

 private:
  BigInt x_, y_;
};

// A = [[alpha, alpha'], [-beta, -beta']] with beta/alpha = r in lowest terms,
// alpha'*beta - alpha*beta' = 1 and 0 < alpha' < alpha. This is the gluing
// map identifying the boundary of the filling solid torus for a fiber of
// coefficient r with its torus in the fibered piece.
struct GluingMatrix {
  BigInt alpha, alpha_p, beta, beta_p;

  bool operator==(const GluingMatrix&) const = default;
};

namespace detail {

// x with a*x == gcd(a, m) (mod m), iterative extended Euclid
inline BigInt modular_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  BigInt old_s = 1, s = 0;
  while (!r.is_zero()) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != BigInt(1)) throw domain_error("not invertible");
  BigInt inv = old_s % m;
  if (inv.signum() <= 0) inv += m;
  return inv;
}

}  // namespace detail

inline GluingMatrix gluing_matrix(const Rational& r) {
  if (r.signum() <= 0) throw domain_error("gluing matrix needs r > 0");
  BigInt alpha = r.den();
  BigInt beta = r.num();
  if (alpha == BigInt(1))
    throw domain_error("gluing matrix undefined for integral r");
  BigInt alpha_p = detail::modular_inverse(beta, alpha);
  BigInt beta_p = (alpha_p * beta - BigInt(1)) / alpha;
  return GluingMatrix{std::move(alpha), std::move(alpha_p), std::move(beta),
                      std::move(beta_p)};
}

// (x, y) -> (a x + b y, c x + d y) for a unimodular [[a, b], [c, d]]
inline ExtendedSlope apply_unimodular(const BigInt& a, const BigInt& b,
                                      const BigInt& c, const BigInt& d,
                                      const ExtendedSlope& s) {
  return ExtendedSlope(a * s.x() + b * s.y(), c * s.x() + d * s.y());
}

// Change of basis from the solid-torus boundary coordinates to the torus
// T_i on the fibered side.
inline ExtendedSlope act(const GluingMatrix& A, const ExtendedSlope& s) {
  return apply_unimodular(A.alpha, A.alpha_p, -A.beta, -A.beta_p, s);
}

// Boundary slope -alpha/alpha' of the filling solid torus; always < -1.
inline ExtendedSlope boundary_slope(const Rational& r) {
  GluingMatrix A = gluing_matrix(r);
  return ExtendedSlope(std::move(A.alpha_p), -A.alpha);
}

// Slope of the border between the k-th and (k+1)-th continued fraction
// blocks: the reversed, truncated evaluation [a_n, ..., a_k + 1], 1 <= k <= n.
inline ExtendedSlope block_border_slope(const NegCF& cf, std::size_t k) {
  const auto& c = cf.coeffs;
  if (c.size() < 2)
    throw domain_error("single-block continued fraction has no borders");
  if (k < 1 || k >= c.size())
    throw domain_error("block border index out of range");
  std::vector<BigInt> rev;
  rev.reserve(c.size() - k);
  for (std::size_t j = c.size(); j-- > k + 1;) rev.push_back(c[j]);
  rev.push_back(c[k] + BigInt(1));
  return ExtendedSlope::from_value(cf_evaluate_list(rev));
}

// Border between the outermost and second continued fraction block of the
// filling torus for coefficient r, rewritten in the basis of the complement
// torus via the gluing matrix. Equals 1/(a_0 + 1); requires a_0 <= -2 and a
// second block to exist.
inline ExtendedSlope outer_border_slope_in_base(const Rational& r) {
  if (r.signum() <= 0 || r.is_integer())
    throw domain_error("outer border slope needs 0 < r non-integral");
  NegCF cf = neg_cf_expand(-r.reciprocal());
  const BigInt& a0 = cf.coeffs.front();
  if (a0 == BigInt(-1))
    throw domain_error("outer border slope needs a_0 <= -2");
  if (cf.coeffs.size() < 2)
    throw domain_error("no second continued fraction block");
  GluingMatrix A = gluing_matrix(r);
  BigInt t = a0 + BigInt(1);
  ExtendedSlope inner(A.alpha_p + t * A.beta_p, -(A.alpha + t * A.beta));
  return act(A, inner);
}

}  // namespace tightcount
