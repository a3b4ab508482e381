#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "tightcount/rational.hpp"

namespace tightcount {

// Surgery presentation M(r1, r2, r3) of a Seifert fibered space over S^2 with
// three singular fibers. Integral coefficients are rejected: they describe
// manifolds with fewer singular fibers.
struct SeifertTriple {
  Rational r1, r2, r3;

  SeifertTriple(Rational a, Rational b, Rational c)
      : r1(std::move(a)), r2(std::move(b)), r3(std::move(c)) {
    if (r1.is_integer() || r2.is_integer() || r3.is_integer())
      throw invalid_input_error("integral surgery coefficient: not a three-fiber presentation");
  }

  std::array<Rational, 3> slots() const { return {r1, r2, r3}; }

  std::string to_string() const {
    return "M(" + r1.to_string() + ", " + r2.to_string() + ", " + r3.to_string() + ")";
  }

  bool operator==(const SeifertTriple&) const = default;
};

// e0 = floor(r1) + floor(r2) + floor(r3); invariant under the coefficient
// moves below because the integer shifts cancel.
inline BigInt e0(const SeifertTriple& t) {
  return t.r1.floor() + t.r2.floor() + t.r3.floor();
}

// (r1, r2, r3) -> (r1+h, r2+k, r3-h-k): same manifold, different presentation.
inline SeifertTriple rolfsen_twist(const SeifertTriple& t, const BigInt& h,
                                   const BigInt& k) {
  return SeifertTriple(t.r1 + Rational(h), t.r2 + Rational(k),
                       t.r3 - Rational(h) - Rational(k));
}

// Presentation with r1 > 0, 1 > r2 >= r3 > 0 and e0 = floor(r1) >= 0.
// Constructible directly so that non-canonical normal forms (any admissible
// split of the fractional parts) can be fed to the counting routines.
struct NormalForm {
  Rational r1, r2, r3;
  BigInt e0;

  NormalForm(Rational a, Rational b, Rational c)
      : r1(std::move(a)), r2(std::move(b)), r3(std::move(c)) {
    if (r1.is_integer() || r2.is_integer() || r3.is_integer())
      throw invalid_input_error("integral coefficient in normal form");
    if (r1.signum() <= 0 || r2.signum() <= 0 || r3.signum() <= 0 ||
        r2 >= Rational(1) || r3 >= Rational(1) || r2 < r3)
      throw invalid_input_error("normal form needs r1 > 0 and 1 > r2 >= r3 > 0");
    e0 = r1.floor();
  }

  SeifertTriple triple() const { return SeifertTriple(r1, r2, r3); }

  std::string to_string() const { return triple().to_string(); }

  bool operator==(const NormalForm&) const = default;
};

// Canonical normal form: sort the three fractional parts descending and let
// slot 1 absorb e0. The result is reachable from the input by coefficient
// moves plus a permutation, and is the same for every permutation of the
// input slots.
inline NormalForm normalize(const SeifertTriple& t) {
  BigInt e = e0(t);
  if (e.is_negative())
    throw out_of_scope_error("e0 = " + e.to_string() + " < 0: outside the classified range");
  std::array<Rational, 3> fracs = {t.r1.frac(), t.r2.frac(), t.r3.frac()};
  std::sort(fracs.begin(), fracs.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  return NormalForm(fracs[0] + Rational(e), fracs[1], fracs[2]);
}

// The three expansions of -1/r_i. The first has a_0 <= -1 (a_0 = -1 exactly
// when r1 > 1); the second and third have a_0 <= -2 since 0 < r < 1.
inline std::array<NegCF, 3> expansions(const NormalForm& n) {
  auto expand = [](const Rational& r) { return neg_cf_expand(-r.reciprocal()); };
  return {expand(n.r1), expand(n.r2), expand(n.r3)};
}

}  // namespace tightcount
