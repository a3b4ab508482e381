#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tightcount/counting.hpp"

using namespace tightcount;

namespace {

NegCF cf(std::initializer_list<long long> cs) {
  NegCF out;
  for (long long c : cs) out.coeffs.emplace_back(c);
  return out;
}

std::array<NegCF, 3> cfs3(std::initializer_list<long long> a,
                          std::initializer_list<long long> b,
                          std::initializer_list<long long> c) {
  return {cf(a), cf(b), cf(c)};
}

std::array<BigInt, 3> a0(long long a, long long b, long long c) {
  return {BigInt(a), BigInt(b), BigInt(c)};
}

Rational random_frac(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(2, max_den);
  long long q = den(rng);
  std::uniform_int_distribution<long long> num(1, q - 1);
  return Rational(num(rng), q);
}

// all normal forms with denominators <= max_den and e0 <= max_e0
std::vector<NormalForm> desk_scale_normal_forms(long long max_den, long long max_e0) {
  std::vector<Rational> fracs;
  for (long long q = 2; q <= max_den; ++q)
    for (long long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) fracs.emplace_back(p, q);
  std::sort(fracs.begin(), fracs.end(), [](auto& a, auto& b) { return a > b; });
  std::vector<NormalForm> out;
  for (long long e = 0; e <= max_e0; ++e)
    for (const auto& f1 : fracs)
      for (std::size_t i = 0; i < fracs.size(); ++i)
        for (std::size_t j = i; j < fracs.size(); ++j)
          out.emplace_back(f1 + Rational(e), fracs[i], fracs[j]);
  return out;
}

}  // namespace

TEST_CASE("closed formula examples") {
  CHECK(t_formula(cfs3({-2}, {-2}, {-2})) == BigInt(7));    // |(-1)^3 - (-8)|
  CHECK(t_formula(cfs3({-1, -3}, {-2}, {-2})) == BigInt(8));  // |0 - (-4)| * 2
  CHECK(t_formula(cfs3({-2}, {-2}, {-3, -2})) == BigInt(10)); // |-2 + 12| * 1
}

TEST_CASE("formula rejects expansions that cannot come from a normal form") {
  CHECK_THROWS_AS(t_formula(cfs3({-2}, {-1, -3}, {-2})), domain_error);
  CHECK_THROWS_AS(t_formula(cfs3({0}, {-2}, {-2})), domain_error);
  CHECK_THROWS_AS(t_formula(cfs3({-2, -1}, {-2}, {-2})), domain_error);
}

TEST_CASE("sign configuration enumeration sizes and contents") {
  auto eight = enumerate_p0(a0(-2, -2, -2));
  CHECK(eight.size() == 8);
  auto four = enumerate_p0(a0(-1, -2, -2));
  CHECK(four.size() == 4);
  for (const auto& t : four) CHECK(t[0] == 0);  // p_0^1 frozen at 0
  auto twelve = enumerate_p0(a0(-2, -2, -3));
  CHECK(twelve.size() == 12);
  for (const auto& t : twelve) {
    CHECK((0 <= t[0] && t[0] <= 1));
    CHECK((0 <= t[1] && t[1] <= 1));
    CHECK((0 <= t[2] && t[2] <= 2));
  }
  CHECK_THROWS_AS(enumerate_p0(a0(-2, -1, -2)), domain_error);
  CHECK_THROWS_AS(enumerate_p0(a0(-100, -100, -100), 1000), enumeration_cap_error);
}

TEST_CASE("class count examples") {
  CHECK(p0_class_count(a0(-2, -2, -2)) == 7);   // one merge among 8
  CHECK(p0_class_count(a0(-1, -2, -2)) == 4);   // no applicable moves
  CHECK(p0_class_count(a0(-2, -2, -3)) == 10);  // two merges among 12
}

TEST_CASE("closed-form class count examples") {
  CHECK(p0_closed_form(a0(-2, -2, -2)) == BigInt(7));
  CHECK(p0_closed_form(a0(-1, -3, -2)) == BigInt(6));
  CHECK(p0_closed_form(a0(-2, -2, -3)) == BigInt(10));
}

TEST_CASE("shift-product identity, exhaustive over [-12, -2]") {
  for (long long a = -12; a <= -2; ++a)
    for (long long b = -12; b <= -2; ++b)
      for (long long c = -12; c <= -2; ++c) {
        BigInt lhs = BigInt((a + 1) * (b + 1) * (c + 1) - a * b * c);
        BigInt rhs = BigInt(a * b + b * c + c * a + a + b + c + 1);
        CHECK(lhs == rhs);  // expand (a+1)(b+1)(c+1) and cancel abc
        CHECK(lhs.signum() > 0);
        CHECK(p0_closed_form(a0(a, b, c)) == abs(lhs));
      }
}

TEST_CASE("union-find and closed form agree on the whole valid domain to 8") {
  for (long long a = -8; a <= -1; ++a)
    for (long long b = -8; b <= -2; ++b)
      for (long long c = -8; c <= -2; ++c)
        CHECK(BigInt(p0_class_count(a0(a, b, c))) == p0_closed_form(a0(a, b, c)));
}

TEST_CASE("upper bound examples") {
  CHECK(upper_count(cfs3({-2}, {-2}, {-2})) == BigInt(7));
  CHECK(upper_count(cfs3({-1, -3}, {-2}, {-2})) == BigInt(8));   // 4 * 2
  CHECK(upper_count(cfs3({-2}, {-2}, {-3, -2})) == BigInt(10));  // 10 * 1
}

TEST_CASE("rotation set examples and structure") {
  CHECK(rotation_set(BigInt(-3), false) == std::vector<long long>{-1, 1});
  CHECK(rotation_set(BigInt(-2), true) == std::vector<long long>{-1, 1});
  CHECK(rotation_set(BigInt(-2), false) == std::vector<long long>{0});
  CHECK(rotation_set(BigInt(-1), true) == std::vector<long long>{0});
  CHECK(rotation_set(BigInt(-5), true) ==
        std::vector<long long>{-4, -2, 0, 2, 4});
  CHECK_THROWS_AS(rotation_set(BigInt(-1), false), domain_error);
  CHECK_THROWS_AS(rotation_set(BigInt(0), true), domain_error);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> coeff(-40, -2);
  for (int iter = 0; iter < 200; ++iter) {
    long long a = coeff(rng);
    for (bool over : {false, true}) {
      auto s = rotation_set(BigInt(a), over);
      CHECK(s.size() == static_cast<std::size_t>(over ? -a : -a - 1));
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i] == -s[s.size() - 1 - i]);               // symmetric
        if (i) CHECK(s[i] - s[i - 1] == 2);                // step 2
      }
    }
  }
}

TEST_CASE("chern count examples") {
  CHECK(chern_count(cfs3({-2}, {-2}, {-2})) == 7);    // (0,0) collides once in 2^3
  CHECK(chern_count(cfs3({-1, -3}, {-2}, {-2})) == 8);   // rot(K1) = 0 forced
  CHECK(chern_count(cfs3({-2}, {-2}, {-3, -2})) == 10);  // 12 assignments, 10 pairs
}

TEST_CASE("chern enumeration matches a naive set-based recount") {
  std::vector<std::array<NegCF, 3>> inputs = {
      cfs3({-2}, {-2}, {-2}),       cfs3({-1, -3}, {-2}, {-2}),
      cfs3({-2}, {-2}, {-3, -2}),   cfs3({-3, -2}, {-4}, {-2, -2}),
      cfs3({-1, -2, -5}, {-3}, {-3}), cfs3({-4}, {-3, -3}, {-2, -2, -2})};
  for (const auto& cfs : inputs) {
    // independent recount: plain Cartesian product into a set of vectors
    std::vector<std::vector<long long>> sets;
    sets.push_back(rotation_set(cfs[0].coeffs[0], true));
    sets.push_back(rotation_set(cfs[1].coeffs[0], true));
    sets.push_back(rotation_set(cfs[2].coeffs[0], true));
    for (int i = 0; i < 3; ++i)
      for (std::size_t k = 1; k < cfs[i].coeffs.size(); ++k)
        sets.push_back(rotation_set(cfs[i].coeffs[k], false));
    std::set<std::vector<long long>> distinct;
    std::vector<std::size_t> idx(sets.size(), 0);
    for (;;) {
      std::vector<long long> vec;
      vec.push_back(sets[0][idx[0]] - sets[1][idx[1]]);
      vec.push_back(sets[0][idx[0]] - sets[2][idx[2]]);
      for (std::size_t j = 3; j < sets.size(); ++j) vec.push_back(sets[j][idx[j]]);
      distinct.insert(vec);
      std::size_t pos = idx.size();
      bool wrapped = true;
      while (pos-- > 0) {
        if (++idx[pos] < sets[pos].size()) {
          wrapped = false;
          break;
        }
        idx[pos] = 0;
      }
      if (wrapped) break;
    }
    CHECK(chern_count(cfs) == distinct.size());
    // and the decoded vector list is exactly the sorted set
    auto vecs = chern_vectors(cfs);
    REQUIRE(vecs.size() == distinct.size());
    auto it = distinct.begin();
    for (const auto& v : vecs) {
      std::vector<long long> flat = {v.d12, v.d13};
      flat.insert(flat.end(), v.chain_rots.begin(), v.chain_rots.end());
      CHECK(flat == *it);
      ++it;
    }
  }
}

TEST_CASE("chern vector entries have the forced parity") {
  std::vector<std::array<NegCF, 3>> inputs = {
      cfs3({-3, -2}, {-4}, {-2, -2}), cfs3({-2}, {-3}, {-5}),
      cfs3({-1, -4}, {-3}, {-2, -3})};
  for (const auto& cfs : inputs) {
    long long m1 = -cfs[0].coeffs[0].to_int64();
    long long m2 = -cfs[1].coeffs[0].to_int64();
    long long m3 = -cfs[2].coeffs[0].to_int64();
    for (const auto& v : chern_vectors(cfs)) {
      CHECK(((v.d12 - (m1 + m2)) % 2 + 2) % 2 == 0);
      CHECK(((v.d13 - (m1 + m3)) % 2 + 2) % 2 == 0);
      std::size_t j = 0;
      for (int i = 0; i < 3; ++i)
        for (std::size_t k = 1; k < cfs[i].coeffs.size(); ++k, ++j) {
          long long size = -(cfs[i].coeffs[k] + BigInt(1)).to_int64();
          CHECK(((v.chain_rots[j] - (size - 1)) % 2 + 2) % 2 == 0);
        }
    }
  }
}

TEST_CASE("sign configuration bounds validator") {
  auto cfs = cfs3({-3, -4}, {-2}, {-3});
  SignConfiguration good;
  good.p0 = {2, 0, 1};
  good.blocks = {std::vector<long long>{2}, {}, {}};
  CHECK(good.satisfies_bounds(cfs));
  SignConfiguration bad_p0 = good;
  bad_p0.p0 = {3, 0, 1};  // |a_0^1 + 1| = 2
  CHECK_FALSE(bad_p0.satisfies_bounds(cfs));
  SignConfiguration bad_block = good;
  bad_block.blocks[0] = {3};  // |a_1^1 + 2| = 2
  CHECK_FALSE(bad_block.satisfies_bounds(cfs));
  SignConfiguration bad_shape = good;
  bad_shape.blocks[1] = {0};
  CHECK_FALSE(bad_shape.satisfies_bounds(cfs));
  SignConfiguration negative = good;
  negative.p0 = {-1, 0, 0};
  CHECK_FALSE(negative.satisfies_bounds(cfs));
}

TEST_CASE("verification examples") {
  CountReport r1 = verify(SeifertTriple(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
  CHECK(r1.t_formula == BigInt(7));
  CHECK(*r1.upper_count == BigInt(7));
  CHECK(*r1.lower_count == BigInt(7));
  CHECK(*r1.agree);
  CHECK(r1.e0 == BigInt(0));

  CountReport r2 = verify(SeifertTriple(Rational(3, 2), Rational(1, 2), Rational(1, 2)));
  CHECK(r2.t_formula == BigInt(8));
  CHECK(*r2.agree);
  CHECK(r2.e0 == BigInt(1));

  CHECK_THROWS_AS(verify(SeifertTriple(Rational(-1, 2), Rational(1, 2), Rational(1, 2))),
                  out_of_scope_error);
}

TEST_CASE("enumeration cap raises the dedicated error") {
  auto cfs = cfs3({-2}, {-2}, {-2});
  CHECK_THROWS_AS(chern_count(cfs, 7), enumeration_cap_error);  // space is 8
  CHECK_THROWS_AS(upper_count(cfs, 7), enumeration_cap_error);
  CHECK_THROWS_AS(verify(SeifertTriple(Rational(1, 2), Rational(1, 2), Rational(1, 2)), 7),
                  enumeration_cap_error);
  CHECK(chern_count(cfs, 8) == 7);  // cap is inclusive
}

TEST_CASE("theorem check at desk scale: denominators to 9") {
  for (const auto& nf : desk_scale_normal_forms(9, 2)) {
    auto cfs = expansions(nf);
    BigInt t = t_formula(cfs);
    CHECK(t == upper_count(cfs));
    CHECK(t == BigInt(chern_count(cfs)));
  }
}

TEST_CASE("count is invariant under permutations and coefficient moves") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> shift(-6, 6);
  std::uniform_int_distribution<long long> intpart(0, 3);
  for (int iter = 0; iter < 120; ++iter) {
    Rational f1 = random_frac(rng, 9), f2 = random_frac(rng, 9), f3 = random_frac(rng, 9);
    SeifertTriple t(f1 + Rational(intpart(rng)), f2, f3);
    BigInt base = verify(t).t_formula;

    std::array<Rational, 3> s = t.slots();
    std::sort(s.begin(), s.end());
    do {
      CHECK(verify(SeifertTriple(s[0], s[1], s[2])).t_formula == base);
    } while (std::next_permutation(s.begin(), s.end()));

    BigInt h(shift(rng)), k(shift(rng));
    CHECK(verify(rolfsen_twist(t, h, k)).t_formula == base);
  }
}

TEST_CASE("count does not depend on which slot absorbs e0") {
  // the same manifold in all three admissible non-canonical normal forms
  std::mt19937_64 rng(78);
  std::uniform_int_distribution<long long> intpart(0, 3);
  for (int iter = 0; iter < 120; ++iter) {
    std::array<Rational, 3> f = {random_frac(rng, 9), random_frac(rng, 9),
                                 random_frac(rng, 9)};
    Rational e(intpart(rng));
    std::vector<BigInt> results;
    for (int slot = 0; slot < 3; ++slot) {
      Rational r1 = f[slot] + e;
      Rational a = f[(slot + 1) % 3], b = f[(slot + 2) % 3];
      if (a < b) std::swap(a, b);
      auto cfs = expansions(NormalForm(r1, a, b));
      results.push_back(t_formula(cfs));
      CHECK(t_formula(cfs) == upper_count(cfs));
      CHECK(t_formula(cfs) == BigInt(chern_count(cfs)));
    }
    CHECK(results[0] == results[1]);
    CHECK(results[0] == results[2]);
  }
}

TEST_CASE("reduction when the first expansion starts at -1") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long long> intpart(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    Rational f1 = random_frac(rng, 12), f2 = random_frac(rng, 12), f3 = random_frac(rng, 12);
    if (f2 < f3) std::swap(f2, f3);
    NormalForm nf(f1 + Rational(intpart(rng)), f2, f3);
    auto cfs = expansions(nf);
    REQUIRE(cfs[0].coeffs[0] == BigInt(-1));
    BigInt expected = abs(cfs[1].coeffs[0] * cfs[2].coeffs[0]);
    for (const auto& cf : cfs)
      for (std::size_t k = 1; k < cf.coeffs.size(); ++k)
        expected *= abs(cf.coeffs[k] + BigInt(1));
    CHECK(t_formula(cfs) == expected);
  }
}
