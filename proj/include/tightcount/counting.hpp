#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tightcount/seifert.hpp"

namespace tightcount {

// Enumerations refuse to touch more assignments than this unless told
// otherwise; the closed formula has no such limit.
inline constexpr std::uint64_t default_enumeration_cap = 10'000'000ULL;

namespace detail {

inline void require_p0_domain(const std::array<BigInt, 3>& a0) {
  if (a0[0] > BigInt(-1) || a0[1] > BigInt(-2) || a0[2] > BigInt(-2))
    throw domain_error("leading coefficients must satisfy a_0^1 <= -1, a_0^2, a_0^3 <= -2");
}

inline void require_normal_expansions(const std::array<NegCF, 3>& cfs) {
  for (const auto& cf : cfs)
    if (!cf.well_formed())
      throw domain_error("expansion is not a well-formed negative continued fraction");
  if (cfs[1].coeffs.front() > BigInt(-2) || cfs[2].coeffs.front() > BigInt(-2))
    throw domain_error("second and third expansions must have a_0 <= -2");
}

inline std::uint64_t checked_count(const BigInt& total, std::uint64_t cap,
                                   const char* what) {
  if (total > BigInt(cap))
    throw enumeration_cap_error(std::string(what) + ": " + total.to_string() +
                                " assignments exceed the cap of " + std::to_string(cap));
  if (total > BigInt(std::int64_t(1) << 62))
    throw enumeration_cap_error(std::string(what) + ": exceeds addressable size");
  return static_cast<std::uint64_t>(total.to_int64());
}

}  // namespace detail

inline std::array<BigInt, 3> leading_coefficients(const std::array<NegCF, 3>& cfs) {
  return {cfs[0].coeffs.front(), cfs[1].coeffs.front(), cfs[2].coeffs.front()};
}

// Basic-slice sign data: p0[i] counts positive slices in the outermost block
// of fiber i, blocks[i][k-1] the positive slices in its k-th inner block.
struct SignConfiguration {
  std::array<long long, 3> p0{};
  std::array<std::vector<long long>, 3> blocks;

  // 0 <= p_0^i <= |a_0^i + 1| and 0 <= p_k^i <= |a_k^i + 2|, with block
  // shapes matching the expansions
  bool satisfies_bounds(const std::array<NegCF, 3>& cfs) const {
    for (int i = 0; i < 3; ++i) {
      const auto& c = cfs[i].coeffs;
      if (c.empty() || blocks[i].size() != c.size() - 1) return false;
      if (p0[i] < 0 || BigInt(p0[i]) > abs(c.front() + BigInt(1))) return false;
      for (std::size_t k = 1; k < c.size(); ++k) {
        long long p = blocks[i][k - 1];
        if (p < 0 || BigInt(p) > abs(c[k] + BigInt(2))) return false;
      }
    }
    return true;
  }
};

// Evaluation data of a first Chern class on the standard homology basis:
// the two handle-class differences rot(K1)-rot(K2), rot(K1)-rot(K3), then
// the chain-knot rotation numbers (fiber 1 outermost-first, then 2, then 3).
struct ChernVector {
  long long d12 = 0;
  long long d13 = 0;
  std::vector<long long> chain_rots;

  auto operator<=>(const ChernVector&) const = default;
};

struct CountReport {
  BigInt t_formula;
  std::optional<BigInt> upper_count;
  std::optional<BigInt> lower_count;
  std::optional<bool> agree;
  BigInt e0;
  std::array<NegCF, 3> expansions;
};

// T = |prod(a_0^i + 1) - prod a_0^i| * prod_{i, k>=1} |a_k^i + 1|
inline BigInt t_formula(const std::array<NegCF, 3>& cfs) {
  detail::require_normal_expansions(cfs);
  BigInt shifted(1), plain(1), tail(1);
  for (const auto& cf : cfs) {
    shifted *= cf.coeffs.front() + BigInt(1);
    plain *= cf.coeffs.front();
    for (std::size_t k = 1; k < cf.coeffs.size(); ++k)
      tail *= abs(cf.coeffs[k] + BigInt(1));
  }
  return abs(shifted - plain) * tail;
}

// All (p_0^1, p_0^2, p_0^3) with 0 <= p_0^i <= |a_0^i + 1|, lexicographic.
inline std::vector<std::array<long long, 3>> enumerate_p0(
    const std::array<BigInt, 3>& a0, std::uint64_t cap = default_enumeration_cap) {
  detail::require_p0_domain(a0);
  BigInt total = abs(a0[0]) * abs(a0[1]) * abs(a0[2]);
  std::uint64_t n = detail::checked_count(total, cap, "sign configurations");
  std::array<long long, 3> m{(-a0[0]).to_int64(), (-a0[1]).to_int64(),
                             (-a0[2]).to_int64()};
  std::vector<std::array<long long, 3>> out;
  out.reserve(n);
  for (long long p1 = 0; p1 < m[0]; ++p1)
    for (long long p2 = 0; p2 < m[1]; ++p2)
      for (long long p3 = 0; p3 < m[2]; ++p3) out.push_back({p1, p2, p3});
  return out;
}

// Equivalence classes of p0 triples under the simultaneous shift
// (p1, p2, p3) ~ (p1 +- 1, p2 +- 1, p3 +- 1), applied only when every slot
// stays in range, counted by explicit union-find. When a_0^1 = -1 the first
// range is a point, no shift applies, and the count is the raw product.
inline std::uint64_t p0_class_count(const std::array<BigInt, 3>& a0,
                                    std::uint64_t cap = default_enumeration_cap) {
  detail::require_p0_domain(a0);
  BigInt total = abs(a0[0]) * abs(a0[1]) * abs(a0[2]);
  std::uint64_t n = detail::checked_count(total, cap, "sign configurations");
  if (n >= (1ULL << 31))
    throw enumeration_cap_error("sign configurations: exceeds addressable size");
  std::uint64_t m1 = static_cast<std::uint64_t>((-a0[0]).to_int64());
  std::uint64_t m2 = static_cast<std::uint64_t>((-a0[1]).to_int64());
  std::uint64_t m3 = static_cast<std::uint64_t>((-a0[2]).to_int64());

  std::vector<std::uint32_t> parent(n), size(n, 1);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  };

  const std::uint64_t stride = m2 * m3 + m3 + 1;  // +1 in every slot
  for (std::uint64_t p1 = 0; p1 + 1 < m1; ++p1)
    for (std::uint64_t p2 = 0; p2 + 1 < m2; ++p2)
      for (std::uint64_t p3 = 0; p3 + 1 < m3; ++p3) {
        std::uint64_t idx = (p1 * m2 + p2) * m3 + p3;
        unite(static_cast<std::uint32_t>(idx),
              static_cast<std::uint32_t>(idx + stride));
      }

  std::uint64_t classes = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    if (find(i) == i) ++classes;
  return classes;
}

// Closed form for the class count: |a_0^2 a_0^3| when a_0^1 = -1, else
// |ab| + |bc| + |ca| - |a| - |b| - |c| + 1. Cross-checks the union-find.
inline BigInt p0_closed_form(const std::array<BigInt, 3>& a0) {
  detail::require_p0_domain(a0);
  if (a0[0] == BigInt(-1)) return abs(a0[1] * a0[2]);
  BigInt a = abs(a0[0]), b = abs(a0[1]), c = abs(a0[2]);
  return a * b + b * c + c * a - a - b - c + BigInt(1);
}

// Upper bound: p0 classes times the free inner-block factor.
inline BigInt upper_count(const std::array<NegCF, 3>& cfs,
                          std::uint64_t cap = default_enumeration_cap) {
  detail::require_normal_expansions(cfs);
  BigInt classes(p0_class_count(leading_coefficients(cfs), cap));
  BigInt tail(1);
  for (const auto& cf : cfs)
    for (std::size_t k = 1; k < cf.coeffs.size(); ++k)
      tail *= abs(cf.coeffs[k] + BigInt(1));
  return classes * tail;
}

// Rotation numbers realizable by a Legendrian representative stabilized to
// framing coefficient a: the symmetric step-2 progression of size |a| for
// the knots running over the 1-handle (maximal framing 0) and |a + 1| for
// chain unknots (maximal framing -1).
inline std::vector<long long> rotation_set(const BigInt& a, bool over_handle,
                                           std::uint64_t cap = default_enumeration_cap) {
  if (a > BigInt(over_handle ? -1 : -2))
    throw domain_error(over_handle ? "rotation set needs a <= -1"
                                   : "rotation set needs a <= -2");
  BigInt size_b = over_handle ? -a : -a - BigInt(1);
  std::uint64_t m = detail::checked_count(size_b, cap, "rotation set");
  std::vector<long long> out;
  out.reserve(m);
  long long lo = -(static_cast<long long>(m) - 1);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(lo + 2 * static_cast<long long>(i));
  return out;
}

namespace detail {

// Mixed-radix layout shared by the Chern enumeration: assignment digits are
// (i1, i2, i3, chain indices); vector coordinates are (d12, d13, chain
// values) with radices (m1+m2-1, m1+m3-1, chain sizes) and weights chosen so
// that ascending keys are ascending vectors lexicographically.
struct ChernSpace {
  std::uint64_t space = 1;
  std::vector<std::uint64_t> assign_radix;
  std::vector<std::uint64_t> coord_radix;
  std::vector<std::uint64_t> coord_weight;
};

inline ChernSpace chern_space(const std::array<NegCF, 3>& cfs, std::uint64_t cap) {
  require_normal_expansions(cfs);
  ChernSpace s;
  BigInt space_b(1);
  std::vector<BigInt> sizes_b;
  for (int i = 0; i < 3; ++i) {
    sizes_b.push_back(-cfs[i].coeffs.front());
    space_b *= sizes_b.back();
  }
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 1; k < cfs[i].coeffs.size(); ++k) {
      sizes_b.push_back(abs(cfs[i].coeffs[k] + BigInt(1)));
      space_b *= sizes_b.back();
    }
  s.space = checked_count(space_b, cap, "rotation assignments");

  for (const auto& v : sizes_b)
    s.assign_radix.push_back(static_cast<std::uint64_t>(v.to_int64()));
  s.coord_radix.push_back(s.assign_radix[0] + s.assign_radix[1] - 1);
  s.coord_radix.push_back(s.assign_radix[0] + s.assign_radix[2] - 1);
  for (std::size_t j = 3; j < s.assign_radix.size(); ++j)
    s.coord_radix.push_back(s.assign_radix[j]);

  BigInt key_space(1);
  for (auto r : s.coord_radix) key_space *= BigInt(r);
  if (key_space > BigInt(std::int64_t(1) << 62))
    throw enumeration_cap_error("rotation assignments: exceeds addressable size");

  s.coord_weight.assign(s.coord_radix.size(), 1);
  for (std::size_t i = s.coord_radix.size() - 1; i-- > 0;)
    s.coord_weight[i] = s.coord_weight[i + 1] * s.coord_radix[i + 1];
  return s;
}

// Sorted distinct keys of every realizable Chern vector.
inline std::vector<std::uint64_t> chern_keys(const ChernSpace& s) {
  std::vector<std::uint64_t> keys;
  keys.reserve(s.space);
  std::vector<std::uint64_t> digit(s.assign_radix.size(), 0);
  const std::uint64_t m2 = s.assign_radix[1], m3 = s.assign_radix[2];
  for (;;) {
    std::uint64_t key = (digit[0] + m2 - 1 - digit[1]) * s.coord_weight[0] +
                        (digit[0] + m3 - 1 - digit[2]) * s.coord_weight[1];
    for (std::size_t j = 3; j < digit.size(); ++j)
      key += digit[j] * s.coord_weight[j - 1];
    keys.push_back(key);

    std::size_t pos = digit.size();
    bool wrapped = true;
    while (pos-- > 0) {
      if (++digit[pos] < s.assign_radix[pos]) {
        wrapped = false;
        break;
      }
      digit[pos] = 0;
    }
    if (wrapped) break;
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

inline ChernVector decode_key(std::uint64_t key, const ChernSpace& s) {
  ChernVector v;
  auto digit_at = [&](std::size_t i) {
    return static_cast<long long>((key / s.coord_weight[i]) % s.coord_radix[i]);
  };
  v.d12 = 2 * digit_at(0) - (static_cast<long long>(s.coord_radix[0]) - 1);
  v.d13 = 2 * digit_at(1) - (static_cast<long long>(s.coord_radix[1]) - 1);
  for (std::size_t i = 2; i < s.coord_radix.size(); ++i)
    v.chain_rots.push_back(2 * digit_at(i) -
                           (static_cast<long long>(s.coord_radix[i]) - 1));
  return v;
}

}  // namespace detail

// Number of distinct Chern vectors over the full rotation-number assignment
// space. Deterministic regardless of traversal order: the key set is sorted
// before deduplication.
inline std::uint64_t chern_count(const std::array<NegCF, 3>& cfs,
                                 std::uint64_t cap = default_enumeration_cap) {
  auto space = detail::chern_space(cfs, cap);
  return detail::chern_keys(space).size();
}

// The distinct Chern vectors themselves, lexicographically ascending.
inline std::vector<ChernVector> chern_vectors(const std::array<NegCF, 3>& cfs,
                                              std::uint64_t cap = default_enumeration_cap) {
  auto space = detail::chern_space(cfs, cap);
  std::vector<ChernVector> out;
  for (std::uint64_t key : detail::chern_keys(space))
    out.push_back(detail::decode_key(key, space));
  return out;
}

// Normalize, expand, and compute the count three ways.
inline CountReport verify(const SeifertTriple& t,
                          std::uint64_t cap = default_enumeration_cap) {
  NormalForm nf = normalize(t);
  CountReport r;
  r.expansions = expansions(nf);
  r.e0 = nf.e0;
  r.t_formula = t_formula(r.expansions);
  r.upper_count = upper_count(r.expansions, cap);
  r.lower_count = BigInt(chern_count(r.expansions, cap));
  r.agree = (r.t_formula == *r.upper_count && r.t_formula == *r.lower_count);
  return r;
}

}  // namespace tightcount
