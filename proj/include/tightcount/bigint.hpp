#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcount/errors.hpp"

namespace tightcount {

// Signed arbitrary-precision integer: sign in {-1,0,+1} plus a little-endian
// base-2^32 magnitude with no leading zero limbs (zero <=> empty magnitude).
// The representation is canonical, so operator== can compare members directly.
class BigInt {
 public:
  BigInt() = default;

  template <typename T>
    requires std::signed_integral<T>
  BigInt(T v) {  // NOLINT: implicit by design, ints are BigInts
    auto w = static_cast<long long>(v);
    if (w == 0) return;
    sign_ = w < 0 ? -1 : 1;
    push_u64(w < 0 ? 0ULL - static_cast<std::uint64_t>(w)
                   : static_cast<std::uint64_t>(w));
  }

  template <typename T>
    requires std::unsigned_integral<T>
  BigInt(T v) {  // NOLINT
    auto w = static_cast<unsigned long long>(v);
    if (w == 0) return;
    sign_ = 1;
    push_u64(w);
  }

  // Decimal string, optional leading '-', digits only. Throws on anything else.
  static BigInt from_string(std::string_view s) {
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
      neg = true;
      s.remove_prefix(1);
    }
    if (s.empty()) throw invalid_input_error("empty integer literal");
    BigInt out;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw invalid_input_error("invalid digit in integer literal");
      out.mul_small_add(10u, static_cast<std::uint32_t>(c - '0'));
    }
    if (!out.mag_.empty()) out.sign_ = neg ? -1 : 1;
    return out;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
      std::uint32_t rem = divmod_small_inplace(work, 1000000000u);
      if (work.empty()) {
        digits += std::to_string(rem);  // most significant group, no padding
      } else {
        std::string g = std::to_string(rem);
        digits.append(9 - g.size(), '0');
        digits += g;
      }
    }
    // groups were appended most-significant-last; rebuild in order
    // (divmod peels least-significant group first, so reverse group-wise)
    return (sign_ < 0 ? "-" : "") + reverse_groups(digits);
  }

  int signum() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = mag_u64();
    return sign_ < 0 ? m <= (1ULL << 63) : m <= static_cast<std::uint64_t>(INT64_MAX);
  }

  long long to_int64() const {
    if (!fits_int64()) throw domain_error("value does not fit in 64 bits");
    std::uint64_t m = mag_u64();
    if (sign_ < 0) return m == (1ULL << 63) ? INT64_MIN : -static_cast<long long>(m);
    return static_cast<long long>(m);
  }

  friend BigInt operator-(BigInt a) {
    a.sign_ = -a.sign_;
    return a;
  }

  friend BigInt abs(BigInt a) {
    if (a.sign_ < 0) a.sign_ = 1;
    return a;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
      out.mag_ = add_mag(a.mag_, b.mag_);
      out.sign_ = a.sign_;
      return out;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return out;
    if (c > 0) {
      out.mag_ = sub_mag(a.mag_, b.mag_);
      out.sign_ = a.sign_;
    } else {
      out.mag_ = sub_mag(b.mag_, a.mag_);
      out.sign_ = b.sign_;
    }
    return out;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.mag_ = mul_mag(a.mag_, b.mag_);
    out.sign_ = a.sign_ * b.sign_;
    return out;
  }

  // Truncating division: quotient toward zero, remainder takes the sign of a.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw domain_error("division by zero");
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt{};
    r = BigInt{};
    if (!qm.empty()) {
      q.mag_ = std::move(qm);
      q.sign_ = a.sign_ * b.sign_;
    }
    if (!rm.empty()) {
      r.mag_ = std::move(rm);
      r.sign_ = a.sign_;
    }
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  bool operator==(const BigInt& o) const = default;

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ == 0) return std::strong_ordering::equal;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  friend BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  void push_u64(std::uint64_t m) {
    mag_.push_back(static_cast<std::uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
  }

  std::uint64_t mag_u64() const {
    std::uint64_t m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return m;
  }

  // this = this*mul + add, magnitude only (used by the decimal parser)
  void mul_small_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
  }

  static void trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
      out[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
  }

  // requires cmp_mag(a, b) >= 0
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      out[i] = static_cast<std::uint32_t>(cur);
    }
    trim(out);
    return out;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a[i];
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = ai * b[j] + out[i + j] + carry;
        out[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.size();
      while (carry) {
        std::uint64_t cur = out[k] + carry;
        out[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(out);
    return out;
  }

  // divides in place by a single limb, returns the remainder
  static std::uint32_t divmod_small_inplace(std::vector<std::uint32_t>& a,
                                            std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      a[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(a);
    return static_cast<std::uint32_t>(rem);
  }

  static void shl1_inplace(std::vector<std::uint32_t>& a) {
    std::uint32_t carry = 0;
    for (auto& limb : a) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) a.push_back(carry);
  }

  static void sub_inplace(std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      a[i] = static_cast<std::uint32_t>(cur);
    }
    trim(a);
  }

  // magnitude division: a = q*b + r with 0 <= r < b; b nonempty
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      return;
    }
    if (b.size() == 1) {
      q = a;
      std::uint32_t rem = divmod_small_inplace(q, b[0]);
      if (rem) r.push_back(rem);
      return;
    }
    // bitwise restoring division; fine at the sizes this library sees
    q.assign(a.size(), 0);
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
      shl1_inplace(r);
      if ((a[bit / 32] >> (bit % 32)) & 1u) {
        if (r.empty())
          r.push_back(1);
        else
          r[0] |= 1u;
      }
      if (cmp_mag(r, b) >= 0) {
        sub_inplace(r, b);
        q[bit / 32] |= 1u << (bit % 32);
      }
    }
    trim(q);
  }

  static std::string reverse_groups(const std::string& digits) {
    // digits were appended in 9-char groups, least significant first except
    // that each group's own characters are in order; rebuild by walking the
    // groups from the end
    std::string out;
    out.reserve(digits.size());
    std::size_t full = digits.size() % 9;  // size of the most significant group
    if (full == 0) full = 9;
    // most significant group is the last appended
    std::size_t msg_start = digits.size() - full;
    out.append(digits, msg_start, full);
    for (std::size_t end = msg_start; end >= 9; end -= 9)
      out.append(digits, end - 9, 9);
    return out;
  }
};

}  // namespace tightcount
