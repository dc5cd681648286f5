#pragma once

// Finite fields GF(p^N) with N = e*k, viewed as GF(q^k) for q = p^e.
//
// Elements are stored as their GF(p)-coordinate vector with respect to the
// power basis of the modulus, packed base p into a 64-bit word (digit i is
// the coefficient of x^i). Small fields carry log/exp tables; large ones
// multiply by schoolbook reduction modulo the modulus.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "strongreal/error.hpp"
#include "strongreal/number_theory.hpp"

namespace strongreal {

class PrimePower {
 public:
  PrimePower() = default;

  PrimePower(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    require(p >= 2 && p < (1U << 16U), "prime must lie in [2, 2^16)");
    require(nt::is_prime_trial(p), std::to_string(p) + " is not prime");
    require(e >= 1, "prime power exponent must be positive");
    auto q = nt::checked_pow(p, e);
    require(q.has_value(), "prime power overflows 64 bits");
    q_ = *q;
  }

  /// Recovers (p, e) from q; rejects values that are not prime powers.
  static PrimePower from_q(std::uint64_t q) {
    require(q >= 2, "q must be at least 2");
    auto f = nt::factor(q);
    require(f.size() == 1, std::to_string(q) + " is not a prime power");
    return PrimePower(static_cast<std::uint32_t>(f.begin()->first), f.begin()->second);
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  bool is_odd() const { return p_ != 2; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint32_t p_ = 2;
  std::uint32_t e_ = 1;
  std::uint64_t q_ = 2;
};

/// Field element: packed GF(p) coordinates. Meaningful only together with
/// the FieldCtx that produced it.
struct Elem {
  std::uint64_t code = 0;

  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

namespace gfp {

// Dense polynomials over GF(p), low degree first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

inline Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - c * m[j] % p) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return mod(std::move(r), m, p);
}

inline Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), m, p);
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    exp >>= 1U;
  }
  return result;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree N is irreducible iff x^{p^N} = x mod f and
/// gcd(x^{p^{N/r}} - x, f) = 1 for every prime r dividing N.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob(n + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = mod(x, f, p);
  for (unsigned i = 1; i <= n; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
  if (frob[n] != mod(x, f, p)) return false;
  for (auto r : nt::prime_divisors(n)) {
    Poly g = gcd(f, sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace gfp

class FieldCtx {
 public:
  static constexpr unsigned kDefaultBitCap = 64;
  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20U;
  static constexpr std::uint64_t kAddTableLimit = 256;

  /// Context for GF(q^k) with the lexicographically smallest monic
  /// irreducible modulus over GF(p) (coefficients compared from degree 0 up).
  FieldCtx(PrimePower pp, unsigned k, unsigned bit_cap = kDefaultBitCap) : pp_(pp), k_(k) {
    require(k >= 1, "extension degree must be positive");
    degree_ = pp.e() * k;
    auto size = nt::checked_pow(pp.p(), degree_);
    if (!size || degree_ > 64 || (bit_cap < 64 && *size > (std::uint64_t{1} << bit_cap))) {
      fail(ErrorKind::ExtensionTooLarge,
           "extension too large: GF(" + std::to_string(pp.p()) + "^" + std::to_string(degree_) + ")");
    }
    size_ = *size;
    choose_modulus();
    find_primitive_element();
    build_tables();
  }

  const PrimePower& prime_power() const { return pp_; }
  std::uint32_t p() const { return pp_.p(); }
  std::uint64_t q() const { return pp_.q(); }
  unsigned extension_degree() const { return k_; }
  unsigned degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const gfp::Poly& modulus() const { return modulus_; }
  Elem primitive_element() const { return primitive_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long v) const {
    const long long p = pp_.p();
    return Elem{static_cast<std::uint64_t>(((v % p) + p) % p)};
  }

  std::vector<std::uint32_t> coords(Elem a) const {
    std::vector<std::uint32_t> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
      out[i] = static_cast<std::uint32_t>(a.code % pp_.p());
      a.code /= pp_.p();
    }
    return out;
  }

  Elem from_coords(std::span<const std::uint32_t> c) const {
    require(c.size() == degree_, "coordinate vector length must equal the field degree");
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      require(c[i] < pp_.p(), "coordinate not reduced mod p");
      code = code * pp_.p() + c[i];
    }
    return Elem{code};
  }

  bool is_prime_subfield(Elem a) const { return a.code < pp_.p(); }

  Elem add(Elem a, Elem b) const {
    if (pp_.p() == 2) return Elem{a.code ^ b.code};
    if (!add_table_.empty()) return Elem{add_table_[a.code * size_ + b.code]};
    return digitwise(a, b, false);
  }

  Elem sub(Elem a, Elem b) const {
    if (pp_.p() == 2) return Elem{a.code ^ b.code};
    return digitwise(a, b, true);
  }

  Elem neg(Elem a) const {
    if (pp_.p() == 2) return a;
    return digitwise(Elem{0}, a, true);
  }

  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return Elem{0};
    if (!log_.empty()) return Elem{exp_[log_[a.code] + log_[b.code]]};
    return poly_mul(a, b);
  }

  Elem inv(Elem a) const {
    if (a.code == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
    if (!log_.empty()) return Elem{exp_[(size_ - 1 - log_[a.code]) % (size_ - 1)]};
    return pow(a, size_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    const std::uint64_t order = size_ - 1;
    if (!log_.empty()) return Elem{exp_[nt::mulmod(log_[a.code], e % order, order)]};
    e %= order;
    if (e == 0) return one();
    Elem result = one();
    while (e != 0) {
      if (e & 1U) result = poly_mul(result, a);
      a = poly_mul(a, a);
      e >>= 1U;
    }
    return result;
  }

  /// a^{q^power_of_q}; power 1 is the bar map of GF(q^2).
  Elem frobenius(Elem a, unsigned power_of_q) const {
    if (a.code == 0) return a;
    const std::uint64_t order = size_ - 1;
    std::uint64_t e = 1 % order;
    for (unsigned i = 0; i < power_of_q; ++i) e = nt::mulmod(e, pp_.q() % order, order);
    return pow(a, e == 0 ? order : e);
  }

  Elem conj(Elem a) const { return frobenius(a, 1); }

  /// a^{-q}.
  Elem u_frobenius(Elem a) const {
    if (a.code == 0) fail(ErrorKind::InvalidArgument, "F_U undefined at zero");
    return conj(inv(a));
  }

  /// a * conj(a), an element of GF(q) when this context is GF(q^2).
  Elem norm_to_base(Elem a) const {
    require(k_ == 2, "norm_to_base needs a GF(q^2) context");
    return mul(a, conj(a));
  }

  /// First b (by code) with b * conj(b) = c; zero maps to zero.
  Elem norm_preimage(Elem c) const {
    require(k_ == 2, "norm_preimage needs a GF(q^2) context");
    if (c.code == 0) return zero();
    require(conj(c) == c, "norm preimage target must lie in GF(q)");
    for (std::uint64_t code = 1; code < size_; ++code) {
      if (norm_to_base(Elem{code}) == c) return Elem{code};
    }
    fail(ErrorKind::Internal, "norm map not surjective");
  }

  /// a + conj(a).
  Elem trace_to_base(Elem a) const { return add(a, conj(a)); }

  /// Elements of the subfield GF(q^{sub_k}) in increasing code order.
  std::vector<Elem> subfield_elements(unsigned sub_k) const {
    require(sub_k >= 1 && k_ % sub_k == 0, "subfield degree must divide the extension degree");
    std::vector<Elem> out{zero()};
    const std::uint64_t sub_size = *nt::checked_pow(pp_.q(), sub_k);
    const std::uint64_t step = (size_ - 1) / (sub_size - 1);
    for (std::uint64_t i = 0; i < sub_size - 1; ++i) out.push_back(pow(primitive_, i * step));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string(Elem a) const {
    if (a.code < pp_.p()) return std::to_string(a.code);
    std::string out;
    auto c = coords(a);
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
      if (i >= 1) out += "w";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return "(" + out + ")";
  }

 private:
  Elem digitwise(Elem a, Elem b, bool subtract) const {
    const std::uint64_t p = pp_.p();
    std::uint64_t out = 0, w = 1;
    for (unsigned i = 0; i < degree_; ++i) {
      const std::uint64_t x = a.code % p, y = b.code % p;
      a.code /= p;
      b.code /= p;
      out += (subtract ? (x + p - y) % p : (x + y) % p) * w;
      w *= p;
    }
    return Elem{out};
  }

  Elem poly_mul(Elem a, Elem b) const {
    const std::uint64_t p = pp_.p();
    std::array<std::uint64_t, 128> r{};
    std::array<std::uint64_t, 64> x{}, y{};
    for (unsigned i = 0; i < degree_; ++i) {
      x[i] = a.code % p;
      a.code /= p;
      y[i] = b.code % p;
      b.code /= p;
    }
    for (unsigned i = 0; i < degree_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < degree_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    }
    for (unsigned i = 2 * degree_ - 1; i-- > degree_;) {
      const std::uint64_t c = r[i];
      if (c == 0) continue;
      for (unsigned j = 0; j < degree_; ++j) {
        r[i - degree_ + j] = (r[i - degree_ + j] + (p - c) * modulus_[j]) % p;
      }
      r[i] = 0;
    }
    std::uint64_t code = 0;
    for (unsigned i = degree_; i-- > 0;) code = code * p + r[i];
    return Elem{code};
  }

  void choose_modulus() {
    const std::uint32_t p = pp_.p();
    if (degree_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    // Enumerate monic polynomials with c_0 as the most significant key,
    // starting at c_0 = 1 (c_0 = 0 is divisible by t).
    gfp::Poly f(degree_ + 1, 0);
    f[degree_] = 1;
    for (std::uint64_t idx = size_ / p; idx < size_; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = degree_; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (f[0] == 0) continue;
      if (gfp::is_irreducible(f, p)) {
        modulus_ = f;
        return;
      }
    }
    fail(ErrorKind::Internal, "no irreducible polynomial found");
  }

  void find_primitive_element() {
    const std::uint64_t order = size_ - 1;
    if (order == 1) {
      primitive_ = one();
      return;
    }
    const auto primes = nt::prime_divisors(order);
    for (std::uint64_t code = 2; code < size_; ++code) {
      const Elem g{code};
      bool ok = true;
      for (auto r : primes) {
        if (pow(g, order / r) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        return;
      }
    }
    fail(ErrorKind::Internal, "no primitive element found");
  }

  void build_tables() {
    if (size_ <= kLogTableLimit) {
      const std::uint64_t order = size_ - 1;
      std::vector<std::uint64_t> exp(2 * order), log(size_, 0);
      Elem x = one();
      for (std::uint64_t i = 0; i < order; ++i) {
        exp[i] = x.code;
        log[x.code] = i;
        x = poly_mul(x, primitive_);
      }
      for (std::uint64_t i = order; i < 2 * order; ++i) exp[i] = exp[i - order];
      exp_ = std::move(exp);
      log_ = std::move(log);
    }
    if (size_ <= kAddTableLimit && pp_.p() != 2) {
      std::vector<std::uint64_t> t(size_ * size_);
      for (std::uint64_t a = 0; a < size_; ++a) {
        for (std::uint64_t b = 0; b < size_; ++b) t[a * size_ + b] = digitwise(Elem{a}, Elem{b}, false).code;
      }
      add_table_ = std::move(t);
    }
  }

  PrimePower pp_;
  unsigned k_ = 1;
  unsigned degree_ = 1;
  std::uint64_t size_ = 2;
  gfp::Poly modulus_;
  Elem primitive_{1};
  std::vector<std::uint64_t> exp_, log_, add_table_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Shared, lazily built context for GF(q^k). Contexts are immutable.
inline FieldPtr field(PrimePower pp, unsigned k) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(pp.p(), pp.e(), k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldCtx>(pp, k);
  cache.emplace(key, ctx);
  return ctx;
}

inline FieldPtr make_context(PrimePower pp, unsigned k) { return field(pp, k); }

/// Embedding of a subfield context into a larger one with the same p, fixed
/// by the first root (in subfield scan order) of the small modulus.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
    require(small_->p() == big_->p(), "embedding needs a common characteristic");
    require(big_->degree() % small_->degree() == 0, "subfield degree must divide field degree");
    require(small_->size() <= FieldCtx::kLogTableLimit, "embedding source field too large");
    if (small_.get() == big_.get()) {
      image_.resize(small_->size());
      for (std::uint64_t c = 0; c < small_->size(); ++c) image_[c] = Elem{c};
    } else {
      const Elem root = small_->degree() > 1 ? find_root() : big_->one();
      std::vector<Elem> powers{big_->one()};
      for (unsigned i = 1; i < small_->degree(); ++i) powers.push_back(big_->mul(powers.back(), root));
      image_.resize(small_->size());
      for (std::uint64_t c = 0; c < small_->size(); ++c) {
        auto digits = small_->coords(Elem{c});
        Elem acc = big_->zero();
        for (unsigned i = 0; i < digits.size(); ++i) {
          acc = big_->add(acc, big_->mul(big_->from_int(digits[i]), powers[i]));
        }
        image_[c] = acc;
      }
    }
    for (std::uint64_t c = 0; c < image_.size(); ++c) preimage_.emplace(image_[c].code, Elem{c});
  }

  const FieldCtx& small() const { return *small_; }
  const FieldCtx& big() const { return *big_; }

  Elem up(Elem a) const { return image_.at(a.code); }

  /// Inverse of up(); throws if b is outside the image.
  Elem down(Elem b) const {
    auto it = preimage_.find(b.code);
    if (it == preimage_.end()) fail(ErrorKind::InvalidArgument, "element not in subfield");
    return it->second;
  }

  bool contains(Elem b) const { return preimage_.count(b.code) != 0; }

 private:
  Elem find_root() const {
    const auto& m = small_->modulus();
    const std::uint64_t sub_size = small_->size();
    const std::uint64_t step = (big_->size() - 1) / (sub_size - 1);
    const Elem g = big_->primitive_element();
    for (std::uint64_t i = 0; i < sub_size - 1; ++i) {
      const Elem r = big_->pow(g, i * step);
      Elem acc = big_->zero();
      for (std::size_t j = m.size(); j-- > 0;) acc = big_->add(big_->mul(acc, r), big_->from_int(m[j]));
      if (acc.code == 0) return r;
    }
    fail(ErrorKind::Internal, "subfield modulus has no root in the extension");
  }

  FieldPtr small_, big_;
  std::vector<Elem> image_;
  std::unordered_map<std::uint64_t, Elem> preimage_;
};

inline std::shared_ptr<const Embedding> embedding(const FieldPtr& small, const FieldPtr& big) {
  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::shared_ptr<const Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(small.get(), big.get());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<const Embedding>(small, big);
  cache.emplace(key, e);
  return e;
}

}  // namespace strongreal
