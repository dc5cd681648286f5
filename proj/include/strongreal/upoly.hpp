#pragma once

// U-irreducible polynomials over GF(q^2): the polynomials whose root set is a
// single orbit of a -> a^{-q}. Degree-d orbits live in the cyclic subgroup of
// order q^d - (-1)^d of GF(q^{2d})^x; they are enumerated there in exponent
// space, so only orbit representatives are ever materialized as field
// elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"
#include "strongreal/poly.hpp"

namespace strongreal {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultCandidateBound = 10'000'000;

struct UIrreducible {
  MonicPoly poly;
  /// Degree over GF(q^2) of the field the representative root was taken from.
  unsigned host_degree = 1;
  /// The representative root is g^root_exponent, g the host's primitive element.
  std::uint64_t root_exponent = 0;

  unsigned degree() const { return poly.degree(); }

  friend bool operator==(const UIrreducible& a, const UIrreducible& b) { return a.poly == b.poly; }
  friend bool operator<(const UIrreducible& a, const UIrreducible& b) { return a.poly < b.poly; }
};

/// Order of the subgroup of GF(q^{2d})^x holding all roots of U-irreducibles
/// whose degree divides d.
inline std::uint64_t u_orbit_group_order(PrimePower q, unsigned d) {
  auto qd = nt::checked_pow(q.q(), d);
  if (!qd || *qd == ~std::uint64_t{0}) fail(ErrorKind::BoundExceeded, "enumeration bound too large");
  return d % 2 == 1 ? *qd + 1 : *qd - 1;
}

/// Every U-irreducible of exactly degree d, canonically ordered.
inline std::vector<UIrreducible> u_irreducibles_of_degree(PrimePower q, unsigned d,
                                                          std::uint64_t candidate_bound = kDefaultCandidateBound) {
  require(d >= 1, "degree must be positive");
  const std::uint64_t m = u_orbit_group_order(q, d);
  if (m > candidate_bound) fail(ErrorKind::BoundExceeded, "enumeration bound too large");
  FieldPtr host;
  try {
    host = field(q, 2 * d);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ExtensionTooLarge) fail(ErrorKind::BoundExceeded, "enumeration bound too large");
    throw;
  }
  const FieldPtr small = field(q, 2);
  const auto emb = embedding(small, host);
  const std::uint64_t cofactor = (host->size() - 1) / m;
  const Elem h = host->pow(host->primitive_element(), cofactor);
  const std::uint64_t step = (m - q.q() % m) % m;  // -q mod m

  std::vector<UIrreducible> out;
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t j = 0; j < m; ++j) {
    orbit.clear();
    std::uint64_t e = j;
    bool minimal = true;
    do {
      orbit.push_back(e);
      e = nt::mulmod(e, step, m);
      if (e < j) {
        minimal = false;
        break;
      }
    } while (e != j && orbit.size() <= d);
    if (!minimal || orbit.size() != d || e != j) continue;
    std::vector<Elem> roots;
    roots.reserve(d);
    for (auto x : orbit) roots.push_back(host->pow(h, x));
    const MonicPoly big_poly = poly::from_roots(*host, roots);
    out.push_back(UIrreducible{poly::descend(*emb, big_poly), d, j * cofactor});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Lazily extended, thread-safe table of U-irreducibles for one q.
class UIrreducibleTable {
 public:
  explicit UIrreducibleTable(PrimePower q) : q_(q), ctx_(field(q, 2)) {}

  const PrimePower& q() const { return q_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }

  const std::vector<UIrreducible>& of_degree(unsigned d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_degree_.find(d);
    if (it == by_degree_.end()) it = by_degree_.emplace(d, u_irreducibles_of_degree(q_, d)).first;
    return it->second;
  }

  /// Record for f, or nullptr when f is not U-irreducible.
  const UIrreducible* find(const MonicPoly& f) const {
    if (f.degree() == 0) return nullptr;
    const auto& list = of_degree(f.degree());
    auto it = std::lower_bound(list.begin(), list.end(), f,
                               [](const UIrreducible& u, const MonicPoly& g) { return u.poly < g; });
    if (it == list.end() || !(it->poly == f)) return nullptr;
    return &*it;
  }

  bool contains(const MonicPoly& f) const { return find(f) != nullptr; }

 private:
  PrimePower q_;
  FieldPtr ctx_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::vector<UIrreducible>> by_degree_;
};

inline const UIrreducibleTable& u_table(PrimePower q) {
  static std::mutex mu;
  static std::map<PrimePower, std::unique_ptr<UIrreducibleTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[q];
  if (!slot) slot = std::make_unique<UIrreducibleTable>(q);
  return *slot;
}

/// All U-irreducibles of degree <= max_total_degree, by degree then
/// coefficients.
inline std::vector<UIrreducible> enumerate_u_irreducibles(PrimePower q, unsigned max_total_degree) {
  require(max_total_degree >= 1, "degree bound must be positive");
  std::vector<UIrreducible> out;
  const auto& table = u_table(q);
  for (unsigned d = 1; d <= max_total_degree; ++d) {
    const auto& list = table.of_degree(d);
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

inline const UIrreducible& tilde(const UIrreducible& f, PrimePower q) {
  const auto& table = u_table(q);
  const UIrreducible* g = table.find(poly::tilde(table.ctx(), f.poly));
  if (g == nullptr) fail(ErrorKind::Internal, "tilde of a U-irreducible is not U-irreducible");
  return *g;
}

inline MonicPoly tilde(const MonicPoly& u, PrimePower q) { return poly::tilde(*field(q, 2), u); }

/// Unique factorization of u into U-irreducibles; refuses anything that is
/// not a product of them.
inline std::vector<std::pair<UIrreducible, unsigned>> factor_into_u_irreducibles(const MonicPoly& u, PrimePower q) {
  if (u.constant().code == 0) fail(ErrorKind::NotUFactorable, "zero constant term");
  const auto& table = u_table(q);
  const FieldCtx& ctx = table.ctx();
  std::vector<std::pair<UIrreducible, unsigned>> out;
  MonicPoly rest = u;
  for (unsigned d = 1; d <= rest.degree(); ++d) {
    for (const auto& f : table.of_degree(d)) {
      if (rest.degree() < d) break;
      unsigned mult = 0;
      while (auto quot = poly::divide_exact(ctx, rest, f.poly)) {
        rest = std::move(*quot);
        ++mult;
      }
      if (mult != 0) out.emplace_back(f, mult);
    }
  }
  if (!rest.is_one()) fail(ErrorKind::NotUFactorable, "not U-factorable: " + poly::to_string(ctx, u));
  return out;
}

inline MonicPoly multiply_out(const std::vector<std::pair<UIrreducible, unsigned>>& factors, PrimePower q) {
  const FieldCtx& ctx = *field(q, 2);
  MonicPoly out;
  for (const auto& [f, m] : factors) out = poly::mul(ctx, out, poly::pow(ctx, f.poly, m));
  return out;
}

inline bool has_base_field_coefficients(const MonicPoly& u, PrimePower q) {
  const FieldCtx& ctx = *field(q, 2);
  return std::all_of(u.coeffs().begin(), u.coeffs().end(), [&](Elem c) { return ctx.conj(c) == c; });
}

/// tilde(u) == u for u with coefficients in GF(q).
inline bool is_self_conjugate(const MonicPoly& u, PrimePower q) {
  if (!has_base_field_coefficients(u, q)) fail(ErrorKind::InvalidArgument, "not over base field");
  if (u.constant().code == 0) fail(ErrorKind::InvalidArgument, "tilde undefined: zero constant term");
  return tilde(u, q) == u;
}

/// Number of self-conjugate monic polynomials of degree deg over GF(q) with
/// nonzero constant (or, with constant_one_only, of even degree and constant
/// term 1). For even q the only admissible constant is 1 and palindromic
/// polynomials are counted, giving q^{floor(deg/2)}.
inline BigInt count_self_conjugate(unsigned deg, PrimePower q, bool constant_one_only) {
  auto qpow = [&](unsigned k) -> BigInt { return boost::multiprecision::pow(BigInt(q.q()), k); };
  if (deg == 0) return 1;
  if (constant_one_only) {
    if (deg % 2 == 1) return 0;
    return qpow(deg / 2);
  }
  if (!q.is_odd()) return qpow(deg / 2);
  return qpow(deg / 2) + qpow((deg - 1) / 2);
}

/// Brute-force list backing count_self_conjugate.
inline std::vector<MonicPoly> enumerate_self_conjugate(unsigned deg, PrimePower q, bool constant_one_only,
                                                       std::uint64_t bound = kDefaultCandidateBound) {
  if (deg == 0) return {MonicPoly()};
  if (constant_one_only && deg % 2 == 1) return {};
  auto total = nt::checked_pow(q.q(), deg);
  if (!total || *total > bound) fail(ErrorKind::BoundExceeded, "self-conjugate enumeration bound exceeded");
  const FieldCtx& ctx = *field(q, 2);
  const std::vector<Elem> base = ctx.subfield_elements(1);
  std::vector<MonicPoly> out;
  std::vector<Elem> c(deg + 1, ctx.zero());
  c[deg] = ctx.one();
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = deg; i-- > 0;) {
      c[i] = base[rest % q.q()];
      rest /= q.q();
    }
    if (c[0].code == 0) continue;
    if (constant_one_only && c[0] != ctx.one()) continue;
    MonicPoly u(c);
    if (poly::tilde(ctx, u) == u) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace strongreal
