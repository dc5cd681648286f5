#pragma once

// Monic polynomials over a FieldCtx (in practice GF(q^2)), stored densely,
// low degree first, with the leading 1 kept explicitly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"

namespace strongreal {

class MonicPoly {
 public:
  MonicPoly() : coeffs_{Elem{1}} {}

  explicit MonicPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
    require(!coeffs_.empty() && coeffs_.back() == Elem{1}, "polynomial is not monic");
  }

  /// t - root.
  static MonicPoly linear(const FieldCtx& ctx, Elem root) { return MonicPoly({ctx.neg(root), ctx.one()}); }

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  Elem constant() const { return coeffs_.front(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_one() const { return coeffs_.size() == 1; }

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

  /// Canonical order: degree first, then coefficients from degree 0 up.
  friend bool operator<(const MonicPoly& a, const MonicPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs_ < b.coeffs_;
  }

 private:
  std::vector<Elem> coeffs_;
};

namespace poly {

inline MonicPoly mul(const FieldCtx& ctx, const MonicPoly& a, const MonicPoly& b) {
  std::vector<Elem> r(a.degree() + b.degree() + 1, ctx.zero());
  for (unsigned i = 0; i <= a.degree(); ++i) {
    if (a[i].code == 0) continue;
    for (unsigned j = 0; j <= b.degree(); ++j) r[i + j] = ctx.add(r[i + j], ctx.mul(a[i], b[j]));
  }
  return MonicPoly(std::move(r));
}

inline MonicPoly pow(const FieldCtx& ctx, const MonicPoly& a, unsigned k) {
  MonicPoly out;
  for (unsigned i = 0; i < k; ++i) out = mul(ctx, out, a);
  return out;
}

/// Exact quotient u / f, or nullopt when f does not divide u.
inline std::optional<MonicPoly> divide_exact(const FieldCtx& ctx, const MonicPoly& u, const MonicPoly& f) {
  if (f.degree() > u.degree()) return std::nullopt;
  std::vector<Elem> rem = u.coeffs();
  const unsigned df = f.degree();
  std::vector<Elem> quot(u.degree() - df + 1, ctx.zero());
  for (unsigned i = u.degree() + 1; i-- > df;) {
    const Elem c = rem[i];
    quot[i - df] = c;
    if (c.code == 0) continue;
    for (unsigned j = 0; j <= df; ++j) rem[i - df + j] = ctx.sub(rem[i - df + j], ctx.mul(c, f[j]));
  }
  for (unsigned i = 0; i < df; ++i) {
    if (rem[i].code != 0) return std::nullopt;
  }
  return MonicPoly(std::move(quot));
}

/// Monic polynomial whose roots are the inverses of the roots of f:
/// t^d f(1/t) / f(0).
inline MonicPoly tilde(const FieldCtx& ctx, const MonicPoly& f) {
  if (f.constant().code == 0) fail(ErrorKind::InvalidArgument, "tilde undefined: zero constant term");
  const Elem c_inv = ctx.inv(f.constant());
  std::vector<Elem> r(f.degree() + 1);
  for (unsigned i = 0; i <= f.degree(); ++i) r[i] = ctx.mul(f[f.degree() - i], c_inv);
  return MonicPoly(std::move(r));
}

/// (-1)^d f(-t): the monic polynomial with negated roots.
inline MonicPoly negate_roots(const FieldCtx& ctx, const MonicPoly& f) {
  std::vector<Elem> r(f.coeffs());
  for (unsigned i = 0; i <= f.degree(); ++i) {
    if ((f.degree() - i) % 2 == 1) r[i] = ctx.neg(r[i]);
  }
  return MonicPoly(std::move(r));
}

inline Elem eval(const FieldCtx& ctx, const MonicPoly& f, Elem x) {
  Elem acc = ctx.zero();
  for (unsigned i = f.degree() + 1; i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
  return acc;
}

inline MonicPoly from_roots(const FieldCtx& ctx, const std::vector<Elem>& roots) {
  MonicPoly out;
  for (Elem r : roots) out = mul(ctx, out, MonicPoly::linear(ctx, r));
  return out;
}

/// Coefficient-wise image of f under a field embedding's inverse.
inline MonicPoly descend(const Embedding& emb, const MonicPoly& f) {
  std::vector<Elem> r;
  r.reserve(f.degree() + 1);
  for (Elem c : f.coeffs()) r.push_back(emb.down(c));
  return MonicPoly(std::move(r));
}

inline MonicPoly ascend(const Embedding& emb, const MonicPoly& f) {
  std::vector<Elem> r;
  r.reserve(f.degree() + 1);
  for (Elem c : f.coeffs()) r.push_back(emb.up(c));
  return MonicPoly(std::move(r));
}

inline std::string to_string(const FieldCtx& ctx, const MonicPoly& f) {
  if (f.is_one()) return "1";
  std::string out;
  for (unsigned i = f.degree() + 1; i-- > 0;) {
    const Elem c = f[i];
    if (c.code == 0) continue;
    std::string term;
    if (i == 0) {
      term = ctx.to_string(c);
    } else {
      if (c != ctx.one()) term = ctx.to_string(c);
      term += "t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace poly
}  // namespace strongreal
