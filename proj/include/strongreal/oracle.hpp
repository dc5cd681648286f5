#pragma once

// Brute-force ground truth for small unitary groups: explicit groups as
// matrix sets, class data read off matrices, and exhaustive searches for
// reversing elements and involutions.

#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strongreal/classdata.hpp"
#include "strongreal/classify.hpp"
#include "strongreal/enumerate.hpp"
#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"
#include "strongreal/matrix.hpp"
#include "strongreal/upoly.hpp"

namespace strongreal {

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultEntryScanBound = 100'000'000;
inline constexpr std::uint64_t kDefaultGroupOrderBound = 2'000'000;
inline constexpr std::uint64_t kRealizationTries = 20'000;

/// Scan budget, overridable through STRONGREAL_BUDGET.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("STRONGREAL_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidArgument, "STRONGREAL_BUDGET must be a positive integer");
  }
  return kDefaultScanBudget;
}

struct HermitianForm {
  std::string name;
  Matrix gram;
};

inline bool is_hermitian(const Matrix& j) { return j.square() && j.star() == j; }

/// N_d: ones on the anti-diagonal.
inline Matrix antidiagonal(const FieldCtx& f, unsigned d) {
  Matrix m(f, d, d);
  for (unsigned i = 0; i < d; ++i) m(i, d - 1 - i) = f.one();
  return m;
}

inline HermitianForm identity_form(PrimePower q, unsigned n) {
  return {"I" + std::to_string(n), Matrix::identity(*field(q, 2), n)};
}

/// Block diagonal form from N_d blocks (d > 0) and identity blocks (-m).
inline HermitianForm block_form(PrimePower q, const std::vector<int>& blocks) {
  const FieldCtx& f = *field(q, 2);
  std::vector<Matrix> parts;
  std::string name;
  for (int b : blocks) {
    require(b != 0, "empty form block");
    if (!name.empty()) name += "+";
    if (b > 0) {
      parts.push_back(antidiagonal(f, static_cast<unsigned>(b)));
      name += "N" + std::to_string(b);
    } else {
      parts.push_back(Matrix::identity(f, static_cast<unsigned>(-b)));
      name += "I" + std::to_string(-b);
    }
  }
  return {name, Matrix::direct_sum(parts)};
}

/// The identity form, N_{2r} + I_m for 2r + m = n, and the N_3 + 1,
/// N_3 + N_2, N_{3r} forms where n allows.
inline std::vector<HermitianForm> standard_forms(unsigned n, PrimePower q) {
  require(n >= 1, "forms need n >= 1");
  std::vector<HermitianForm> out{identity_form(q, n)};
  for (unsigned r = 1; 2 * r <= n; ++r) {
    const unsigned m = n - 2 * r;
    out.push_back(m == 0 ? block_form(q, {static_cast<int>(2 * r)}) : block_form(q, {static_cast<int>(2 * r), -static_cast<int>(m)}));
  }
  if (n == 4) out.push_back(block_form(q, {3, -1}));
  if (n == 5) out.push_back(block_form(q, {3, 2}));
  if (n % 3 == 0) out.push_back(block_form(q, {static_cast<int>(n)}));
  return out;
}

inline bool is_unitary(const Matrix& g, const Matrix& j) { return g.star() * j * g == j; }

/// q^{n(n-1)/2} prod_{i=1}^n (q^i - (-1)^i).
inline BigInt unitary_group_order(unsigned n, PrimePower q) {
  BigInt out = boost::multiprecision::pow(BigInt(q.q()), n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) {
    const BigInt qi = boost::multiprecision::pow(BigInt(q.q()), i);
    out *= i % 2 == 1 ? BigInt(qi + 1) : BigInt(qi - 1);
  }
  return out;
}

namespace detail {

inline Elem hform(const FieldCtx& f, const Matrix& x, const std::vector<Elem>& v, const std::vector<Elem>& w) {
  Elem acc = f.zero();
  for (unsigned i = 0; i < x.rows(); ++i) {
    if (v[i].code == 0) continue;
    Elem row = f.zero();
    for (unsigned j = 0; j < x.cols(); ++j) row = f.add(row, f.mul(x(i, j), w[j]));
    acc = f.add(acc, f.mul(f.conj(v[i]), row));
  }
  return acc;
}

}  // namespace detail

/// A with A* X A = I for a nondegenerate Hermitian X (Hermitian
/// Gram-Schmidt; isotropic pairs are resolved through u + lambda w).
inline Matrix orthonormal_basis(const Matrix& x) {
  require(is_hermitian(x), "form is not Hermitian");
  const FieldCtx& f = x.ctx();
  const unsigned n = x.rows();
  std::vector<std::vector<Elem>> rest;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Elem> e(n, f.zero());
    e[i] = f.one();
    rest.push_back(std::move(e));
  }
  Elem mu = f.one();
  while (f.trace_to_base(mu).code == 0) mu = Elem{mu.code + 1};

  Matrix a(f, n, n);
  for (unsigned col = 0; col < n; ++col) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < rest.size() && !pick; ++i) {
      if (detail::hform(f, x, rest[i], rest[i]).code != 0) pick = i;
    }
    std::vector<Elem> v;
    if (pick) {
      v = rest[*pick];
    } else {
      for (std::size_t i = 0; i < rest.size() && !pick; ++i) {
        for (std::size_t j = 0; j < rest.size(); ++j) {
          const Elem c = detail::hform(f, x, rest[i], rest[j]);
          if (i == j || c.code == 0) continue;
          const Elem lambda = f.div(mu, c);
          v = rest[i];
          for (unsigned k = 0; k < n; ++k) v[k] = f.add(v[k], f.mul(lambda, rest[j][k]));
          pick = i;
          break;
        }
      }
      if (!pick) fail(ErrorKind::InvalidArgument, "form is degenerate");
    }
    const Elem b = f.norm_preimage(detail::hform(f, x, v, v));
    const Elem b_inv = f.inv(b);
    for (auto& c : v) c = f.mul(c, b_inv);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*pick));
    for (auto& w : rest) {
      const Elem c = detail::hform(f, x, v, w);
      if (c.code == 0) continue;
      for (unsigned k = 0; k < n; ++k) w[k] = f.sub(w[k], f.mul(c, v[k]));
    }
    for (unsigned k = 0; k < n; ++k) a(k, col) = v[k];
  }
  return a;
}

/// P with P* J P = X.
inline Matrix congruence(const Matrix& j, const Matrix& x) {
  return orthonormal_basis(j) * linalg::inverse_or_throw(orthonormal_basis(x));
}

/// Elements of U(n, F_q) for one form, kept in discovery order.
class GroupEnumeration {
 public:
  GroupEnumeration(HermitianForm form, std::vector<Matrix> generators)
      : form_(std::move(form)), generators_(std::move(generators)) {}

  const HermitianForm& form() const { return form_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool insert(const Matrix& g) {
    auto [it, fresh] = index_.emplace(g.key(), elements_.size());
    if (fresh) elements_.push_back(g);
    return fresh;
  }

  std::optional<std::size_t> index_of(const Matrix& g) const {
    auto it = index_.find(g.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Matrix& g) const { return index_.count(g.key()) != 0; }

 private:
  HermitianForm form_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class GroupStrategy { Entrywise, Closure };

namespace detail {

/// Every n x n matrix over the context, in odometer order, to fn.
inline void for_each_matrix(const FieldCtx& f, unsigned n, const std::function<void(const Matrix&)>& fn) {
  Matrix m(f, n, n);
  const std::uint64_t size = f.size();
  for (;;) {
    fn(m);
    unsigned pos = 0;
    for (; pos < n * n; ++pos) {
      Elem& e = m(pos / n, pos % n);
      if (e.code + 1 < size) {
        e.code += 1;
        break;
      }
      e.code = 0;
    }
    if (pos == n * n) return;
  }
}

inline void close_under(GroupEnumeration& g, const Matrix& id, std::uint64_t bound) {
  g.insert(id);
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    for (const auto& s : g.generators()) {
      g.insert(g.elements()[i] * s);
      if (g.order() > bound) fail(ErrorKind::BoundExceeded, "group order bound exceeded during closure");
    }
  }
}

/// Greedy generating set of the unitary group of a small form.
inline std::vector<Matrix> small_unitary_generators(const Matrix& form) {
  const FieldCtx& f = form.ctx();
  const Matrix id = Matrix::identity(f, form.rows());
  std::vector<Matrix> all;
  for_each_matrix(f, form.rows(), [&](const Matrix& m) {
    if (is_unitary(m, form)) all.push_back(m);
  });
  std::vector<Matrix> gens;
  GroupEnumeration span({"", form}, {});
  span.insert(id);
  for (const auto& m : all) {
    if (span.contains(m)) continue;
    gens.push_back(m);
    span = GroupEnumeration({"", form}, gens);
    close_under(span, id, all.size());
    if (span.order() == all.size()) break;
  }
  return gens;
}

inline Matrix embed_block(const Matrix& block, unsigned n, unsigned at) {
  Matrix m = Matrix::identity(block.ctx(), n);
  for (unsigned i = 0; i < block.rows(); ++i) {
    for (unsigned j = 0; j < block.cols(); ++j) m(at + i, at + j) = block(i, j);
  }
  return m;
}

}  // namespace detail

/// U(n, F_q) for the given form, either by scanning all matrices or by
/// closing a seed set (unitary 2x2 blocks at adjacent positions, moved to the
/// form by a congruence). The order is checked against the order formula.
inline GroupEnumeration enumerate_group(unsigned n, PrimePower q, const HermitianForm& form, GroupStrategy strategy,
                                        std::uint64_t entry_bound = kDefaultEntryScanBound,
                                        std::uint64_t order_bound = kDefaultGroupOrderBound) {
  require(n >= 1, "group enumeration needs n >= 1");
  require(form.gram.rows() == n && is_hermitian(form.gram) && linalg::invertible(form.gram),
          "form must be an invertible Hermitian n x n matrix");
  const FieldCtx& f = *field(q, 2);
  const BigInt predicted = unitary_group_order(n, q);
  const Matrix id = Matrix::identity(f, n);

  if (strategy == GroupStrategy::Entrywise) {
    auto cands = nt::checked_pow(f.size(), n * n);
    if (!cands || *cands > entry_bound) fail(ErrorKind::BoundExceeded, "entry-scan bound exceeded");
    GroupEnumeration g(form, {});
    detail::for_each_matrix(f, n, [&](const Matrix& m) {
      if (is_unitary(m, form.gram)) g.insert(m);
    });
    if (BigInt(g.order()) != predicted) fail(ErrorKind::Internal, "group order mismatch after entry scan");
    return g;
  }

  if (predicted > order_bound) fail(ErrorKind::BoundExceeded, "group order bound exceeded");
  // Seeds: the unitary group of a k x k identity block, placed at adjacent
  // positions and carried to the target form by a congruence. k = 2 except
  // over GF(4), where orthonormal 2x2 blocks only generate a monomial
  // subgroup and k = 3 is used.
  const unsigned k = std::min(n, q.q() == 2 ? 3U : 2U);
  const Matrix p = congruence(form.gram, id);  // P* J P = I
  const Matrix p_inv = linalg::inverse_or_throw(p);
  std::vector<Matrix> gens;
  for (const auto& b : detail::small_unitary_generators(Matrix::identity(f, k))) {
    for (unsigned at = 0; at + k <= n; ++at) gens.push_back(p * detail::embed_block(b, n, at) * p_inv);
  }
  GroupEnumeration g(form, std::move(gens));
  detail::close_under(g, id, static_cast<std::uint64_t>(predicted));
  if (BigInt(g.order()) != predicted) fail(ErrorKind::Internal, "group order mismatch after closure: seed set inadequate");
  return g;
}

/// Class datum of g: characteristic polynomial factored into U-irreducibles,
/// partitions from the nullities r_j of f(g)^j via
/// m_j = (2 r_j - r_{j-1} - r_{j+1}) / deg f.
inline ClassDatum extract_class_datum(const Matrix& g, PrimePower q) {
  require(g.square(), "class datum of a non-square matrix");
  require(&g.ctx() == field(q, 2).get(), "matrix is not over GF(q^2)");
  if (g.rows() == 0) return ClassDatum(q);
  const MonicPoly chi = linalg::charpoly(g);
  std::vector<std::pair<UIrreducible, unsigned>> factors;
  try {
    factors = factor_into_u_irreducibles(chi, q);
  } catch (const Error& e) {
    fail(ErrorKind::Internal, std::string("characteristic polynomial not U-factorable: ") + e.what());
  }
  BlockMap blocks;
  for (const auto& [u, mult] : factors) {
    const unsigned d = u.degree();
    const Matrix fg = linalg::evaluate(u.poly, g);
    std::vector<unsigned> r{0};
    Matrix pw = fg;
    for (unsigned j = 1; j <= mult + 1; ++j) {
      r.push_back(linalg::nullity(pw));
      pw = pw * fg;
    }
    std::map<unsigned, unsigned> m;
    for (unsigned j = 1; j <= mult; ++j) {
      const int num = 2 * static_cast<int>(r[j]) - static_cast<int>(r[j - 1]) - static_cast<int>(r[j + 1]);
      if (num < 0 || num % static_cast<int>(d) != 0) fail(ErrorKind::Internal, "inconsistent nullity sequence");
      if (num > 0) m[j] = static_cast<unsigned>(num) / d;
    }
    blocks.emplace(u.poly, Partition::from_multiplicities(m));
  }
  return ClassDatum(q, std::move(blocks));
}

/// Block matrix with one companion block of f^k per part k of mu(f).
inline Matrix jordan_style_matrix(const ClassDatum& d) {
  const FieldCtx& f = d.ctx();
  std::vector<Matrix> parts;
  for (const auto& [poly, mu] : d.blocks()) {
    for (unsigned k : mu.parts()) parts.push_back(linalg::companion(f, poly::pow(f, poly, k)));
  }
  if (parts.empty()) return Matrix(f, 0, 0);
  return Matrix::direct_sum(parts);
}

namespace detail {

/// Basis of {Y : A Y B - C Y D = 0} as matrices (all n x n).
inline std::vector<Matrix> solve_sandwich(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& dm) {
  const FieldCtx& f = a.ctx();
  const unsigned n = a.rows();
  Matrix sys(f, n * n, n * n);
  // (A E_xy B)_{ij} = A_ix B_yj.
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          sys(i * n + j, x * n + y) = f.sub(f.mul(a(i, x), b(y, j)), f.mul(c(i, x), dm(y, j)));
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : linalg::kernel(sys)) {
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Matrix in the class d that is unitary for form: an invariant
/// nondegenerate Hermitian form X of the block matrix g0 is found by a seeded
/// scan of the invariant-form space, then g0 is moved to the given form by a
/// congruence.
inline Matrix realize_class(const ClassDatum& d, const HermitianForm& form, std::uint64_t tries = kRealizationTries) {
  const FieldCtx& f = d.ctx();
  const unsigned n = d.n();
  require(form.gram.rows() == n && is_hermitian(form.gram), "form size does not match the class datum");
  if (n == 0) return Matrix(f, 0, 0);
  const Matrix g0 = jordan_style_matrix(d);
  const Matrix id = Matrix::identity(f, n);
  // g0* Y g0 = Y.
  const auto ys = detail::solve_sandwich(g0.star(), g0, id, id);
  std::vector<Matrix> herm;
  const Elem w = f.primitive_element();
  for (const auto& y : ys) {
    herm.push_back(y + y.star());
    const Matrix wy = y.scaled(w);
    herm.push_back(wy + wy.star());
  }
  const std::vector<Elem> base = f.subfield_elements(1);
  std::mt19937_64 rng(0x5eedULL);
  for (std::uint64_t t = 0; t < tries && !herm.empty(); ++t) {
    Matrix x(f, n, n);
    for (const auto& h : herm) {
      const Elem c = base[rng() % base.size()];
      if (c.code != 0) x = x + h.scaled(c);
    }
    if (!linalg::invertible(x)) continue;
    const Matrix p = congruence(form.gram, x);
    const Matrix g = p * g0 * linalg::inverse_or_throw(p);
    if (!is_unitary(g, form.gram)) fail(ErrorKind::Internal, "realized matrix is not unitary");
    if (!(extract_class_datum(g, d.q()) == d)) fail(ErrorKind::Internal, "realized matrix has the wrong class datum");
    return g;
  }
  fail(ErrorKind::NotRealizable, "realization failed: no nondegenerate invariant form found");
}

/// Basis of the reversing space {h : h g = g^{-1} h}.
inline std::vector<Matrix> reversing_space(const Matrix& g) {
  const Matrix id = Matrix::identity(g.ctx(), g.rows());
  return detail::solve_sandwich(id, g, linalg::inverse_or_throw(g), id);
}

struct ReversalScan {
  unsigned dimension = 0;
  std::uint64_t candidates = 0;
  /// Some unitary h reverses g.
  bool real = false;
  /// Some unitary involution reverses g.
  bool strongly_real = false;
  std::vector<Matrix> witnesses;
};

/// Exhausts the reversing space of g (q^{2 dim} candidates). Stops as soon
/// as a reversing involution is found unless collect_witnesses is set.
inline ReversalScan scan_reversing_space(const Matrix& g, const Matrix& j, std::uint64_t budget,
                                         bool collect_witnesses = false) {
  const FieldCtx& f = g.ctx();
  const unsigned n = g.rows();
  const auto basis = reversing_space(g);
  ReversalScan out;
  out.dimension = static_cast<unsigned>(basis.size());
  auto total = nt::checked_pow(f.size(), out.dimension);
  if (!total || *total > budget) {
    fail(ErrorKind::BudgetExhausted, "undecidable at configured scale: reversing space has " + std::to_string(f.size()) +
                                         "^" + std::to_string(out.dimension) + " elements");
  }
  const Matrix id = Matrix::identity(f, n);
  const Matrix j_inv = linalg::inverse_or_throw(j);
  // scaled[k][c] = c * basis[k].
  std::vector<std::vector<Matrix>> scaled(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::uint64_t c = 0; c < f.size(); ++c) scaled[k].push_back(basis[k].scaled(Elem{c}));
  }
  std::vector<Matrix> partial(basis.size() + 1, Matrix(f, n, n));
  bool done = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (done) return;
    if (k == basis.size()) {
      ++out.candidates;
      const Matrix& h = partial[k];
      // Unitary means h^{-1} = J^{-1} h* J.
      const Matrix h_star_j = h.star() * j;
      if (!(j_inv * h_star_j * h == id)) return;
      out.real = true;
      if (h * h == id) {
        out.strongly_real = true;
        if (collect_witnesses) {
          out.witnesses.push_back(h);
        } else {
          done = true;
        }
      }
      return;
    }
    for (std::uint64_t c = 0; c < f.size() && !done; ++c) {
      partial[k + 1] = partial[k] + scaled[k][c];
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Group-based decision when the whole group is available, reversing-space
/// scan otherwise.
inline bool is_strongly_real_oracle(const Matrix& g, const HermitianForm& form, const GroupEnumeration* group = nullptr,
                                    std::uint64_t budget = default_budget()) {
  require(is_unitary(g, form.gram), "element is not unitary for the form");
  if (group != nullptr) {
    const Matrix g_inv = linalg::inverse_or_throw(g);
    const Matrix id = Matrix::identity(g.ctx(), g.rows());
    for (const auto& s : group->elements()) {
      if (s * s == id && s * g * s == g_inv) return true;
    }
    return false;
  }
  return scan_reversing_space(g, form.gram, budget).strongly_real;
}

enum class RepresentativeKind { TwosAndOnes, ThreeOne, ThreeTwo, Threes };

struct Representative {
  Matrix g;
  HermitianForm form;
  /// Explicit reversing involution when the construction provides one.
  std::optional<Matrix> involution;
  ClassDatum expected;
};

namespace detail {

inline Matrix scalar_block(const FieldCtx& f, unsigned r, Elem c) { return Matrix::identity(f, r).scaled(c); }

/// 3x3 block upper unitriangular [[I, aI, bI], [0, I, conj(a) I], [0, 0, I]].
inline Matrix three_block(const FieldCtx& f, unsigned r, Elem a, Elem b) {
  Matrix m = Matrix::identity(f, 3 * r);
  for (unsigned i = 0; i < r; ++i) {
    m(i, r + i) = a;
    m(i, 2 * r + i) = b;
    m(r + i, 2 * r + i) = f.conj(a);
  }
  return m;
}

/// First nonzero a and first b with b + conj(b) = a conj(a).
inline std::pair<Elem, Elem> norm_trace_pair(const FieldCtx& f) {
  const Elem a{1};
  const Elem target = f.norm_to_base(a);
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    if (f.trace_to_base(Elem{c}) == target) return {a, Elem{c}};
  }
  fail(ErrorKind::Internal, "no b with b + conj(b) = a conj(a)");
}

}  // namespace detail

/// Explicit unipotent representatives:
///   TwosAndOnes(r, m): q odd, type (2^r 1^m) under N_{2r} + I_m;
///   ThreeOne: q even, type (3, 1) under N_3 + 1, with a reversing involution;
///   ThreeTwo: q even, type (3, 2) under N_3 + N_2;
///   Threes(r): q even, type (3^r) under N_{3r}.
inline Representative explicit_representative(RepresentativeKind kind, PrimePower q, unsigned r = 1, unsigned m = 0) {
  const FieldCtx& f = *field(q, 2);
  switch (kind) {
    case RepresentativeKind::TwosAndOnes: {
      require(q.is_odd(), "this construction needs odd q");
      require(r >= 1, "need r >= 1");
      Elem a{0};
      for (std::uint64_t c = 1; c < f.size(); ++c) {
        if (f.trace_to_base(Elem{c}).code == 0) {
          a = Elem{c};
          break;
        }
      }
      require(a.code != 0, "no nonzero trace-zero element");
      Matrix g = Matrix::identity(f, 2 * r + m);
      for (unsigned i = 0; i < r; ++i) g(i, r + i) = a;
      HermitianForm form = m == 0 ? block_form(q, {static_cast<int>(2 * r)})
                                  : block_form(q, {static_cast<int>(2 * r), -static_cast<int>(m)});
      std::vector<unsigned> parts(r, 2);
      parts.insert(parts.end(), m, 1);
      return {g, form, std::nullopt, ClassDatum::unipotent(q, Partition(parts))};
    }
    case RepresentativeKind::ThreeOne: {
      require(!q.is_odd(), "this construction needs even q");
      const auto [a, b] = detail::norm_trace_pair(f);
      Matrix g = Matrix::direct_sum({detail::three_block(f, 1, a, b), Matrix::identity(f, 1)});
      Elem beta{0};
      for (std::uint64_t c = 1; c < f.size(); ++c) {
        const Elem x{c};
        if (f.add(f.add(f.mul(x, x), x), f.one()).code == 0) {
          beta = x;
          break;
        }
      }
      require(beta.code != 0, "t^2 + t + 1 has no root");
      const Elem alpha = f.mul(beta, a);
      Matrix s = Matrix::identity(f, 4);
      s(0, 1) = alpha;
      s(0, 3) = alpha;
      s(1, 2) = f.conj(alpha);
      s(3, 2) = f.conj(alpha);
      return {g, block_form(q, {3, -1}), s, ClassDatum::unipotent(q, Partition{3, 1})};
    }
    case RepresentativeKind::ThreeTwo: {
      require(!q.is_odd(), "this construction needs even q");
      const auto [a, b] = detail::norm_trace_pair(f);
      Matrix n2 = Matrix::identity(f, 2);
      n2(0, 1) = f.one();
      Matrix g = Matrix::direct_sum({detail::three_block(f, 1, a, b), n2});
      return {g, block_form(q, {3, 2}), std::nullopt, ClassDatum::unipotent(q, Partition{3, 2})};
    }
    case RepresentativeKind::Threes: {
      require(!q.is_odd(), "this construction needs even q");
      require(r >= 1, "need r >= 1");
      const auto [a, b] = detail::norm_trace_pair(f);
      return {detail::three_block(f, r, a, b), block_form(q, {static_cast<int>(3 * r)}), std::nullopt,
              ClassDatum::unipotent(q, Partition(std::vector<unsigned>(r, 3)))};
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown representative kind");
}

/// Conjugacy classes of an enumerated group: class id per element, found by
/// breadth-first conjugation by the generators.
struct ClassPartition {
  std::vector<std::uint32_t> class_of;
  /// Index of the first element of each class.
  std::vector<std::size_t> representative;
  std::vector<std::size_t> size;
};

inline ClassPartition conjugacy_classes(const GroupEnumeration& g) {
  require(!g.generators().empty() || g.order() == 1, "class computation needs generators");
  std::vector<Matrix> gens = g.generators();
  std::vector<Matrix> gens_inv;
  for (const auto& s : gens) gens_inv.push_back(linalg::inverse_or_throw(s));
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  ClassPartition out;
  out.class_of.assign(g.order(), kNone);
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (out.class_of[start] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(out.representative.size());
    out.representative.push_back(start);
    out.size.push_back(1);
    out.class_of[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const Matrix& x = g.elements()[queue.front()];
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto idx = g.index_of(gens[k] * x * gens_inv[k]);
        if (!idx) fail(ErrorKind::Internal, "group not closed under conjugation");
        if (out.class_of[*idx] == kNone) {
          out.class_of[*idx] = id;
          ++out.size[id];
          queue.push_back(*idx);
        }
      }
    }
  }
  return out;
}

/// Group enumeration by closure with generators, for callers that need
/// conjugacy classes even when an entry scan would be affordable.
inline GroupEnumeration enumerate_group_with_generators(unsigned n, PrimePower q, const HermitianForm& form,
                                                        std::uint64_t order_bound = kDefaultGroupOrderBound) {
  return enumerate_group(n, q, form, GroupStrategy::Closure, kDefaultEntryScanBound, order_bound);
}

struct ClassRecord {
  ClassDatum datum;
  /// Oracle answers; empty when the search ran out of budget.
  std::optional<bool> is_real;
  std::optional<bool> strongly_real;
  Verdict verdict;
  bool agree = true;
  std::uint64_t class_size = 0;
  std::string note;
};

struct OracleReport {
  unsigned n = 0;
  PrimePower q;
  std::string strategy;
  std::uint64_t budget = 0;
  double elapsed_ms = 0;
  std::uint64_t group_order = 0;
  std::vector<ClassRecord> records;
  unsigned disagreements = 0;
  unsigned budget_exhausted = 0;
  /// Full-group path: number of classes equals K_{n,q} and the extracted data
  /// are exactly the enumerated data. Always true on the representative path.
  bool class_count_matches = true;
  bool data_match = true;

  bool ok() const { return disagreements == 0 && class_count_matches && data_match; }
};

namespace detail {

inline void judge(ClassRecord& rec) {
  rec.verdict = strongly_real(rec.datum);
  if (!rec.is_real || !rec.strongly_real) return;
  if (*rec.is_real != is_real(rec.datum)) {
    rec.agree = false;
    rec.note = "reality differs from the class datum";
  }
  if (rec.verdict.status != Status::Unknown && (rec.verdict.status == Status::StronglyReal) != *rec.strongly_real) {
    rec.agree = false;
    rec.note = "classifier contradicts oracle";
  }
  if (*rec.strongly_real && !*rec.is_real) {
    rec.agree = false;
    rec.note = "oracle found a strongly real element that is not real";
  }
}

}  // namespace detail

/// Oracle run over all classes of U(n, F_q): the full group when its order
/// is within bound, otherwise one realized representative per class datum.
inline OracleReport reconcile(unsigned n, PrimePower q, std::uint64_t budget = default_budget(),
                              std::uint64_t order_bound = kDefaultGroupOrderBound) {
  require(n >= 1, "reconcile needs n >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  OracleReport rep;
  rep.n = n;
  rep.q = q;
  rep.budget = budget;
  const HermitianForm form = identity_form(q, n);
  const BigInt predicted = unitary_group_order(n, q);

  if (predicted <= order_bound) {
    rep.strategy = "full_group";
    const GroupEnumeration grp = enumerate_group_with_generators(n, q, form, order_bound);
    rep.group_order = grp.order();
    const ClassPartition cls = conjugacy_classes(grp);
    const Matrix id = Matrix::identity(*field(q, 2), n);
    std::vector<const Matrix*> involutions;
    for (const auto& s : grp.elements()) {
      if (s * s == id) involutions.push_back(&s);
    }
    std::set<std::string> seen;
    std::vector<ClassDatum> data;
    for (std::size_t c = 0; c < cls.representative.size(); ++c) {
      const Matrix& g = grp.elements()[cls.representative[c]];
      const Matrix g_inv = g.star();  // identity form
      ClassRecord rec{extract_class_datum(g, q), std::nullopt, std::nullopt, {}, true, 0, {}};
      rec.class_size = cls.size[c];
      rec.is_real = cls.class_of[*grp.index_of(g_inv)] == c;
      bool strong = false;
      for (const Matrix* s : involutions) {
        if (*s * g * *s == g_inv) {
          strong = true;
          break;
        }
      }
      rec.strongly_real = strong;
      detail::judge(rec);
      data.push_back(rec.datum);
      rep.records.push_back(std::move(rec));
    }
    const Series k = series_K(q, n);
    rep.class_count_matches = BigInt(cls.representative.size()) == k[n];
    auto expected = enumerate_class_data(n, q, ClassFilter::All);
    std::sort(expected.begin(), expected.end());
    std::sort(data.begin(), data.end());
    rep.data_match = expected == data;
  } else {
    rep.strategy = "representatives";
    for (const auto& d : enumerate_class_data(n, q, ClassFilter::All)) {
      ClassRecord rec{d, std::nullopt, std::nullopt, {}, true, 0, {}};
      const Matrix g = realize_class(d, form);
      try {
        const ReversalScan scan = scan_reversing_space(g, form.gram, budget);
        rec.is_real = scan.real;
        rec.strongly_real = scan.strongly_real;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExhausted) throw;
        rec.note = e.what();
        ++rep.budget_exhausted;
      }
      detail::judge(rec);
      rep.records.push_back(std::move(rec));
    }
  }
  for (const auto& r : rep.records) {
    if (!r.agree) ++rep.disagreements;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace strongreal
