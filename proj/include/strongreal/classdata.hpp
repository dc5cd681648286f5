#pragma once

// Class labels for U(n, F_q): partition-valued functions on U-irreducible
// polynomials, plus the signed variant labelling Sp(2n, F_q) classes for odd q.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"
#include "strongreal/partition.hpp"
#include "strongreal/poly.hpp"
#include "strongreal/upoly.hpp"

namespace strongreal {

inline MonicPoly t_minus_one(PrimePower q) { return MonicPoly::linear(*field(q, 2), Elem{1}); }

inline MonicPoly t_plus_one(PrimePower q) {
  const auto& ctx = *field(q, 2);
  return MonicPoly::linear(ctx, ctx.neg(ctx.one()));
}

using BlockMap = std::map<MonicPoly, Partition>;

class ClassDatum {
 public:
  explicit ClassDatum(PrimePower q) : q_(q) {}

  /// Validates that every key is U-irreducible and every partition nonempty.
  ClassDatum(PrimePower q, BlockMap blocks) : q_(q), blocks_(std::move(blocks)) {
    const auto& table = u_table(q);
    for (const auto& [f, mu] : blocks_) {
      require(!mu.empty(), "class datum blocks must carry nonempty partitions");
      if (!table.contains(f)) {
        fail(ErrorKind::InvalidArgument, "not U-irreducible: " + poly::to_string(table.ctx(), f));
      }
      n_ += f.degree() * mu.size();
    }
  }

  static ClassDatum unipotent(PrimePower q, const Partition& mu) {
    BlockMap b;
    if (!mu.empty()) b.emplace(t_minus_one(q), mu);
    return ClassDatum(q, std::move(b));
  }

  static ClassDatum negative_unipotent(PrimePower q, const Partition& mu) {
    BlockMap b;
    if (!mu.empty()) b.emplace(t_plus_one(q), mu);
    return ClassDatum(q, std::move(b));
  }

  const PrimePower& q() const { return q_; }
  unsigned n() const { return n_; }
  const BlockMap& blocks() const { return blocks_; }
  const FieldCtx& ctx() const { return *field(q_, 2); }

  /// mu(f), empty outside the support.
  Partition at(const MonicPoly& f) const {
    auto it = blocks_.find(f);
    return it == blocks_.end() ? Partition{} : it->second;
  }

  bool is_unipotent() const { return blocks_.empty() || (blocks_.size() == 1 && blocks_.count(t_minus_one(q_)) == 1); }

  friend bool operator==(const ClassDatum& a, const ClassDatum& b) {
    return a.q_ == b.q_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const ClassDatum& a, const ClassDatum& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.blocks_ < b.blocks_;
  }

  std::string to_string() const {
    if (blocks_.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& [f, mu] : blocks_) {
      if (!first) out += ", ";
      first = false;
      out += poly::to_string(ctx(), f) + ": " + mu.to_string();
    }
    return out + "}";
  }

 private:
  PrimePower q_;
  BlockMap blocks_;
  unsigned n_ = 0;
};

/// Groups elementary divisors f^k by their base polynomial.
inline ClassDatum make_class_datum(PrimePower q, const std::vector<std::pair<MonicPoly, unsigned>>& divisors) {
  const auto& table = u_table(q);
  std::map<MonicPoly, std::vector<unsigned>> parts;
  for (const auto& [f, k] : divisors) {
    require(k >= 1, "elementary divisor exponent must be positive");
    if (f.degree() == 0 || f.constant().code == 0) {
      fail(ErrorKind::InvalidArgument, "elementary divisor base must have positive degree and nonzero constant");
    }
    auto factors = factor_into_u_irreducibles(f, q);
    if (factors.size() != 1 || factors.front().second != 1) {
      fail(ErrorKind::InvalidArgument, "not U-irreducible: " + poly::to_string(table.ctx(), f));
    }
    parts[f].push_back(k);
  }
  BlockMap blocks;
  for (auto& [f, ks] : parts) blocks.emplace(f, Partition(std::move(ks)));
  return ClassDatum(q, std::move(blocks));
}

/// mu(f) == mu(tilde f) for every f.
inline bool is_real(const ClassDatum& d) {
  for (const auto& [f, mu] : d.blocks()) {
    if (d.at(poly::tilde(d.ctx(), f)) != mu) return false;
  }
  return true;
}

/// Splits a real datum into its t-1 block, its t+1 block and one piece per
/// tilde-orbit {f, tilde f} of the remaining support.
inline std::vector<ClassDatum> star_decompose(const ClassDatum& d) {
  require(is_real(d), "star decomposition needs a real class datum");
  const PrimePower q = d.q();
  const MonicPoly minus = t_minus_one(q), plus = t_plus_one(q);
  std::vector<ClassDatum> out;
  if (auto it = d.blocks().find(minus); it != d.blocks().end()) out.push_back(ClassDatum(q, BlockMap{*it}));
  if (!(plus == minus)) {
    if (auto it = d.blocks().find(plus); it != d.blocks().end()) out.push_back(ClassDatum(q, BlockMap{*it}));
  }
  for (const auto& [f, mu] : d.blocks()) {
    if (f == minus || f == plus) continue;
    const MonicPoly g = poly::tilde(d.ctx(), f);
    if (g < f) continue;  // emitted with its partner
    BlockMap piece{{f, mu}};
    piece.emplace(g, mu);
    out.push_back(ClassDatum(q, std::move(piece)));
  }
  return out;
}

/// Datum of -g given the datum of g (odd q only).
inline ClassDatum negate(const ClassDatum& d) {
  if (!d.q().is_odd()) fail(ErrorKind::InvalidArgument, "negation trivial in characteristic 2");
  BlockMap out;
  for (const auto& [f, mu] : d.blocks()) out.emplace(poly::negate_roots(d.ctx(), f), mu);
  return ClassDatum(d.q(), std::move(out));
}

/// (u_1, ..., u_K) with u_i = prod_f f^{m_i(mu(f))}, K the largest part.
inline std::vector<MonicPoly> u_sequence(const ClassDatum& d) {
  unsigned k = 0;
  for (const auto& [f, mu] : d.blocks()) k = std::max(k, mu.largest());
  std::vector<MonicPoly> out(k);
  for (const auto& [f, mu] : d.blocks()) {
    for (const auto& [part, mult] : mu.multiplicities()) {
      out[part - 1] = poly::mul(d.ctx(), out[part - 1], poly::pow(d.ctx(), f, mult));
    }
  }
  return out;
}

inline ClassDatum from_u_sequence(PrimePower q, const std::vector<MonicPoly>& us) {
  std::map<MonicPoly, std::map<unsigned, unsigned>> mult;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (us[i].is_one()) continue;
    for (const auto& [f, m] : factor_into_u_irreducibles(us[i], q)) mult[f.poly][static_cast<unsigned>(i + 1)] += m;
  }
  BlockMap blocks;
  for (const auto& [f, m] : mult) blocks.emplace(f, Partition::from_multiplicities(m));
  return ClassDatum(q, std::move(blocks));
}

/// Partition whose odd parts have even multiplicity, with a sign attached to
/// each even part value that occurs.
class SignedPartition {
 public:
  SignedPartition() = default;

  SignedPartition(Partition base, std::map<unsigned, int> signs) : base_(std::move(base)), signs_(std::move(signs)) {
    const auto mult = base_.multiplicities();
    for (const auto& [part, m] : mult) {
      if (part % 2 == 1) {
        require(m % 2 == 0, "odd parts of a symplectic signed partition need even multiplicity");
      } else {
        require(signs_.count(part) == 1, "every even part value needs a sign");
      }
    }
    for (const auto& [part, s] : signs_) {
      require(part % 2 == 0 && mult.count(part) == 1, "signs are only attached to even parts that occur");
      require(s == 1 || s == -1, "signs must be +1 or -1");
    }
  }

  const Partition& base() const { return base_; }
  const std::map<unsigned, int>& signs() const { return signs_; }

  /// Number of distinct even part values.
  unsigned even_values() const { return static_cast<unsigned>(signs_.size()); }

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;

  std::string to_string() const {
    std::string out = "(";
    auto mult = base_.multiplicities();
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      if (!first) out += " ";
      first = false;
      out += std::to_string(it->first);
      if (auto s = signs_.find(it->first); s != signs_.end()) out += s->second > 0 ? "+" : "-";
      if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out + ")";
  }

 private:
  Partition base_;
  std::map<unsigned, int> signs_;
};

/// Parses "4-,4-,3,3,2+": a sign after every even part, none after odd parts.
inline SignedPartition parse_signed_partition(const std::string& text) {
  std::vector<unsigned> parts;
  std::map<unsigned, int> signs;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int sign = 0;
    if (token.back() == '+' || token.back() == '-') {
      sign = token.back() == '+' ? 1 : -1;
      token.pop_back();
    }
    const Partition one = parse_partition(token);
    require(one.length() == 1, "bad signed part");
    const unsigned part = one.largest();
    if (part % 2 == 0) {
      require(sign != 0, "even part " + std::to_string(part) + " needs a sign");
      auto [it, fresh] = signs.emplace(part, sign);
      require(fresh || it->second == sign, "conflicting signs for part " + std::to_string(part));
    } else {
      require(sign == 0, "odd parts carry no sign");
    }
    parts.push_back(part);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      token += c;
    }
  }
  flush();
  return SignedPartition(Partition(std::move(parts)), std::move(signs));
}

/// All symplectic signed partitions of n, every sign pattern included.
inline std::vector<SignedPartition> signed_partitions_of(unsigned n) {
  std::vector<SignedPartition> out;
  for (const auto& p : partitions_of(n)) {
    const auto mult = p.multiplicities();
    bool ok = true;
    std::vector<unsigned> evens;
    for (const auto& [part, m] : mult) {
      if (part % 2 == 1 && m % 2 == 1) ok = false;
      if (part % 2 == 0) evens.push_back(part);
    }
    if (!ok) continue;
    for (std::uint32_t mask = 0; mask < (1U << evens.size()); ++mask) {
      std::map<unsigned, int> signs;
      for (std::size_t i = 0; i < evens.size(); ++i) signs[evens[i]] = (mask >> i) & 1U ? -1 : 1;
      out.emplace_back(p, std::move(signs));
    }
  }
  return out;
}

class SymplecticClassDatum {
 public:
  SymplecticClassDatum(PrimePower q, BlockMap blocks, SignedPartition plus, SignedPartition minus)
      : q_(q), blocks_(std::move(blocks)), plus_(std::move(plus)), minus_(std::move(minus)) {
    require(q.is_odd(), "symplectic class data are defined for odd q");
    const auto& table = u_table(q);
    const MonicPoly tm = t_minus_one(q), tp = t_plus_one(q);
    n2_ = plus_.base().size() + minus_.base().size();
    for (const auto& [f, mu] : blocks_) {
      require(!(f == tm) && !(f == tp), "t-1 and t+1 blocks are carried by the signed partitions");
      require(!mu.empty(), "class datum blocks must carry nonempty partitions");
      require(table.contains(f), "not U-irreducible: " + poly::to_string(table.ctx(), f));
      auto g = blocks_.find(poly::tilde(table.ctx(), f));
      require(g != blocks_.end() && g->second == mu, "symplectic data need mu(f) = mu(tilde f)");
      n2_ += f.degree() * mu.size();
    }
    require(n2_ % 2 == 0, "symplectic class data have even total degree");
  }

  const PrimePower& q() const { return q_; }
  unsigned n2() const { return n2_; }
  const BlockMap& blocks() const { return blocks_; }
  /// Signed partition at t-1.
  const SignedPartition& signed_plus() const { return plus_; }
  /// Signed partition at t+1.
  const SignedPartition& signed_minus() const { return minus_; }

  /// The U(2n, F_q) class containing this Sp(2n, F_q) class.
  ClassDatum unitary_class() const {
    BlockMap b = blocks_;
    if (!plus_.base().empty()) b.emplace(t_minus_one(q_), plus_.base());
    if (!minus_.base().empty()) b.emplace(t_plus_one(q_), minus_.base());
    return ClassDatum(q_, std::move(b));
  }

 private:
  PrimePower q_;
  BlockMap blocks_;
  SignedPartition plus_, minus_;
  unsigned n2_ = 0;
};

/// Number of Sp(2n, F_q) classes in the U(2n, F_q) class underlying d:
/// 2^{k1 + k2}, k1 and k2 the numbers of even part values at t-1 and t+1.
inline std::uint64_t sp_splitting_count(const SymplecticClassDatum& d) {
  return std::uint64_t{1} << (d.signed_plus().even_values() + d.signed_minus().even_values());
}

}  // namespace strongreal
