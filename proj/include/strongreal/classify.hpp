#pragma once

// Strong reality of U(n, F_q) classes from their class data. Complete for odd
// q; for even q only the known sufficient and obstructing conditions are
// applied and everything else is reported as Unknown.

#include <optional>
#include <string>

#include "strongreal/classdata.hpp"
#include "strongreal/error.hpp"
#include "strongreal/partition.hpp"

namespace strongreal {

enum class Status { StronglyReal, NotStronglyReal, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::StronglyReal: return "StronglyReal";
    case Status::NotStronglyReal: return "NotStronglyReal";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

struct Witness {
  /// Block the witness lives at ("t - 1", "t + 1", or a polynomial).
  std::string block;
  unsigned part = 0;
  unsigned multiplicity = 0;
  std::string note;
};

struct Verdict {
  Status status = Status::Unknown;
  std::string rule;
  std::optional<Witness> witness;
};

namespace detail {

/// Smallest even part with odd multiplicity, or 0.
inline unsigned odd_even_part(const Partition& mu) {
  for (const auto& [part, m] : mu.multiplicities()) {
    if (part % 2 == 0 && m % 2 == 1) return part;
  }
  return 0;
}

inline std::optional<Witness> reality_witness(const ClassDatum& d) {
  for (const auto& [f, mu] : d.blocks()) {
    if (d.at(poly::tilde(d.ctx(), f)) != mu) {
      return Witness{poly::to_string(d.ctx(), f), 0, 0, "mu(f) differs from mu(tilde f)"};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Odd q: real, and even parts at t-1 and t+1 all have even multiplicity.
inline bool orthogonal_embeddable(const ClassDatum& d) {
  if (!d.q().is_odd()) fail(ErrorKind::InvalidArgument, "orthogonal embedding criterion needs odd q");
  if (!is_real(d)) return false;
  return detail::odd_even_part(d.at(t_minus_one(d.q()))) == 0 && detail::odd_even_part(d.at(t_plus_one(d.q()))) == 0;
}

/// Even q and even n: real, and parts 2m+1 (m >= 1) at t-1 have even
/// multiplicity.
inline bool symplectic_embeddable_even_q(const ClassDatum& d) {
  if (d.q().is_odd()) fail(ErrorKind::InvalidArgument, "symplectic embedding criterion needs even q");
  require(d.n() % 2 == 0, "symplectic embedding criterion needs even n");
  if (!is_real(d)) return false;
  for (const auto& [part, m] : d.at(t_minus_one(d.q())).multiplicities()) {
    if (part % 2 == 1 && part >= 3 && m % 2 == 1) return false;
  }
  return true;
}

/// Even q, partition at t-1: the sufficient condition for strong reality
/// that applies, if any. Both variants are checked independently of the
/// negative conditions below.
inline std::optional<Verdict> strong_condition_even(const Partition& mu) {
  const auto mult = mu.multiplicities();
  auto odd_parts_even_mult_from = [&](unsigned lo) {
    for (const auto& [part, m] : mult) {
      if (part % 2 == 1 && part >= lo && m % 2 == 1) return false;
    }
    return true;
  };
  if (odd_parts_even_mult_from(3)) return Verdict{Status::StronglyReal, "Real2", Witness{"t - 1", 0, 0, "odd parts >= 3 have even multiplicity"}};
  if (mu.multiplicity(1) > 0 && odd_parts_even_mult_from(5)) {
    return Verdict{Status::StronglyReal, "Real2",
                   Witness{"t - 1", 1, mu.multiplicity(1), "part 1 present, odd parts >= 5 have even multiplicity"}};
  }
  return std::nullopt;
}

/// Even q, partition at t-1: the sufficient condition for failure of strong
/// reality that applies, if any.
inline std::optional<Verdict> not_strong_condition_even(const Partition& mu) {
  unsigned odd_count = 0, smallest_odd = 0, largest_even = 0;
  for (const auto& [part, m] : mu.multiplicities()) {
    if (part % 2 == 1) {
      odd_count += m;
      if (smallest_odd == 0) smallest_odd = part;
    } else {
      largest_even = part;
    }
  }
  if (odd_count % 2 == 1 && smallest_odd >= largest_even + 3) {
    return Verdict{Status::NotStronglyReal, "notstrong2-1",
                   Witness{"t - 1", smallest_odd, mu.multiplicity(smallest_odd),
                           "odd number of odd parts, smallest odd part exceeds largest even part by >= 3"}};
  }
  if (odd_count == 1 && smallest_odd >= 3 && largest_even + 1 == smallest_odd && mu.multiplicity(largest_even) == 1) {
    return Verdict{Status::NotStronglyReal, "notstrong2-2",
                   Witness{"t - 1", smallest_odd, 1, "single odd part k with largest even part k - 1 of multiplicity one"}};
  }
  return std::nullopt;
}

/// Unipotent verdict for even q from the partition at t-1.
inline Verdict strongly_real_unipotent_even(const Partition& mu) {
  if (auto v = strong_condition_even(mu)) return *v;
  if (auto v = not_strong_condition_even(mu)) return *v;
  return {Status::Unknown, "", std::nullopt};
}

inline Verdict strongly_real(const ClassDatum& d) {
  if (auto w = detail::reality_witness(d)) return {Status::NotStronglyReal, "reality", w};
  const PrimePower q = d.q();
  if (!q.is_odd()) return strongly_real_unipotent_even(d.at(t_minus_one(q)));

  const unsigned at_minus = detail::odd_even_part(d.at(t_minus_one(q)));
  const unsigned at_plus = detail::odd_even_part(d.at(t_plus_one(q)));
  if (at_minus == 0 && at_plus == 0) return {Status::StronglyReal, "MainThm", std::nullopt};
  const bool use_minus = at_minus != 0 && (at_plus == 0 || at_minus <= at_plus);
  const unsigned part = use_minus ? at_minus : at_plus;
  const Partition mu = d.at(use_minus ? t_minus_one(q) : t_plus_one(q));
  return {Status::NotStronglyReal, "MainThm",
          Witness{use_minus ? "t - 1" : "t + 1", part, mu.multiplicity(part), "even part with odd multiplicity"}};
}

/// Subtracts 2 from every part >= l and drops the zeros.
inline Partition reduce_sharp(const Partition& mu, unsigned l) {
  require(l >= 2 && l <= mu.largest(), "reduce_sharp needs 2 <= l <= largest part");
  require(mu.multiplicity(l) > 0, "reduce_sharp needs l to be a part");
  std::vector<unsigned> parts;
  for (unsigned p : mu.parts()) {
    const unsigned r = p >= l ? p - 2 : p;
    if (r > 0) parts.push_back(r);
  }
  return Partition(std::move(parts));
}

/// Odd q. Negative direction only: an even part of odd multiplicity at t-1
/// or t+1 rules out strong reality; otherwise nothing is claimed.
inline Verdict sp_strongly_real(const SymplecticClassDatum& d) {
  const unsigned at_plus = detail::odd_even_part(d.signed_plus().base());
  const unsigned at_minus = detail::odd_even_part(d.signed_minus().base());
  if (at_plus != 0) {
    return {Status::NotStronglyReal, "SpCor",
            Witness{"t - 1", at_plus, d.signed_plus().base().multiplicity(at_plus), "even part with odd multiplicity"}};
  }
  if (at_minus != 0) {
    return {Status::NotStronglyReal, "SpCor",
            Witness{"t + 1", at_minus, d.signed_minus().base().multiplicity(at_minus), "even part with odd multiplicity"}};
  }
  return {Status::Unknown, "", std::nullopt};
}

}  // namespace strongreal
