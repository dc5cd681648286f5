#pragma once

// Counting classes of U(n, F_q): generating series for all, real and strongly
// real classes, and direct enumeration of class data to check them against.

#include <functional>
#include <string>
#include <vector>

#include "strongreal/classdata.hpp"
#include "strongreal/classify.hpp"
#include "strongreal/error.hpp"
#include "strongreal/series.hpp"
#include "strongreal/upoly.hpp"

namespace strongreal {

/// prod_k (1 + z^k) / (1 - q z^k): number of classes K_{n,q}.
inline Series series_K(PrimePower q, unsigned order) {
  Series out = Series::one(order);
  for (unsigned k = 1; k <= order; ++k) {
    Series num = Series::one(order);
    num[k] = 1;
    out *= num;
    out *= Series::geometric(order, q.q(), k);
  }
  return out;
}

namespace detail {

inline void require_odd(PrimePower q) {
  if (!q.is_odd()) fail(ErrorKind::InvalidArgument, "enumeration theorem requires odd q");
}

/// prod_k sum_j c(k, j) z^{kj}.
template <class F>
Series indexed_product(unsigned order, F c) {
  Series out = Series::one(order);
  for (unsigned k = 1; k <= order; ++k) out *= Series::spaced(order, k, [&](unsigned j) { return c(k, j); });
  return out;
}

}  // namespace detail

/// Strongly real classes T_{n,q}: u_i self-conjugate with nonzero constant
/// for odd i, of even degree with constant 1 for even i.
inline Series series_T(PrimePower q, unsigned order) {
  detail::require_odd(q);
  return detail::indexed_product(order, [&](unsigned k, unsigned j) { return count_self_conjugate(j, q, k % 2 == 0); });
}

/// Real classes R_{n,q}: every u_i self-conjugate with nonzero constant.
inline Series series_R(PrimePower q, unsigned order) {
  detail::require_odd(q);
  return detail::indexed_product(order, [&](unsigned, unsigned j) { return count_self_conjugate(j, q, false); });
}

/// prod_k (1 + q z^{2k-1})^2 / (1 - q z^{2k}). Its z^1 coefficient is 2q,
/// whereas T_{1,q} = 2; only printed for comparison, never used for counting.
inline Series product_form_T(PrimePower q, unsigned order) {
  Series out = Series::one(order);
  for (unsigned k = 1; 2 * k - 1 <= order; ++k) {
    Series lin = Series::one(order);
    lin[2 * k - 1] = q.q();
    out *= lin;
    out *= lin;
    if (2 * k <= order) out *= Series::geometric(order, q.q(), 2 * k);
  }
  return out;
}

/// prod_k (1 + q z^k)^2 / (1 - q z^{2k}), same caveat as product_form_T.
inline Series product_form_R(PrimePower q, unsigned order) {
  Series out = Series::one(order);
  for (unsigned k = 1; k <= order; ++k) {
    Series lin = Series::one(order);
    lin[k] = q.q();
    out *= lin;
    out *= lin;
    if (2 * k <= order) out *= Series::geometric(order, q.q(), 2 * k);
  }
  return out;
}

enum class ClassFilter { All, Real, StronglyReal };

inline ClassFilter parse_filter(const std::string& s) {
  if (s == "all") return ClassFilter::All;
  if (s == "real") return ClassFilter::Real;
  if (s == "strongly_real") return ClassFilter::StronglyReal;
  fail(ErrorKind::InvalidArgument, "unknown filter '" + s + "'");
}

inline constexpr std::uint64_t kDefaultClassBound = 10'000'000;

/// Streams every class datum of U(n, F_q) passing the filter, in a fixed
/// order: U-irreducibles are assigned partitions in canonical order. For
/// even q the strongly real filter keeps only classes proven strongly real.
inline void for_each_class_datum(unsigned n, PrimePower q, ClassFilter filter,
                                 const std::function<void(const ClassDatum&)>& fn,
                                 std::uint64_t bound = kDefaultClassBound) {
  if (series_K(q, n)[n] > bound) fail(ErrorKind::BoundExceeded, "class enumeration bound exceeded");
  const std::vector<UIrreducible> irr = n == 0 ? std::vector<UIrreducible>{} : enumerate_u_irreducibles(q, n);
  BlockMap blocks;

  auto emit = [&] {
    ClassDatum d(q, blocks);
    if (filter == ClassFilter::Real && !is_real(d)) return;
    if (filter == ClassFilter::StronglyReal && strongly_real(d).status != Status::StronglyReal) return;
    fn(d);
  };

  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned remaining) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t j = from; j < irr.size() && irr[j].degree() <= remaining; ++j) {
      const unsigned d = irr[j].degree();
      for (unsigned size = 1; size * d <= remaining; ++size) {
        for_each_partition(size, size, [&](const Partition& mu) {
          blocks.emplace(irr[j].poly, mu);
          rec(j + 1, remaining - size * d);
          blocks.erase(irr[j].poly);
        });
      }
    }
  };
  rec(0, n);
}

inline std::vector<ClassDatum> enumerate_class_data(unsigned n, PrimePower q, ClassFilter filter,
                                                    std::uint64_t bound = kDefaultClassBound) {
  std::vector<ClassDatum> out;
  for_each_class_datum(n, q, filter, [&](const ClassDatum& d) { out.push_back(d); }, bound);
  return out;
}

struct CountRow {
  unsigned n = 0;
  BigInt series_K, series_R, series_T;
  std::uint64_t direct_K = 0, direct_R = 0, direct_T = 0;

  bool agrees() const { return series_K == direct_K && series_R == direct_R && series_T == direct_T; }
};

struct CountReport {
  PrimePower q;
  std::vector<CountRow> rows;
  bool agree = true;
  /// Empty when everything agrees; otherwise names the first offending n.
  std::string first_mismatch;
};

/// Compares series coefficients with direct enumeration for n = 0..n_max.
inline CountReport cross_check_counts(unsigned n_max, PrimePower q) {
  detail::require_odd(q);
  const Series k = series_K(q, n_max), r = series_R(q, n_max), t = series_T(q, n_max);
  CountReport rep{q, {}, true, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    CountRow row{n, k[n], r[n], t[n]};
    for_each_class_datum(n, q, ClassFilter::All, [&](const ClassDatum& d) {
      ++row.direct_K;
      if (!is_real(d)) return;
      ++row.direct_R;
      if (strongly_real(d).status == Status::StronglyReal) ++row.direct_T;
    });
    if (rep.agree && !row.agrees()) {
      rep.agree = false;
      rep.first_mismatch = "n=" + std::to_string(n) + ": series K/R/T " + row.series_K.str() + "/" + row.series_R.str() +
                           "/" + row.series_T.str() + " vs direct " + std::to_string(row.direct_K) + "/" +
                           std::to_string(row.direct_R) + "/" + std::to_string(row.direct_T);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace strongreal
