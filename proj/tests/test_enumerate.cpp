#include <catch_amalgamated.hpp>

#include <set>

#include "strongreal/enumerate.hpp"

using namespace strongreal;

TEST_CASE("series arithmetic", "[series]") {
  const unsigned n = 12;
  const Series a = Series::geometric(n, 3, 2), b = Series::geometric(n, 5, 3);
  Series c = Series::one(n);
  c[1] = 2;
  c[4] = 7;
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  // (1 - 3 z^2) * sum_j 3^j z^{2j} = 1 + O(z^13).
  Series f = Series::one(n);
  f[2] = -3;
  CHECK(f * a == Series::one(n));
  CHECK(a[4] == 9);
  CHECK(a[5] == 0);
  CHECK(Series::spaced(n, 4, [](unsigned j) { return BigInt(j + 1); })[8] == 3);
}

TEST_CASE("class counts: first coefficient and known totals", "[enumerate]") {
  for (std::uint64_t qv : {2, 3, 4, 5, 7, 9}) {
    const auto q = PrimePower::from_q(qv);
    const Series k = series_K(q, 3);
    CHECK(k[0] == 1);
    CHECK(k[1] == qv + 1);
  }
  CHECK(series_K(PrimePower::from_q(2), 3)[2] == 9);
  CHECK(series_K(PrimePower::from_q(2), 3)[3] == 24);
  CHECK(series_K(PrimePower::from_q(5), 3)[2] == 36);
  CHECK(series_K(PrimePower::from_q(3), 3)[3] == 56);
}

TEST_CASE("strongly real <= real <= all", "[enumerate]") {
  for (std::uint64_t qv : {3, 5, 7, 9}) {
    const auto q = PrimePower::from_q(qv);
    const unsigned n = 10;
    const Series k = series_K(q, n), r = series_R(q, n), t = series_T(q, n);
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(t[i] <= r[i]);
      CHECK(r[i] <= k[i]);
    }
    CHECK(t[1] == 2);
  }
  CHECK(series_T(PrimePower::from_q(3), 2)[2] == 4);
}

TEST_CASE("series match direct enumeration (q odd)", "[enumerate]") {
  for (auto [qv, n_max] : {std::pair{3ULL, 5U}, std::pair{5ULL, 4U}}) {
    const auto rep = cross_check_counts(n_max, PrimePower::from_q(qv));
    INFO(rep.first_mismatch);
    CHECK(rep.agree);
    CHECK(rep.first_mismatch.empty());
    REQUIRE(rep.rows.size() == n_max + 1);
    for (const auto& row : rep.rows) CHECK(row.agrees());
  }
  const auto rep = cross_check_counts(5, PrimePower::from_q(3));
  const std::vector<std::uint64_t> k{1, 4, 16, 56, 188, 600}, r{1, 2, 6, 12, 30, 56}, t{1, 2, 4, 8, 19, 34};
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(rep.rows[n].direct_K == k[n]);
    CHECK(rep.rows[n].direct_R == r[n]);
    CHECK(rep.rows[n].direct_T == t[n]);
  }
}

TEST_CASE("class counts match direct enumeration (q even)", "[enumerate]") {
  for (auto [qv, n_max] : {std::pair{2ULL, 5U}, std::pair{4ULL, 3U}}) {
    const auto q = PrimePower::from_q(qv);
    const Series k = series_K(q, n_max);
    for (unsigned n = 0; n <= n_max; ++n) CHECK(k[n] == enumerate_class_data(n, q, ClassFilter::All).size());
  }
}

TEST_CASE("displayed products differ from the coefficient definitions at z^1", "[enumerate]") {
  for (std::uint64_t qv : {3, 5}) {
    const auto q = PrimePower::from_q(qv);
    CHECK(product_form_T(q, 4)[1] == 2 * qv);
    CHECK(product_form_R(q, 4)[1] == 2 * qv);
    CHECK(series_T(q, 4)[1] == 2);
    CHECK(series_R(q, 4)[1] == 2);
  }
}

TEST_CASE("real and strongly real series need odd q", "[enumerate]") {
  CHECK_THROWS_AS(series_T(PrimePower::from_q(2), 3), Error);
  CHECK_THROWS_AS(series_R(PrimePower::from_q(4), 3), Error);
  CHECK_THROWS_AS(cross_check_counts(2, PrimePower::from_q(2)), Error);
}

TEST_CASE("enumeration is deterministic, duplicate-free and filtered consistently", "[enumerate]") {
  const auto q = PrimePower::from_q(3);
  const auto a = enumerate_class_data(4, q, ClassFilter::All);
  const auto b = enumerate_class_data(4, q, ClassFilter::All);
  CHECK(a == b);
  std::set<ClassDatum> distinct(a.begin(), a.end());
  CHECK(distinct.size() == a.size());
  for (const auto& d : a) CHECK(d.n() == 4);
  const auto real = enumerate_class_data(4, q, ClassFilter::Real);
  const auto strong = enumerate_class_data(4, q, ClassFilter::StronglyReal);
  CHECK(real.size() == 30);
  CHECK(strong.size() == 19);
  for (const auto& d : strong) CHECK(is_real(d));
  CHECK(parse_filter("strongly_real") == ClassFilter::StronglyReal);
  CHECK_THROWS_AS(parse_filter("weakly_real"), Error);
}

TEST_CASE("even q strongly real filter keeps proven classes only", "[enumerate]") {
  const auto q = PrimePower::from_q(2);
  for (const auto& d : enumerate_class_data(5, q, ClassFilter::StronglyReal)) {
    CHECK(strongly_real(d).status == Status::StronglyReal);
  }
}

TEST_CASE("class enumeration bound", "[enumerate]") {
  try {
    enumerate_class_data(6, PrimePower::from_q(3), ClassFilter::All, 100);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}
