#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "strongreal/upoly.hpp"

using namespace strongreal;

namespace {

// Orbits of x -> -q x on Z/(q^{2d} - 1) of exact size d: exponent form of
// the root orbits of degree-d U-irreducibles.
std::uint64_t orbit_count(std::uint64_t q, unsigned d) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < 2 * d; ++i) n *= q;
  --n;
  const std::uint64_t step = n - q % n;
  std::vector<bool> seen(n, false);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    unsigned size = 0;
    std::uint64_t y = x;
    do {
      seen[y] = true;
      ++size;
      y = static_cast<std::uint64_t>((static_cast<unsigned __int128>(y) * step) % n);
    } while (y != x);
    if (size == d) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("U-irreducible counts match orbit counting", "[upoly]") {
  for (std::uint64_t qv : {2, 3, 4, 5}) {
    for (unsigned d = 1; d <= 4; ++d) {
      if (qv == 4 && d == 4) continue;
      INFO("q = " << qv << ", d = " << d);
      CHECK(u_irreducibles_of_degree(PrimePower::from_q(qv), d).size() == orbit_count(qv, d));
    }
  }
}

TEST_CASE("U-irreducible counts for q = 3", "[upoly]") {
  const auto q = PrimePower::from_q(3);
  const std::vector<std::size_t> want{4, 2, 8, 18};
  for (unsigned d = 1; d <= 4; ++d) CHECK(u_irreducibles_of_degree(q, d).size() == want[d - 1]);
}

TEST_CASE("root orbits fill the subgroup of order q^d - (-1)^d", "[upoly]") {
  for (std::uint64_t qv : {2, 3, 5}) {
    const auto q = PrimePower::from_q(qv);
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t covered = 0;
      for (unsigned e = 1; e <= d; ++e) {
        if (d % e == 0) covered += e * u_irreducibles_of_degree(q, e).size();
      }
      CHECK(covered == u_orbit_group_order(q, d));
    }
  }
}

TEST_CASE("each U-irreducible has a single orbit as its roots", "[upoly]") {
  for (std::uint64_t qv : {2, 3, 4}) {
    const auto q = PrimePower::from_q(qv);
    const auto small = field(q, 2);
    for (unsigned d = 1; d <= 3; ++d) {
      const auto host = field(q, 2 * d);
      const auto emb = embedding(small, host);
      for (const auto& u : u_irreducibles_of_degree(q, d)) {
        CHECK(u.host_degree == d);
        const MonicPoly up = poly::ascend(*emb, u.poly);
        const Elem a = host->pow(host->primitive_element(), u.root_exponent);
        std::set<std::uint64_t> roots;
        Elem x = a;
        for (unsigned i = 0; i < d; ++i) {
          CHECK(poly::eval(*host, up, x).code == 0);
          roots.insert(x.code);
          x = host->u_frobenius(x);
        }
        CHECK(x == a);
        CHECK(roots.size() == d);
      }
    }
  }
}

TEST_CASE("U-irreducibles come in canonical order", "[upoly]") {
  const auto list = enumerate_u_irreducibles(PrimePower::from_q(3), 4);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].poly < list[i].poly);
}

TEST_CASE("tilde is a degree-preserving involution fixing t - 1 and t + 1", "[upoly]") {
  for (std::uint64_t qv : {2, 3, 4, 5}) {
    const auto q = PrimePower::from_q(qv);
    const FieldCtx& f = *field(q, 2);
    for (const auto& u : enumerate_u_irreducibles(q, 3)) {
      const UIrreducible& t = tilde(u, q);
      CHECK(t.degree() == u.degree());
      CHECK(tilde(t, q).poly == u.poly);
    }
    const MonicPoly minus = MonicPoly::linear(f, f.one());
    const MonicPoly plus = MonicPoly::linear(f, f.neg(f.one()));
    CHECK(tilde(minus, q) == minus);
    CHECK(tilde(plus, q) == plus);
    CHECK(u_table(q).contains(minus));
    CHECK(u_table(q).contains(plus));
  }
}

TEST_CASE("self-conjugate counts agree with enumeration", "[upoly]") {
  for (std::uint64_t qv : {2, 3, 4, 5, 7}) {
    const auto q = PrimePower::from_q(qv);
    for (unsigned d = 0; d <= 5; ++d) {
      for (bool one : {false, true}) {
        INFO("q = " << qv << ", d = " << d << ", constant one only = " << one);
        const auto list = enumerate_self_conjugate(d, q, one);
        CHECK(count_self_conjugate(d, q, one) == list.size());
        for (const auto& u : list) {
          CHECK(has_base_field_coefficients(u, q));
          CHECK(is_self_conjugate(u, q));
        }
      }
    }
  }
}

TEST_CASE("factorization inverts multiplication", "[upoly]") {
  std::mt19937_64 rng(3);
  for (std::uint64_t qv : {2, 3, 5}) {
    const auto q = PrimePower::from_q(qv);
    const auto irr = enumerate_u_irreducibles(q, 3);
    for (int trial = 0; trial < 60; ++trial) {
      std::map<std::size_t, unsigned> pick;
      const unsigned k = 1 + rng() % 3;
      for (unsigned i = 0; i < k; ++i) ++pick[rng() % irr.size()];
      std::vector<std::pair<UIrreducible, unsigned>> factors;
      for (const auto& [i, m] : pick) factors.emplace_back(irr[i], m);
      const auto back = factor_into_u_irreducibles(multiply_out(factors, q), q);
      REQUIRE(back.size() == factors.size());
      for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].first.poly == factors[i].first.poly);
        CHECK(back[i].second == factors[i].second);
      }
    }
  }
}

TEST_CASE("non-U-factorable input is refused", "[upoly]") {
  const auto q = PrimePower::from_q(3);
  const FieldCtx& f = *field(q, 2);
  CHECK_THROWS_AS(factor_into_u_irreducibles(MonicPoly::linear(f, f.zero()), q), Error);
  // t - a with a^{q+1} != 1 is only half of a U-irreducible.
  Elem a = f.zero();
  for (std::uint64_t c = 1; c < f.size(); ++c) {
    if (f.norm_to_base(Elem{c}) != f.one()) {
      a = Elem{c};
      break;
    }
  }
  try {
    factor_into_u_irreducibles(MonicPoly::linear(f, a), q);
    FAIL("expected NotUFactorable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUFactorable);
  }
}

TEST_CASE("table lookup rejects polynomials that are not U-irreducible", "[upoly]") {
  const auto q = PrimePower::from_q(3);
  const FieldCtx& f = *field(q, 2);
  const auto& table = u_table(q);
  const MonicPoly sq = poly::pow(f, MonicPoly::linear(f, f.one()), 2);
  CHECK_FALSE(table.contains(sq));
  CHECK_FALSE(table.contains(MonicPoly()));
  for (const auto& u : table.of_degree(2)) CHECK(table.find(u.poly)->poly == u.poly);
}
