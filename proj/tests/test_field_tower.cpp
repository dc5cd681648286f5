#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "strongreal/field_tower.hpp"

using namespace strongreal;

namespace {

const std::vector<std::uint64_t> kSmallQ = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("prime powers are recognised", "[field]") {
  const auto q9 = PrimePower::from_q(9);
  CHECK(q9.p() == 3);
  CHECK(q9.e() == 2);
  CHECK(q9.is_odd());
  CHECK_FALSE(PrimePower::from_q(8).is_odd());
  for (std::uint64_t bad : {0, 1, 6, 12, 100}) CHECK_THROWS_AS(PrimePower::from_q(bad), Error);
}

TEST_CASE("prime field arithmetic matches integers mod p", "[field]") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 13U}) {
    const FieldCtx& f = *field(PrimePower(p, 1), 1);
    REQUIRE(f.size() == p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        CHECK(f.add(Elem{a}, Elem{b}).code == (a + b) % p);
        CHECK(f.mul(Elem{a}, Elem{b}).code == (a * b) % p);
        CHECK(f.sub(Elem{a}, Elem{b}).code == (a + p - b) % p);
      }
    }
  }
}

TEST_CASE("GF(9) multiplication matches t^2 = -1 by hand", "[field]") {
  const FieldCtx& f = *field(PrimePower(3, 1), 2);
  REQUIRE(f.modulus() == gfp::Poly{1, 0, 1});
  for (std::uint64_t a = 0; a < 9; ++a) {
    for (std::uint64_t b = 0; b < 9; ++b) {
      const auto x = f.coords(Elem{a}), y = f.coords(Elem{b});
      const std::uint32_t c0 = (x[0] * y[0] + 2 * x[1] * y[1]) % 3;
      const std::uint32_t c1 = (x[0] * y[1] + x[1] * y[0]) % 3;
      const std::vector<std::uint32_t> want{c0, c1};
      CHECK(f.coords(f.mul(Elem{a}, Elem{b})) == want);
    }
  }
}

TEST_CASE("GF(4) multiplication matches t^2 = t + 1 by hand", "[field]") {
  const FieldCtx& f = *field(PrimePower(2, 1), 2);
  REQUIRE(f.modulus() == gfp::Poly{1, 1, 1});
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      const auto x = f.coords(Elem{a}), y = f.coords(Elem{b});
      const std::uint32_t hi = x[1] * y[1];
      const std::uint32_t c0 = (x[0] * y[0] + hi) % 2;
      const std::uint32_t c1 = (x[0] * y[1] + x[1] * y[0] + hi) % 2;
      const std::vector<std::uint32_t> want{c0, c1};
      CHECK(f.coords(f.mul(Elem{a}, Elem{b})) == want);
    }
  }
}

TEST_CASE("GF(8) modulus is the smallest irreducible cubic", "[field]") {
  CHECK(field(PrimePower(2, 1), 3)->modulus() == gfp::Poly{1, 0, 1, 1});
}

TEST_CASE("field axioms on GF(q^2)", "[field]") {
  std::mt19937_64 rng(7);
  for (auto qv : kSmallQ) {
    const auto q = PrimePower::from_q(qv);
    const FieldCtx& f = *field(q, 2);
    REQUIRE(f.size() == qv * qv);
    for (std::uint64_t a = 1; a < f.size(); ++a) CHECK(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
    for (int t = 0; t < 500; ++t) {
      const Elem a{rng() % f.size()}, b{rng() % f.size()}, c{rng() % f.size()};
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.sub(a, b), b) == a);
    }
    // The primitive element generates the multiplicative group.
    std::set<std::uint64_t> seen;
    Elem x = f.one();
    for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
      seen.insert(x.code);
      x = f.mul(x, f.primitive_element());
    }
    CHECK(seen.size() == f.size() - 1);
  }
}

TEST_CASE("conjugation is an automorphism of order two", "[field]") {
  std::mt19937_64 rng(11);
  for (auto qv : kSmallQ) {
    const FieldCtx& f = *field(PrimePower::from_q(qv), 2);
    bool moves = false;
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      const Elem e{a};
      CHECK(f.conj(f.conj(e)) == e);
      CHECK(f.conj(e) == f.pow(e, qv));
      moves = moves || f.conj(e) != e;
    }
    CHECK(moves);
    for (int t = 0; t < 300; ++t) {
      const Elem a{rng() % f.size()}, b{rng() % f.size()};
      CHECK(f.conj(f.add(a, b)) == f.add(f.conj(a), f.conj(b)));
      CHECK(f.conj(f.mul(a, b)) == f.mul(f.conj(a), f.conj(b)));
    }
    const FieldCtx& base = *field(PrimePower::from_q(qv), 1);
    for (std::uint64_t a = 0; a < base.size(); ++a) CHECK(base.conj(Elem{a}) == Elem{a});
  }
}

TEST_CASE("u_frobenius applied twice is a -> a^{q^2}", "[field]") {
  for (std::uint64_t qv : {2, 3, 4}) {
    const FieldCtx& f = *field(PrimePower::from_q(qv), 4);
    for (std::uint64_t a = 1; a < f.size(); ++a) {
      const Elem e{a};
      CHECK(f.u_frobenius(f.u_frobenius(e)) == f.frobenius(e, 2));
      CHECK(f.u_frobenius(e) == f.inv(f.pow(e, qv)));
    }
    CHECK_THROWS_AS(f.u_frobenius(f.zero()), Error);
  }
}

TEST_CASE("norm lands in GF(q) with fibres of size q + 1", "[field]") {
  for (auto qv : kSmallQ) {
    const FieldCtx& f = *field(PrimePower::from_q(qv), 2);
    std::map<std::uint64_t, unsigned> fibre;
    for (std::uint64_t a = 1; a < f.size(); ++a) {
      const Elem n = f.norm_to_base(Elem{a});
      CHECK(f.conj(n) == n);
      ++fibre[n.code];
    }
    CHECK(fibre.size() == qv - 1);
    for (const auto& [n, count] : fibre) CHECK(count == qv + 1);
    for (Elem c : f.subfield_elements(1)) CHECK(f.norm_to_base(f.norm_preimage(c)) == c);
    const auto base = f.subfield_elements(1);
    CHECK(base.size() == qv);
    for (Elem c : base) CHECK(f.conj(c) == c);
  }
}

TEST_CASE("trace lands in GF(q)", "[field]") {
  const FieldCtx& f = *field(PrimePower(5, 1), 2);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    const Elem t = f.trace_to_base(Elem{a});
    CHECK(f.conj(t) == t);
  }
}

TEST_CASE("rebuilding a context gives the same modulus", "[field]") {
  for (auto qv : kSmallQ) {
    const auto q = PrimePower::from_q(qv);
    for (unsigned k : {1U, 2U, 3U, 4U}) {
      const FieldCtx a(q, k), b(q, k);
      CHECK(a.modulus() == b.modulus());
      CHECK(gfp::is_irreducible(a.modulus(), q.p()));
      CHECK(a.primitive_element() == b.primitive_element());
    }
  }
}

TEST_CASE("coordinates round trip", "[field]") {
  const FieldCtx& f = *field(PrimePower(3, 2), 2);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    const auto c = f.coords(Elem{a});
    CHECK(c.size() == 4);
    CHECK(f.from_coords(c) == Elem{a});
  }
}

TEST_CASE("embedding GF(q^2) into GF(q^4) is a field homomorphism", "[field]") {
  for (std::uint64_t qv : {2, 3, 4, 5}) {
    const auto q = PrimePower::from_q(qv);
    const auto small = field(q, 2), big = field(q, 4);
    const auto emb = embedding(small, big);
    for (std::uint64_t a = 0; a < small->size(); ++a) {
      CHECK(emb->down(emb->up(Elem{a})) == Elem{a});
      for (std::uint64_t b = 0; b < small->size(); b += 3) {
        CHECK(emb->up(small->mul(Elem{a}, Elem{b})) == big->mul(emb->up(Elem{a}), emb->up(Elem{b})));
        CHECK(emb->up(small->add(Elem{a}, Elem{b})) == big->add(emb->up(Elem{a}), emb->up(Elem{b})));
      }
      // The image of GF(q^2) is fixed by x -> x^{q^2}.
      CHECK(big->frobenius(emb->up(Elem{a}), 2) == emb->up(Elem{a}));
    }
    CHECK_THROWS_AS(emb->down(big->primitive_element()), Error);
  }
}

TEST_CASE("oversized extensions are refused", "[field]") {
  CHECK_THROWS_AS(FieldCtx(PrimePower(2, 1), 65), Error);
  CHECK_THROWS_AS(FieldCtx(PrimePower(3, 1), 0), Error);
}
