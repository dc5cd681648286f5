#include <catch_amalgamated.hpp>

#include "strongreal/serialize.hpp"

using namespace strongreal;
using nlohmann::json;

TEST_CASE("class datum JSON round trip", "[json]") {
  for (std::uint64_t qv : {3, 4, 9}) {
    const auto q = PrimePower::from_q(qv);
    for (unsigned n = 0; n <= 3; ++n) {
      for (const auto& d : enumerate_class_data(n, q, ClassFilter::All)) {
        const json j = io::to_json(d);
        CHECK(io::datum_from_json(json::parse(j.dump())) == d);
      }
    }
  }
}

TEST_CASE("class datum JSON layout", "[json]") {
  const auto d = ClassDatum::unipotent(PrimePower::from_q(3), Partition{2, 1, 1});
  const json j = io::to_json(d);
  CHECK(j.dump() == R"({"blocks":[{"partition":[2,1,1],"poly":[[2,0],[1,0]]}],"n":4,"q":{"e":1,"p":3}})");
  json bad = j;
  bad["n"] = 5;
  CHECK_THROWS_AS(io::datum_from_json(bad), Error);
  json not_u = j;
  not_u["blocks"][0]["poly"] = json::parse("[[0,0],[1,0]]");
  CHECK_THROWS_AS(io::datum_from_json(not_u), Error);
}

TEST_CASE("symplectic datum JSON round trip", "[json]") {
  const auto q = PrimePower::from_q(5);
  const SymplecticClassDatum d(q, {}, parse_signed_partition("4-,4-,3,3,2+"), parse_signed_partition("2-,1,1"));
  const auto back = io::sp_datum_from_json(io::to_json(d));
  CHECK(back.signed_plus() == d.signed_plus());
  CHECK(back.signed_minus() == d.signed_minus());
  CHECK(back.n2() == d.n2());
}

TEST_CASE("verdict JSON", "[json]") {
  const auto v = strongly_real(ClassDatum::unipotent(PrimePower::from_q(3), Partition{2, 1, 1}));
  const json j = io::to_json(v);
  CHECK(j.at("status") == "NotStronglyReal");
  CHECK(j.at("rule") == "MainThm");
  CHECK(j.at("witness").at("part") == 2);
  CHECK(j.at("witness").at("multiplicity") == 1);
  const json u = io::to_json(strongly_real(ClassDatum::unipotent(PrimePower::from_q(2), Partition{5, 3})));
  CHECK(u.at("status") == "Unknown");
  CHECK(u.at("witness").is_null());
}

TEST_CASE("series and count tables", "[json]") {
  const auto q = PrimePower::from_q(3);
  CHECK(io::to_json(series_T(q, 4)).dump() == "[1,2,4,8,19]");
  const json c = io::to_json(cross_check_counts(3, q));
  CHECK(c.at("agree") == true);
  CHECK(c.at("rows").at(1).at("K") == 4);
  CHECK(c.at("rows").at(1).at("R") == 2);
  CHECK(c.at("rows").at(1).at("T") == 2);
  CHECK_FALSE(c.contains("first_mismatch"));
  CHECK(io::big(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("oracle report omits timing unless asked", "[json]") {
  const auto rep = reconcile(1, PrimePower::from_q(3));
  CHECK_FALSE(io::to_json(rep, false).contains("elapsed_ms"));
  CHECK(io::to_json(rep, true).contains("elapsed_ms"));
  CHECK(io::to_json(rep, false).at("disagreements") == 0);
}

TEST_CASE("matrix and form JSON", "[json]") {
  const auto q = PrimePower::from_q(2);
  const json f = io::to_json(block_form(q, {3, -1}));
  CHECK(f.at("name") == "N3+I1");
  CHECK(f.at("gram").size() == 4);
  CHECK(f.at("gram").at(0).at(2) == json::parse("[1,0]"));
  const json ctx = io::context_json(*field(q, 2));
  CHECK(ctx.at("modulus_coords") == json::parse("[1,1,1]"));
}
