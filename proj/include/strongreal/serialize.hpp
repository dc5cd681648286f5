#pragma once

// JSON forms of the library values (nlohmann::json). Field elements are
// written as GF(p) coordinate arrays, polynomials as arrays of those, low
// degree first.

#include <string>

#include "json.hpp"

#include "strongreal/classdata.hpp"
#include "strongreal/classify.hpp"
#include "strongreal/enumerate.hpp"
#include "strongreal/oracle.hpp"

namespace strongreal::io {

using nlohmann::json;

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
inline json big(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  return v.str();
}

inline json to_json(const PrimePower& q) { return {{"p", q.p()}, {"e", q.e()}}; }

inline PrimePower prime_power_from_json(const json& j) {
  require(j.is_object() && j.contains("p") && j.contains("e"), "q must be an object {\"p\":..,\"e\":..}");
  return PrimePower(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>());
}

inline json to_json(const FieldCtx& f, Elem e) { return f.coords(e); }

inline Elem elem_from_json(const FieldCtx& f, const json& j) {
  require(j.is_array(), "field element must be a coordinate array");
  return f.from_coords(j.get<std::vector<std::uint32_t>>());
}

inline json to_json(const FieldCtx& f, const MonicPoly& p) {
  json out = json::array();
  for (Elem c : p.coeffs()) out.push_back(to_json(f, c));
  return out;
}

inline MonicPoly poly_from_json(const FieldCtx& f, const json& j) {
  require(j.is_array() && !j.empty(), "polynomial must be a nonempty coefficient array");
  std::vector<Elem> c;
  for (const auto& x : j) c.push_back(elem_from_json(f, x));
  return MonicPoly(std::move(c));
}

inline json context_json(const FieldCtx& f) {
  return {{"p", f.p()}, {"e", f.prime_power().e()}, {"k", f.extension_degree()}, {"modulus_coords", f.modulus()}};
}

inline json to_json(const Partition& mu) { return mu.parts(); }

inline Partition partition_from_json(const json& j) {
  require(j.is_array(), "partition must be an array");
  return Partition(j.get<std::vector<unsigned>>());
}

inline json to_json(const ClassDatum& d) {
  json blocks = json::array();
  for (const auto& [f, mu] : d.blocks()) blocks.push_back({{"poly", to_json(d.ctx(), f)}, {"partition", to_json(mu)}});
  return {{"q", to_json(d.q())}, {"n", d.n()}, {"blocks", blocks}};
}

inline ClassDatum datum_from_json(const json& j) {
  require(j.is_object() && j.contains("q") && j.contains("blocks"), "class datum needs \"q\" and \"blocks\"");
  const PrimePower q = prime_power_from_json(j.at("q"));
  const FieldCtx& f = *field(q, 2);
  BlockMap blocks;
  for (const auto& b : j.at("blocks")) {
    MonicPoly p = poly_from_json(f, b.at("poly"));
    require(blocks.count(p) == 0, "repeated block polynomial");
    blocks.emplace(std::move(p), partition_from_json(b.at("partition")));
  }
  ClassDatum d(q, std::move(blocks));
  if (j.contains("n")) require(j.at("n").get<unsigned>() == d.n(), "degree mismatch: n does not match the blocks");
  return d;
}

inline json to_json(const SymplecticClassDatum& d) {
  const FieldCtx& f = *field(d.q(), 2);
  json blocks = json::array();
  auto signed_block = [&](const MonicPoly& p, const SignedPartition& sp) {
    if (sp.base().empty()) return;
    json signs = json::object();
    for (const auto& [part, s] : sp.signs()) signs[std::to_string(part)] = s > 0 ? "+" : "-";
    blocks.push_back({{"poly", to_json(f, p)}, {"partition", to_json(sp.base())}, {"signs", signs}});
  };
  signed_block(t_minus_one(d.q()), d.signed_plus());
  signed_block(t_plus_one(d.q()), d.signed_minus());
  for (const auto& [p, mu] : d.blocks()) blocks.push_back({{"poly", to_json(f, p)}, {"partition", to_json(mu)}});
  return {{"q", to_json(d.q())}, {"n", d.n2()}, {"blocks", blocks}};
}

inline SignedPartition signed_from_json(const Partition& base, const json& signs) {
  std::map<unsigned, int> s;
  if (!signs.is_null()) {
    require(signs.is_object(), "signs must be an object");
    for (const auto& [k, v] : signs.items()) {
      const std::string sign = v.get<std::string>();
      require(sign == "+" || sign == "-", "sign must be \"+\" or \"-\"");
      s[static_cast<unsigned>(std::stoul(k))] = sign == "+" ? 1 : -1;
    }
  }
  return SignedPartition(base, std::move(s));
}

inline SymplecticClassDatum sp_datum_from_json(const json& j) {
  require(j.is_object() && j.contains("q") && j.contains("blocks"), "class datum needs \"q\" and \"blocks\"");
  const PrimePower q = prime_power_from_json(j.at("q"));
  const FieldCtx& f = *field(q, 2);
  const MonicPoly tm = t_minus_one(q), tp = t_plus_one(q);
  BlockMap blocks;
  SignedPartition plus, minus;
  for (const auto& b : j.at("blocks")) {
    const MonicPoly p = poly_from_json(f, b.at("poly"));
    const Partition mu = partition_from_json(b.at("partition"));
    const json signs = b.contains("signs") ? b.at("signs") : json();
    if (p == tm) {
      plus = signed_from_json(mu, signs);
    } else if (p == tp) {
      minus = signed_from_json(mu, signs);
    } else {
      blocks.emplace(p, mu);
    }
  }
  SymplecticClassDatum d(q, std::move(blocks), std::move(plus), std::move(minus));
  if (j.contains("n")) require(j.at("n").get<unsigned>() == d.n2(), "degree mismatch: n does not match the blocks");
  return d;
}

inline json to_json(const Verdict& v) {
  json w = nullptr;
  if (v.witness) {
    w = {{"block", v.witness->block}, {"note", v.witness->note}};
    if (v.witness->part != 0) {
      w["part"] = v.witness->part;
      w["multiplicity"] = v.witness->multiplicity;
    }
  }
  return {{"status", to_string(v.status)}, {"rule", v.rule}, {"witness", w}};
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.cols(); ++j) row.push_back(to_json(m.ctx(), m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const HermitianForm& form) { return {{"name", form.name}, {"gram", to_json(form.gram)}}; }

inline json to_json(const Series& s) {
  json out = json::array();
  for (const auto& c : s.coeffs()) out.push_back(big(c));
  return out;
}

inline json to_json(const CountReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"K", big(row.series_K)},
                    {"R", big(row.series_R)},
                    {"T", big(row.series_T)},
                    {"direct_K", row.direct_K},
                    {"direct_R", row.direct_R},
                    {"direct_T", row.direct_T},
                    {"agree", row.agrees()}});
  }
  json out = {{"q", to_json(r.q)}, {"rows", rows}, {"agree", r.agree}};
  if (!r.agree) out["first_mismatch"] = r.first_mismatch;
  return out;
}

inline json to_json(const OracleReport& r, bool timing) {
  json records = json::array();
  for (const auto& c : r.records) {
    json rec = {{"datum", to_json(c.datum)},
                {"is_real", c.is_real ? json(*c.is_real) : json()},
                {"is_strongly_real", c.strongly_real ? json(*c.strongly_real) : json()},
                {"verdict", to_json(c.verdict)},
                {"agree", c.agree}};
    if (c.class_size != 0) rec["class_size"] = c.class_size;
    if (!c.note.empty()) rec["note"] = c.note;
    records.push_back(rec);
  }
  json out = {{"q", to_json(r.q)},
              {"n", r.n},
              {"strategy", r.strategy},
              {"budget", r.budget},
              {"classes", r.records.size()},
              {"disagreements", r.disagreements},
              {"budget_exhausted", r.budget_exhausted},
              {"class_count_matches", r.class_count_matches},
              {"data_match", r.data_match},
              {"records", records}};
  if (r.group_order != 0) out["group_order"] = r.group_order;
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace strongreal::io
