// strongreal: command-line front end.
//
//   strongreal classify --q 3 --unipotent "2,1,1"
//   strongreal classify --q 3 --sp --unipotent "4-,4-,2+"
//   strongreal count    --q 3 --n-max 3
//   strongreal list     --q 3 --n 4 --filter strongly_real
//   strongreal series   --q 3 --order 8 --which T
//   strongreal realize  --q 2 --unipotent "3,1"
//   strongreal verify   --q 3 --n 2
//
// Exit status: 0 ok, 1 usage or input error, 2 mathematical disagreement,
// 3 budget or bound exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "strongreal/serialize.hpp"
#include "strongreal/strongreal.hpp"

namespace sr = strongreal;
using nlohmann::json;

namespace {

enum class Format { Json, Csv, Plain };

constexpr int kOk = 0, kUsage = 1, kDisagreement = 2, kExhausted = 3;

struct Options {
  Format format = Format::Json;
  std::uint64_t q = 0;
  bool sp = false;
  std::string datum_file;
  std::string unipotent;
  unsigned n = 0;
  unsigned n_max = 0;
  unsigned order = 0;
  std::string filter = "all";
  std::string which = "K";
  bool product_form = false;
  std::uint64_t budget = 0;
  bool timing = false;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) sr::fail(sr::ErrorKind::InvalidArgument, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    sr::fail(sr::ErrorKind::InvalidArgument, std::string("bad JSON: ") + e.what());
  }
}

sr::ClassDatum input_datum(const Options& o, sr::PrimePower q) {
  sr::require(o.datum_file.empty() != o.unipotent.empty(), "give exactly one of --datum and --unipotent");
  if (!o.unipotent.empty()) return sr::ClassDatum::unipotent(q, sr::parse_partition(o.unipotent));
  sr::ClassDatum d = sr::io::datum_from_json(read_json(o.datum_file));
  sr::require(d.q() == q, "datum q differs from --q");
  return d;
}

std::string witness_text(const sr::Verdict& v) {
  if (!v.witness) return "";
  const auto& w = *v.witness;
  std::string s = w.block + ": ";
  if (w.part != 0) s += "part " + std::to_string(w.part) + ", multiplicity " + std::to_string(w.multiplicity) + "; ";
  return s + w.note;
}

void print_verdict(const Options& o, const sr::Verdict& v) {
  switch (o.format) {
    case Format::Json:
      std::cout << sr::io::to_json(v).dump() << '\n';
      break;
    case Format::Csv: {
      std::cout << "status,rule,block,part,multiplicity\n" << sr::to_string(v.status) << ',' << v.rule << ',';
      if (v.witness) std::cout << '"' << v.witness->block << "\"," << v.witness->part << ',' << v.witness->multiplicity;
      std::cout << ",\n";
      break;
    }
    case Format::Plain:
      std::cout << sr::to_string(v.status);
      if (!v.rule.empty()) std::cout << ' ' << v.rule;
      if (v.witness) std::cout << " (" << witness_text(v) << ')';
      std::cout << '\n';
      break;
  }
}

int run_classify(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  if (!o.sp) {
    print_verdict(o, sr::strongly_real(input_datum(o, q)));
    return kOk;
  }
  sr::require(o.datum_file.empty() != o.unipotent.empty(), "give exactly one of --datum and --unipotent");
  if (!o.unipotent.empty()) {
    const sr::SymplecticClassDatum d(q, {}, sr::parse_signed_partition(o.unipotent), sr::SignedPartition());
    print_verdict(o, sr::sp_strongly_real(d));
  } else {
    const sr::SymplecticClassDatum d = sr::io::sp_datum_from_json(read_json(o.datum_file));
    sr::require(d.q() == q, "datum q differs from --q");
    print_verdict(o, sr::sp_strongly_real(d));
  }
  return kOk;
}

int run_count(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  const sr::CountReport rep = sr::cross_check_counts(o.n_max, q);
  switch (o.format) {
    case Format::Json:
      std::cout << sr::io::to_json(rep).dump() << '\n';
      break;
    case Format::Csv:
      std::cout << "n,K,R,T,direct_K,direct_R,direct_T,agree\n";
      for (const auto& r : rep.rows) {
        std::cout << r.n << ',' << r.series_K << ',' << r.series_R << ',' << r.series_T << ',' << r.direct_K << ','
                  << r.direct_R << ',' << r.direct_T << ',' << (r.agrees() ? "true" : "false") << '\n';
      }
      break;
    case Format::Plain:
      std::cout << "q = " << o.q << '\n' << "n\tK\tR\tT\tagree\n";
      for (const auto& r : rep.rows) {
        std::cout << r.n << '\t' << r.series_K << '\t' << r.series_R << '\t' << r.series_T << '\t'
                  << (r.agrees() ? "yes" : "NO") << '\n';
      }
      if (!rep.agree) std::cout << "first mismatch: " << rep.first_mismatch << '\n';
      break;
  }
  return rep.agree ? kOk : kDisagreement;
}

int run_list(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  const sr::ClassFilter filter = sr::parse_filter(o.filter);
  if (o.format == Format::Csv) std::cout << "index,datum,status,rule\n";
  std::uint64_t index = 0;
  sr::for_each_class_datum(o.n, q, filter, [&](const sr::ClassDatum& d) {
    const sr::Verdict v = sr::strongly_real(d);
    switch (o.format) {
      case Format::Json: {
        json line = sr::io::to_json(d);
        line["verdict"] = sr::io::to_json(v);
        std::cout << line.dump() << '\n';
        break;
      }
      case Format::Csv:
        std::cout << index << ",\"" << d.to_string() << "\"," << sr::to_string(v.status) << ',' << v.rule << '\n';
        break;
      case Format::Plain:
        std::cout << d.to_string() << '\t' << sr::to_string(v.status) << '\n';
        break;
    }
    ++index;
  });
  return kOk;
}

int run_series(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  if (o.which == "K") sr::require(!o.product_form, "--product-form applies to R and T only");
  const sr::Series s = o.which == "K"   ? sr::series_K(q, o.order)
                       : o.which == "R" ? (o.product_form ? sr::product_form_R(q, o.order) : sr::series_R(q, o.order))
                                        : (o.product_form ? sr::product_form_T(q, o.order) : sr::series_T(q, o.order));
  switch (o.format) {
    case Format::Json:
      std::cout << sr::io::to_json(s).dump() << '\n';
      break;
    case Format::Csv:
      std::cout << "n," << o.which << '\n';
      for (unsigned i = 0; i <= s.order(); ++i) std::cout << i << ',' << s[i] << '\n';
      break;
    case Format::Plain:
      for (unsigned i = 0; i <= s.order(); ++i) std::cout << (i == 0 ? "" : " ") << s[i];
      std::cout << '\n';
      break;
  }
  return kOk;
}

int run_realize(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  const sr::ClassDatum d = input_datum(o, q);
  sr::require(d.n() >= 1, "cannot realize the empty class");
  const sr::HermitianForm form = sr::identity_form(q, d.n());
  const sr::Matrix g = sr::realize_class(d, form);
  switch (o.format) {
    case Format::Json:
      std::cout << json{{"context", sr::io::context_json(g.ctx())},
                        {"datum", sr::io::to_json(d)},
                        {"form", sr::io::to_json(form)},
                        {"matrix", sr::io::to_json(g)}}
                       .dump()
                << '\n';
      break;
    case Format::Csv:
      for (unsigned i = 0; i < g.rows(); ++i) {
        for (unsigned j = 0; j < g.cols(); ++j) std::cout << (j == 0 ? "" : ",") << g.ctx().to_string(g(i, j));
        std::cout << '\n';
      }
      break;
    case Format::Plain:
      std::cout << "form " << form.name << '\n' << g.to_string() << '\n';
      break;
  }
  return kOk;
}

std::string optional_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

int run_verify(const Options& o) {
  const auto q = sr::PrimePower::from_q(o.q);
  sr::require(o.n >= 1, "--n must be at least 1");
  const sr::OracleReport rep = sr::reconcile(o.n, q, o.budget == 0 ? sr::default_budget() : o.budget);
  switch (o.format) {
    case Format::Json:
      std::cout << sr::io::to_json(rep, o.timing).dump() << '\n';
      break;
    case Format::Csv:
      std::cout << "datum,is_real,is_strongly_real,status,rule,agree,class_size\n";
      for (const auto& r : rep.records) {
        std::cout << '"' << r.datum.to_string() << "\"," << optional_bool(r.is_real) << ','
                  << optional_bool(r.strongly_real) << ',' << sr::to_string(r.verdict.status) << ',' << r.verdict.rule
                  << ',' << (r.agree ? "true" : "false") << ',' << r.class_size << '\n';
      }
      break;
    case Format::Plain:
      std::cout << "U(" << rep.n << ", F_" << o.q << "), " << rep.strategy << ", " << rep.records.size()
                << " classes, " << rep.disagreements << " disagreements, " << rep.budget_exhausted
                << " undecided\n";
      if (rep.group_order != 0) std::cout << "group order " << rep.group_order << '\n';
      if (o.timing) std::cout << "elapsed " << rep.elapsed_ms << " ms\n";
      for (const auto& r : rep.records) {
        if (!r.agree || !r.strongly_real) std::cout << r.datum.to_string() << ": " << r.note << '\n';
      }
      break;
  }
  if (!rep.ok()) return kDisagreement;
  return rep.budget_exhausted == 0 ? kOk : kExhausted;
}

int exit_code(sr::ErrorKind k) {
  switch (k) {
    case sr::ErrorKind::BudgetExhausted:
    case sr::ErrorKind::BoundExceeded:
    case sr::ErrorKind::ExtensionTooLarge:
      return kExhausted;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real and strongly real conjugacy classes of finite unitary groups"};
  app.require_subcommand(1);
  Options o;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Field size q of GF(q^2)")->required(); };

  auto* classify = app.add_subcommand("classify", "Strong reality verdict for one class datum");
  add_q(classify);
  classify->add_flag("--sp", o.sp, "Symplectic datum (signed partition at t - 1)");
  auto* datum_opt = classify->add_option("--datum", o.datum_file, "Class datum JSON file, or - for stdin");
  classify->add_option("--unipotent", o.unipotent, "Unipotent type, e.g. \"5,3,2,2\"")->excludes(datum_opt);

  auto* count = app.add_subcommand("count", "Series coefficients K, R, T against direct enumeration");
  add_q(count);
  count->add_option("--n-max", o.n_max, "Largest n")->required();

  auto* list = app.add_subcommand("list", "Stream the class data of U(n, F_q)");
  add_q(list);
  list->add_option("--n", o.n, "Dimension")->required();
  list->add_option("--filter", o.filter, "Filter")->check(CLI::IsMember({"all", "real", "strongly_real"}));

  auto* series = app.add_subcommand("series", "Coefficients of a generating series");
  add_q(series);
  series->add_option("--order", o.order, "Truncation order")->required();
  series->add_option("--which", o.which, "Series")->check(CLI::IsMember({"K", "R", "T"}));
  series->add_flag("--product-form", o.product_form, "Use the displayed product instead of the coefficient definition");

  auto* realize = app.add_subcommand("realize", "Unitary matrix in a given class");
  add_q(realize);
  auto* rdatum = realize->add_option("--datum", o.datum_file, "Class datum JSON file, or - for stdin");
  realize->add_option("--unipotent", o.unipotent, "Unipotent type")->excludes(rdatum);

  auto* verify = app.add_subcommand("verify", "Reconcile the classifier with a brute-force oracle");
  add_q(verify);
  verify->add_option("--n", o.n, "Dimension")->required();
  verify->add_option("--budget", o.budget, "Candidate budget per reversing-space scan");
  verify->add_flag("--timing", o.timing, "Include elapsed time (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  o.format = format == "csv" ? Format::Csv : format == "plain" ? Format::Plain : Format::Json;

  try {
    if (*classify) return run_classify(o);
    if (*count) return run_count(o);
    if (*list) return run_list(o);
    if (*series) return run_series(o);
    if (*realize) return run_realize(o);
    return run_verify(o);
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
