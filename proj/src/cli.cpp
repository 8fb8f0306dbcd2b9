#include "tridend/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>

#include "tridend/dual.hpp"
#include "tridend/primitives.hpp"
#include "tridend/quotient.hpp"
#include "tridend/series.hpp"

namespace tridend::cli {

namespace {

int print_reports(std::ostream& out, const std::vector<Report>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    print_report(out, r);
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

void print_dims(std::ostream& out, const std::vector<DimensionRow>& rows, const std::string& fmt) {
  static const std::vector<std::string> columns{"degree",          "dim_A",          "dim_prim_coass",
                                                "dim_prim_codend", "dim_prim_left", "dim_prim_right"};
  auto values = [](const DimensionRow& r) {
    return std::vector<long long>{r.degree, r.dim_a, r.coass, r.codend, r.left, r.right};
  };
  if (fmt == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
      auto v = values(r);
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << '\n';
    }
  } else if (fmt == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      auto v = values(r);
      for (std::size_t i = 0; i < v.size(); ++i) row[columns[i]] = v[i];
      doc.push_back(row);
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : columns) out << std::setw(static_cast<int>(c.size()) + 2) << c;
    out << '\n';
    for (const auto& r : rows) {
      auto v = values(r);
      for (std::size_t i = 0; i < v.size(); ++i) out << std::setw(static_cast<int>(columns[i].size()) + 2) << v[i];
      out << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the free tridendriform bialgebra on planar trees", "tridend"};
  app.require_subcommand(1);

  std::string op = "star";
  std::string first;
  std::string second;
  std::string piece = "full";
  std::string law;
  std::string fmt = "text";
  std::string which;
  int max_degree = 0;
  int terms = 0;
  int degree = 0;
  bool allow_large = false;

  auto* mul = app.add_subcommand("mul", "product of two vectors");
  mul->add_option("--op", op, "star, left, mid or right")->check(CLI::IsMember({"star", "left", "mid", "right"}));
  mul->add_option("T", first, "left factor")->required();
  mul->add_option("S", second, "right factor")->required();

  auto* coprod = app.add_subcommand("coprod", "admissible-cut coproduct");
  coprod->add_option("--piece", piece, "full, left or right")->check(CLI::IsMember({"full", "left", "right"}));
  coprod->add_option("T", first)->required();

  auto* dual = app.add_subcommand("dual", "operations of the graded dual");
  dual->require_subcommand(1);
  auto* dual_coprod = dual->add_subcommand("coprod", "lightning coproduct");
  std::string dual_piece = "full";
  dual_coprod->add_option("--piece", dual_piece, "prec, mid or succ")
      ->check(CLI::IsMember({"full", "prec", "mid", "succ"}));
  dual_coprod->add_option("T", first)->required();
  auto* dual_mul = dual->add_subcommand("mul", "product of the dual, transpose of the coproduct");
  dual_mul->add_option("S", first)->required();
  dual_mul->add_option("T", second)->required();

  auto* verify = app.add_subcommand("verify", "exhaustive check of a family of identities");
  verify->add_option("--law", law)
      ->required()
      ->check(CLI::IsMember({"tri", "tensor", "bialgebra", "three-two", "cotri", "dual-adjoint", "lr"}));
  verify->add_option("--max-degree", max_degree)->required()->check(CLI::Range(1, 12));

  auto* dims = app.add_subcommand("dims", "dimensions of A_n and of its primitive spaces");
  dims->add_option("--max-degree", max_degree)->required()->check(CLI::Range(1, 12));
  dims->add_option("--format", fmt)->check(CLI::IsMember({"text", "csv", "json"}));
  dims->add_flag("--allow-large", allow_large, "permit degrees above the default cap");

  auto* series = app.add_subcommand("series", "coefficients of a generating series");
  series->add_option("--which", which)->required()->check(CLI::IsMember({"R", "P", "primcoass"}));
  series->add_option("--terms", terms)->required()->check(CLI::Range(1, 200));

  auto* quotient = app.add_subcommand("quotient", "the Loday-Ronco quotient on binary trees");
  quotient->require_subcommand(1);
  auto* q_mul = quotient->add_subcommand("mul", "quotient product");
  q_mul->add_option("T", first)->required();
  q_mul->add_option("S", second)->required();
  auto* q_coprod = quotient->add_subcommand("coprod", "quotient coproduct");
  q_coprod->add_option("T", first)->required();

  auto* express = app.add_subcommand("express", "write a tree in terms of the generator");
  express->add_option("T", first)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the trees of a degree in canonical order");
  enumerate->add_option("--degree", degree)->required()->check(CLI::Range(0, 9));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (mul->parsed()) {
      out << format(product(parse_op(op), parse_vector(first), parse_vector(second))) << '\n';
    } else if (coprod->parsed()) {
      TreeVector x = parse_vector(first);
      TensorVector d = piece == "left" ? coproduct_left(x) : piece == "right" ? coproduct_right(x) : coproduct(x);
      out << format(d) << '\n';
    } else if (dual_coprod->parsed()) {
      TreeVector x = parse_vector(first);
      const Op p = dual_piece == "prec" ? Op::Left
                   : dual_piece == "mid" ? Op::Mid
                   : dual_piece == "succ" ? Op::Right
                                          : Op::Star;
      out << format(p == Op::Star ? dual_coproduct(x) : dual_coproduct_piece(p, x)) << '\n';
    } else if (dual_mul->parsed()) {
      out << format(dual_product(parse_vector(first), parse_vector(second))) << '\n';
    } else if (verify->parsed()) {
      std::vector<Report> reports;
      if (law == "tri") {
        reports.push_back(check_tridend_axioms(max_degree));
      } else if (law == "tensor") {
        reports.push_back(check_tensor_structure(max_degree));
      } else if (law == "bialgebra") {
        reports.push_back(check_bialgebra(max_degree));
        reports.push_back(check_coproduct_identities(max_degree));
      } else if (law == "three-two") {
        reports.push_back(check_32_relations(max_degree));
      } else if (law == "cotri") {
        reports.push_back(check_dual_relations(max_degree));
      } else if (law == "dual-adjoint") {
        reports.push_back(check_dual_adjointness(max_degree));
      } else {
        reports.push_back(check_biideal(max_degree));
        reports.push_back(check_lr_formulas(max_degree));
        auto readings = compare_lr_readings(max_degree);
        const bool printed = readings.printed.ok();
        const bool standard = readings.standard.ok();
        out << "LR product reading " << reading_name(LrReading::Printed) << ": "
            << (printed ? "matches" : "differs") << " (" << readings.printed.violations.size() << " of "
            << readings.printed.checked << " pairs differ)\n";
        out << "LR product reading " << reading_name(LrReading::Standard) << ": "
            << (standard ? "matches" : "differs") << " (" << readings.standard.violations.size() << " of "
            << readings.standard.checked << " pairs differ)\n";
        if (printed == standard) {
          Report r{"LR product readings", 1, {}};
          r.fail("exactly one reading matches π∘*", "degree <= " + std::to_string(max_degree),
                 printed ? "printed matches" : "printed differs", standard ? "standard matches" : "standard differs");
          reports.push_back(r);
        }
      }
      return print_reports(out, reports);
    } else if (dims->parsed()) {
      print_dims(out, dimension_table(max_degree, allow_large), fmt);
    } else if (series->parsed()) {
      const int order = terms - 1;
      RationalSeries s = which == "R" ? series_r(order) : which == "P" ? series_p(order) : series_prim_coass(order);
      for (int k = 0; k <= order; ++k) out << (k ? ", " : "") << s[k].get_str();
      out << '\n';
    } else if (q_mul->parsed()) {
      out << format(lr_product(parse_vector(first), parse_vector(second))) << '\n';
    } else if (q_coprod->parsed()) {
      out << format(lr_coproduct(parse_vector(first))) << '\n';
    } else if (express->parsed()) {
      out << express_in_generator(PlanarTree::parse(first)).str() << '\n';
    } else if (enumerate->parsed()) {
      for (const auto& t : enumerate_trees(degree)) out << t.str() << '\n';
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace tridend::cli
