#include "nichols/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nichols/classify.hpp"
#include "nichols/json_io.hpp"
#include "nichols/modarith.hpp"
#include "nichols/pbw.hpp"
#include "nichols/verify.hpp"

namespace nichols::cli {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

/// One classification result row; optional fields render as JSON null and
/// empty CSV cells.
struct Row {
  i64 n = 0;
  int rank = 0;
  json gdd;
  std::string label;
  std::optional<i64> m, m2, dimension;
  std::optional<json> witness;
};

json row_json(const Row& r) {
  json j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["gdd"] = r.gdd;
  j["label"] = r.label;
  j["m"] = r.m ? json(*r.m) : json();
  j["m2"] = r.m2 ? json(*r.m2) : json();
  j["dimension"] = r.dimension ? json(*r.dimension) : json();
  j["witness"] = r.witness ? *r.witness : json();
  return j;
}

std::string opt_cell(const std::optional<i64>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> row_cells(const Row& r) {
  return {std::to_string(r.n),
          std::to_string(r.rank),
          r.gdd.dump(),
          r.label,
          opt_cell(r.m),
          opt_cell(r.m2),
          opt_cell(r.dimension),
          r.witness ? r.witness->dump() : std::string()};
}

const std::vector<std::string> kRowColumns = {
    "n", "rank", "gdd", "label", "m", "m2", "dimension", "witness"};

void emit_csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(cells[i]);
  }
  out << '\n';
}

void emit_md_line(const std::vector<std::string>& cells, std::ostream& out) {
  out << '|';
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void emit_md_rule(std::size_t width, std::ostream& out) {
  out << '|';
  for (std::size_t i = 0; i < width; ++i) out << " --- |";
  out << '\n';
}

void emit_table(const std::vector<std::string>& columns,
                const std::vector<std::vector<std::string>>& rows,
                const std::string& format, std::ostream& out) {
  if (format == "csv") {
    emit_csv_line(columns, out);
    for (const auto& r : rows) emit_csv_line(r, out);
  } else {
    emit_md_line(columns, out);
    emit_md_rule(columns.size(), out);
    for (const auto& r : rows) emit_md_line(r, out);
  }
}

void emit_rows(const std::vector<Row>& rows, const std::string& format,
               std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back(row_cells(r));
  emit_table(kRowColumns, cells, format, out);
}

Row classify_single(const Gdd& g, SearchBudget budget) {
  Row row;
  row.n = g.n;
  row.rank = g.rank;
  row.gdd = gdd_json(g);
  if (g.rank < 2)
    throw std::invalid_argument(
        "classify: rank-1 diagrams are out of scope, give rank >= 2");
  if (g.rank == 2) {
    const auto v = rank2_case(g, budget);
    row.label = to_string(v.label);
    if (v.m > 0) row.m = v.m;
    if (v.label != CaseLabel::NotRealizable &&
        v.label != CaseLabel::Disconnected) {
      if (auto w = oracle_realize(system_of(g), budget))
        row.witness = witness_json(*w);
    }
    return row;
  }
  if (!is_connected(g)) {
    row.label = to_string(CaseLabel::Disconnected);
    if (auto w = oracle_realize(system_of(g), budget))
      row.witness = witness_json(*w);
    return row;
  }
  if (g.rank == 3) {
    const auto v = rank3_case(g, budget);
    row.label = to_string(v.label);
    if (is_rank3_case(v.label)) {
      row.m = v.m;
      if (v.m2 > 0) row.m2 = v.m2;
      row.dimension = rank3_dimension(v.label, v.m, v.m2);
    }
    if (v.witness) row.witness = witness_json(*v.witness);
    return row;
  }
  // connected, four or more vertices: infinite whenever realizable at all
  if (auto w = oracle_realize(system_of(g), budget)) {
    row.label = to_string(rank_ge4_verdict(g));
    row.witness = witness_json(*w);
  } else {
    row.label = to_string(CaseLabel::NotRealizable);
  }
  return row;
}

Row row_of_rank2_entry(const Rank2Entry& e) {
  Row row;
  row.n = e.gdd.n;
  row.rank = 2;
  row.gdd = gdd_json(e.gdd);
  row.label = to_string(e.label);
  row.m = e.m;
  row.witness = witness_json(e.witness);
  return row;
}

Row row_of_rank3_entry(const Rank3Entry& e) {
  Row row;
  row.n = e.gdd.n;
  row.rank = 3;
  row.gdd = gdd_json(e.gdd);
  row.label = to_string(e.label);
  row.m = e.m;
  if (e.m2 > 0) row.m2 = e.m2;
  row.dimension = rank3_dimension(e.label, e.m, e.m2);
  row.witness = witness_json(e.witness);
  return row;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact arithmetic for diagonal braidings over Z_n"};
  app.require_subcommand(1);

  SearchBudget budget{};
  if (const char* env = std::getenv("NICHOLS_ZN_BUDGET")) {
    const std::string sv = env;
    std::size_t pos = 0;
    i64 v = 0;
    try {
      v = std::stoll(sv, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != sv.size() || v <= 0) {
      err << "error: NICHOLS_ZN_BUDGET must be a positive integer\n";
      return 1;
    }
    budget.max_steps = v;
  }

  const std::vector<std::string> formats = {"json", "csv", "md"};

  i64 factor_n = 0;
  std::string fc_format = "json";
  auto* factor_cmd =
      app.add_subcommand("factor", "prime factorization of a positive integer");
  factor_cmd->add_option("n", factor_n, "integer to factor")->required();
  factor_cmd->add_option("--format", fc_format)->check(CLI::IsMember(formats));

  i64 leg_a = 0, leg_p = 0;
  auto* legendre_cmd =
      app.add_subcommand("legendre", "quadratic residue sign (a/p)");
  legendre_cmd->add_option("a", leg_a, "residue")->required();
  legendre_cmd->add_option("p", leg_p, "odd prime")->required();

  i64 q_a = 0, q_b = 0, q_c = 0, q_m = 0;
  auto* qsolve_cmd = app.add_subcommand(
      "qsolve", "all roots of a*x^2 + b*x + c == 0 (mod m)");
  qsolve_cmd->add_option("a", q_a)->required();
  qsolve_cmd->add_option("b", q_b)->required();
  qsolve_cmd->add_option("c", q_c)->required();
  qsolve_cmd->add_option("m", q_m)->required();

  std::string rz_matrix, rz_gdd, rz_format = "json";
  i64 rz_n = 0;
  auto* realize_cmd = app.add_subcommand(
      "realize", "find exponent vectors x, y producing the braiding");
  realize_cmd->add_option("--matrix", rz_matrix, "braiding matrix JSON file");
  realize_cmd->add_option("--gdd", rz_gdd, "diagram JSON file");
  realize_cmd->add_option("--n", rz_n, "expected modulus (cross-check)");
  realize_cmd->add_option("--format", rz_format)
      ->check(CLI::IsMember(formats));

  std::string cl_gdd, cl_format = "json";
  i64 cl_rank = 0, cl_n = 0;
  bool cl_enumerate = false;
  auto* classify_cmd = app.add_subcommand(
      "classify", "classification verdict for one diagram or a whole modulus");
  classify_cmd->add_option("--gdd", cl_gdd, "diagram JSON file");
  classify_cmd->add_option("--rank", cl_rank, "2 or 3 (with --enumerate)")
      ->check(CLI::IsMember({2, 3}));
  classify_cmd->add_option("--n", cl_n, "modulus (with --enumerate)");
  classify_cmd->add_flag("--enumerate", cl_enumerate,
                         "emit every finite class over Z_n");
  classify_cmd->add_option("--format", cl_format)
      ->check(CLI::IsMember(formats));

  std::string rf_matrix;
  i64 rf_vertex = 0;
  auto* reflect_cmd =
      app.add_subcommand("reflect", "reflect a braiding matrix at a vertex");
  reflect_cmd->add_option("--matrix", rf_matrix, "braiding matrix JSON file")
      ->required();
  reflect_cmd->add_option("--vertex", rf_vertex, "vertex index, 1-based")
      ->required();

  std::string orb_matrix, orb_format = "json";
  i64 orb_max = 512;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "reflection orbit of a braiding matrix, as diagrams");
  orbit_cmd->add_option("--matrix", orb_matrix, "braiding matrix JSON file")
      ->required();
  orbit_cmd->add_option("--max", orb_max, "orbit size cap (default 512)");
  orbit_cmd->add_option("--format", orb_format)->check(CLI::IsMember(formats));

  std::string dim_class;
  i64 dim_m = 0, dim_m2 = 0;
  auto* dim_cmd =
      app.add_subcommand("dim", "dimension of a finite rank-3 class");
  dim_cmd->add_option("--class", dim_class, "i, ii or iii")
      ->required()
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  dim_cmd->add_option("--m", dim_m, "order of the first root")->required();
  dim_cmd->add_option("--m2", dim_m2, "order of the second root (class iii)");

  std::string verify_suite_name;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a golden suite, print pass/fail lines");
  verify_cmd
      ->add_option("--suite", verify_suite_name,
                   "thm1.7 | thm2.2 | thm3.1 | corollaries")
      ->required()
      ->check(CLI::IsMember({"thm1.7", "thm2.2", "thm3.1", "corollaries"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*factor_cmd) {
      if (factor_n < 1)
        throw std::invalid_argument("factor: n must be positive");
      const auto f = factorize(factor_n);
      if (fc_format == "json") {
        json arr = json::array();
        for (const auto& pp : f.factors) arr.push_back({pp.p, pp.alpha});
        out << arr.dump() << '\n';
      } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& pp : f.factors)
          cells.push_back({std::to_string(pp.p), std::to_string(pp.alpha)});
        emit_table({"p", "e"}, cells, fc_format, out);
      }
      return 0;
    }

    if (*legendre_cmd) {
      if (leg_p <= 2 || !is_prime(leg_p))
        throw std::invalid_argument("legendre: p must be an odd prime");
      out << legendre(leg_a, leg_p) << '\n';
      return 0;
    }

    if (*qsolve_cmd) {
      if (q_m < 1) throw std::invalid_argument("qsolve: m must be positive");
      const auto sol = solve_quadratic(q_a, q_b, q_c, q_m);
      out << json(sol.residues).dump() << '\n';
      return 0;
    }

    if (*realize_cmd) {
      if (rz_matrix.empty() == rz_gdd.empty())
        throw std::invalid_argument(
            "realize: give exactly one of --matrix or --gdd");
      std::optional<Realization> w;
      i64 file_n = 0;
      if (!rz_matrix.empty()) {
        const auto b = matrix_of_json(load_json(rz_matrix));
        file_n = b.n;
        w = realize_matrix(b, budget);
      } else {
        const auto g = gdd_of_json(load_json(rz_gdd));
        file_n = g.n;
        w = oracle_realize(system_of(g), budget);
      }
      if (realize_cmd->count("--n") && rz_n != file_n)
        throw std::invalid_argument(
            "realize: --n disagrees with the file's modulus");
      if (rz_format == "json") {
        out << (w ? witness_json(*w).dump(2) : "null") << '\n';
      } else {
        std::vector<std::vector<std::string>> cells;
        if (w) cells.push_back({json(w->x).dump(), json(w->y).dump()});
        emit_table({"x", "y"}, cells, rz_format, out);
      }
      return 0;
    }

    if (*classify_cmd) {
      const bool single = !cl_gdd.empty();
      if (single) {
        if (cl_enumerate || cl_rank != 0 || classify_cmd->count("--n"))
          throw std::invalid_argument(
              "classify: --gdd does not combine with --rank/--n/--enumerate");
        const Row row = classify_single(gdd_of_json(load_json(cl_gdd)), budget);
        if (cl_format == "json")
          out << row_json(row).dump(2) << '\n';
        else
          emit_rows({row}, cl_format, out);
        return 0;
      }
      // --enumerate is implied by --rank/--n; the flag is accepted either way
      if (cl_rank == 0 || cl_n < 1)
        throw std::invalid_argument(
            "classify: give --gdd FILE, or --rank {2|3} with --n N");
      std::vector<Row> rows;
      if (cl_rank == 2) {
        for (const auto& e : enumerate_rank2(cl_n, budget))
          rows.push_back(row_of_rank2_entry(e));
      } else {
        for (const auto& e : enumerate_rank3(cl_n, budget))
          rows.push_back(row_of_rank3_entry(e));
      }
      emit_rows(rows, cl_format, out);
      return 0;
    }

    if (*reflect_cmd) {
      const auto b = matrix_of_json(load_json(rf_matrix));
      if (rf_vertex < 1 || rf_vertex > b.rank)
        throw std::invalid_argument("reflect: --vertex out of range [1, " +
                                    std::to_string(b.rank) + "]");
      const auto rb = weyl_reflect(b, static_cast<int>(rf_vertex - 1));
      out << matrix_json(rb).dump(2) << '\n';
      return 0;
    }

    if (*orbit_cmd) {
      if (orb_max < 1)
        throw std::invalid_argument("orbit: --max must be positive");
      const auto b = matrix_of_json(load_json(orb_matrix));
      const auto orb = weyl_orbit(b, static_cast<std::size_t>(orb_max));
      if (orb_format == "json") {
        json j;
        j["truncated"] = orb.truncated;
        j["members"] = json::array();
        for (const auto& g : orb.members) j["members"].push_back(gdd_json(g));
        out << j.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& g : orb.members) cells.push_back({gdd_json(g).dump()});
        emit_table({"gdd"}, cells, orb_format, out);
      }
      if (orb.truncated) {
        err << "error: orbit truncated at " << orb.members.size()
            << " members\n";
        return 2;
      }
      return 0;
    }

    if (*dim_cmd) {
      CaseLabel label = CaseLabel::Rank3_i;
      if (dim_class == "ii") label = CaseLabel::Rank3_ii;
      if (dim_class == "iii") {
        label = CaseLabel::Rank3_iii;
        if (!dim_cmd->count("--m2"))
          throw std::invalid_argument("dim: class iii needs --m2");
      }
      out << rank3_dimension(label, dim_m, dim_m2) << '\n';
      return 0;
    }

    if (*verify_cmd) {
      const auto results = verify_suite(verify_suite_name);
      std::size_t passed = 0;
      for (const auto& r : results) {
        if (r.pass) {
          ++passed;
          out << "PASS " << r.name << '\n';
        } else {
          out << "FAIL " << r.name;
          if (!r.detail.empty()) out << " (" << r.detail << ')';
          out << '\n';
        }
      }
      out << "passed " << passed << "/" << results.size() << '\n';
      return passed == results.size() ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedModulus& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace nichols::cli
