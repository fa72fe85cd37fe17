#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <vpf/vpf.hpp>

namespace {

// Input-shape problems (unreadable files, malformed vectors) exit with the
// usage code, unlike domain errors from the library.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

vpf::RatVec parse_rat_csv(const std::string& s) {
  vpf::RatVec out;
  try {
    for (const auto& part : split_csv(s)) out.push_back(vpf::Rational::parse(part));
  } catch (const vpf::error& e) {
    throw usage_error(e.what());
  }
  return out;
}

vpf::IntVec parse_int_csv(const std::string& s) {
  vpf::IntVec out;
  for (const auto& r : parse_rat_csv(s)) {
    if (!r.is_integer()) throw usage_error("expected an integer vector, got " + s);
    out.push_back(r.to_integer());
  }
  return out;
}

vpf::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  try {
    return vpf::json::parse(in);
  } catch (const vpf::json::exception& e) {
    throw usage_error(path + ": " + e.what());
  }
}

vpf::IntMatrix load_matrix(const std::string& path) {
  vpf::json j = load_json(path);
  try {
    return vpf::matrix_from_json(j);
  } catch (const vpf::json::exception& e) {
    throw usage_error(path + ": " + e.what());
  }
}

void emit(const std::string& mode, const vpf::json& as_json, const std::string& as_text) {
  if (mode == "json")
    std::cout << as_json.dump(2) << "\n";
  else
    std::cout << as_text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partition counts, quasi-polynomials, and polytope volumes"};
  app.require_subcommand(1);
  std::string output = "pretty";
  app.add_option("--output", output, "output mode")
      ->check(CLI::IsMember({"json", "pretty"}));

  auto* count = app.add_subcommand(
      "count", "number of nonnegative integer solutions of M beta = alpha");
  std::string count_matrix, count_alpha, count_method = "both";
  count->add_option("--matrix", count_matrix, "matrix JSON file")->required();
  count->add_option("--alpha", count_alpha, "target vector, comma separated")->required();
  count->add_option("--method", count_method, "brute, formula, or both")
      ->check(CLI::IsMember({"brute", "formula", "both"}));

  auto* formula = app.add_subcommand(
      "formula", "quasi-polynomial of the counting function per chamber");
  std::string formula_matrix, formula_witness;
  formula->add_option("--matrix", formula_matrix, "matrix JSON file")->required();
  formula->add_option("--witness", formula_witness,
                      "interior point selecting one chamber (required for s > 2)");

  auto* chambers = app.add_subcommand("chambers", "chamber decomposition of the cone (s <= 2)");
  std::string chambers_matrix;
  chambers->add_option("--matrix", chambers_matrix, "matrix JSON file")->required();

  auto* characters = app.add_subcommand("characters", "characters attached to the matrix");
  std::string characters_matrix;
  characters->add_option("--matrix", characters_matrix, "matrix JSON file")->required();

  auto* volume = app.add_subcommand("volume", "exact polytope volume");
  std::string volume_mode, volume_matrix, volume_b;
  volume->add_option("--mode", volume_mode, "eq: {x>=0 : Mx=b} relative; ineq: {x>=0 : Ax<=b}")
      ->required()
      ->check(CLI::IsMember({"eq", "ineq"}));
  volume->add_option("--matrix", volume_matrix, "matrix JSON file")->required();
  volume->add_option("--b", volume_b, "right-hand side, comma separated rationals")->required();

  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "lattice-point count of dilations g*b");
  std::string ehrhart_matrix, ehrhart_b;
  ehrhart_cmd->add_option("--matrix", ehrhart_matrix, "matrix JSON file")->required();
  ehrhart_cmd->add_option("--b", ehrhart_b, "integer right-hand side, comma separated")->required();

  auto* ps = app.add_subcommand("pitman-stanley", "parking-function polytope volume");
  std::string ps_x;
  ps->add_option("--x", ps_x, "positive rational coordinates, comma separated")->required();

  auto* pop = app.add_subcommand("popoviciu", "representations of n by coprime a, b");
  int64_t pop_a = 0, pop_b = 0, pop_n = 0;
  pop->add_option("--a", pop_a)->required();
  pop->add_option("--b", pop_b)->required();
  pop->add_option("--n", pop_n)->required();

  // Lets --output appear after the subcommand name as well as before it.
  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) {
      vpf::IntMatrix m = load_matrix(count_matrix);
      vpf::IntVec alpha = parse_int_csv(count_alpha);
      if (static_cast<int>(alpha.size()) != m.s())
        throw vpf::error("alpha length must match the matrix row count");
      std::optional<vpf::Integer> brute, formula_v;
      if (count_method != "formula") brute = vpf::brute_count(m, alpha);
      if (count_method != "brute") formula_v = vpf::count_by_formula(m, alpha);
      if (brute && formula_v && *brute != *formula_v)
        throw vpf::error("brute-force and formula counts disagree (internal error)");
      vpf::Integer v = brute ? *brute : *formula_v;
      emit(output, vpf::json(v), v.str());
    } else if (formula->parsed()) {
      vpf::IntMatrix m = load_matrix(formula_matrix);
      std::vector<vpf::Chamber> chs;
      if (!formula_witness.empty())
        chs.push_back(vpf::chamber_of(m, parse_rat_csv(formula_witness)));
      else
        chs = vpf::enumerate_chambers(m);
      vpf::json arr = vpf::json::array();
      std::string text;
      for (const auto& ch : chs) {
        vpf::QuasiPolynomial qp = vpf::quasi_polynomial(m, ch);
        arr.push_back(qp);
        text += vpf::pretty(qp);
      }
      emit(output, arr, text);
    } else if (chambers->parsed()) {
      vpf::IntMatrix m = load_matrix(chambers_matrix);
      auto chs = vpf::enumerate_chambers(m);
      vpf::json arr = chs;
      std::string text;
      for (const auto& ch : chs) text += vpf::pretty(ch) + "\n";
      emit(output, arr, text);
    } else if (characters->parsed()) {
      vpf::IntMatrix m = load_matrix(characters_matrix);
      vpf::json arr = vpf::json::array();
      std::string text;
      for (const auto& cd : m.characters()) {
        int64_t r = vpf::least_r(m, cd);
        arr.push_back(vpf::json{{"character", cd.theta.exponents()},
                                {"fixed", cd.fixed},
                                {"r", r}});
        text += vpf::pretty(cd.theta) + ": fixes " + std::to_string(cd.fixed.size()) +
                " of " + std::to_string(m.n()) + " columns, r = " + std::to_string(r) + "\n";
      }
      emit(output, arr, text);
    } else if (volume->parsed()) {
      vpf::IntMatrix m = load_matrix(volume_matrix);
      vpf::RatVec b = parse_rat_csv(volume_b);
      if (static_cast<int>(b.size()) != m.s())
        throw vpf::error("b length must match the matrix row count");
      vpf::Rational v = volume_mode == "eq" ? vpf::relative_volume(m, b)
                                            : vpf::polytope_volume(m, b);
      emit(output, vpf::json(v), v.str());
    } else if (ehrhart_cmd->parsed()) {
      vpf::IntMatrix m = load_matrix(ehrhart_matrix);
      vpf::IntVec b = parse_int_csv(ehrhart_b);
      if (static_cast<int>(b.size()) != m.s())
        throw vpf::error("b length must match the matrix row count");
      vpf::EhrhartQP e = vpf::ehrhart(m, b);
      emit(output, vpf::json(e), vpf::pretty(e));
    } else if (ps->parsed()) {
      vpf::RatVec x = parse_rat_csv(ps_x);
      auto [via_power, closed] = vpf::pitman_stanley(x);
      emit(output,
           vpf::json{{"truncated_power", via_power}, {"closed_form", closed}},
           "volume = " + via_power.str() + " (truncated power) = " + closed.str() +
               " (closed form)");
    } else if (pop->parsed()) {
      vpf::Integer v = vpf::popoviciu(pop_a, pop_b, pop_n);
      emit(output, vpf::json(v), v.str());
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const vpf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
