#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcc/commands.hpp"
#include "symcc/errors.hpp"

namespace cmd = symcc::commands;

namespace {

void add_sheaf_flags(CLI::App* app, cmd::SheafArgs& a, bool genus_required) {
  auto* g = app->add_option("--genus", a.genus, "genus of the curve")->check(CLI::NonNegativeNumber);
  if (genus_required) g->required();
  app->add_option("--char", a.base_char, "characteristic of the base field (0 or a prime)");
  app->add_option("--rank", a.rank, "generic rank")->required();
  app->add_option("--sing", a.sing, "rank drop at a point, as point:drop (repeatable)");
  app->add_flag("--tame", "tame ramification (the default)");
  app->add_flag("--wild", a.wild, "wild ramification somewhere (no formula applies)");
  app->add_option("--coeff-char", a.coeff_char, "characteristic of the coefficients");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic cycles of symmetric powers of sheaves on curves"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

  auto fmt_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  };

  std::vector<std::string> es, taus;
  auto* product = app.add_subcommand("product", "multiply basis cycles");
  product->add_option("--e", es, "multiplicity vector such as \"1^2 3^1\" (repeatable)");
  product->add_option("--tau", taus, "label \"D; e\" such as \"s; 1^1\" (repeatable)");
  fmt_opt(product);

  cmd::SheafArgs sheaf;
  unsigned max_degree = 0;
  bool shifted = false;
  auto* series = app.add_subcommand("series", "series S_F of a tame sheaf");
  add_sheaf_flags(series, sheaf, false);
  series->add_option("--max-degree", max_degree, "truncation degree");
  series->add_flag("--shifted", shifted, "series of F[1], the inverse");
  fmt_opt(series);

  unsigned n = 0;
  auto* mtable = app.add_subcommand("mtable", "matrix of m-counts in reverse lexicographic order");
  mtable->add_option("--n", n, "degree")->required();
  fmt_opt(mtable);

  long base_char = 0;
  auto* strata = app.add_subcommand("strata", "strata of X^(n)");
  strata->add_option("--n", n, "degree")->required();
  strata->add_option("--char", base_char, "characteristic of the base field");
  fmt_opt(strata);

  std::string mu, lambda;
  auto* push = app.add_subcommand("pushforward", "characteristic cycle of a pushforward of the constant sheaf");
  push->add_option("--mu", mu, "composition \"2,1,1\": prod X^(mu_j) -> X^(n)");
  push->add_option("--lambda", lambda, "partition \"2,1\": X^A -> X^(n) for A of that type");
  push->add_option("--char", base_char, "characteristic of the base field");
  fmt_opt(push);

  long n_signed = 0;
  std::optional<std::string> omega;
  auto* acyc = app.add_subcommand("acyclicity", "local acyclicity of the Abel-Jacobi map");
  add_sheaf_flags(acyc, sheaf, true);
  acyc->add_option("--n", n_signed, "degree")->required();
  acyc->add_option("--omega", omega, "divisor of a differential, e.g. \"1*x + 1*y\"");
  fmt_opt(acyc);

  std::string omega_req;
  auto* eps = app.add_subcommand("epsilon-report", "localization data for det R Gamma");
  add_sheaf_flags(eps, sheaf, true);
  eps->add_option("--omega", omega_req, "divisor of a differential")->required();
  fmt_opt(eps);

  long genus = 0;
  auto* idx = app.add_subcommand("index-degrees", "intersection degrees inferred from the index formula");
  idx->add_option("--genus", genus, "genus")->required()->check(CLI::NonNegativeNumber);
  idx->add_option("--max-degree", max_degree, "largest degree");
  fmt_opt(idx);

  auto* self = app.add_subcommand("selftest", "run every consistency check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const symcc::Format fmt = symcc::parse_format(format);
    const bool degree_given = series->count("--max-degree") + idx->count("--max-degree") > 0;
    const unsigned N = degree_given ? max_degree : cmd::default_max_degree();
    std::string out;
    if (*product) {
      out = cmd::product(es, taus, fmt);
    } else if (*series) {
      out = cmd::series(sheaf, N, shifted, fmt);
    } else if (*mtable) {
      out = cmd::mtable(n, fmt);
    } else if (*strata) {
      out = cmd::strata(n, base_char, fmt);
    } else if (*push) {
      out = cmd::pushforward(mu, lambda, base_char, fmt);
    } else if (*acyc) {
      out = cmd::acyclicity(sheaf, n_signed, omega, fmt);
    } else if (*eps) {
      out = cmd::epsilon_report(sheaf, omega_req, fmt);
    } else if (*idx) {
      out = cmd::index_degrees(genus, N, fmt);
    } else if (*self) {
      const auto res = cmd::selftest();
      std::cout << res.text;
      return res.passed ? 0 : 4;
    }
    std::cout << out;
    return 0;
  } catch (const symcc::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const symcc::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const symcc::InternalError& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  }
}
