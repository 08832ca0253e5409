// liemetric: metrizability decisions, geodesics and the E(2)/SO(2) demo.
//
//   liemetric check heisenberg3
//   liemetric metrize e2 --seed 7
//   liemetric geodesic heisenberg3 --alpha 1,1,0 --t-end 1 --steps 1000
//   liemetric go-demo --kappa 1 --v 1,0 --t-end 3.14159 --out go.csv
//   liemetric verify --seed 42

#include <CLI11.hpp>
#include <iostream>

#include "liemetric/cli.hpp"
#include "liemetric/errors.hpp"

int main(int argc, char** argv) {
  using liemetric::OutputFormat;
  liemetric::RunConfig config;
  std::string alpha_text;
  std::string v_text;
  std::string output_path;
  std::string input;
  std::string format = "csv";

  CLI::App app{"Invariant metrizability of Lie group sprays and geodesic-orbit structures"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Seed for randomized searches")->capture_default_str();
    sub->add_option("--out", output_path, "Write the output document to this file");
  };
  auto add_integration = [&](CLI::App* sub) {
    sub->add_option("--t-end", config.t_end, "Final flow parameter")->capture_default_str();
    sub->add_option("--steps", config.steps, "Fixed RK4 steps")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
  };

  auto* check = app.add_subcommand("check", "Jacobi and representation residuals");
  check->add_option("algebra", input, "Catalog name or algebra file")->required();
  add_common(check);

  auto* metrize = app.add_subcommand("metrize", "Decide invariant metrizability");
  metrize->add_option("algebra", input, "Catalog name or algebra file")->required();
  add_common(metrize);

  auto* geodesic = app.add_subcommand("geodesic", "Integrate the canonical SODE from the identity");
  geodesic->add_option("algebra", input, "Catalog name or algebra file")->required();
  geodesic->add_option("--alpha", alpha_text, "Initial fiber coordinate, comma separated")->required();
  add_common(geodesic);
  add_integration(geodesic);

  auto* go_demo = app.add_subcommand("go-demo", "Geodesics of the kappa-family on E(2)/SO(2)");
  go_demo->add_option("--kappa", config.kappa, "Lift parameter")->capture_default_str();
  go_demo->add_option("--v", v_text, "Initial velocity, comma separated (default 1,0)");
  add_common(go_demo);
  add_integration(go_demo);

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : liemetric::exit_code::kInputError;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) config.input = input;
  if (!output_path.empty()) config.output_path = output_path;
  config.format = format == "report" ? OutputFormat::Report : OutputFormat::Csv;
  try {
    if (!alpha_text.empty()) config.alpha = liemetric::parse_real_list(alpha_text);
    if (!v_text.empty()) config.v = liemetric::parse_real_list(v_text);
  } catch (const liemetric::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return liemetric::exit_code::kInputError;
  }
  return liemetric::run(config, std::cout, std::cerr);
}
