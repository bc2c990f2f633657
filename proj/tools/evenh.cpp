#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "evenh/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Homology of even Artin and even Coxeter groups: bases, products, "
      "and finite-group cross-checks"};
  app.require_subcommand(1);

  evenh::RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option(
        "--input", cfg.input,
        "Coxeter matrix: a file path, inline text (use ';' as a line "
        "separator), or '-' for stdin");
    if (needs_input) in->required();
    sub->add_option("--format", cfg.format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--max-cosets", cfg.max_cosets,
                    "coset cap for enumeration");
    sub->add_option("--max-order", cfg.max_order,
                    "cap for finite-group construction and bar-resolution "
                    "homology");
    sub->add_option("--max-k", cfg.max_k, "cap for the w_k recursion");
  };

  auto* validate =
      app.add_subcommand("validate", "parse a matrix and report its bonds");
  add_common(validate, true);

  auto* h1 = app.add_subcommand("h1", "first homology basis");
  add_common(h1, true);
  h1->add_option("--group", cfg.group, "artin or coxeter")
      ->check(CLI::IsMember({"artin", "coxeter"}));

  auto* h2 = app.add_subcommand("h2", "second homology basis");
  add_common(h2, true);
  h2->add_option("--group", cfg.group, "artin or coxeter")
      ->check(CLI::IsMember({"artin", "coxeter"}));

  auto* cup = app.add_subcommand("cup", "cup products of degree-1 classes");
  add_common(cup, true);

  auto* pont = app.add_subcommand(
      "pontryagin", "pontryagin products landing on the H2 basis");
  add_common(pont, true);
  pont->add_option("--group", cfg.group, "artin or coxeter")
      ->check(CLI::IsMember({"artin", "coxeter"}));

  auto* cls = app.add_subcommand(
      "class", "H2 class of a relator-product file, cross-checked");
  add_common(cls, true);
  cls->add_option("file", cfg.file, "relator-product file")->required();

  auto* verify = app.add_subcommand(
      "verify", "run the full self-check battery on a matrix");
  add_common(verify, true);

  auto* oracle = app.add_subcommand(
      "oracle-h2",
      "bar-resolution homology of a small finite group (enumerated from "
      "the matrix or constructed directly)");
  add_common(oracle, false);
  oracle->add_option(
      "--construct", cfg.construct,
      "dihedral:<k>, elementary:<k>, or product:<spec>,<spec>");
  oracle->add_option("--dump-table", cfg.dump_table,
                     "write the multiplication table fixture to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : evenh::kExitUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "oracle-h2" && cfg.construct.empty() &&
      cfg.input.empty()) {
    std::cerr << "error (parse): oracle-h2 needs --input or --construct\n";
    return evenh::kExitUsage;
  }
  return evenh::run(cfg, std::cout, std::cerr);
}
