// balcat: balanced tensor products of graded module categories from the
// command line. Prints one JSON report on stdout and a summary on stderr;
// exits 0 iff every check passed, 1 on a failed check, 2 on bad input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "balcat/cli/commands.hpp"

namespace {

int emit(const balcat::RunReport& rep, const std::string& report_path) {
  const std::string text = rep.to_json().dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << report_path << "\n";
      return 2;
    }
    out << text;
  }
  std::cerr << rep.summary();
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced tensor products of graded module categories"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "also write the JSON report to this file");

  balcat::ProductOptions prod;
  auto* bp = app.add_subcommand("balanced-product", "build Bimod_{A,B}(Vect[K]) and check it");
  bp->add_option("--group", prod.group, "cyclic:n, symmetric:n or a group file")->capture_default_str();
  bp->add_option("--field", prod.field, "Q or Fp:p")->capture_default_str();
  bp->add_option("--algebra-a", prod.algebra_a, "group-algebra, unit or a graded algebra file")
      ->capture_default_str();
  bp->add_option("--algebra-b", prod.algebra_b, "group-algebra, unit or a graded algebra file")
      ->capture_default_str();
  bp->add_option("--splitting", prod.splitting, "auto, yes or no: whether the field splits E")
      ->capture_default_str();
  bp->add_option("--seed", prod.seed, "seed for the hom-formula sweep")->capture_default_str();
  bp->add_option("--sweep", prod.sweep, "number of hom-formula instances")->capture_default_str();
  bp->add_option("--report", report_path, "also write the JSON report to this file");

  balcat::VerifyOptions ver;
  std::string scope = "all";
  auto* vf = app.add_subcommand("verify", "run the built-in invariant suites");
  vf->add_option("--scope", scope, "linalg, algebra, graded, modcat, balanced or all")->capture_default_str();
  vf->add_option("--seed", ver.seed, "corpus seed")->capture_default_str();
  vf->add_flag("--inject-fault", ver.inject_fault, "corrupt one structure constant of the reference algebra");
  vf->add_option("--report", report_path, "also write the JSON report to this file");

  balcat::HomcheckOptions hc;
  auto* hk = app.add_subcommand("homcheck", "compare both sides of the hom formula");
  hk->add_option("--group", hc.group, "cyclic:n, symmetric:n or a group file")->capture_default_str();
  hk->add_option("--field", hc.field, "Q or Fp:p")->capture_default_str();
  hk->add_option("--algebra-a", hc.algebra_a, "group-algebra, unit or a graded algebra file")
      ->capture_default_str();
  hk->add_option("--algebra-b", hc.algebra_b, "group-algebra, unit or a graded algebra file")
      ->capture_default_str();
  hk->add_option("--x", hc.x, "left A-module: regular, zero or a module file")->capture_default_str();
  hk->add_option("--x2", hc.x2, "left A-module x'")->capture_default_str();
  hk->add_option("--y", hc.y, "right B-module")->capture_default_str();
  hk->add_option("--y2", hc.y2, "right B-module y'")->capture_default_str();
  hk->add_option("--report", report_path, "also write the JSON report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bp) return emit(balcat::cmd_balanced_product(prod), report_path);
    if (*hk) return emit(balcat::cmd_homcheck(hc), report_path);
    const auto s = balcat::parse_scope(scope);
    if (!s) throw balcat::InputError("--scope must be one of linalg, algebra, graded, modcat, balanced, all");
    ver.scope = *s;
    return emit(balcat::cmd_verify(ver), report_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
