#include <chrono>
#include <iostream>

#include "CLI11.hpp"

#include "primex/cli.hpp"

namespace {

int emit(primex::CommandResult const &result,
         std::chrono::steady_clock::time_point start) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << primex::result_envelope(result, elapsed).dump(2) << "\n";
  return result.ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Solvable primitive permutation groups and dyadic quartics"};
  app.require_subcommand(1);

  std::string file, normal, gl_spec, out_dir, coeffs;
  int l = 0, n = 0, precision = 64, mod_bits = 0;

  auto *group = app.add_subcommand("group", "Permutation group queries");
  group->require_subcommand(1);
  auto *info = group->add_subcommand("info", "Order, transitivity, "
                                             "primitivity, solvability");
  info->add_option("file", file, "group file")->required();
  auto *affine = group->add_subcommand(
      "affine", "Affine coordinates of a solvable primitive group");
  affine->add_option("file", file, "group file")->required();

  auto *cohom = app.add_subcommand(
      "cohom", "H^0, H^1, H^2 of a conjugation module or GL subgroup");
  cohom->add_option("file", file, "group file (with --normal)");
  cohom->add_option("--normal", normal,
                    "normal subgroup generators 'i,j,...;i,j,...'");
  cohom->add_option("--gl-subgroup", gl_spec,
                    "matrix generators 'n,l;a,b,...;...' acting on F_l^n");

  auto *ext = app.add_subcommand("ext", "Extension and complement queries");
  ext->require_subcommand(1);
  auto *comp = ext->add_subcommand("complements",
                                   "Complements of a normal subgroup");
  comp->add_option("file", file, "group file")->required();
  comp->add_option("--normal", normal,
                   "normal subgroup generators 'i,j,...;i,j,...'")
      ->required();

  auto *enumerate = app.add_subcommand(
      "enumerate", "Solvable primitive groups of degree l^n");
  enumerate->add_option("--l", l, "prime l")->required();
  enumerate->add_option("--n", n, "exponent n")->required();
  enumerate->add_option("--out", out_dir, "write group files and manifest");

  auto *quartic = app.add_subcommand("quartic", "Eisenstein quartics over Q_2");
  quartic->require_subcommand(1);
  auto *classify = quartic->add_subcommand("classify",
                                           "Classify one Eisenstein quartic");
  classify->add_option("--coeffs", coeffs, "a,b,c,d of x^4+ax^3+bx^2+cx+d")
      ->required();
  classify->add_option("--precision", precision, "2-adic working precision");
  auto *scan = quartic->add_subcommand("scan", "Sweep of Eisenstein quartics");
  scan->add_option("--mod-bits", mod_bits, "coefficient box is 2^mod-bits")
      ->required();

  CLI11_PARSE(app, argc, argv);
  auto start = std::chrono::steady_clock::now();

  if (info->parsed())
    return emit(primex::cmd_group_info(file), start);
  if (affine->parsed())
    return emit(primex::cmd_affine(file), start);
  if (cohom->parsed()) {
    if (!gl_spec.empty())
      return emit(primex::cmd_cohom_gl(gl_spec), start);
    if (file.empty() || normal.empty()) {
      std::cerr << "cohom needs either --gl-subgroup or a file with --normal\n";
      return 1;
    }
    return emit(primex::cmd_cohom_file(file, normal), start);
  }
  if (comp->parsed())
    return emit(primex::cmd_complements(file, normal), start);
  if (enumerate->parsed())
    return emit(primex::cmd_enumerate(l, n, out_dir), start);
  if (classify->parsed())
    return emit(primex::cmd_quartic_classify(coeffs, precision), start);
  if (scan->parsed())
    return emit(primex::cmd_quartic_scan(mod_bits), start);

  std::cerr << "no subcommand\n";
  return 1;
}
