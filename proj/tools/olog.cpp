// olog: check, simulate and compare olog instances.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "olog/commands.hpp"
#include "olog/dsl.hpp"

namespace {

int emit(const olog::CommandResult& r, bool quiet) {
  if (quiet) {
    std::cout << r.report.verdict << '\n';
  } else {
    std::cout << r.report.render();
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check, simulate and compare olog schemas and instances"};
  app.require_subcommand(1);
  app.fallthrough();

  olog::GlobalOptions opts;
  app.add_option("--eps-rel", opts.comparators.eps_rel, "relative tolerance for 'roughly equal'")
      ->capture_default_str();
  app.add_option("--kappa", opts.comparators.kappa, "ratio threshold for 'much greater'")
      ->capture_default_str();
  app.add_flag("-q,--quiet", opts.quiet, "print the verdict only");

  // check
  std::string schema_path;
  std::optional<std::string> instance_path;
  auto* check = app.add_subcommand("check", "validate a schema and optionally an instance");
  check->add_option("schema", schema_path, "schema file (.olog)")->required();
  check->add_option("instance", instance_path, "instance file (.oinst)");

  // simulate
  std::string domain = "protein";
  std::optional<int> bricks;
  std::optional<double> glue_fail, ll_rest, ll_fail, brick_fail;
  bool lifeline = false;
  std::optional<std::string> out_path;
  auto* sim = app.add_subcommand("simulate", "generate an instance from a chain model");
  sim->add_option("--domain", domain, "protein or social")
      ->check(CLI::IsMember({"protein", "social"}))
      ->capture_default_str();
  sim->add_option("--bricks", bricks, "number of bricks");
  sim->add_option("--glue-fail", glue_fail, "glue failure extension");
  sim->add_flag("--lifeline", lifeline, "add a lifeline to every segment");
  sim->add_option("--ll-rest", ll_rest, "lifeline resting extension");
  sim->add_option("--ll-fail", ll_fail, "lifeline failure extension (inf allowed)");
  sim->add_option("--brick-fail", brick_fail, "brick failure extension (inf allowed)");
  sim->add_option("-o,--out", out_path, "output .oinst path");

  // iso
  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two instances");
  iso->add_option("schema", schema_path)->required();
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  // analogy
  olog::AnalogyOptions analogy;
  auto* ana = app.add_subcommand("analogy", "protein vs social network, end to end");
  ana->add_option("--bricks-a", analogy.bricks_a, "protein bricks")->capture_default_str();
  ana->add_option("--bricks-b", analogy.bricks_b, "social rooms")->capture_default_str();

  // pullback
  std::string pb_inst, leg1, leg2;
  auto* pb = app.add_subcommand("pullback", "print the canonical pullback of two legs");
  pb->add_option("schema", schema_path)->required();
  pb->add_option("instance", pb_inst)->required();
  pb->add_option("leg1", leg1)->required();
  pb->add_option("leg2", leg2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? olog::kExitOk : olog::kExitParse;
  }

  if (*check) return emit(olog::cmd_check(schema_path, instance_path, opts), opts.quiet);
  if (*iso) return emit(olog::cmd_iso(schema_path, iso_a, iso_b, opts), opts.quiet);
  if (*ana) return emit(olog::cmd_analogy(analogy, opts), opts.quiet);
  if (*pb) return emit(olog::cmd_pullback(schema_path, pb_inst, leg1, leg2, opts), opts.quiet);

  olog::SimParams p = domain == "social" ? olog::social_defaults() : olog::protein_defaults();
  p.lifeline_present = lifeline;
  if (bricks) p.brick_count = *bricks;
  if (glue_fail) p.glue_failure = *glue_fail;
  if (ll_rest) p.lifeline_resting = *ll_rest;
  if (ll_fail) p.lifeline_failure = *ll_fail;
  if (brick_fail) p.brick_failure = *brick_fail;
  return emit(olog::cmd_simulate(p, out_path, opts), opts.quiet);
}
