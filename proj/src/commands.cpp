#include "olog/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "olog/bundled.hpp"
#include "olog/dsl.hpp"
#include "olog/evaluation.hpp"
#include "olog/isomorphism.hpp"

namespace olog {

std::string RunReport::comparable() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (const auto& in : inputs) os << "input: " << in << '\n';
  for (const auto& l : lines) os << l << '\n';
  os << "verdict: " << verdict << '\n';
  return os.str();
}

std::string RunReport::render() const {
  return comparable() + "---\nelapsed_ms: " + std::to_string(elapsed_ms) + '\n';
}

int exit_code_for(const std::string& code) {
  if (code == codes::kParseError || code == codes::kDuplicateId || code == codes::kIoError) {
    return kExitParse;
  }
  if (code == codes::kParamConstraint || code == codes::kDomain) return kExitParam;
  return kExitViolation;
}

namespace {

using Body = std::function<int(RunReport&)>;

CommandResult run(std::string command, std::vector<std::string> inputs, const GlobalOptions& opts,
                  const Body& body) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult res;
  res.report.command = std::move(command);
  res.report.inputs = std::move(inputs);
  try {
    validate_comparators(opts.comparators);
    res.exit_code = body(res.report);
  } catch (const OlogError& e) {
    res.report.lines.push_back(std::string("error: ") + e.what());
    res.exit_code = exit_code_for(e.code());
  }
  res.report.verdict = res.exit_code == kExitOk ? "PASS" : "FAIL";
  res.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return res;
}

OlogSchema load_schema(const std::string& path, RunReport& report, bool& ok) {
  ParsedSchema parsed = parse_schema(read_text_file(path), path);
  const auto& s = parsed.schema;
  report.lines.push_back("schema: " + s.name + " boxes=" + std::to_string(s.boxes.size()) +
                         " arrows=" + std::to_string(s.arrows.size()) +
                         " equations=" + std::to_string(s.equations.size()) +
                         " pullbacks=" + std::to_string(s.fiber_products.size()));
  if (parsed.implicit_squares > 0) {
    report.lines.push_back("implicit_squares: " + std::to_string(parsed.implicit_squares));
  }
  ok = !has_errors(parsed.diagnostics);
  for (const auto& d : parsed.diagnostics) {
    std::ostringstream os;
    os << "diagnostic: " << d;
    report.lines.push_back(os.str());
  }
  return std::move(parsed.schema);
}

std::string equation_line(const EquationReport& r) {
  std::string s = "eq " + r.equation.lhs.start + " " + arrow_list(r.equation.lhs) + " = " +
                  arrow_list(r.equation.rhs) + ": " + std::string(to_string(r.verdict));
  if (r.witness) {
    s += " at " + r.witness->element + " (" + r.witness->lhs_result + " vs " +
         r.witness->rhs_result + ")";
  }
  return s;
}

// Validation, equations and fiber products. Returns true iff all pass.
bool check_instance(const OlogSchema& schema, const Instance& inst, RunReport& report,
                    const std::string& tag) {
  const std::string pre = tag.empty() ? "" : tag + " ";
  std::size_t elements = 0;
  for (const auto& [box, set] : inst.sets) elements += set.size();
  report.lines.push_back(pre + "instance: " + inst.name + " elements=" + std::to_string(elements));
  const auto diags = validate_instance(schema, inst);
  for (const auto& d : diags) {
    std::ostringstream os;
    os << pre << "diagnostic: " << d;
    report.lines.push_back(os.str());
  }
  if (has_errors(diags)) return false;

  bool ok = true;
  std::size_t held = 0;
  for (const auto& r : check_all_equations(schema, inst)) {
    report.lines.push_back(pre + equation_line(r));
    if (r.verdict == EquationVerdict::AllHold) {
      ++held;
    } else {
      ok = false;
    }
  }
  std::size_t passed = 0;
  for (const auto& fp : schema.fiber_products) {
    const auto r = verify_fiber_product(schema, inst, fp);
    report.lines.push_back(pre + r.describe());
    if (r.verdict == FiberProductVerdict::Pass) {
      ++passed;
    } else {
      ok = false;
    }
  }
  report.lines.push_back(pre + "equations: " + std::to_string(held) + "/" +
                         std::to_string(schema.equations.size()) + " hold");
  report.lines.push_back(pre + "pullbacks: " + std::to_string(passed) + "/" +
                         std::to_string(schema.fiber_products.size()) + " pass");
  return ok;
}

void iso_lines(const IsoResult& r, RunReport& report) {
  report.lines.push_back("iso: " + std::string(to_string(r.verdict)) +
                         " search_nodes=" + std::to_string(r.search_nodes));
  if (r.verdict != IsoVerdict::Found) {
    report.lines.push_back("certificate: " + r.failure_reason);
    return;
  }
  for (const auto& [box, beta] : r.bijections) {
    std::string line = "bijection " + box + ":";
    for (const auto& [x, y] : beta) line += " " + x + "->" + y;
    report.lines.push_back(line);
  }
}

}  // namespace

CommandResult cmd_check(const std::string& schema_path, const std::optional<std::string>& instance_path,
                        const GlobalOptions& opts) {
  std::vector<std::string> inputs{schema_path};
  if (instance_path) inputs.push_back(*instance_path);
  return run("check", inputs, opts, [&](RunReport& report) {
    bool ok = true;
    const OlogSchema schema = load_schema(schema_path, report, ok);
    if (!instance_path) return ok ? kExitOk : kExitViolation;
    const Instance inst = parse_instance(read_text_file(*instance_path), *instance_path);
    if (!ok) return kExitViolation;
    return check_instance(schema, inst, report, "") ? kExitOk : kExitViolation;
  });
}

CommandResult cmd_simulate(const SimParams& params, const std::optional<std::string>& out_path,
                           const GlobalOptions& opts) {
  std::vector<std::string> inputs;
  return run("simulate", inputs, opts, [&](RunReport& report) {
    report.lines.push_back("domain: " + std::string(to_string(params.domain)));
    report.lines.push_back("bricks: " + std::to_string(params.brick_count));
    report.lines.push_back("lifeline: " + std::string(params.lifeline_present ? "yes" : "no"));
    const GeneratedInstance g = generate_instance(params, bundled_schema(), opts.comparators);
    report.lines.push_back("failure=" + format_real(g.system_failure) +
                           " class=" + std::string(to_string(g.classification)));
    report.lines.push_back("glue_failure: " + format_real(g.glue_failure));
    if (out_path) {
      write_text_file(*out_path, serialize_instance(g.instance));
      report.lines.push_back("written: " + *out_path);
    }
    return kExitOk;
  });
}

CommandResult cmd_iso(const std::string& schema_path, const std::string& a_path,
                      const std::string& b_path, const GlobalOptions& opts) {
  return run("iso", {schema_path, a_path, b_path}, opts, [&](RunReport& report) {
    bool ok = true;
    const OlogSchema schema = load_schema(schema_path, report, ok);
    const Instance a = parse_instance(read_text_file(a_path), a_path);
    const Instance b = parse_instance(read_text_file(b_path), b_path);
    if (!ok) return kExitViolation;
    const IsoResult r = check_instance_isomorphism(schema, a, b);
    iso_lines(r, report);
    return r.verdict == IsoVerdict::Found ? kExitOk : kExitViolation;
  });
}

CommandResult cmd_analogy(const AnalogyOptions& analogy, const GlobalOptions& opts) {
  return run("analogy", {"<bundled paper.olog>"}, opts, [&](RunReport& report) {
    const OlogSchema& schema = bundled_schema();
    const Comparators& c = opts.comparators;
    report.lines.push_back("eps_rel: " + format_real(c.eps_rel));
    report.lines.push_back("kappa: " + format_real(c.kappa));

    SimParams pa = protein_defaults();
    pa.brick_count = analogy.bricks_a;
    SimParams pb = matched_social_defaults();
    pb.brick_count = analogy.bricks_b;

    const GeneratedInstance a = generate_instance(pa, schema, c, "protein");
    report.lines.push_back("protein failure=" + format_real(a.system_failure) +
                           " class=" + std::string(to_string(a.classification)));
    const GeneratedInstance b = generate_instance(pb, schema, c, "social");
    report.lines.push_back("social failure=" + format_real(b.system_failure) +
                           " class=" + std::string(to_string(b.classification)));

    bool ok = check_instance(schema, a.instance, report, "protein");
    ok = check_instance(schema, b.instance, report, "social") && ok;

    const IsoResult r = check_instance_isomorphism(schema, a.instance, b.instance);
    iso_lines(r, report);
    if (r.verdict != IsoVerdict::Found) return kExitViolation;
    std::string why;
    if (!is_natural_isomorphism(schema, a.instance, b.instance, r.bijections, &why)) {
      report.lines.push_back("naturality: FAIL " + why);
      return kExitViolation;
    }
    report.lines.push_back("naturality: commutes with all " + std::to_string(schema.arrows.size()) +
                           " arrows");
    return ok ? kExitOk : kExitViolation;
  });
}

CommandResult cmd_pullback(const std::string& schema_path, const std::string& instance_path,
                           const std::string& leg1, const std::string& leg2,
                           const GlobalOptions& opts) {
  return run("pullback", {schema_path, instance_path}, opts, [&](RunReport& report) {
    bool ok = true;
    const OlogSchema schema = load_schema(schema_path, report, ok);
    const Instance inst = parse_instance(read_text_file(instance_path), instance_path);
    if (!ok) return kExitViolation;
    const PullbackResult pb = compute_pullback(schema, inst, leg1, leg2);
    report.lines.push_back("cospan: " + pb.left_box + " -" + leg1 + "-> " + pb.base_box + " <-" +
                           leg2 + "- " + pb.right_box);
    report.lines.push_back("size: " + std::to_string(pb.pairs.size()));
    for (const auto& [x, y] : pb.pairs) report.lines.push_back("pair: (" + x + ", " + y + ")");
    return kExitOk;
  });
}

}  // namespace olog
