#include "dsmooth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "dsmooth/error.hpp"
#include "dsmooth/format.hpp"
#include "dsmooth/report.hpp"

namespace dsmooth {

namespace {

struct Options {
  std::string file;
  std::optional<long> gkdim;
  bool json = false;
  unsigned max_degree = 0;
  std::size_t integrability = 0;
  unsigned n_max = 6;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
};

Json input_json(const AlgebraFile& f) {
  return {{"name", f.name}, {"kind", to_string(f.kind)}, {"field", f.field().to_string()}, {"n", f.n()}};
}

void emit(std::ostream& out, const std::string& command, const Json& input, const Json& report) {
  Json j;
  j["command"] = command;
  j["input"] = input;
  j["report"] = report;
  out << j.dump(2) << "\n";
}

/// Ascending presentation for the solver.
Presentation solver_presentation(const AlgebraFile& f) {
  Presentation p = presentation_of(f);
  return p.ordering() == Ordering::ascending ? p : to_ascending(p);
}

long resolve_gkdim(const Options& o, const Presentation& p, std::ostream& err) {
  if (o.gkdim) return *o.gkdim;
  err << "notice: --gkdim not given, assuming gkdim = n = " << p.size() << "\n";
  return static_cast<long>(p.size());
}

const char* pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_smooth(const Options& o, std::ostream& out, std::ostream& err) {
  AlgebraFile f = read_algebra_file(o.file);
  Presentation p = solver_presentation(f);
  SmoothnessVerdict v = decide(p, resolve_gkdim(o, p, err));
  if (o.json) {
    emit(out, "smooth", input_json(f), to_json(v, p));
    return exit_ok;
  }
  out << to_string(v.verdict) << "\n";
  out << "gkdim: " << v.gkdim << "\n";
  if (v.witness) {
    out << "witness:\n";
    for (std::size_t k = 0; k < v.witness->size(); ++k) {
      out << "  nu_" << p.names()[k] << ":";
      for (std::size_t g = 0; g < p.size(); ++g) out << (g ? ", " : " ") << describe((*v.witness)[k], g, p);
      out << "\n";
    }
  }
  for (const auto& r : v.reasons) out << "reason: " << r << "\n";
  return exit_ok;
}

int cmd_classify3d(const Options& o, std::ostream& out, std::ostream&) {
  AlgebraFile f = read_algebra_file(o.file);
  Presentation p = solver_presentation(f);
  if (p.size() != 3) throw MismatchedArity("classify3d needs three generators, got " + std::to_string(p.size()));
  Classification c = classify_3d(p);
  if (o.json) {
    emit(out, "classify3d", input_json(f), to_json(c));
    return exit_ok;
  }
  out << c.label << "\n";
  for (const auto& [k, v] : c.params) out << "  " << k << " = " << v.to_string() << "\n";
  out << "regime: " << (c.regime_holds ? "holds" : "fails") << "\n";
  return exit_ok;
}

int cmd_calculus(const Options& o, std::ostream& out, std::ostream& err) {
  AlgebraFile f = read_algebra_file(o.file);
  Presentation p = solver_presentation(f);
  CalculusAnalysis a = analyse_calculus(p, resolve_gkdim(o, p, err), o.max_degree, o.integrability, o.seed);
  if (o.json) {
    emit(out, "calculus", input_json(f), to_json(a, p));
    return exit_ok;
  }
  out << to_string(a.verdict.verdict) << "\n";
  if (!a.built) {
    out << "no calculus: the solver found no witness family\n";
    for (const auto& r : a.verdict.reasons) out << "reason: " << r << "\n";
    return exit_ok;
  }
  out << pass_word(a.d_squared_failures == 0) << " d^2 = 0 on " << a.d_squared_checked << " forms up to degree "
      << a.max_degree << "\n";
  out << (a.connected ? "PASS" : "FAIL") << " connected up to degree " << a.max_degree << " (kernel dimension "
      << a.kernel.size() << ")\n";
  for (const auto& w : a.wedge_relations)
    out << "  d" << p.names()[w.u] << "^d" << p.names()[w.v] << " = " << w.coefficient.to_string() << " d"
        << p.names()[w.v] << "^d" << p.names()[w.u] << "\n";
  out << pass_word(a.integral_normalized) << " integral forms normalized (" << a.integral_forms.size()
      << " entries)\n";
  if (a.integrability) {
    out << pass_word(a.integrability->pass) << " integrability\n";
    for (const auto& l : a.integrability->levels)
      out << "  k=" << l.k << " samples=" << l.samples << " first=" << pass_word(l.first_pass)
          << " second=" << pass_word(l.second_pass) << "\n";
  }
  return exit_ok;
}

int cmd_diffusion_classify(const Options& o, std::ostream& out, std::ostream&) {
  AlgebraFile f = read_algebra_file(o.file);
  if (f.kind != AlgebraKind::diffusion1 || f.n() != 3)
    throw std::invalid_argument("diffusion-classify needs kind diffusion1 with n = 3");
  auto labels = classify_diffusion_3(f.diffusion());
  Presentation enc = encode_presentation(f.diffusion());
  OverlapReport pbw = check_pbw_overlaps(enc);
  if (o.json) {
    emit(out, "diffusion-classify", input_json(f), diffusion_classification_json(labels, pbw, enc));
    return exit_ok;
  }
  if (labels.empty()) out << "no class\n";
  for (const auto& l : diffusion_labels())
    if (labels.count(l)) out << l << " -> " << crosswalk_to_3d(l) << "\n";
  out << "pbw: " << pass_word(pbw.pass) << "\n";
  return exit_ok;
}

void print_report(std::ostream& out, const IdentityReport& r) {
  for (const auto& c : r.checks)
    out << pass_word(c.pass()) << " " << c.name << " (" << c.instances << " instances, " << c.failures
        << " failures)\n";
}

void print_commutation(std::ostream& out, const CommutationReport& r) {
  out << to_string(r.status) << " " << to_string(r.side) << " commutation, " << to_string(r.type);
  if (r.min_failing_n) out << ", first failure at n = " << *r.min_failing_n;
  out << "\n";
  if (r.residual) out << "  residual: " << *r.residual << "\n";
}

int cmd_verify_identities(const Options& o, std::ostream& out, std::ostream&) {
  IdentitySuite s = run_identity_suite(o.n_max, o.samples, o.seed);
  if (o.json) {
    emit(out, "verify-identities", nullptr, to_json(s));
    return exit_ok;
  }
  print_report(out, s.pq);
  for (const auto* r : {&s.right1, &s.right2, &s.left1, &s.left2}) print_commutation(out, *r);
  print_report(out, s.determinants);
  out << pass_word(s.sigma_constants.pass()) << " sigma constant terms (" << s.sigma_constants.zero << "/"
      << s.sigma_constants.instances << " zero)\n";
  out << pass_word(s.derivation_constants.pass()) << " derivation constant terms (" << s.derivation_constants.zero
      << "/" << s.derivation_constants.instances << " zero)\n";
  return exit_ok;
}

int cmd_pbw_check(const Options& o, std::ostream& out, std::ostream&) {
  AlgebraFile f = read_algebra_file(o.file);
  Presentation p = presentation_of(f);
  OverlapReport r = check_pbw_overlaps(p);
  if (o.json) {
    emit(out, "pbw-check", input_json(f), to_json(r, p));
    return exit_ok;
  }
  out << pass_word(r.pass) << "\n";
  for (const auto& t : r.triples)
    if (!t.pass)
      out << "  (" << p.names()[t.i] << "," << p.names()[t.j] << "," << p.names()[t.k]
          << "): " << p.format(t.discrepancy) << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness checks and differential calculi for quadratic algebras", "dsmooth"};
  app.require_subcommand(1);
  Options o;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "algebra file (.alg)")->required(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable report"); };

  auto* smooth = app.add_subcommand("smooth", "decide the sufficient smoothness criterion");
  file_arg(smooth);
  smooth->add_option("--gkdim", o.gkdim, "Gelfand-Kirillov dimension (default n)");
  json_flag(smooth);

  auto* classify = app.add_subcommand("classify3d", "label of a three-generator algebra");
  file_arg(classify);
  json_flag(classify);

  auto* calculus = app.add_subcommand("calculus", "build and check the differential calculus");
  file_arg(calculus);
  calculus->add_option("--max-degree", o.max_degree, "degree bound D")->required()->check(CLI::Range(0u, 12u));
  calculus->add_option("--verify-integrability", o.integrability, "random forms per degree");
  calculus->add_option("--gkdim", o.gkdim, "Gelfand-Kirillov dimension (default n)");
  calculus->add_option("--seed", o.seed, "sampling seed");
  json_flag(calculus);

  auto* diffusion = app.add_subcommand("diffusion-classify", "class labels of a three-generator diffusion algebra");
  file_arg(diffusion);
  json_flag(diffusion);

  auto* identities = app.add_subcommand("verify-identities", "randomized identity battery");
  identities->add_option("--n-max", o.n_max, "largest power n")->check(CLI::Range(1u, 12u));
  identities->add_option("--samples", o.samples, "samples per instance")->check(CLI::Range(1u, 1000u));
  identities->add_option("--seed", o.seed, "sampling seed");
  json_flag(identities);

  auto* pbw = app.add_subcommand("pbw-check", "overlap check of the rewriting rules");
  file_arg(pbw);
  json_flag(pbw);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*smooth) return cmd_smooth(o, out, err);
    if (*classify) return cmd_classify3d(o, out, err);
    if (*calculus) return cmd_calculus(o, out, err);
    if (*diffusion) return cmd_diffusion_classify(o, out, err);
    if (*identities) return cmd_verify_identities(o, out, err);
    if (*pbw) return cmd_pbw_check(o, out, err);
  } catch (const RewriteError& e) {
    err << "error: " << e.what() << "\n";
    return exit_internal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_internal;
}

}  // namespace dsmooth
