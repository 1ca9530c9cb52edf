// Command-line front end: parse a session file describing an algebra, its
// modules, and an instance; run verification suites; answer membership and
// homotopy-hom queries.
//
// Exit status: 0 success / all checks pass, 1 verification failure,
// 2 malformed input.

#include "fibrant/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fibrant;

struct GlobalOptions {
  std::string config_path;
  std::string report_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> field;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void apply_overrides(ConfigDocument& doc, const GlobalOptions& options) {
  if (options.seed) doc.session.seed = *options.seed;
  if (options.field) {
    if (*options.field == "rational") {
      doc.session.field = Field::rationals();
    } else {
      doc.session.field = Field::prime(std::stoll(*options.field));
    }
  }
}

void emit(const std::string& text, const GlobalOptions& options) {
  if (options.report_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.report_path);
  out << text;
  std::cout << text;
}

Sample configured_sample(const RealizedConfig& realized, const ConfigDocument& doc) {
  std::vector<Module> seeds;
  for (const auto& [name, m] : realized.modules) seeds.push_back(m);
  Sample sample = build_sample(seeds, realized.algebra, sample_options(doc.session));
  for (const auto& [name, f] : realized.morphisms) sample.morphisms.push_back(f);
  return sample;
}

Sample dualized(const Sample& sample) {
  Sample out;
  for (const auto& x : sample.objects) out.objects.push_back(dualize(x));
  for (const auto& f : sample.morphisms) out.morphisms.push_back(dualize(f));
  return out;
}

int run_verify(const GlobalOptions& options) {
  ConfigDocument doc = parse_config(slurp(options.config_path));
  apply_overrides(doc, options);
  RealizedConfig realized = realize(doc);
  Sample sample = configured_sample(realized, doc);
  std::ostringstream report;
  bool ok = true;

  if (doc.instance.kind == "dual") {
    Cwfs dual = realize_dual_instance(doc, realized);
    Sample op_sample = dualized(sample);
    Report r = verify_cwfs(dual, op_sample);
    report << "== dual system over the opposite algebra ==\n" << r.to_string();
    ok = r.all_passed();
    report << (ok ? "RESULT PASS\n" : "RESULT FAIL\n");
    emit(report.str(), options);
    return ok ? 0 : 1;
  }

  Fwfs system = realize_instance(doc, realized);
  ModelStructure ms = derive_structure(system);

  Report base = verify_fwfs(system, sample);
  report << "== factorization system ==\n" << base.to_string();
  ok = ok && base.all_passed();

  report << "== model structure ==\n";
  for (const auto& axiom : check_all(ms, system, sample)) {
    report << axiom.to_string() << "\n";
    ok = ok && axiom.passed();
  }
  AxiomReport quotient = check_theorem_quotient_criterion(ms, sample);
  report << quotient.to_string() << "\n";
  ok = ok && quotient.passed();

  report << "== classification ==\n" << relationship_report(ms, sample).to_string();
  report << (ok ? "RESULT PASS\n" : "RESULT FAIL\n");
  emit(report.str(), options);
  return ok ? 0 : 1;
}

int run_classify(const GlobalOptions& options, const std::string& name) {
  ConfigDocument doc = parse_config(slurp(options.config_path));
  apply_overrides(doc, options);
  RealizedConfig realized = realize(doc);
  const Morphism& f = realized.morphism_named(name);
  Fwfs system = realize_instance(doc, realized);
  ModelStructure ms = derive_structure(system);

  std::ostringstream report;
  report << "morphism " << name << ": " << describe(f) << "\n";
  report << "cofibration:         " << (ms.cofib.contains(f) ? "yes" : "no") << "\n";
  report << "trivial cofibration: " << (ms.tcofib.contains(f) ? "yes" : "no") << "\n";
  report << "fibration:           " << (ms.fib.contains(f) ? "yes" : "no") << "\n";
  report << "trivial fibration:   " << (ms.tfib.contains(f) ? "yes" : "no") << "\n";
  report << "weak equivalence:    " << (ms.weq.contains(f) ? "yes" : "no") << "\n";

  if (auto split = split_mono_check(f)) {
    report << "split mono with retraction " << describe(split->retraction) << "\n";
  }
  Factorization fac = ms.factor_tcofib_fib(f);
  report << "approximation factor (f, t) through "
         << describe(fac.second.source()) << "\n";
  report << "kernel of (f, t): " << describe(kernel(fac.second).object) << "\n";
  emit(report.str(), options);
  return 0;
}

int run_ho_hom(const GlobalOptions& options, const std::string& x_name,
               const std::string& y_name) {
  ConfigDocument doc = parse_config(slurp(options.config_path));
  apply_overrides(doc, options);
  RealizedConfig realized = realize(doc);
  Fwfs system = realize_instance(doc, realized);
  ModelStructure ms = derive_structure(system);
  QuotientHom q = ho_hom(ms, realized.module_named(x_name), realized.module_named(y_name));

  std::ostringstream report;
  report << "ho-hom(" << x_name << ", " << y_name << ")\n";
  report << "ambient dim:  " << q.ambient_basis.size() << "\n";
  report << "ideal dim:    " << q.ideal_basis.size() << "\n";
  report << "quotient dim: " << q.quotient_dim << "\n";
  // Representatives: ambient basis elements independent of the ideal.
  std::size_t printed = 0;
  if (!q.ambient_basis.empty()) {
    std::size_t vec_len = q.ambient_basis.front().vectorize().rows();
    Matrix span(vec_len, q.ideal_basis.size(),
                q.ambient_basis.front().source().algebra()->field());
    for (std::size_t j = 0; j < q.ideal_basis.size(); ++j) {
      Matrix col = q.ideal_basis[j].vectorize();
      for (std::size_t i = 0; i < vec_len; ++i) span.at(i, j) = col.at(i, 0);
    }
    for (const auto& f : q.ambient_basis) {
      if (printed == q.quotient_dim) break;
      Matrix col = f.vectorize();
      bool in_span = span.cols() > 0 ? column_space_membership(span, col) : col.is_zero();
      if (in_span) continue;
      span = Matrix::hconcat(span, col);
      report << "representative " << ++printed << ": " << describe(f) << "\n";
    }
  }
  emit(report.str(), options);
  return 0;
}

int run_dual(const GlobalOptions& options) {
  ConfigDocument doc = parse_config(slurp(options.config_path));
  apply_overrides(doc, options);
  RealizedConfig realized = realize(doc);
  Fwfs system = doc.instance.kind == "dual"
                    ? dual_of_cwfs(realize_dual_instance(doc, realized))
                    : realize_instance(doc, realized);
  Cwfs dual = dual_of_fwfs(system);
  Sample sample = dualized(configured_sample(realized, doc));
  Report r = verify_cwfs(dual, sample);
  std::ostringstream report;
  report << "== dual system over the opposite algebra ==\n" << r.to_string();
  report << (r.all_passed() ? "RESULT PASS\n" : "RESULT FAIL\n");
  emit(report.str(), options);
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for fibrant model structures on module categories"};
  app.require_subcommand(1);

  GlobalOptions options;
  std::uint64_t seed_value = 0;
  std::string field_value;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", options.config_path, "session file")->required();
    cmd->add_option("--report", options.report_path, "write the report here as well");
    cmd->add_option("--seed", seed_value, "override the sampling seed")
        ->each([&](const std::string&) { options.seed = seed_value; });
    cmd->add_option("--field", field_value, "override the field: rational or a prime")
        ->each([&](const std::string&) { options.field = field_value; });
  };

  auto* verify = app.add_subcommand("verify", "run every verification suite");
  add_common(verify);

  std::string morphism_name;
  auto* classify = app.add_subcommand("classify", "class membership of a named morphism");
  add_common(classify);
  classify->add_option("morphism", morphism_name, "morphism name")->required();

  std::string x_name, y_name;
  auto* hohom = app.add_subcommand("ho-hom", "homotopy hom-group of two named modules");
  add_common(hohom);
  hohom->add_option("x", x_name, "source module name")->required();
  hohom->add_option("y", y_name, "target module name")->required();

  auto* dual = app.add_subcommand("dual", "verify the dual system over the opposite algebra");
  add_common(dual);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(options);
    if (classify->parsed()) return run_classify(options, morphism_name);
    if (hohom->parsed()) return run_ho_hom(options, x_name, y_name);
    if (dual->parsed()) return run_dual(options);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_module& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
