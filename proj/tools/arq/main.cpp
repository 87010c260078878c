#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "arq/quiver_io.hpp"
#include "commands.hpp"

using namespace arq::cli;

namespace {

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "quiver file")->required();
  sub->add_option("--bound", o.bound, "knitting and degree search bound")->capture_default_str();
  sub->add_option("--radius", o.radius, "cover radius")->capture_default_str();
  sub->add_flag("--json", o.json, "emit one JSON document");
  sub->add_option("--out", o.out, "write the report to FILE");
  sub->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arq: translation quivers, generic covers and degrees of irreducible morphisms"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Result(const Options&)>> verbs;

  auto* validate = app.add_subcommand("validate", "check the translation quiver axioms");
  verbs[validate] = run_validate;
  auto* mesh = app.add_subcommand("mesh", "mesh category Hom dimensions and radical layers");
  mesh->add_option("--from", o.from, "source vertex");
  mesh->add_option("--to", o.to, "target vertex");
  verbs[mesh] = run_mesh;
  auto* knit = app.add_subcommand("knit", "knit the preprojective or preinjective component");
  verbs[knit] = run_knit;
  auto* cover = app.add_subcommand("cover", "truncated generic cover");
  cover->add_option("--base", o.base, "base vertex")->capture_default_str();
  cover->add_flag("--knit", o.knit, "input is an ordinary quiver, knit it first");
  verbs[cover] = run_cover;
  auto* degree = app.add_subcommand("degree", "left and right degrees of the knitted arrows");
  degree->add_option("--arrow", o.arrow, "only this knitted arrow");
  verbs[degree] = run_degree;
  auto* finite = app.add_subcommand("finite-type", "decide finite representation type within the bound");
  verbs[finite] = run_finite_type;
  auto* probe = app.add_subcommand("probe", "compare Hom dimensions with sums over the cover");
  probe->add_option("--base", o.base, "base vertex")->capture_default_str();
  probe->add_option("--sample", o.sample, "number of pairs, 0 for all")->capture_default_str();
  probe->add_option("--levels", o.levels, "radical layers compared one by one")->capture_default_str();
  verbs[probe] = run_probe;

  for (auto& [sub, fn] : verbs) {
    add_common(sub, o);
    if (sub == knit || sub == cover || sub == degree || sub == probe)
      sub->add_flag("--from-injectives", o.from_injectives, "knit from the injectives");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Exit::usage;
  }

  Result r;
  try {
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) r = fn(o);
  } catch (const arq::ParseError& e) {
    std::cerr << o.input << ":" << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "arq: " << e.what() << "\n";
    return Exit::failed;
  }

  std::string body = o.json ? r.doc.dump(2) + "\n" : r.text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "arq: cannot write " << o.out << "\n";
      return Exit::failed;
    }
    f << body;
  }
  return r.code;
}
