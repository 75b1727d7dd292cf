// Command-line front end. Everything semantic happens behind the C API in
// libsofttopo; this binary only parses arguments, moves strings around and
// maps statuses to exit codes:
//   0  success / all statements confirmed
//   1  counterexample, violated axioms or failed demo assertion
//   2  malformed input

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "softtopo.h"

namespace {

struct Options {
  std::string space_path;
  std::string set_name;
  std::string carrier_name;
  std::string function_path;
  std::string props;
  std::string format = "text";
  int cells = 4;
  int samples = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool strict_separation = false;
};

int finish(softtopo_status status, char* report, int ok, char* error) {
  if (report) {
    std::fputs(report, stdout);
    softtopo_string_free(report);
  }
  if (error) {
    std::fprintf(stderr, "error: %s\n", error);
    softtopo_string_free(error);
  }
  if (status == SOFTTOPO_OK) return ok ? 0 : 1;
  return status == SOFTTOPO_INPUT_ERROR ? 2 : 1;
}

softtopo_budget make_budget(const Options& opt) {
  softtopo_budget b{};
  b.max_cells = opt.cells;
  // Beyond the exhaustive range sampling is the only mode; pick a default
  // sample count when the user did not.
  b.sample_count = (opt.samples == 0 && opt.cells > 4) ? 256 : opt.samples;
  b.seed = opt.seed;
  b.jobs = opt.jobs;
  b.max_checks = 0;  // library default
  b.strict_separation = opt.strict_separation ? 1 : 0;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softtopo: a finite workbench for soft topological spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", softtopo_version());
  Options opt;

  auto add_budget_flags = [&](CLI::App* cmd) {
    cmd->add_option("--cells", opt.cells, "cell budget |E|*|X| (exhaustive through 4)");
    cmd->add_option("--samples", opt.samples, "sampled candidates per shape beyond 4 cells");
    cmd->add_option("--seed", opt.seed, "sampling seed");
    cmd->add_option("--jobs", opt.jobs, "worker threads");
  };
  app.add_option("--format", opt.format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--strict-separation", opt.strict_separation,
               "quantify separation axioms over all soft-point pairs");

  auto* validate = app.add_subcommand("validate", "check the topology axioms of a space");
  validate->add_option("--space", opt.space_path, "space document")->required();

  auto* classify = app.add_subcommand("classify", "classification vector of a named set");
  classify->add_option("--space", opt.space_path, "space document")->required();
  classify->add_option("--set", opt.set_name, "set name inside the document")->required();
  classify->add_option("--carrier", opt.carrier_name,
                       "classify relative to this subspace carrier");

  auto* map_classify =
      app.add_subcommand("map-classify", "continuity/openness flags of a soft function");
  map_classify->add_option("--function", opt.function_path, "function document")->required();

  auto* check = app.add_subcommand("check", "run proved statements of the catalog");
  check->add_option("--prop", opt.props, "comma-separated statement ids (default: all)");
  add_budget_flags(check);

  auto* search = app.add_subcommand("search", "run strictness witness searches");
  search->add_option("--prop", opt.props, "comma-separated search ids (default: all)");
  add_budget_flags(search);

  auto* enumerate = app.add_subcommand("enumerate", "count soft topologies per cell budget");
  enumerate->add_option("--cells", opt.cells, "cell count")->required();

  auto* demo = app.add_subcommand("demo", "run the built-in examples with pinned verdicts");
  (void)demo;

  CLI11_PARSE(app, argc, argv);

  char* report = nullptr;
  char* error = nullptr;
  int ok = 1;
  softtopo_status status = SOFTTOPO_OK;

  if (app.got_subcommand("validate")) {
    softtopo_space* space = nullptr;
    status = softtopo_space_load(opt.space_path.c_str(), &space, &error);
    if (status == SOFTTOPO_OK) {
      status = softtopo_space_validate(space, opt.strict_separation ? 1 : 0,
                                       opt.format.c_str(), &report, &ok, &error);
    }
    softtopo_space_free(space);
  } else if (app.got_subcommand("classify")) {
    softtopo_space* space = nullptr;
    status = softtopo_space_load(opt.space_path.c_str(), &space, &error);
    if (status == SOFTTOPO_OK) {
      status = softtopo_space_classify_set(
          space, opt.set_name.c_str(),
          opt.carrier_name.empty() ? nullptr : opt.carrier_name.c_str(),
          opt.format.c_str(), &report, &error);
    }
    softtopo_space_free(space);
  } else if (app.got_subcommand("map-classify")) {
    softtopo_function* fn = nullptr;
    status = softtopo_function_load(opt.function_path.c_str(), &fn, &error);
    if (status == SOFTTOPO_OK) {
      status = softtopo_function_classify(fn, opt.format.c_str(), &report, &error);
    }
    softtopo_function_free(fn);
  } else if (app.got_subcommand("check")) {
    const softtopo_budget budget = make_budget(opt);
    status = softtopo_check(opt.props.empty() ? nullptr : opt.props.c_str(), &budget,
                            opt.format.c_str(), &report, &ok, &error);
  } else if (app.got_subcommand("search")) {
    const softtopo_budget budget = make_budget(opt);
    status = softtopo_search(opt.props.empty() ? nullptr : opt.props.c_str(), &budget,
                             opt.format.c_str(), &report, &ok, &error);
  } else if (app.got_subcommand("enumerate")) {
    status = softtopo_enumerate_report(opt.cells, opt.format.c_str(), &report, &error);
  } else if (app.got_subcommand("demo")) {
    status = softtopo_demo(opt.format.c_str(), &report, &ok, &error);
  }

  return finish(status, report, ok, error);
}
