#include "demo.hpp"

#include "documents.hpp"
#include "json.hpp"

namespace softtopo {

const char* const kSubspaceExampleJson = R"({
  "universe": { "parameters": ["e1", "e2"], "points": ["w", "x", "y", "z"] },
  "opens": {
    "F": { "e1": ["x", "z"], "e2": ["w", "x"] },
    "G": { "e1": ["w", "x", "y", "z"], "e2": ["y", "z"] },
    "H": { "e1": ["x", "z"] }
  },
  "sets": {
    "Y": { "e1": ["x", "y"], "e2": ["x", "y"] },
    "I": { "e1": ["x"], "e2": ["x"] },
    "J": { "e1": ["x", "y"], "e2": ["y"] },
    "K": { "e1": ["x"] }
  }
})";

const char* const kIdentityDomainJson = R"({
  "universe": { "parameters": ["e1", "e2"], "points": ["x", "y", "z"] },
  "opens": {
    "F": { "e1": ["y"], "e2": ["y"] },
    "G": { "e1": ["x", "z"], "e2": ["x", "z"] }
  }
})";

const char* const kIdentityCodomainJson = R"({
  "universe": { "parameters": ["e1", "e2"], "points": ["x", "y", "z"] },
  "opens": {
    "H": { "e1": ["x", "y", "z"], "e2": ["x", "y"] }
  }
})";

const char* const kIdentityFunctionJson = R"({
  "domain": "identity_domain.json",
  "codomain": "identity_codomain.json",
  "u": { "x": "x", "y": "y", "z": "z" },
  "p": { "e1": "e1", "e2": "e2" }
})";

namespace {

struct Assertion {
  std::string name;
  bool expected;
  bool actual;
  bool ok() const { return expected == actual; }
};

}  // namespace

DemoResult run_demo() {
  std::vector<Assertion> checks;

  // Dense-subspace example.
  const SpaceDocument space = parse_space_document(kSubspaceExampleJson, "subspace demo");
  checks.push_back({"subspace: the listed family is a soft topology",
                    true, !space.validate().has_value()});
  const SoftTopology t = space.build_topology();
  const SoftSet y = space.find_set("Y");
  const SoftTopology over_y = t.subspace(y);

  std::vector<Mask> expected_rel = {SoftSet::null_set(space.universe).bits(),
                                    space.find_set("I").bits(), space.find_set("J").bits(),
                                    space.find_set("K").bits(), y.bits()};
  std::sort(expected_rel.begin(), expected_rel.end());
  checks.push_back({"subspace: T_Y is exactly {Phi_E, I, J, K, Y_E}", true,
                    over_y.opens_masks() == expected_rel});
  checks.push_back({"subspace: Y_E is soft dense over X", true, t.classify(y).dense});
  const SoftSet i = space.find_set("I");
  checks.push_back({"subspace: I_E is soft sw-open over Y", true, over_y.classify(i).sw_open});
  checks.push_back({"subspace: I_E is soft sw-open over X", false, t.classify(i).sw_open});

  // Identity-function example.
  FileLoader loader = [](const std::string& ref) -> std::string {
    if (ref == "identity_domain.json") return kIdentityDomainJson;
    if (ref == "identity_codomain.json") return kIdentityCodomainJson;
    throw InputError("unknown reference '" + ref + "'");
  };
  const FunctionDocument fdoc =
      parse_function_document(kIdentityFunctionJson, "identity demo", loader);
  const SoftFunction f = fdoc.build_function();
  const FunctionClassification fc =
      classify_function(f, fdoc.domain.build_topology(), fdoc.codomain.build_topology());
  checks.push_back({"identity: soft sw-continuous", true, fc.sw_continuous});
  checks.push_back({"identity: soft semicontinuous", false, fc.semicontinuous});
  checks.push_back({"identity: soft continuous", false, fc.continuous});

  DemoResult result;
  result.ok = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& a : checks) {
    result.ok = result.ok && a.ok();
    result.text += a.name + ": " + (a.actual ? "true" : "false") +
                   (a.ok() ? "" : std::string("  (expected ") +
                                      (a.expected ? "true" : "false") + ")") +
                   "\n";
    nlohmann::ordered_json j;
    j["name"] = a.name;
    j["expected"] = a.expected;
    j["actual"] = a.actual;
    arr.push_back(std::move(j));
  }
  result.text += result.ok ? "demo: all assertions hold\n" : "demo: ASSERTIONS FAILED\n";
  nlohmann::ordered_json top;
  top["schema"] = "softtopo.demo/1";
  top["assertions"] = std::move(arr);
  top["ok"] = result.ok;
  result.machine = top.dump(2) + "\n";
  return result;
}

}  // namespace softtopo
