#include "documents.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace softtopo {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw InputError(origin + ": " + what);
}

int line_of_offset(const std::string& text, size_t byte) {
  int line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin + ":" + std::to_string(line_of_offset(text, e.byte)),
         std::string("JSON parse error: ") + e.what());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& origin,
                                     const std::string& where) {
  if (!j.is_array()) fail(origin, where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(origin, where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

UniversePtr parse_universe(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("parameters") || !j.contains("points")) {
    fail(origin, "universe block must list 'parameters' and 'points'");
  }
  try {
    return Universe::make(string_list(j["parameters"], origin, "universe.parameters"),
                          string_list(j["points"], origin, "universe.points"));
  } catch (const InputError& e) {
    fail(origin, e.what());
  }
}

SoftSet parse_assignment(const json& j, const UniversePtr& uni, const std::string& origin,
                         const std::string& set_name) {
  if (!j.is_object()) fail(origin, "set '" + set_name + "' must map parameters to point lists");
  std::map<std::string, std::vector<std::string>> assignment;
  for (const auto& [param, pts] : j.items()) {
    assignment[param] = string_list(pts, origin, "set '" + set_name + "' at '" + param + "'");
  }
  try {
    return make_soft_set(uni, assignment);
  } catch (const InputError& e) {
    fail(origin, std::string(e.what()) + " in set '" + set_name + "'");
  }
}

void parse_named_sets(const json& j, const UniversePtr& uni, const std::string& origin,
                      const std::string& block,
                      std::vector<std::pair<std::string, SoftSet>>& out) {
  if (!j.is_object()) fail(origin, "'" + block + "' must be an object of named sets");
  for (const auto& [name, body] : j.items()) {
    out.emplace_back(name, parse_assignment(body, uni, origin, name));
  }
}

ordered_json assignment_json(const SoftSet& s) {
  ordered_json out = ordered_json::object();
  const auto& uni = s.universe();
  for (int e = 0; e < uni->param_count(); ++e) {
    ordered_json pts = ordered_json::array();
    for (int x = 0; x < uni->point_count(); ++x) {
      if (s.contains_cell(e, x)) pts.push_back(uni->point_label(x));
    }
    if (!pts.empty()) out[uni->param_label(e)] = std::move(pts);
  }
  return out;
}

}  // namespace

SpaceDocument parse_space_document(const std::string& json_text, const std::string& origin) {
  const json j = parse_json(json_text, origin);
  if (!j.is_object()) fail(origin, "space document must be a JSON object");
  if (!j.contains("universe")) fail(origin, "space document needs a 'universe' block");

  SpaceDocument doc;
  doc.origin = origin;
  doc.universe = parse_universe(j["universe"], origin);
  if (j.contains("opens")) parse_named_sets(j["opens"], doc.universe, origin, "opens", doc.opens);
  if (j.contains("sets")) parse_named_sets(j["sets"], doc.universe, origin, "sets", doc.sets);
  if (j.contains("subbasis")) {
    if (!j["subbasis"].is_boolean()) fail(origin, "'subbasis' must be a boolean");
    doc.subbasis = j["subbasis"].get<bool>();
  }
  for (const auto& [name, s] : doc.sets) {
    (void)s;
    for (const auto& [oname, o] : doc.opens) {
      (void)o;
      if (name == oname) fail(origin, "name '" + name + "' appears in both opens and sets");
    }
  }
  return doc;
}

std::string serialize_space_document(const SpaceDocument& doc) {
  ordered_json j;
  ordered_json uni;
  uni["parameters"] = doc.universe->param_labels();
  uni["points"] = doc.universe->point_labels();
  j["universe"] = std::move(uni);
  ordered_json opens = ordered_json::object();
  for (const auto& [name, s] : doc.opens) opens[name] = assignment_json(s);
  j["opens"] = std::move(opens);
  if (!doc.sets.empty()) {
    ordered_json sets = ordered_json::object();
    for (const auto& [name, s] : doc.sets) sets[name] = assignment_json(s);
    j["sets"] = std::move(sets);
  }
  if (doc.subbasis) j["subbasis"] = true;
  return j.dump(2) + "\n";
}

SoftTopology SpaceDocument::build_topology() const {
  std::vector<SoftSet> family;
  family.push_back(SoftSet::null_set(universe));
  family.push_back(SoftSet::absolute(universe));
  for (const auto& [name, s] : opens) {
    (void)name;
    family.push_back(s);
  }
  if (subbasis) return SoftTopology::generate(universe, family);
  if (auto why = validate()) fail(origin, "not a soft topology: " + *why);
  return SoftTopology::from_family(universe, family);
}

std::optional<std::string> SpaceDocument::validate() const {
  std::vector<SoftSet> family;
  std::vector<std::string> names;
  family.push_back(SoftSet::null_set(universe));
  names.push_back("Phi_E");
  family.push_back(SoftSet::absolute(universe));
  names.push_back("X_E");
  for (const auto& [name, s] : opens) {
    family.push_back(s);
    names.push_back(name);
  }
  auto v = validate_family(universe, family);
  if (!v) return std::nullopt;
  using Kind = TopologyViolation::Kind;
  switch (v->kind) {
    case Kind::MissingUnion:
      return "the union of '" + names[v->first] + "' and '" + names[v->second] +
             "' is missing from the family";
    case Kind::MissingIntersection:
      return "the intersection of '" + names[v->first] + "' and '" + names[v->second] +
             "' is missing from the family";
    default:
      return v->message;
  }
}

SoftSet SpaceDocument::find_set(const std::string& name) const {
  for (const auto& [n, s] : sets) {
    if (n == name) return s;
  }
  for (const auto& [n, s] : opens) {
    if (n == name) return s;
  }
  if (name == "Phi_E") return SoftSet::null_set(universe);
  if (name == "X_E") return SoftSet::absolute(universe);
  throw InputError(origin + ": no set named '" + name + "' in the document");
}

namespace {

SpaceDocument parse_space_ref(const json& j, const std::string& origin,
                              const std::string& which, const FileLoader& loader) {
  if (j.is_string()) {
    const std::string path = j.get<std::string>();
    return parse_space_document(loader(path), path);
  }
  if (j.is_object()) {
    return parse_space_document(j.dump(), origin + "#" + which);
  }
  fail(origin, which + " must be a path string or an inline space document");
}

std::map<std::string, std::string> parse_label_map(const json& j, const std::string& origin,
                                                   const std::string& which) {
  if (!j.is_object()) fail(origin, "'" + which + "' must map labels to labels");
  std::map<std::string, std::string> out;
  for (const auto& [from, to] : j.items()) {
    if (!to.is_string()) fail(origin, "'" + which + "' must map labels to labels");
    out[from] = to.get<std::string>();
  }
  return out;
}

}  // namespace

FunctionDocument parse_function_document(const std::string& json_text,
                                         const std::string& origin,
                                         const FileLoader& loader) {
  const json j = parse_json(json_text, origin);
  if (!j.is_object()) fail(origin, "function document must be a JSON object");
  for (const char* key : {"domain", "codomain", "u", "p"}) {
    if (!j.contains(key)) fail(origin, std::string("function document needs '") + key + "'");
  }
  FunctionDocument doc;
  doc.origin = origin;
  doc.domain = parse_space_ref(j["domain"], origin, "domain", loader);
  doc.codomain = parse_space_ref(j["codomain"], origin, "codomain", loader);
  doc.point_map = parse_label_map(j["u"], origin, "u");
  doc.param_map = parse_label_map(j["p"], origin, "p");
  try {
    doc.build_function();  // totality checked at parse time
  } catch (const InputError& e) {
    fail(origin, e.what());
  }
  return doc;
}

std::string serialize_function_document(const FunctionDocument& doc) {
  ordered_json j;
  j["domain"] = json::parse(serialize_space_document(doc.domain));
  j["codomain"] = json::parse(serialize_space_document(doc.codomain));
  ordered_json u = ordered_json::object();
  for (int x = 0; x < doc.domain.universe->point_count(); ++x) {
    const auto& label = doc.domain.universe->point_label(x);
    u[label] = doc.point_map.at(label);
  }
  j["u"] = std::move(u);
  ordered_json p = ordered_json::object();
  for (int e = 0; e < doc.domain.universe->param_count(); ++e) {
    const auto& label = doc.domain.universe->param_label(e);
    p[label] = doc.param_map.at(label);
  }
  j["p"] = std::move(p);
  return j.dump(2) + "\n";
}

SoftFunction FunctionDocument::build_function() const {
  return SoftFunction::from_labels(domain.universe, codomain.universe, point_map, param_map);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

SpaceDocument load_space_document(const std::string& path) {
  return parse_space_document(read_text_file(path), path);
}

FunctionDocument load_function_document(const std::string& path) {
  const auto base = std::filesystem::path(path).parent_path();
  FileLoader loader = [&base](const std::string& ref) {
    const auto resolved = base / ref;
    return read_text_file(resolved.string());
  };
  return parse_function_document(read_text_file(path), path, loader);
}

SpaceDocument document_from_topology(const SoftTopology& t, const std::string& origin) {
  SpaceDocument doc;
  doc.origin = origin;
  doc.universe = t.universe();
  int n = 0;
  for (Mask m : t.opens_masks()) {
    if (m == 0 || m == t.carrier_mask()) continue;
    doc.opens.emplace_back("O" + std::to_string(++n), SoftSet(t.universe(), m));
  }
  return doc;
}

}  // namespace softtopo
