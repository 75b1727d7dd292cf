#include "render.hpp"

#include "checker_detail.hpp"
#include "json.hpp"

namespace softtopo {

using nlohmann::ordered_json;

namespace {

ordered_json soft_set_json(const SoftSet& s) {
  return ordered_json::parse(serialize_soft_set(s));
}

ordered_json classification_json(const ClassificationVector& v) {
  ordered_json j;
  j["open"] = v.open;
  j["closed"] = v.closed;
  j["dense"] = v.dense;
  j["co_dense"] = v.co_dense;
  j["semiopen"] = v.semiopen;
  j["semiclosed"] = v.semiclosed;
  j["beta_open"] = v.beta_open;
  j["somewhere_dense"] = v.somewhere_dense;
  j["sw_open"] = v.sw_open;
  j["sw_closed"] = v.sw_closed;
  return j;
}

ordered_json function_classification_json(const FunctionClassification& v) {
  ordered_json j;
  j["continuous"] = v.continuous;
  j["semicontinuous"] = v.semicontinuous;
  j["beta_continuous"] = v.beta_continuous;
  j["sd_continuous"] = v.sd_continuous;
  j["sw_continuous"] = v.sw_continuous;
  j["open_map"] = v.open_map;
  j["semiopen_map"] = v.semiopen_map;
  j["beta_open_map"] = v.beta_open_map;
  j["sd_open_map"] = v.sd_open_map;
  j["sw_open_map"] = v.sw_open_map;
  j["homeomorphism"] = v.homeomorphism;
  j["sw_homeomorphism"] = v.sw_homeomorphism;
  return j;
}

ordered_json witness_json(const WitnessData& d) {
  ordered_json j;
  if (d.space) j["space"] = ordered_json::parse(serialize_space_document(*d.space));
  if (d.cod_space) {
    j["codomain_space"] = ordered_json::parse(serialize_space_document(*d.cod_space));
  }
  if (!d.sets.empty()) {
    ordered_json sets = ordered_json::object();
    for (const auto& [role, s] : d.sets) sets[role] = soft_set_json(s);
    j["sets"] = std::move(sets);
  }
  if (!d.cod_sets.empty()) {
    ordered_json sets = ordered_json::object();
    for (const auto& [role, s] : d.cod_sets) sets[role] = soft_set_json(s);
    j["codomain_sets"] = std::move(sets);
  }
  if (d.fn) {
    ordered_json u = ordered_json::object();
    for (int x = 0; x < d.fn->domain()->point_count(); ++x) {
      u[d.fn->domain()->point_label(x)] = d.fn->codomain()->point_label(d.fn->point_map()[x]);
    }
    ordered_json p = ordered_json::object();
    for (int e = 0; e < d.fn->domain()->param_count(); ++e) {
      p[d.fn->domain()->param_label(e)] = d.fn->codomain()->param_label(d.fn->param_map()[e]);
    }
    ordered_json f;
    f["u"] = std::move(u);
    f["p"] = std::move(p);
    j["function"] = std::move(f);
  }
  j["trace"] = d.trace;
  return j;
}

ordered_json properties_json(const SpaceProperties& p, SeparationMode mode) {
  ordered_json j;
  j["hyperconnected"] = p.hyperconnected;
  j["connected"] = p.connected;
  j["t0"] = p.t0;
  j["t1"] = p.t1;
  j["t2"] = p.t2;
  j["separable"] = p.separable;
  j["compact"] = p.compact;
  j["trivially_true_on_finite_models"] = ordered_json::array({"separable", "compact"});
  j["separation"] =
      mode == SeparationMode::SameParameter ? "same_parameter" : "all_pairs";
  return j;
}

void append_flag(std::string& out, const char* label, bool value) {
  out += "  ";
  out += label;
  out += ": ";
  out += value ? "true" : "false";
  out += "\n";
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return "confirmed";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::Found:
      return "found";
    case Verdict::NotFound:
      return "not_found";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "unknown";
}

std::string serialize_soft_set(const SoftSet& s) {
  ordered_json out = ordered_json::object();
  const auto& uni = s.universe();
  for (int e = 0; e < uni->param_count(); ++e) {
    ordered_json pts = ordered_json::array();
    for (int x = 0; x < uni->point_count(); ++x) {
      if (s.contains_cell(e, x)) pts.push_back(uni->point_label(x));
    }
    if (!pts.empty()) out[uni->param_label(e)] = std::move(pts);
  }
  return out.dump();
}

std::string render_classification(const ClassificationVector& v, const std::string& origin,
                                  const std::string& set_name, const std::string& carrier,
                                  bool machine) {
  if (machine) {
    ordered_json j;
    j["schema"] = "softtopo.classify/1";
    j["space"] = origin;
    j["set"] = set_name;
    if (carrier.empty()) {
      j["carrier"] = nullptr;
    } else {
      j["carrier"] = carrier;
    }
    j["flags"] = classification_json(v);
    return j.dump(2) + "\n";
  }
  std::string out = "set '" + set_name + "' over " + origin;
  if (!carrier.empty()) out += " relative to carrier '" + carrier + "'";
  out += "\n";
  append_flag(out, "soft open", v.open);
  append_flag(out, "soft closed", v.closed);
  append_flag(out, "soft dense", v.dense);
  append_flag(out, "soft co-dense", v.co_dense);
  append_flag(out, "soft semiopen", v.semiopen);
  append_flag(out, "soft semiclosed", v.semiclosed);
  append_flag(out, "soft beta-open", v.beta_open);
  append_flag(out, "soft somewhere dense", v.somewhere_dense);
  append_flag(out, "soft sw-open", v.sw_open);
  append_flag(out, "soft sw-closed", v.sw_closed);
  return out;
}

std::string render_function_classification(const FunctionClassification& v,
                                           const std::string& origin, bool machine) {
  if (machine) {
    ordered_json j;
    j["schema"] = "softtopo.map_classify/1";
    j["function"] = origin;
    j["flags"] = function_classification_json(v);
    return j.dump(2) + "\n";
  }
  std::string out = "function " + origin + "\n";
  append_flag(out, "soft continuous", v.continuous);
  append_flag(out, "soft semicontinuous", v.semicontinuous);
  append_flag(out, "soft beta-continuous", v.beta_continuous);
  append_flag(out, "soft SD-continuous", v.sd_continuous);
  append_flag(out, "soft sw-continuous", v.sw_continuous);
  append_flag(out, "soft open", v.open_map);
  append_flag(out, "soft semiopen", v.semiopen_map);
  append_flag(out, "soft beta-open", v.beta_open_map);
  append_flag(out, "soft SD-open", v.sd_open_map);
  append_flag(out, "soft sw-open", v.sw_open_map);
  append_flag(out, "soft homeomorphism", v.homeomorphism);
  append_flag(out, "soft sw-homeomorphism", v.sw_homeomorphism);
  return out;
}

std::string render_validation(const std::string& origin,
                              const std::optional<std::string>& violation,
                              const SpaceProperties& props, SeparationMode mode,
                              bool machine) {
  if (machine) {
    ordered_json j;
    j["schema"] = "softtopo.validate/1";
    j["space"] = origin;
    j["ok"] = !violation.has_value();
    if (violation) {
      j["violation"] = *violation;
    } else {
      j["violation"] = nullptr;
      j["properties"] = properties_json(props, mode);
    }
    return j.dump(2) + "\n";
  }
  std::string out = "space " + origin + "\n";
  if (violation) {
    out += "  not a soft topology: " + *violation + "\n";
    return out;
  }
  out += "  soft topology: ok\n";
  append_flag(out, "soft hyperconnected", props.hyperconnected);
  append_flag(out, "soft connected", props.connected);
  out += std::string("  separation mode: ") +
         (mode == SeparationMode::SameParameter ? "same-parameter pairs" : "all pairs") +
         "\n";
  append_flag(out, "soft T0", props.t0);
  append_flag(out, "soft T1", props.t1);
  append_flag(out, "soft T2", props.t2);
  out += "  soft separable: true (every finite space)\n";
  out += "  soft compact: true (every finite space)\n";
  return out;
}

std::string render_enumeration(int cells, std::uint64_t count, bool machine) {
  if (machine) {
    ordered_json j;
    j["schema"] = "softtopo.enumerate/1";
    j["cells"] = cells;
    j["count"] = count;
    return j.dump(2) + "\n";
  }
  return "soft topologies over " + std::to_string(cells) +
         " cells: " + std::to_string(count) + "\n";
}

std::string render_report(const Report& report, bool machine) {
  if (machine) {
    ordered_json j;
    j["schema"] = "softtopo.report/1";
    ordered_json budget;
    budget["max_cells"] = report.budget.max_cells;
    budget["sample_count"] = report.budget.sample_count;
    budget["seed"] = report.budget.seed;
    budget["max_checks"] = report.budget.max_checks;
    budget["separation"] = report.budget.separation == SeparationMode::SameParameter
                               ? "same_parameter"
                               : "all_pairs";
    j["budget"] = std::move(budget);
    ordered_json results = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json r;
      r["id"] = to_string(e.witness.id);
      r["kind"] = is_search(e.witness.id) ? "search" : "proposition";
      r["statement"] = statement(e.witness.id);
      r["verdict"] = verdict_name(e.witness.verdict);
      r["checks"] = e.witness.checks;
      r["asserted"] = e.witness.asserted;
      r["complete"] = e.witness.complete;
      if (e.witness.data) {
        r["witness"] = witness_json(*e.witness.data);
      } else {
        r["witness"] = nullptr;
      }
      results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
  }

  std::string out = "softtopo report: max_cells=" + std::to_string(report.budget.max_cells) +
                    " samples=" + std::to_string(report.budget.sample_count) +
                    " seed=" + std::to_string(report.budget.seed) + " separation=" +
                    (report.budget.separation == SeparationMode::SameParameter
                         ? "same-parameter"
                         : "all-pairs") +
                    "\n";
  for (const auto& e : report.entries) {
    std::string line = "  ";
    line += to_string(e.witness.id);
    line.resize(std::max<size_t>(line.size(), 24), ' ');
    line += " ";
    line += verdict_name(e.witness.verdict);
    line.resize(std::max<size_t>(line.size(), 42), ' ');
    line += " checks=" + std::to_string(e.witness.checks);
    line += " asserted=" + std::to_string(e.witness.asserted);
    if (!e.witness.complete) line += " (capped)";
    line += " " + std::to_string(e.wall_ms) + " ms";
    out += line + "\n";
    out += "      " + std::string(statement(e.witness.id)) + "\n";
    if (e.witness.data && !e.witness.data->trace.empty()) {
      out += "      " + e.witness.data->trace + "\n";
      if (e.witness.data->space) {
        out += "      domain universe: ";
        for (const auto& l : e.witness.data->space->universe->param_labels()) out += l + " ";
        out += "/ ";
        for (const auto& l : e.witness.data->space->universe->point_labels()) out += l + " ";
        out += "\n";
        for (const auto& [name, s] : e.witness.data->space->opens) {
          out += "        open " + name + " = " + s.to_text() + "\n";
        }
        for (const auto& [role, s] : e.witness.data->sets) {
          out += "        set " + role + " = " + s.to_text() + "\n";
        }
      }
      if (e.witness.data->cod_space) {
        out += "      codomain opens:";
        for (const auto& [name, s] : e.witness.data->cod_space->opens) {
          out += " " + name + " = " + s.to_text();
        }
        out += "\n";
      }
      if (e.witness.data->fn) {
        out += "      function: " + detail::fn_text(*e.witness.data->fn) + "\n";
      }
    }
  }
  int confirmed = 0, counterexamples = 0, found = 0, not_found = 0, vacuous = 0;
  for (const auto& e : report.entries) {
    switch (e.witness.verdict) {
      case Verdict::Confirmed:
        ++confirmed;
        break;
      case Verdict::Counterexample:
        ++counterexamples;
        break;
      case Verdict::Found:
        ++found;
        break;
      case Verdict::NotFound:
        ++not_found;
        break;
      case Verdict::Vacuous:
        ++vacuous;
        break;
    }
  }
  out += "summary: " + std::to_string(confirmed) + " confirmed, " +
         std::to_string(counterexamples) + " counterexamples, " + std::to_string(vacuous) +
         " vacuous, " + std::to_string(found) + " witnesses found, " +
         std::to_string(not_found) + " not found within budget\n";
  return out;
}

}  // namespace softtopo
