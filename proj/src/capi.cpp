// extern-C surface over the C++ core. Exceptions stop here: InputError
// becomes SOFTTOPO_INPUT_ERROR, anything else SOFTTOPO_INTERNAL_ERROR, and
// the message travels through *error as a malloc'd string.

#include "softtopo.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "checker.hpp"
#include "demo.hpp"
#include "documents.hpp"
#include "render.hpp"

using namespace softtopo;

struct softtopo_space {
  SpaceDocument doc;
};

struct softtopo_function {
  FunctionDocument doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = dup_string(message);
}

template <typename Fn>
softtopo_status guarded(char** error, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    set_error(error, e.what());
    return SOFTTOPO_INPUT_ERROR;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return SOFTTOPO_INTERNAL_ERROR;
  }
}

bool machine_format(const char* format, char** error, softtopo_status* bad) {
  if (format == nullptr || std::strcmp(format, "text") == 0) {
    *bad = SOFTTOPO_OK;
    return false;
  }
  if (std::strcmp(format, "machine") == 0) {
    *bad = SOFTTOPO_OK;
    return true;
  }
  set_error(error, std::string("unknown format '") + format + "' (expected text or machine)");
  *bad = SOFTTOPO_INPUT_ERROR;
  return false;
}

SearchBudget to_budget(const softtopo_budget* b) {
  SearchBudget out;
  if (!b) return out;
  out.max_cells = b->max_cells > 0 ? b->max_cells : out.max_cells;
  out.sample_count = b->sample_count;
  out.seed = b->seed;
  out.jobs = b->jobs > 0 ? b->jobs : 1;
  if (b->max_checks > 0) out.max_checks = b->max_checks;
  out.separation =
      b->strict_separation ? SeparationMode::AllPairs : SeparationMode::SameParameter;
  return out;
}

std::vector<PropId> parse_ids(const char* ids_csv, bool searches) {
  std::vector<PropId> out;
  if (ids_csv == nullptr || *ids_csv == '\0') {
    for (PropId id : catalog()) {
      if (is_search(id) == searches) out.push_back(id);
    }
    return out;
  }
  std::string text = ids_csv;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string name =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!name.empty()) {
      auto id = prop_from_string(name);
      if (!id) throw InputError("unknown proposition id '" + name + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InputError("no proposition ids given");
  return out;
}

softtopo_status run_catalog(const char* ids_csv, const softtopo_budget* budget,
                            const char* format, char** report_out, int* ok_out,
                            char** error, int mode /*0=check 1=search 2=all*/) {
  return guarded(error, [&]() {
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    std::vector<PropId> ids;
    if (mode == 2) {
      ids = catalog();
    } else {
      ids = parse_ids(ids_csv, mode == 1);
    }
    const SearchBudget b = to_budget(budget);
    const Report report = run_report(b, &ids);
    if (report_out) *report_out = dup_string(render_report(report, machine));
    if (ok_out) *ok_out = report.ok() ? 1 : 0;
    return SOFTTOPO_OK;
  });
}

}  // namespace

extern "C" {

const char* softtopo_version(void) { return "softtopo 1.0.0"; }

void softtopo_string_free(char* s) { std::free(s); }

softtopo_status softtopo_space_parse(const char* json_text, const char* origin,
                                     softtopo_space** out, char** error) {
  return guarded(error, [&]() {
    if (!json_text || !out) throw InputError("null argument");
    *out = new softtopo_space{
        parse_space_document(json_text, origin ? origin : "<memory>")};
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_space_load(const char* path, softtopo_space** out, char** error) {
  return guarded(error, [&]() {
    if (!path || !out) throw InputError("null argument");
    *out = new softtopo_space{load_space_document(path)};
    return SOFTTOPO_OK;
  });
}

void softtopo_space_free(softtopo_space* space) { delete space; }

softtopo_status softtopo_space_serialize(const softtopo_space* space, char** json_out,
                                         char** error) {
  return guarded(error, [&]() {
    if (!space || !json_out) throw InputError("null argument");
    *json_out = dup_string(serialize_space_document(space->doc));
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_space_validate(const softtopo_space* space, int strict_separation,
                                        const char* format, char** report_out, int* ok_out,
                                        char** error) {
  return guarded(error, [&]() {
    if (!space) throw InputError("null argument");
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    const auto violation = space->doc.validate();
    SpaceProperties props;
    const SeparationMode mode =
        strict_separation ? SeparationMode::AllPairs : SeparationMode::SameParameter;
    if (!violation) {
      props = space->doc.build_topology().properties(mode);
    }
    if (report_out) {
      *report_out =
          dup_string(render_validation(space->doc.origin, violation, props, mode, machine));
    }
    if (ok_out) *ok_out = violation ? 0 : 1;
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_space_classify_set(const softtopo_space* space,
                                            const char* set_name, const char* carrier_name,
                                            const char* format, char** report_out,
                                            char** error) {
  return guarded(error, [&]() {
    if (!space || !set_name) throw InputError("null argument");
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    const SoftSet target = space->doc.find_set(set_name);
    SoftTopology topo = space->doc.build_topology();
    std::string carrier;
    if (carrier_name && *carrier_name) {
      carrier = carrier_name;
      topo = topo.subspace(space->doc.find_set(carrier));
    }
    const ClassificationVector v = topo.classify(target);
    if (report_out) {
      *report_out = dup_string(
          render_classification(v, space->doc.origin, set_name, carrier, machine));
    }
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_function_parse(const char* json_text, const char* origin,
                                        const char* base_dir, softtopo_function** out,
                                        char** error) {
  return guarded(error, [&]() {
    if (!json_text || !out) throw InputError("null argument");
    const std::string base = base_dir ? base_dir : ".";
    FileLoader loader = [&base](const std::string& ref) {
      return read_text_file(base + "/" + ref);
    };
    *out = new softtopo_function{
        parse_function_document(json_text, origin ? origin : "<memory>", loader)};
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_function_load(const char* path, softtopo_function** out,
                                       char** error) {
  return guarded(error, [&]() {
    if (!path || !out) throw InputError("null argument");
    *out = new softtopo_function{load_function_document(path)};
    return SOFTTOPO_OK;
  });
}

void softtopo_function_free(softtopo_function* fn) { delete fn; }

softtopo_status softtopo_function_classify(const softtopo_function* fn, const char* format,
                                           char** report_out, char** error) {
  return guarded(error, [&]() {
    if (!fn) throw InputError("null argument");
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    const FunctionClassification v =
        classify_function(fn->doc.build_function(), fn->doc.domain.build_topology(),
                          fn->doc.codomain.build_topology());
    if (report_out) {
      *report_out =
          dup_string(render_function_classification(v, fn->doc.origin, machine));
    }
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_enumerate_count(int cells, uint64_t* count_out, char** error) {
  return guarded(error, [&]() {
    if (!count_out) throw InputError("null argument");
    *count_out = count_topologies(cells);
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_enumerate_report(int cells, const char* format, char** report_out,
                                          char** error) {
  return guarded(error, [&]() {
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    const std::uint64_t count = count_topologies(cells);
    if (report_out) *report_out = dup_string(render_enumeration(cells, count, machine));
    return SOFTTOPO_OK;
  });
}

softtopo_status softtopo_check(const char* ids_csv, const softtopo_budget* budget,
                               const char* format, char** report_out, int* ok_out,
                               char** error) {
  return run_catalog(ids_csv, budget, format, report_out, ok_out, error, 0);
}

softtopo_status softtopo_search(const char* ids_csv, const softtopo_budget* budget,
                                const char* format, char** report_out, int* ok_out,
                                char** error) {
  return run_catalog(ids_csv, budget, format, report_out, ok_out, error, 1);
}

softtopo_status softtopo_report(const softtopo_budget* budget, const char* format,
                                char** report_out, int* ok_out, char** error) {
  return run_catalog(nullptr, budget, format, report_out, ok_out, error, 2);
}

softtopo_status softtopo_demo(const char* format, char** report_out, int* ok_out,
                              char** error) {
  return guarded(error, [&]() {
    softtopo_status bad;
    const bool machine = machine_format(format, error, &bad);
    if (bad != SOFTTOPO_OK) return bad;
    const DemoResult result = run_demo();
    if (report_out) *report_out = dup_string(machine ? result.machine : result.text);
    if (ok_out) *ok_out = result.ok ? 1 : 0;
    return SOFTTOPO_OK;
  });
}

}  // extern "C"
