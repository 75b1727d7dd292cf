#ifndef SOFTTOPO_RENDER_HPP
#define SOFTTOPO_RENDER_HPP

// Report rendering. The machine format is a single JSON document with a
// stable key order and no timing data, so equal inputs give byte-equal
// output; the text format is for reading and carries per-statement wall
// times.

#include <string>

#include "checker.hpp"
#include "documents.hpp"

namespace softtopo {

// JSON text of one soft set as a parameter -> point-list object.
std::string serialize_soft_set(const SoftSet& s);

std::string render_classification(const ClassificationVector& v, const std::string& origin,
                                  const std::string& set_name, const std::string& carrier,
                                  bool machine);
std::string render_function_classification(const FunctionClassification& v,
                                           const std::string& origin, bool machine);
std::string render_validation(const std::string& origin,
                              const std::optional<std::string>& violation,
                              const SpaceProperties& props, SeparationMode mode,
                              bool machine);
std::string render_enumeration(int cells, std::uint64_t count, bool machine);
std::string render_report(const Report& report, bool machine);

const char* verdict_name(Verdict v);

}  // namespace softtopo

#endif
