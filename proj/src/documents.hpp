#ifndef SOFTTOPO_DOCUMENTS_HPP
#define SOFTTOPO_DOCUMENTS_HPP

// The on-disk document formats. A space document lists the universe, the
// named proper opens (the null and absolute sets are implicit, never
// listed) and optional auxiliary named sets; a function document names
// its endpoint spaces (inline or by path) plus the point and parameter
// maps. Parsing is strict and errors carry the document origin.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "functions.hpp"
#include "topology.hpp"

namespace softtopo {

struct SpaceDocument {
  UniversePtr universe;
  std::vector<std::pair<std::string, SoftSet>> opens;  // document order
  std::vector<std::pair<std::string, SoftSet>> sets;   // auxiliary, not opens
  bool subbasis = false;
  std::string origin;  // file name or synthetic tag, for messages

  // With subbasis=false the opens plus the implicit null/absolute sets
  // must already satisfy the axioms; with subbasis=true the topology is
  // generated from them.
  SoftTopology build_topology() const;

  // Axiom check on opens + implicit members, with names in the message.
  std::optional<std::string> validate() const;

  // Looks through sets then opens; unknown names raise InputError.
  SoftSet find_set(const std::string& name) const;
};

struct FunctionDocument {
  SpaceDocument domain;
  SpaceDocument codomain;
  std::map<std::string, std::string> point_map;
  std::map<std::string, std::string> param_map;
  std::string origin;

  SoftFunction build_function() const;
};

SpaceDocument parse_space_document(const std::string& json_text, const std::string& origin);
std::string serialize_space_document(const SpaceDocument& doc);

// Space references inside a function document are resolved through the
// loader (path -> file content). The default loader reads the filesystem
// relative to the document's directory.
using FileLoader = std::function<std::string(const std::string& path)>;

FunctionDocument parse_function_document(const std::string& json_text,
                                         const std::string& origin,
                                         const FileLoader& loader);
std::string serialize_function_document(const FunctionDocument& doc);

std::string read_text_file(const std::string& path);  // InputError on failure
SpaceDocument load_space_document(const std::string& path);
FunctionDocument load_function_document(const std::string& path);

// Document assembled from in-memory objects (used for witnesses): proper
// opens get the names O1, O2, ... in canonical order.
SpaceDocument document_from_topology(const SoftTopology& t, const std::string& origin);

}  // namespace softtopo

#endif
