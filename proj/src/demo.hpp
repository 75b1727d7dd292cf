#ifndef SOFTTOPO_DEMO_HPP
#define SOFTTOPO_DEMO_HPP

// Built-in worked examples with pinned verdicts: a four-point space with a
// dense subspace whose trace topology changes which sets are sw-open, and
// an identity function that is sw-continuous without being semicontinuous.

#include <string>
#include <vector>

namespace softtopo {

struct DemoResult {
  bool ok = false;
  std::string text;
  std::string machine;
};

DemoResult run_demo();

// The documents the demo runs on, also usable as CLI input.
extern const char* const kSubspaceExampleJson;
extern const char* const kIdentityDomainJson;
extern const char* const kIdentityCodomainJson;
extern const char* const kIdentityFunctionJson;

}  // namespace softtopo

#endif
