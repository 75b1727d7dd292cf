#include "softtopo.h"

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

const char* kSpace = R"({
  "universe": { "parameters": ["e1"], "points": ["a", "b", "c"] },
  "opens": { "A": { "e1": ["a"] }, "AB": { "e1": ["a", "b"] } },
  "sets": { "C": { "e1": ["c"] }, "AC": { "e1": ["a", "c"] } }
})";

struct Free {
  char* s = nullptr;
  ~Free() { softtopo_string_free(s); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::strstr(softtopo_version(), "softtopo") != nullptr);
}

TEST_CASE("space lifecycle through the C surface") {
  softtopo_space* space = nullptr;
  Free err;
  REQUIRE(softtopo_space_parse(kSpace, "inline.json", &space, &err.s) == SOFTTOPO_OK);

  Free json;
  CHECK(softtopo_space_serialize(space, &json.s, &err.s) == SOFTTOPO_OK);
  CHECK(std::strstr(json.s, "\"parameters\"") != nullptr);

  Free report;
  int ok = 0;
  CHECK(softtopo_space_validate(space, 0, "machine", &report.s, &ok, &err.s) == SOFTTOPO_OK);
  CHECK(ok == 1);
  CHECK(std::strstr(report.s, "\"hyperconnected\"") != nullptr);

  Free classify;
  CHECK(softtopo_space_classify_set(space, "C", nullptr, "machine", &classify.s, &err.s) ==
        SOFTTOPO_OK);
  CHECK(std::strstr(classify.s, "\"sw_open\": false") != nullptr);
  CHECK(std::strstr(classify.s, "\"somewhere_dense\": false") != nullptr);

  Free classify2;
  CHECK(softtopo_space_classify_set(space, "AC", nullptr, "text", &classify2.s, &err.s) ==
        SOFTTOPO_OK);
  CHECK(std::strstr(classify2.s, "soft sw-open: true") != nullptr);

  Free bad;
  CHECK(softtopo_space_classify_set(space, "NoSuch", nullptr, "text", &bad.s, &err.s) ==
        SOFTTOPO_INPUT_ERROR);
  REQUIRE(err.s != nullptr);
  CHECK(std::strstr(err.s, "NoSuch") != nullptr);

  softtopo_space_free(space);
}

TEST_CASE("parse errors surface with status 2 semantics") {
  softtopo_space* space = nullptr;
  Free err;
  CHECK(softtopo_space_parse("{ nope", "bad.json", &space, &err.s) == SOFTTOPO_INPUT_ERROR);
  REQUIRE(err.s != nullptr);
  CHECK(std::strstr(err.s, "bad.json") != nullptr);
}

TEST_CASE("enumeration counts") {
  uint64_t count = 0;
  Free err;
  REQUIRE(softtopo_enumerate_count(4, &count, &err.s) == SOFTTOPO_OK);
  CHECK(count == 355);
  CHECK(softtopo_enumerate_count(9, &count, &err.s) == SOFTTOPO_INPUT_ERROR);
}

TEST_CASE("check and search through the C surface") {
  softtopo_budget budget{};
  budget.max_cells = 3;
  budget.jobs = 2;

  Free report, err;
  int ok = 0;
  REQUIRE(softtopo_check("P3_UNION,L3_SEMI_CL_IDENT", &budget, "machine", &report.s, &ok,
                         &err.s) == SOFTTOPO_OK);
  CHECK(ok == 1);
  CHECK(std::strstr(report.s, "\"verdict\": \"confirmed\"") != nullptr);

  Free search;
  REQUIRE(softtopo_search("SD_NOT_SW", &budget, "machine", &search.s, &ok, &err.s) ==
          SOFTTOPO_OK);
  CHECK(std::strstr(search.s, "\"verdict\": \"found\"") != nullptr);

  Free bad;
  CHECK(softtopo_check("NOPE", &budget, "text", &bad.s, &ok, &err.s) ==
        SOFTTOPO_INPUT_ERROR);
}

TEST_CASE("demo passes through the C surface") {
  Free report, err;
  int ok = 0;
  REQUIRE(softtopo_demo("machine", &report.s, &ok, &err.s) == SOFTTOPO_OK);
  CHECK(ok == 1);
  CHECK(std::strstr(report.s, "\"ok\": true") != nullptr);
}

TEST_CASE("function documents through the C surface") {
  const char* fn = R"({
    "domain": {
      "universe": { "parameters": ["e1"], "points": ["a", "b"] },
      "opens": { "A": { "e1": ["a"] } }
    },
    "codomain": {
      "universe": { "parameters": ["e1"], "points": ["a", "b"] },
      "opens": { "A": { "e1": ["a"] } }
    },
    "u": { "a": "a", "b": "b" },
    "p": { "e1": "e1" }
  })";
  softtopo_function* handle = nullptr;
  Free err;
  REQUIRE(softtopo_function_parse(fn, "inline-fn.json", ".", &handle, &err.s) ==
          SOFTTOPO_OK);
  Free report;
  CHECK(softtopo_function_classify(handle, "machine", &report.s, &err.s) == SOFTTOPO_OK);
  CHECK(std::strstr(report.s, "\"homeomorphism\": true") != nullptr);
  softtopo_function_free(handle);
}

TEST_CASE("strict separation changes one-point-per-parameter verdicts") {
  const char* doc = R"({
    "universe": { "parameters": ["e1", "e2"], "points": ["a"] },
    "opens": {}
  })";
  softtopo_space* space = nullptr;
  Free err;
  REQUIRE(softtopo_space_parse(doc, "tiny.json", &space, &err.s) == SOFTTOPO_OK);
  Free lax, strict;
  int ok = 0;
  CHECK(softtopo_space_validate(space, 0, "machine", &lax.s, &ok, &err.s) == SOFTTOPO_OK);
  CHECK(std::strstr(lax.s, "\"t0\": true") != nullptr);
  CHECK(softtopo_space_validate(space, 1, "machine", &strict.s, &ok, &err.s) == SOFTTOPO_OK);
  CHECK(std::strstr(strict.s, "\"t0\": false") != nullptr);
  softtopo_space_free(space);
}
