/* Smoke test compiled as plain C: the public header must work without a
 * C++ compiler and the basic lifecycle must hold. */

#include <softtopo.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  expect(strstr(softtopo_version(), "softtopo") != NULL, "version string");

  const char* doc =
      "{ \"universe\": { \"parameters\": [\"e1\"], \"points\": [\"a\", \"b\"] },"
      "  \"opens\": { \"A\": { \"e1\": [\"a\"] } } }";

  softtopo_space* space = NULL;
  char* error = NULL;
  expect(softtopo_space_parse(doc, "c-smoke.json", &space, &error) == SOFTTOPO_OK,
         "space parse");
  if (error) {
    fprintf(stderr, "error: %s\n", error);
    softtopo_string_free(error);
    error = NULL;
  }

  char* report = NULL;
  int ok = 0;
  expect(softtopo_space_validate(space, 0, "text", &report, &ok, &error) == SOFTTOPO_OK,
         "validate");
  expect(ok == 1, "axioms hold");
  softtopo_string_free(report);
  report = NULL;

  uint64_t count = 0;
  expect(softtopo_enumerate_count(3, &count, &error) == SOFTTOPO_OK, "enumerate");
  expect(count == 29, "29 topologies over 3 cells");

  softtopo_budget budget;
  memset(&budget, 0, sizeof budget);
  budget.max_cells = 2;
  budget.jobs = 1;
  expect(softtopo_check("P3_UNION", &budget, "machine", &report, &ok, &error) ==
             SOFTTOPO_OK,
         "check runs");
  expect(ok == 1, "statement confirmed");
  expect(report != NULL && strstr(report, "\"confirmed\"") != NULL, "machine verdict");
  softtopo_string_free(report);

  softtopo_space_free(space);
  softtopo_string_free(error);

  if (failures == 0) printf("c smoke test: ok\n");
  return failures == 0 ? 0 : 1;
}
