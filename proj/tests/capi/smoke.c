/* The public header compiles as C99 and the library links from C. */
#include <stdio.h>
#include <string.h>

#include "isored/isored.h"

static const char* kNet =
    "{\"n\": 4, \"edges\": ["
    "{\"from\": 1, \"to\": 2, \"w\": \"1\"}, {\"from\": 2, \"to\": 3, \"w\": \"1\"},"
    "{\"from\": 3, \"to\": 4, \"w\": \"1\"}, {\"from\": 4, \"to\": 3, \"w\": \"-2\"},"
    "{\"from\": 4, \"to\": 1, \"w\": \"-1\"}]}";

int main(void) {
  isored_network* net = NULL;
  char* report = NULL;
  int failures = 0;

  if (isored_network_parse(kNet, &net) != ISORED_OK) {
    fprintf(stderr, "parse: %s\n", isored_last_error());
    return 1;
  }
  if (isored_reduce(net, "1,4", NULL, ISORED_METHOD_GRAPH, 0, &report) != ISORED_OK) {
    fprintf(stderr, "reduce: %s\n", isored_last_error());
    ++failures;
  } else {
    if (strstr(report, "1/l^2") == NULL) ++failures;
    isored_string_free(report);
  }
  if (isored_reduce(net, "1,2", NULL, ISORED_METHOD_GRAPH, 0, &report) != ISORED_CYCLE_IN_COMPLEMENT) ++failures;
  if (strcmp(isored_status_name(ISORED_BAD_VERTEX_INDEX), "BadVertexIndex") != 0) ++failures;
  isored_network_free(net);

  printf("%s\n", failures == 0 ? "ok" : "failed");
  return failures == 0 ? 0 : 1;
}
