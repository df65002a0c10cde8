/* Exercises the C interface from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "excross/excross.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void groups(void) {
  excross_group* g = NULL;
  size_t out = 0;
  char* name = NULL;
  EXPECT(excross_group_load("cyclic 4", &g) == EXCROSS_OK);
  EXPECT(excross_group_order(g) == 4);
  EXPECT(excross_group_multiply(g, 3, 2, &out) == EXCROSS_OK && out == 1);
  EXPECT(excross_group_inverse(g, 1, &out) == EXCROSS_OK && out == 3);
  EXPECT(excross_group_name(g, 0, &name) == EXCROSS_OK && strcmp(name, "e") == 0);
  excross_string_free(name);
  EXPECT(excross_group_multiply(g, 9, 0, &out) == EXCROSS_E_INDEX_OUT_OF_RANGE);
  EXPECT(strlen(excross_last_error()) > 0);
  excross_group_free(g);

  g = NULL;
  EXPECT(excross_group_from_json("{\"names\": [\"e\", \"t\"], \"table\": [[0, 1], [1, 1]]}", &g) ==
         EXCROSS_E_NON_LATIN_SQUARE);
  EXPECT(g == NULL);
  EXPECT(excross_group_from_json("{\"names\": [\"e\", \"t\"], \"table\": [[0, 1], [1, 0]]}", &g) == EXCROSS_OK);
  EXPECT(excross_group_order(g) == 2);
  excross_group_free(g);

  EXPECT(excross_group_load("{", &g) == EXCROSS_E_BAD_DOCUMENT);
  EXPECT(excross_group_load(NULL, &g) == EXCROSS_E_INVALID_ARGUMENT);
}

static void semigroup(void) {
  excross_group* g = NULL;
  excross_semigroup* sg = NULL;
  size_t a = 0, a_inv = 0, e_a = 0, x = 0, star = 0;
  int flag = -1;
  char* text = NULL;
  EXPECT(excross_group_load("cyclic 2", &g) == EXCROSS_OK);
  EXPECT(excross_semigroup_create(g, 0, &sg) == EXCROSS_OK);
  EXPECT(excross_semigroup_size(sg) == 3);
  EXPECT(excross_semigroup_generator(sg, 1, &a) == EXCROSS_OK);
  EXPECT(excross_semigroup_generator(sg, 1, &a_inv) == EXCROSS_OK);
  EXPECT(excross_semigroup_multiply(sg, a, a_inv, &e_a) == EXCROSS_OK);
  EXPECT(excross_semigroup_text(sg, e_a, &text) == EXCROSS_OK && strcmp(text, "e_{a}[e]") == 0);
  excross_string_free(text);
  EXPECT(excross_semigroup_is_idempotent(sg, e_a, &flag) == EXCROSS_OK && flag == 1);
  EXPECT(excross_semigroup_is_idempotent(sg, a, &flag) == EXCROSS_OK && flag == 0);
  EXPECT(excross_semigroup_leq(sg, e_a, 0, &flag) == EXCROSS_OK && flag == 1);
  EXPECT(excross_semigroup_star(sg, a, &star) == EXCROSS_OK && star == a);
  EXPECT(excross_semigroup_gamma(sg, e_a, &x) == EXCROSS_OK && x == 0);
  EXPECT(excross_semigroup_multiply(sg, 0, 7, &x) == EXCROSS_E_INDEX_OUT_OF_RANGE);
  excross_semigroup_free(sg);
  excross_group_free(g);

  EXPECT(excross_group_load("cyclic 9", &g) == EXCROSS_OK);
  EXPECT(excross_semigroup_create(g, 8, &sg) == EXCROSS_E_GROUP_TOO_LARGE);
  excross_group_free(g);
}

static void run(void) {
  excross_run_options opts;
  char* output = NULL;
  char* diagnostic = NULL;
  int code = -1;
  memset(&opts, 0, sizeof opts);
  opts.command = "check";
  opts.subcommand = "iso";
  opts.group = "cyclic 2";
  opts.action = EXCROSS_FIXTURE_DIR "/p1.json";
  opts.format = EXCROSS_FORMAT_TEXT;
  EXPECT(excross_run(&opts, &output, &diagnostic, &code) == EXCROSS_OK);
  EXPECT(code == 0);
  EXPECT(strstr(output, "dims 3 = 4 - 1") != NULL);
  excross_string_free(output);
  excross_string_free(diagnostic);

  opts.subcommand = "validate";
  opts.command = "action";
  opts.group = NULL;
  opts.action = EXCROSS_FIXTURE_DIR "/broken_z4.json";
  EXPECT(excross_run(&opts, &output, &diagnostic, &code) == EXCROSS_OK);
  EXPECT(code == 1);
  EXPECT(strlen(diagnostic) > 0);
  excross_string_free(output);
  excross_string_free(diagnostic);

  opts.command = "nope";
  EXPECT(excross_run(&opts, &output, &diagnostic, &code) == EXCROSS_OK);
  EXPECT(code == 2);
  excross_string_free(output);
  excross_string_free(diagnostic);

  EXPECT(excross_run(NULL, &output, &diagnostic, &code) == EXCROSS_E_INVALID_ARGUMENT);
}

int main(void) {
  groups();
  semigroup();
  run();
  if (failures != 0) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  puts("ok");
  return EXIT_SUCCESS;
}
