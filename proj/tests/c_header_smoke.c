/* Compiled as plain C: proves the public header needs nothing from C++
 * and that the basic lifecycle works through the flat interface. */
#include <stdint.h>
#include <stdio.h>
#include <string.h>

#include "apxalg/apxalg.h"

static int failures = 0;

static void check(int ok, const char* what) {
    if (!ok) {
        fprintf(stderr, "FAIL: %s (last error: %s)\n", what, apx_last_error());
        ++failures;
    }
}

int main(void) {
    apx_scenario* s = NULL;
    int64_t degree = 0;
    uint64_t dim = 0;
    char* text = NULL;
    int within = 0;
    int64_t deficiency = 0;

    check(apx_version() != NULL && apx_version()[0] != '\0', "version string");

    check(apx_scenario_preset("chen", &s) == APX_OK, "load chen preset");
    check(apx_floor_degree(s, 8, &degree) == APX_OK && degree == 15, "J(8) == 15");
    check(apx_dim_piece(s, 8, &dim) == APX_OK && dim == 16, "dim piece 8");

    check(apx_approx_ratio(s, 4, 2, &text) == APX_OK && strcmp(text, "15/16") == 0,
          "approx ratio 4,2 as exact string");
    apx_string_free(text);
    text = NULL;

    check(apx_deficiency(100, &deficiency, &within) == APX_OK && deficiency == 3 && within == 1,
          "deficiency at p=100");

    check(apx_cmd_dim(s, 4, APX_FORMAT_CSV, &text) == APX_OK && strstr(text, "n,") != NULL,
          "dim command renders CSV");
    apx_string_free(text);
    text = NULL;

    /* error paths: null argument and unknown preset must fail cleanly */
    check(apx_floor_degree(NULL, 1, &degree) == APX_ERROR_USAGE, "null scenario rejected");
    check(apx_last_error()[0] != '\0', "error message populated");
    {
        apx_scenario* bogus = NULL;
        check(apx_scenario_preset("no-such-preset", &bogus) == APX_ERROR_USAGE,
              "unknown preset rejected");
        check(bogus == NULL, "failed load leaves handle null");
    }

    apx_scenario_free(s);
    apx_scenario_free(NULL); /* must be a no-op */

    if (failures == 0) printf("c header smoke: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
