#include <stdio.h>
#include <string.h>
#include "liebial.h"

#define CHECK(x) do { if (!(x)) { fprintf(stderr, "failed: %s\n", #x); return 1; } } while (0)

int main(void) {
    const char *lambda[] = {"1", "2"};
    LbAlgebra *alg = NULL;
    CHECK(lb_oscillator_new(lambda, 2, &alg) == LB_STATUS_OK);
    CHECK(lb_algebra_dim(alg) == 6);

    LbBivector *r = NULL;
    CHECK(lb_bivector_new(6, &r) == LB_STATUS_OK);
    CHECK(lb_bivector_set(r, 2, 3, "1") == LB_STATUS_OK);
    bool cybe = true, gybe = false;
    CHECK(lb_check_cybe(alg, r, &cybe) == LB_STATUS_OK);
    CHECK(lb_check_gybe(alg, r, &gybe) == LB_STATUS_OK);
    CHECK(!cybe && gybe);

    char *json = NULL;
    CHECK(lb_geometry_json(alg, r, NULL, &json) == LB_STATUS_OK);
    CHECK(strstr(json, "\"flat\"") != NULL);
    lb_string_free(json);

    CHECK(lb_bivector_set(r, 9, 0, "1") == LB_STATUS_INVALID_INPUT);
    CHECK(lb_last_error_message() != NULL);

    lb_bivector_free(r);
    lb_algebra_free(alg);
    puts("ok");
    return 0;
}
