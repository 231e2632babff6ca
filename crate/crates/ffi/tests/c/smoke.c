#include <stdio.h>
#include <string.h>

#include "ivpoly.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    IvpPolytope *p = NULL;
    CHECK(ivp_polytope_new_family(IVP_FAMILY_PYRAMIDAL, 4, 1, false, &p) == IVP_STATUS_OK);

    size_t dim = 0;
    CHECK(ivp_polytope_dim(p, &dim) == IVP_STATUS_OK && dim == 4);

    uint64_t f[8];
    size_t written = 0;
    CHECK(ivp_polytope_f_vector(p, f, 8, &written) == IVP_STATUS_OK);
    CHECK(written == 6 && f[1] == 6 && f[2] == 13 && f[3] == 13 && f[4] == 6);

    char *vol = NULL;
    CHECK(ivp_polytope_normalized_volume(p, &vol) == IVP_STATUS_OK);
    CHECK(strcmp(vol, "4") == 0);
    ivp_string_free(vol);
    ivp_polytope_free(p);

    CHECK(ivp_polytope_new_family(IVP_FAMILY_FIXED, 3, 5, false, &p) == IVP_STATUS_INVALID_ARGUMENT);
    CHECK(strlen(ivp_last_error_message()) > 0);

    printf("ok\n");
    return 0;
}
