#include <stdio.h>
#include "trigpow.h"

int main(void) {
    TrigpowPoly *p = NULL;
    char *json = NULL;
    if (trigpow_power_fourier(TRIGPOW_BASE_COS, 4, &p) != TRIGPOW_STATUS_OK) return 1;
    trigpow_poly_to_json(p, &json);
    printf("cos^4: %s\n", json);
    trigpow_string_free(json);
    trigpow_poly_free(p);

    TrigpowReciprocal *r = NULL;
    if (trigpow_reciprocal_new(0.5, &r) != TRIGPOW_STATUS_OK)
        printf("a=0.5 rejected: %s\n", trigpow_last_error_message());
    trigpow_reciprocal_new(2.0, &r);
    double a1 = 0.0;
    trigpow_reciprocal_cos_coeff(r, 1, &a1);
    printf("a=2, a1 = %.15f\n", a1);
    trigpow_reciprocal_free(r);
    return 0;
}
