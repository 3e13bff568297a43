#include <stdio.h>
#include "berger_spectra.h"

int main(void) {
    BergerParam *tau = NULL;
    BergerModel *model = NULL;
    BergerIndexReport *report = NULL;
    uint64_t index = 0, nullity = 0;

    if (berger_param_parse("3/10", &tau) != BERGER_STATUS_OK) return 10;
    if (berger_model_veronese(true, &model) != BERGER_STATUS_OK) return 11;
    if (berger_index(model, tau, &report) != BERGER_STATUS_OK) return 12;
    if (berger_report_counts(report, &index, &nullity) != BERGER_STATUS_OK) return 13;
    printf("index=%llu nullity=%llu\n", (unsigned long long)index, (unsigned long long)nullity);
    berger_report_free(report);
    berger_model_free(model);
    berger_param_free(tau);

    if (berger_param_new(0, 1, &tau) != BERGER_STATUS_DOMAIN) return 14;
    if (berger_last_error() == NULL) return 15;
    return index == 6 ? 0 : 1;
}
