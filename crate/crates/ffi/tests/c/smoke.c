#include <stdio.h>
#include <string.h>

#include "plane_auto.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, pa_last_error_message());
    return 1;
}

int main(void) {
    PaMap *g = NULL, *h = NULL, *gh = NULL;
    if (pa_map_parse("(x + y^2, y)", 0, &g) != PA_STATUS_OK) return fail("parse g");
    if (pa_map_parse("(y, -x)", 0, &h) != PA_STATUS_OK) return fail("parse h");
    if (pa_map_compose(g, h, 0, &gh) != PA_STATUS_OK) return fail("compose");

    char *text = NULL;
    if (pa_map_to_string(gh, &text) != PA_STATUS_OK) return fail("to_string");
    printf("%s\n", text);
    pa_string_free(text);

    size_t len = 0;
    if (pa_map_length(gh, &len) != PA_STATUS_OK) return fail("length");
    PaVerdict v;
    if (pa_map_classify(gh, &v) != PA_STATUS_OK) return fail("classify");
    printf("%zu %s\n", len, v == PA_VERDICT_HENON ? "Henon" : "Elementary");

    PaMap *bad = NULL;
    PaStatus s = pa_map_parse("(x + , y)", 0, &bad);
    printf("%d %s\n", (int)s, pa_last_error_message());

    pa_map_free(g);
    pa_map_free(h);
    pa_map_free(gh);
    return 0;
}
