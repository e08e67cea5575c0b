// Exercises the shared-library surface exactly as an external client would:
// only sfreecut/sfreecut.h, no core headers.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "sfreecut/sfreecut.h"

#define REQUIRE(cond)                                                        \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::fprintf(stderr, "FAILED %s:%d: %s (last error: %s)\n",      \
                         __FILE__, __LINE__, #cond, sfc_last_error());       \
            return 1;                                                        \
        }                                                                    \
    } while (0)

namespace {

const char* kInstance = R"({
  "n": 2,
  "S": {"A": [["-1", "0"]], "b": ["0"]},
  "f": ["1/4", "1/2"],
  "rays": [["-1/4", "1/2"], ["-1/4", "-1/2"]],
  "box": {"lower": ["-5", "-5"], "upper": ["5", "5"]}
})";

const char* kBodyPsi = R"({"f": ["1/4", "1/2"], "rows": [["4", "8"], ["4", "-8"]]})";
const char* kBodyMax = R"({"f": ["1/4", "1/2"], "rows": [["4", "4"], ["4", "-4"]]})";
const char* kHalfspace = R"({"halfspace": {"a": ["1", "0"], "b": "0"}})";

bool contains(const char* hay, const char* needle) { return std::strstr(hay, needle) != nullptr; }

} // namespace

int main() {
    REQUIRE(std::strcmp(sfc_version(), "0.1.0") == 0);

    // parse errors surface with position info and a PARSE status
    sfc_instance* bad = nullptr;
    REQUIRE(sfc_instance_parse("{", &bad) == SFC_ERROR_PARSE);
    REQUIRE(std::strlen(sfc_last_error()) > 0);
    REQUIRE(sfc_instance_parse(nullptr, &bad) == SFC_ERROR_INVALID);

    sfc_instance* inst = nullptr;
    REQUIRE(sfc_instance_parse(kInstance, &inst) == SFC_OK);
    sfc_body* bpsi = nullptr;
    REQUIRE(sfc_body_parse(kBodyPsi, &bpsi) == SFC_OK);
    sfc_body* bmax = nullptr;
    REQUIRE(sfc_body_parse(kBodyMax, &bmax) == SFC_OK);
    sfc_body* half = nullptr;
    REQUIRE(sfc_body_parse(kHalfspace, &half) == SFC_OK);

    // canonical emission round-trips byte-identically
    {
        char* once = nullptr;
        REQUIRE(sfc_instance_emit(inst, &once) == SFC_OK);
        sfc_instance* again = nullptr;
        REQUIRE(sfc_instance_parse(once, &again) == SFC_OK);
        char* twice = nullptr;
        REQUIRE(sfc_instance_emit(again, &twice) == SFC_OK);
        REQUIRE(std::strcmp(once, twice) == 0);
        sfc_string_free(once);
        sfc_string_free(twice);
        sfc_instance_free(again);
    }

    // check: the maximal body is case (i), the wide one is negative
    {
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_check(bmax, inst, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(negative == 0);
        REQUIRE(contains(report, "maximal-case-i"));
        REQUIRE(contains(report, "\"box_used\""));
        sfc_string_free(report);

        REQUIRE(sfc_check(bpsi, inst, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(negative == 1);
        REQUIRE(contains(report, "not-maximal"));
        sfc_string_free(report);

        REQUIRE(sfc_check(half, inst, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(negative == 0);
        REQUIRE(contains(report, "maximal-case-ii"));
        sfc_string_free(report);
    }

    // maximalize: body text holds the tilted rows; trace carries the steps
    {
        char* body_text = nullptr;
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_maximalize(bpsi, inst, nullptr, 1, &body_text, &report, &negative) == SFC_OK);
        REQUIRE(negative == 0);
        REQUIRE(contains(body_text, "\"4\""));
        REQUIRE(contains(body_text, "\"-4\""));
        REQUIRE(!contains(body_text, "\"8\""));
        REQUIRE(contains(report, "\"lambda_star\": \"1/2\""));
        REQUIRE(contains(report, "\"lambda_bar\": \"3/4\""));
        REQUIRE(contains(report, "\"lambda_star\": \"1/3\""));
        REQUIRE(contains(report, "\"lambda_bar\": \"2/3\""));
        sfc_string_free(body_text);
        sfc_string_free(report);
    }

    // cut: coefficients (1,1) for the Example-1 rays
    {
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_cut(inst, bpsi, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(negative == 0);
        REQUIRE(contains(report, "\"coefficients\": [\n    \"1\",\n    \"1\"\n  ]"));
        sfc_string_free(report);
    }

    // verify: the tight audit
    {
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_verify(inst, bmax, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(negative == 0);
        REQUIRE(contains(report, "\"minimum\": \"1\""));
        REQUIRE(contains(report, "\"valid\": true"));
        sfc_string_free(report);
    }

    // polar generators
    {
        char* report = nullptr;
        REQUIRE(sfc_polar(bmax, &report) == SFC_OK);
        REQUIRE(contains(report, "\"generators\""));
        REQUIRE(contains(report, "\"includes_origin\": true"));
        sfc_string_free(report);
    }

    // tighten: shell facet pushed to -x1 <= 1
    {
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_tighten(bmax, inst, nullptr, &report, &negative) == SFC_OK);
        REQUIRE(contains(report, "\"push\""));
        REQUIRE(contains(report, "\"pushed_to\""));
        sfc_string_free(report);
    }

    // plot: deterministic svg
    {
        const sfc_body* bodies[2] = {bmax, bpsi};
        char* svg1 = nullptr;
        char* svg2 = nullptr;
        REQUIRE(sfc_plot(inst, bodies, 2, nullptr, &svg1) == SFC_OK);
        REQUIRE(sfc_plot(inst, bodies, 2, nullptr, &svg2) == SFC_OK);
        REQUIRE(std::strcmp(svg1, svg2) == 0);
        REQUIRE(contains(svg1, "<svg"));
        sfc_string_free(svg1);
        sfc_string_free(svg2);
    }

    // invalid inputs map to SFC_ERROR_INVALID with a message
    {
        char* body_text = nullptr;
        char* report = nullptr;
        int negative = -1;
        REQUIRE(sfc_maximalize(half, inst, nullptr, 0, &body_text, &report, &negative) ==
                SFC_ERROR_INVALID);
        REQUIRE(contains(sfc_last_error(), "anchored"));
    }

    sfc_body_free(half);
    sfc_body_free(bmax);
    sfc_body_free(bpsi);
    sfc_instance_free(inst);
    std::puts("capi_tests: all assertions passed");
    return 0;
}
