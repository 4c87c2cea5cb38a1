// Exercises the shared library through its C header only.
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "knotinv.h"

using nlohmann::json;

namespace {

json take(char* s) {
    json j = json::parse(s);
    kn_string_free(s);
    return j;
}

const char* kTrefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";

}  // namespace

TEST_CASE("diagram handles") {
    kn_diagram* d = nullptr;
    REQUIRE(kn_diagram_from_pd(kTrefoil, &d) == KN_OK);
    size_t n = 0;
    int w = 0;
    CHECK(kn_diagram_crossings(d, &n) == KN_OK);
    CHECK(n == 3);
    CHECK(kn_diagram_writhe(d, &w) == KN_OK);
    CHECK(w == 3);
    char* s = nullptr;
    REQUIRE(kn_diagram_json(d, &s) == KN_OK);
    json j = take(s);
    CHECK(j["pd"] == kTrefoil);

    kn_diagram* g = nullptr;
    REQUIRE(kn_diagram_from_gauss(j["gauss"].get<std::string>().c_str(), &g) == KN_OK);
    REQUIRE(kn_diagram_json(g, &s) == KN_OK);
    CHECK(take(s)["pd"] == kTrefoil);
    kn_diagram_free(g);
    kn_diagram_free(d);
    kn_diagram_free(nullptr);
}

TEST_CASE("error codes and messages") {
    kn_diagram* d = nullptr;
    CHECK(kn_diagram_from_pd("[[1,2,3", &d) == KN_ERR_PARSE);
    CHECK(d == nullptr);
    CHECK(std::string(kn_last_error()).find("ParseError") != std::string::npos);
    CHECK(kn_diagram_from_pd("[[1,4,2,5],[3,6,4,1]]", &d) == KN_ERR_VALIDATION);
    CHECK(kn_diagram_from_gauss("O1+ O1+", &d) == KN_ERR_VALIDATION);
    CHECK(kn_diagram_from_pd(nullptr, &d) == KN_ERR_ARGUMENT);
    CHECK(kn_diagram_from_pd(kTrefoil, nullptr) == KN_ERR_ARGUMENT);
    CHECK(std::string(kn_status_name(KN_ERR_CERTIFICATION)) == "CertificationError");
    CHECK(std::string(kn_status_name(KN_OK)) == "OK");

    REQUIRE(kn_diagram_from_pd(kTrefoil, &d) == KN_OK);
    char* s = nullptr;
    CHECK(kn_compute(d, R"({"marked":[]})", &s) == KN_ERR_CERTIFICATION);
    CHECK(kn_compute(d, R"({"marked":[9]})", &s) == KN_ERR_UNKNOWN_CROSSING);
    CHECK(kn_compute(d, R"({"auto_unknot":"fast"})", &s) == KN_ERR_SCHEMA);
    CHECK(kn_compute(d, "not json", &s) == KN_ERR_SCHEMA);
    CHECK(s == nullptr);
    // success clears the message
    REQUIRE(kn_compute(d, nullptr, &s) == KN_OK);
    CHECK(std::string(kn_last_error()).empty());
    kn_string_free(s);
    kn_diagram_free(d);
}

TEST_CASE("compute and oracle reports") {
    kn_diagram* d = nullptr;
    REQUIRE(kn_diagram_from_pd(kTrefoil, &d) == KN_OK);
    char* s = nullptr;
    REQUIRE(kn_compute(d, R"({"auto_unknot":"minimal","seed":3})", &s) == KN_OK);
    json r = take(s);
    for (const char* key : {"delta", "arf", "psi", "lambda", "epsilon", "tau", "seed", "verdicts"}) CHECK(r.contains(key));
    CHECK(r["delta"] == json::parse(R"({"0":1,"1":-1,"2":1})"));
    CHECK(r["arf"] == 1);
    CHECK(r["seed"] == 3);
    CHECK(r["ok"] == true);
    for (const auto& [k, v] : r["verdicts"].items()) CHECK(v == true);

    REQUIRE(kn_oracle(d, &s) == KN_OK);
    json o = take(s);
    CHECK(o["delta"] == r["delta"]);
    CHECK(o["generators"] == 3);

    int eq = 0;
    REQUIRE(kn_compare(d, nullptr, 10, 1, &s, &eq) == KN_OK);
    json c = take(s);
    CHECK(eq == 1);
    CHECK(c["trials"].size() == 10);
    kn_diagram_free(d);

    kn_diagram* u = nullptr;
    REQUIRE(kn_diagram_from_pd("[]", &u) == KN_OK);
    REQUIRE(kn_compute(u, nullptr, &s) == KN_OK);
    json ur = take(s);
    CHECK(ur["delta"] == json::parse(R"({"0":1})"));
    CHECK(ur["arf"] == 0);
    CHECK(ur["psi"]["rows"] == 0);
    kn_diagram_free(u);
}

TEST_CASE("tower and matrix handles") {
    kn_tower* t = nullptr;
    REQUIRE(kn_tower_from_json(R"({"pairs":[{"a":-1,"b":0,"sign":1}]})", &t) == KN_OK);
    char* s = nullptr;
    REQUIRE(kn_omega(t, &s) == KN_OK);
    json o = take(s);
    CHECK(o["det"] == json::parse(R"({"-1":1,"0":-3,"1":1})"));
    CHECK(o["arf_levine"] == 1);
    CHECK(o["arf_tower"] == 1);
    CHECK(o["consistent"] == true);
    kn_tower_free(t);
    CHECK(kn_tower_from_json(R"({"pairs":[{"a":"x","b":0}]})", &t) == KN_ERR_SCHEMA);
    CHECK(kn_tower_from_json("{", &t) == KN_ERR_SCHEMA);

    kn_matrix* m = nullptr;
    REQUIRE(kn_matrix_from_json(R"({"rows":2,"cols":2,"entries":[[{"-1":-1,"0":2,"1":-1},{"0":1}],[{"0":1},{"0":1}]]})", &m) == KN_OK);
    REQUIRE(kn_pairing(m, 0, 1, &s) == KN_OK);
    json p = take(s);
    CHECK(p["integral"] == false);
    REQUIRE(kn_check_form(m, &s) == KN_OK);
    CHECK(take(s)["ok"] == true);
    CHECK(kn_pairing(m, 0, 5, &s) != KN_OK);
    kn_matrix_free(m);
    REQUIRE(kn_matrix_from_json(R"({"entries":[[{"0":1},{"0":1}],[{"0":1},{"0":1}]]})", &m) == KN_OK);
    CHECK(kn_pairing(m, 0, 0, &s) == KN_ERR_SINGULAR);
    kn_matrix_free(m);
}
