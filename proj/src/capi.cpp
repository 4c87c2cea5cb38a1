// extern "C" surface over the C++ core. Exceptions never cross this boundary.

#include <cstring>
#include <string>

#include "blanchfield.hpp"
#include "knotinv.h"
#include "oracle.hpp"
#include "report.hpp"

struct kn_diagram {
    kinv::Diagram d;
};
struct kn_tower {
    kinv::TowerData t;
};
struct kn_matrix {
    kinv::LMatrix m;
};

namespace {

thread_local std::string g_last_error;

kn_status to_status(kinv::Err e) { return static_cast<kn_status>(static_cast<int>(e)); }

template <class F>
kn_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return KN_OK;
    } catch (const kinv::Error& e) {
        g_last_error = std::string(kinv::err_name(e.code)) + ": " + e.what();
        return to_status(e.code);
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("SchemaError: ") + e.what();
        return KN_ERR_SCHEMA;
    } catch (const std::exception& e) {
        g_last_error = std::string("InternalError: ") + e.what();
        return KN_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

kinv::PipelineOptions parse_options(const char* options_json) {
    if (!options_json || !*options_json) return {};
    return kinv::options_from_json(kinv::json::parse(options_json));
}

}  // namespace

extern "C" {

const char* kn_version(void) { return "1.0.0"; }

const char* kn_status_name(kn_status s) {
    if (s == KN_OK) return "OK";
    if (s == KN_ERR_ARGUMENT) return "ArgumentError";
    if (s >= KN_ERR_PARSE && s <= KN_ERR_INTERNAL) return kinv::err_name(static_cast<kinv::Err>(s));
    return "UnknownStatus";
}

const char* kn_last_error(void) { return g_last_error.c_str(); }

void kn_string_free(char* s) { std::free(s); }

kn_status kn_diagram_from_pd(const char* text, kn_diagram** out) {
    if (!text || !out) return KN_ERR_ARGUMENT;
    return guarded([&] { *out = new kn_diagram{kinv::parse_pd(text)}; });
}

kn_status kn_diagram_from_gauss(const char* text, kn_diagram** out) {
    if (!text || !out) return KN_ERR_ARGUMENT;
    return guarded([&] { *out = new kn_diagram{kinv::parse_gauss(text)}; });
}

void kn_diagram_free(kn_diagram* d) { delete d; }

kn_status kn_diagram_crossings(const kn_diagram* d, size_t* out) {
    if (!d || !out) return KN_ERR_ARGUMENT;
    *out = d->d.crossings();
    return KN_OK;
}

kn_status kn_diagram_writhe(const kn_diagram* d, int* out) {
    if (!d || !out) return KN_ERR_ARGUMENT;
    *out = d->d.writhe();
    return KN_OK;
}

kn_status kn_diagram_json(const kn_diagram* d, char** out_json) {
    if (!d || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] { *out_json = dup_string(kinv::diagram_json(d->d).dump()); });
}

kn_status kn_oracle(const kn_diagram* d, char** out_json) {
    if (!d || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] { *out_json = dup_string(kinv::oracle_report(d->d).dump()); });
}

kn_status kn_compute(const kn_diagram* d, const char* options_json, char** out_json) {
    if (!d || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] { *out_json = dup_string(kinv::compute_report(d->d, parse_options(options_json)).dump()); });
}

kn_status kn_compare(const kn_diagram* d, const char* options_json, unsigned trials, uint64_t first_seed,
                     char** out_json, int* all_equal) {
    if (!d || !out_json || !all_equal) return KN_ERR_ARGUMENT;
    return guarded([&] {
        bool eq = false;
        kinv::json j = kinv::compare_report(d->d, parse_options(options_json), trials, first_seed, eq);
        *all_equal = eq ? 1 : 0;
        *out_json = dup_string(j.dump());
    });
}

kn_status kn_tower_from_json(const char* text, kn_tower** out) {
    if (!text || !out) return KN_ERR_ARGUMENT;
    return guarded([&] {
        kinv::json j;
        try {
            j = kinv::json::parse(text);
        } catch (const kinv::json::exception& e) {
            throw kinv::Error(kinv::Err::Schema, std::string("tower file is not JSON: ") + e.what());
        }
        *out = new kn_tower{kinv::TowerData::from_json(j)};
    });
}

void kn_tower_free(kn_tower* t) { delete t; }

kn_status kn_omega(const kn_tower* t, char** out_json) {
    if (!t || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] { *out_json = dup_string(kinv::omega_report(t->t).dump()); });
}

kn_status kn_matrix_from_json(const char* text, kn_matrix** out) {
    if (!text || !out) return KN_ERR_ARGUMENT;
    return guarded([&] {
        kinv::json j;
        try {
            j = kinv::json::parse(text);
        } catch (const kinv::json::exception& e) {
            throw kinv::Error(kinv::Err::Schema, std::string("matrix file is not JSON: ") + e.what());
        }
        // accept a bare matrix or a compute report carrying "psi"
        if (j.is_object() && j.contains("psi")) j = j.at("psi");
        *out = new kn_matrix{kinv::LMatrix::from_json(j)};
    });
}

void kn_matrix_free(kn_matrix* m) { delete m; }

kn_status kn_pairing(const kn_matrix* m, size_t i, size_t j, char** out_json) {
    if (!m || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] {
        kinv::PresentationMatrix pm(m->m);
        *out_json = dup_string(kinv::fraction_json(pm.pairing(i, j)).dump());
    });
}

kn_status kn_check_form(const kn_matrix* m, char** out_json) {
    if (!m || !out_json) return KN_ERR_ARGUMENT;
    return guarded([&] { *out_json = dup_string(kinv::check_linking_form(m->m).to_json().dump()); });
}

}  // extern "C"
