#include "report.hpp"

#include "blanchfield.hpp"
#include "oracle.hpp"

namespace kinv {

PipelineOptions options_from_json(const json& j) {
    PipelineOptions o;
    if (j.is_null()) return o;
    if (!j.is_object()) throw Error(Err::Schema, "options must be a JSON object");
    try {
        if (j.contains("marked") && !j.at("marked").is_null()) o.marked = j.at("marked").get<MarkedSet>();
        if (j.contains("auto_unknot")) {
            std::string a = j.at("auto_unknot").get<std::string>();
            if (a == "descending") o.auto_unknot = AutoUnknot::Descending;
            else if (a == "minimal") o.auto_unknot = AutoUnknot::Minimal;
            else throw Error(Err::Schema, "auto_unknot must be 'descending' or 'minimal'");
        }
        if (j.contains("r3_budget")) o.r3_budget = j.at("r3_budget").get<int>();
        if (j.contains("size_budget")) o.size_budget = j.at("size_budget").get<int>();
        if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw Error(Err::Schema, std::string("bad option: ") + e.what());
    }
    if (o.r3_budget < 0 || o.size_budget < 0) throw Error(Err::Schema, "budgets must be non-negative");
    return o;
}

json oracle_report(const Diagram& d) {
    Wirtinger w = wirtinger(d);
    Laurent delta = alexander_poly_oracle(d);
    return {{"delta", delta.to_json()}, {"delta_text", delta.str()}, {"arf", arf_levine(delta)},
            {"generators", w.generators}, {"relators", w.relators.size()}, {"crossings", d.crossings()}};
}

json pipeline_verdicts(const PipelineResult& r, const Laurent& oracle_delta) {
    json v;
    const LMatrix& psi = r.psi;
    v["psi_hermitian"] = psi.is_hermitian();
    auto at_one = psi.eval_int(1);
    bool diag_eps = true;
    for (std::size_t i = 0; i < psi.rows(); ++i)
        for (std::size_t j = 0; j < psi.cols(); ++j)
            if (at_one[i][j] != (i == j ? mpz_class(r.singular.epsilon[i]) : mpz_class(0))) diag_eps = false;
    v["psi_at_one_is_epsilon"] = diag_eps;
    v["unit_det_at_one"] = abs(int_det(at_one)) == 1;
    v["det_symmetric"] = equal_up_to_unit(r.det_psi.involute(), r.det_psi);
    LMatrix moved = psi_with_moved_basepoints(r, 1);
    v["basepoint_invariant"] = equal_up_to_unit(moved.det(), r.det_psi) && diagonal_unit_congruent(psi, moved);
    LinkingFormReport b = check_linking_form(psi, oracle_delta);
    v["blanchfield"] = b.ok();
    v["oracle_match"] = equal_up_to_unit(r.det_psi, oracle_delta);
    v["arf_match"] = r.arf == arf_levine(oracle_delta);
    return v;
}

json compute_report(const Diagram& d, const PipelineOptions& opt) {
    PipelineResult r = run_pipeline(d, opt);
    Laurent oracle = alexander_poly_oracle(d);
    json j = r.to_json();
    j["oracle_delta"] = oracle.to_json();
    j["oracle_delta_text"] = oracle.str();
    j["verdicts"] = pipeline_verdicts(r, oracle);
    j["blanchfield"] = check_linking_form(r.psi, oracle).to_json();
    bool ok = true;
    for (const auto& [k, v] : j["verdicts"].items()) ok = ok && v.get<bool>();
    j["ok"] = ok;
    return j;
}

json compare_report(const Diagram& d, PipelineOptions opt, unsigned trials, std::uint64_t first_seed, bool& all_equal) {
    Laurent oracle = alexander_poly_oracle(d);
    json rows = json::array();
    all_equal = true;
    for (unsigned k = 0; k < trials; ++k) {
        opt.seed = first_seed + k;
        PipelineResult r = run_pipeline(d, opt);
        bool eq = equal_up_to_unit(r.det_psi, oracle);
        all_equal = all_equal && eq;
        rows.push_back({{"seed", opt.seed}, {"marked", r.singular.marked}, {"delta", r.delta.to_json()},
                        {"delta_text", r.delta.str()}, {"equal", eq}});
    }
    return {{"oracle_delta", oracle.to_json()}, {"oracle_delta_text", oracle.str()}, {"trials", rows}, {"all_equal", all_equal}};
}

json omega_report(const TowerData& t) {
    LMatrix om = assemble_omega(t);
    Laurent det = om.det();
    int levine = arf_levine(det);
    int tower = arf_from_tower(t);
    return {{"omega", om.to_json()}, {"det", det.to_json()}, {"det_text", det.str()},
            {"det_normalized", det.normalize_unit().to_json()}, {"det_normalized_text", det.normalize_unit().str()},
            {"arf_levine", levine}, {"arf_tower", tower}, {"consistent", levine == tower}};
}

json fraction_json(const Fraction& f) {
    return {{"num", f.num().to_json()}, {"den", f.den().to_json()}, {"integral", f.is_integral()},
            {"text", "(" + f.num().str() + ") / (" + f.den().str() + ")"}};
}

}  // namespace kinv
