#pragma once
// JSON reports shared by the C interface and the command line.

#include "omega.hpp"
#include "tower.hpp"

namespace kinv {

PipelineOptions options_from_json(const json& j);

json oracle_report(const Diagram& d);
// Pipeline output plus structural verdicts and the oracle comparison.
json compute_report(const Diagram& d, const PipelineOptions& opt);
json compare_report(const Diagram& d, PipelineOptions opt, unsigned trials, std::uint64_t first_seed, bool& all_equal);
json omega_report(const TowerData& t);
json fraction_json(const Fraction& f);

// Structural checks on one pipeline result; every entry is a bool.
json pipeline_verdicts(const PipelineResult& r, const Laurent& oracle_delta);

}  // namespace kinv
