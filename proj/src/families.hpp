#pragma once
// Diagrams used as fixtures: the prime knots up to seven crossings and the
// twist knots (untwisted Whitehead doubles of the unknot).

#include "diagram.hpp"

namespace kinv {

struct NamedCode {
    const char* name;
    std::vector<int> dt;
};

const std::vector<NamedCode>& rolfsen_dt_codes();
Diagram rolfsen(const std::string& name);

// Twist knot with n full twists: Delta = 1 - 2n + n t + n / t.
Diagram twist_knot(int n);
// Id of the clasp crossing whose change unknots twist_knot(n).
long twist_clasp_id(int n);

}  // namespace kinv
