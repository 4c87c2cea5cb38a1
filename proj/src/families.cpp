#include "families.hpp"

#include "oracle.hpp"

namespace kinv {

const std::vector<NamedCode>& rolfsen_dt_codes() {
    static const std::vector<NamedCode> codes = {
        {"3_1", {4, 6, 2}},
        {"4_1", {4, 6, 8, 2}},
        {"5_1", {6, 8, 10, 2, 4}},
        {"5_2", {4, 8, 10, 2, 6}},
        {"6_1", {4, 8, 12, 10, 2, 6}},
        {"6_2", {4, 8, 10, 12, 2, 6}},
        {"6_3", {4, 8, 10, 2, 12, 6}},
        {"7_1", {8, 10, 12, 14, 2, 4, 6}},
        {"7_2", {4, 10, 14, 12, 2, 8, 6}},
        {"7_3", {6, 10, 12, 14, 2, 4, 8}},
        {"7_4", {6, 10, 12, 14, 4, 2, 8}},
        {"7_5", {4, 10, 12, 14, 2, 8, 6}},
        {"7_6", {4, 8, 12, 2, 14, 6, 10}},
        {"7_7", {4, 8, 10, 12, 2, 14, 6}},
    };
    return codes;
}

Diagram rolfsen(const std::string& name) {
    for (const auto& c : rolfsen_dt_codes())
        if (name == c.name) return from_dt(c.dt);
    throw Error(Err::Validation, "no fixture named " + name);
}

long twist_clasp_id(int n) { return 2L * std::abs(n) + 1; }

Diagram twist_knot(int n) {
    int m = 2 * std::abs(n);
    int c1 = m, c2 = m + 1;
    Laurent want = (Laurent(1 - 2 * n) + Laurent::t().scaled(n) + Laurent::t(-1).scaled(n)).normalize_unit();
    // |n| full twists (2|n| crossings) followed by a two-crossing clasp;
    // all mirror and clasp variants are tried and the first one with the
    // right polynomial is kept
    for (int sec = 0; sec < 2; ++sec)
        for (int co = 1; co >= 0; --co)
            for (int to = 1; to >= 0; --to) {
                std::vector<Pass> seq;
                for (int k = 0; k < m; ++k) seq.push_back({k, (k % 2 == 0) == (to != 0)});
                seq.push_back({c1, co != 0});
                seq.push_back({c2, co == 0});
                for (int k = m - 1; k >= 0; --k) seq.push_back({k, (k % 2 == 0) != (to != 0)});
                int a = sec == 0 ? c1 : c2, b = sec == 0 ? c2 : c1;
                auto first_over = [&](int c) { return c == c1 ? co != 0 : co == 0; };
                seq.push_back({a, !first_over(a)});
                seq.push_back({b, !first_over(b)});
                std::vector<long> ids(static_cast<std::size_t>(m + 2));
                for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<long>(i + 1);
                for (const auto& signs : planar_signs(seq, static_cast<std::size_t>(m + 2))) {
                    Diagram d(seq, signs, ids);
                    if (alexander_poly_oracle(d) == want) return d;
                }
            }
    throw Error(Err::Internal, "no twist knot realisation found");
}

}  // namespace kinv
