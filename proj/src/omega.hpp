#pragma once
// Omega from abstract order-two tower data, and the mod 8 Arf checks.

#include <map>

#include "laurent.hpp"

namespace kinv {

struct TowerPair {
    long a = 0;     // Whitney framing twist
    long b = 0;     // accessory framing twist
    int sign = 1;   // sign of the paired double point
    Laurent p_ww, p_aa, p_wa;
};

struct TowerData {
    std::vector<TowerPair> pairs;
    // (r, s) with 1 <= r < s <= 2k, not a Whitney/accessory pair
    std::map<std::pair<int, int>, Laurent> cross;

    std::size_t size() const { return 2 * pairs.size(); }
    static TowerData from_json(const json& j);  // Schema on violations
    json to_json() const;
};

LMatrix assemble_omega(const TowerData& t);
int arf_from_tower(const TowerData& t);
bool verify_arf_consistency(const TowerData& t);

// det(B + 4C + 4C^T) mod 8 with B the block sum of [[x_i, 1], [1, 1 + y_i]].
// Throws Internal if the result differs from (-1)^k + sum x_i mod 8.
int det_mod8_blocked(const std::vector<long>& x, const std::vector<long>& y,
                     const std::vector<std::vector<long>>& c);

}  // namespace kinv
