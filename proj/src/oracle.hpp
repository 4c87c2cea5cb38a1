#pragma once
// Wirtinger presentation, Fox-calculus Alexander polynomial, Levine's Arf rule.

#include "diagram.hpp"

namespace kinv {

// Relator at a crossing: x_out = w^-1 x_in w for a positive crossing,
// x_out = w x_in w^-1 for a negative one.
struct Relator {
    int over;  // generator of the over arc
    int in;    // incoming under arc
    int out;   // outgoing under arc
    int sign;
};

struct Wirtinger {
    int generators = 0;
    std::vector<Relator> relators;
    // generator index of each edge (edge p leaves pass p)
    std::vector<int> edge_gen;
};

Wirtinger wirtinger(const Diagram& d);
// Rank of the abelianization (1 for a knot group presentation).
int abelian_rank(const Wirtinger& w);
// Fox Jacobian with every generator sent to t: rows relators, cols generators.
LMatrix fox_matrix(const Wirtinger& w);

// Normalized Alexander polynomial. Cross-checks a second deletion choice and
// throws Internal if the two disagree up to units.
Laurent alexander_poly_oracle(const Diagram& d);

// 1 if delta(-1) = +-3 mod 8, 0 if +-1; Domain for even values.
int arf_levine(const Laurent& delta);

}  // namespace kinv
