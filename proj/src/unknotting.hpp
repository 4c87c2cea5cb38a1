#pragma once
// Unknotting sets of crossings and a Reidemeister-move unknot certifier.

#include "diagram.hpp"

namespace kinv {

constexpr int kDefaultR3Budget = 1000;

// Crossings first met on the under-strand when walking from arc `basepoint`.
MarkedSet descending_set(const Diagram& d, int basepoint = 1);

// Greedy R1/R2 removal with a bounded search over R3 moves. true means the
// diagram was reduced to 0 crossings; false only means "not certified".
bool verify_unknotted(const Diagram& d, int r3_budget = kDefaultR3Budget);

// Smallest certified set (lexicographic tie break); descending_set(d, 1) when
// nothing up to `size_budget` crossings is certified.
MarkedSet minimal_search(const Diagram& d, int size_budget, int r3_budget = kDefaultR3Budget, int jobs = 0);

// Single simplification steps, exposed for tests. Each returns nullopt when
// no move of that kind applies.
std::optional<Diagram> r1_step(const Diagram& d);
std::optional<Diagram> r2_step(const Diagram& d);
std::vector<Diagram> r3_moves(const Diagram& d);

}  // namespace kinv
