#pragma once
// Conversions and generators shared by the test binaries.

#include <random>

#include "laurent.hpp"
#include "reference.hpp"

namespace testing_support {

inline ref::Poly to_ref(const kinv::Laurent& p) {
    ref::Poly r;
    for (const auto& [e, c] : p.terms()) r[e] = c.get_si();
    return r;
}

inline kinv::Laurent from_ref(const ref::Poly& p) {
    std::map<long, mpz_class> t;
    for (const auto& [e, c] : p) t[e] = mpz_class(std::to_string(c));
    return kinv::Laurent::from_terms(t);
}

inline kinv::Laurent random_poly(std::mt19937_64& rng, int span = 3, int coeff = 5) {
    std::uniform_int_distribution<int> e(-span, span), c(-coeff, coeff), len(0, 4);
    kinv::Laurent p;
    for (int k = len(rng); k > 0; --k) p += kinv::Laurent::monomial(c(rng), e(rng));
    return p;
}

inline kinv::LMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int span = 1, int coeff = 2) {
    kinv::LMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, span, coeff);
    return m;
}

inline kinv::Laurent z() { return kinv::Laurent::z(); }
inline kinv::Laurent t(long e = 1) { return kinv::Laurent::t(e); }

}  // namespace testing_support
