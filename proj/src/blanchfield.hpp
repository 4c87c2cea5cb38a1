#pragma once
// Linking form presented by a hermitian matrix A: ([x],[y]) -> -y^T conj(A)^-1 conj(x).

#include "laurent.hpp"

namespace kinv {

class PresentationMatrix {
public:
    // Validation if A is not square or not hermitian, Singular if det A = 0.
    explicit PresentationMatrix(LMatrix a);

    const LMatrix& matrix() const { return a_; }
    std::size_t size() const { return a_.rows(); }
    const Laurent& det() const { return det_; }

    // Class of -(conj(A)^-1)_{j,i}: the pairing of e_i with e_j.
    Fraction pairing(std::size_t i, std::size_t j) const;
    Fraction pair_vectors(const std::vector<Laurent>& x, const std::vector<Laurent>& y) const;

private:
    LMatrix a_;
    Laurent det_;      // det of conj(A)
    LMatrix adj_bar_;  // adjugate of conj(A)
};

struct LinkingFormReport {
    bool hermitian = false;
    bool symmetric = false;    // pairing(i,j) = conj(pairing(j,i)) in Q/R
    bool relations = false;    // A e_k pairs to zero with every e_j
    bool order_matches = true; // only meaningful when an expected order is given
    Laurent order;             // normalized det A
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    json to_json() const;
};

LinkingFormReport check_linking_form(const LMatrix& a, const std::optional<Laurent>& expected_order = std::nullopt);

}  // namespace kinv
