#include "blanchfield.hpp"

namespace kinv {

namespace {

LMatrix conj(const LMatrix& a) {
    LMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = a.at(i, j).involute();
    return b;
}

}  // namespace

PresentationMatrix::PresentationMatrix(LMatrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw Error(Err::Validation, "presentation matrix must be square");
    if (!a_.is_hermitian()) throw Error(Err::Validation, "presentation matrix is not hermitian");
    LMatrix b = conj(a_);
    det_ = b.det();
    if (det_.is_zero()) throw Error(Err::Singular, "presentation matrix has zero determinant");
    std::size_t n = b.rows();
    adj_bar_ = LMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Laurent m = n == 1 ? Laurent(1) : b.minor_matrix(j, i).det();
            adj_bar_.at(i, j) = (i + j) % 2 ? -m : m;
        }
}

Fraction PresentationMatrix::pairing(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw Error(Err::Shape, "pairing index out of range");
    return Fraction(-adj_bar_.at(j, i), det_);
}

Fraction PresentationMatrix::pair_vectors(const std::vector<Laurent>& x, const std::vector<Laurent>& y) const {
    std::size_t n = size();
    if (x.size() != n || y.size() != n) throw Error(Err::Shape, "vector length must match the matrix");
    Laurent num;
    for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!x[i].is_zero()) num -= y[j] * adj_bar_.at(j, i) * x[i].involute();
    }
    return Fraction(num, det_);
}

json LinkingFormReport::to_json() const {
    return {{"hermitian", hermitian}, {"symmetric", symmetric}, {"relations", relations},
            {"order", order.to_json()}, {"order_text", order.str()}, {"order_matches", order_matches},
            {"failures", failures}, {"ok", ok()}};
}

LinkingFormReport check_linking_form(const LMatrix& a, const std::optional<Laurent>& expected_order) {
    LinkingFormReport r;
    r.hermitian = a.rows() == a.cols() && a.is_hermitian();
    if (!r.hermitian) {
        r.failures.push_back("matrix is not square hermitian");
        return r;
    }
    std::optional<PresentationMatrix> pm;
    try {
        pm.emplace(a);
    } catch (const Error& e) {
        r.failures.push_back(e.what());
        return r;
    }
    std::size_t n = pm->size();
    r.symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!same_class(pm->pairing(i, j), pm->pairing(j, i).involute())) {
                r.symmetric = false;
                r.failures.push_back("pairing(" + std::to_string(i) + "," + std::to_string(j) + ") is not the conjugate of its transpose");
            }
    r.relations = true;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Laurent> rel(n);
        for (std::size_t i = 0; i < n; ++i) rel[i] = a.at(i, k);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Laurent> e(n);
            e[j] = 1;
            if (!pm->pair_vectors(rel, e).is_integral()) {
                r.relations = false;
                r.failures.push_back("relation " + std::to_string(k) + " pairs nontrivially with e_" + std::to_string(j));
            }
        }
    }
    r.order = a.det().normalize_unit();
    if (expected_order) {
        r.order_matches = r.order == expected_order->normalize_unit();
        if (!r.order_matches) r.failures.push_back("module order " + r.order.str() + " differs from " + expected_order->normalize_unit().str());
    }
    return r;
}

}  // namespace kinv
