#pragma once
// Exact arithmetic in Z[t, 1/t] and its fraction field.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "json.hpp"

namespace kinv {

using json = nlohmann::json;

// Dense storage from the lowest exponent up. Trimmed at both ends, so the
// zero polynomial has no coefficients and no stored coefficient is zero.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);  // NOLINT: constants convert implicitly
    Laurent(const mpz_class& c);

    static Laurent monomial(const mpz_class& c, long e);
    static Laurent t(long e = 1) { return monomial(1, e); }
    static Laurent from_terms(const std::map<long, mpz_class>& terms);
    // 2 - t - 1/t
    static Laurent z();

    bool is_zero() const { return c_.empty(); }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    mpz_class coeff(long e) const;
    std::map<long, mpz_class> terms() const;
    // +-t^k
    bool is_unit() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent scaled(const mpz_class& k) const;
    Laurent shifted(long k) const;
    Laurent involute() const;

    // p(1) or p(-1); any other point throws Domain.
    mpz_class eval_int(long n) const;
    // Lowest exponent moved to 0, lowest coefficient made positive.
    Laurent normalize_unit() const;

    // Quotient when this = q * d exactly in Z[t, 1/t].
    std::optional<Laurent> divide_exact(const Laurent& d) const;

    std::string str() const;
    json to_json() const;
    static Laurent from_json(const json& j);

private:
    void trim();
    long low_ = 0;
    std::vector<mpz_class> c_;
};

bool equal_up_to_unit(const Laurent& p, const Laurent& q);

class LMatrix {
public:
    LMatrix() = default;
    LMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
    static LMatrix identity(std::size_t n);
    static LMatrix diag(const std::vector<Laurent>& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Laurent& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Laurent& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    LMatrix operator*(const LMatrix& o) const;
    LMatrix operator+(const LMatrix& o) const;
    LMatrix operator-(const LMatrix& o) const;
    LMatrix scaled(const Laurent& s) const;
    LMatrix transpose() const;
    // conjugate transpose under t -> 1/t
    LMatrix star() const;
    bool is_hermitian() const { return star() == *this; }
    LMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;
    // integer matrix of values at t = 1 or -1
    std::vector<std::vector<mpz_class>> eval_int(long n) const;

    Laurent det() const;

    friend bool operator==(const LMatrix& a, const LMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }

    json to_json() const;
    static LMatrix from_json(const json& j);

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Laurent> e_;
};

// X with A X = B, when det A != 0 and the solution has Laurent entries (e.g.
// det A a unit). Singular on det A = 0, Internal if the solution is not
// Laurent.
LMatrix solve_exact(LMatrix a, LMatrix b);

// Determinants of small integer matrices (used by the mod 8 checks).
mpz_class int_det(std::vector<std::vector<mpz_class>> a);

// num/den with den != 0. No reduction: equality is by cross multiplication.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
    Fraction(Laurent num, Laurent den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num_, den_); }
    Fraction inverse() const;
    Fraction involute() const { return Fraction(num_.involute(), den_.involute()); }
    bool is_integral() const { return num_.divide_exact(den_).has_value(); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    json to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

private:
    Laurent num_, den_;
};

// Q/R equality.
inline bool same_class(const Fraction& a, const Fraction& b) { return (a - b).is_integral(); }

}  // namespace kinv
