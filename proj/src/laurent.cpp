#include "laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kinv {

const char* err_name(Err e) {
    switch (e) {
        case Err::Parse: return "ParseError";
        case Err::Validation: return "ValidationError";
        case Err::Domain: return "DomainError";
        case Err::Shape: return "ShapeError";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::UnknownCrossing: return "UnknownCrossing";
        case Err::UnknownArc: return "UnknownArc";
        case Err::Framing: return "FramingError";
        case Err::Singular: return "SingularMatrix";
        case Err::Certification: return "CertificationError";
        case Err::Schema: return "SchemaError";
        case Err::Internal: return "InternalError";
    }
    return "Error";
}

Laurent::Laurent(long c) {
    if (c != 0) c_.emplace_back(c);
}

Laurent::Laurent(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(const mpz_class& c, long e) {
    Laurent p(c);
    if (!p.is_zero()) p.low_ = e;
    return p;
}

Laurent Laurent::from_terms(const std::map<long, mpz_class>& terms) {
    Laurent p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
}

Laurent Laurent::z() { return Laurent(2) - t(1) - t(-1); }

void Laurent::trim() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    c_.erase(c_.begin() + static_cast<long>(e), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(b));
    low_ += static_cast<long>(b);
}

mpz_class Laurent::coeff(long e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
}

std::map<long, mpz_class> Laurent::terms() const {
    std::map<long, mpz_class> m;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m[low_ + static_cast<long>(i)] = c_[i];
    return m;
}

bool Laurent::is_unit() const { return c_.size() == 1 && abs(c_[0]) == 1; }

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<mpz_class> r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    c_ = std::move(r);
    low_ = lo;
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    r.low_ = a.low_ + b.low_;
    r.trim();
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::scaled(const mpz_class& k) const {
    if (k == 0) return {};
    Laurent r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

Laurent Laurent::shifted(long k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Laurent Laurent::involute() const {
    Laurent r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
}

mpz_class Laurent::eval_int(long n) const {
    if (n != 1 && n != -1)
        throw Error(Err::Domain, "eval_int: only t = 1 or t = -1 can be evaluated exactly in Z");
    mpz_class s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long e = low_ + static_cast<long>(i);
        if (n == -1 && (e % 2 != 0)) s -= c_[i];
        else s += c_[i];
    }
    return s;
}

Laurent Laurent::normalize_unit() const {
    if (is_zero()) return {};
    Laurent r = *this;
    r.low_ = 0;
    if (r.c_[0] < 0)
        for (auto& x : r.c_) x = -x;
    return r;
}

bool equal_up_to_unit(const Laurent& p, const Laurent& q) {
    return p.normalize_unit() == q.normalize_unit();
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw Error(Err::DivisionByZero, "division by the zero polynomial");
    if (is_zero()) return Laurent();
    // Both have nonzero lowest coefficients, so after dropping t-powers the
    // question is plain divisibility in Z[t].
    std::vector<mpz_class> rem = c_;
    const auto& dv = d.c_;
    if (rem.size() < dv.size()) return std::nullopt;
    std::size_t qlen = rem.size() - dv.size() + 1;
    std::vector<mpz_class> q(qlen);
    for (std::size_t k = qlen; k-- > 0;) {
        mpz_class& top = rem[k + dv.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), dv.back().get_mpz_t())) return std::nullopt;
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), dv.back().get_mpz_t());
        q[k] = f;
        for (std::size_t j = 0; j < dv.size(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), dv[j].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    Laurent r;
    r.c_ = std::move(q);
    r.low_ = low_ - d.low_;
    r.trim();
    return r;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = low_ + static_cast<long>(i);
        mpz_class c = c_[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        if (e == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

static json big_to_json(const mpz_class& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

static mpz_class big_from_json(const json& v) {
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        mpz_class c;
        if (c.set_str(v.get<std::string>(), 10) != 0)
            throw Error(Err::Schema, "bad integer string in polynomial JSON");
        return c;
    }
    throw Error(Err::Schema, "polynomial coefficient must be an integer");
}

json Laurent::to_json() const {
    json j = json::object();
    for (const auto& [e, c] : terms()) j[std::to_string(e)] = big_to_json(c);
    return j;
}

Laurent Laurent::from_json(const json& j) {
    if (!j.is_object()) throw Error(Err::Schema, "polynomial must be a JSON object");
    Laurent p;
    for (const auto& [k, v] : j.items()) {
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(k, &used);
        } catch (...) {
            used = 0;
        }
        if (used != k.size() || k.empty()) throw Error(Err::Schema, "bad exponent key '" + k + "'");
        p += monomial(big_from_json(v), e);
    }
    return p;
}

// ---- matrices

LMatrix LMatrix::identity(std::size_t n) {
    LMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LMatrix LMatrix::diag(const std::vector<Laurent>& d) {
    LMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

LMatrix LMatrix::operator*(const LMatrix& o) const {
    if (c_ != o.r_) throw Error(Err::Shape, "matrix product: inner dimensions differ");
    LMatrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

LMatrix LMatrix::operator+(const LMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(Err::Shape, "matrix sum: shapes differ");
    LMatrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
}

LMatrix LMatrix::operator-(const LMatrix& o) const { return *this + o.scaled(-1); }

LMatrix LMatrix::scaled(const Laurent& s) const {
    LMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

LMatrix LMatrix::transpose() const {
    LMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

LMatrix LMatrix::star() const {
    LMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j).involute();
    return m;
}

LMatrix LMatrix::minor_matrix(std::size_t dr, std::size_t dc) const {
    LMatrix m(r_ - 1, c_ - 1);
    for (std::size_t i = 0, a = 0; i < r_; ++i) {
        if (i == dr) continue;
        for (std::size_t j = 0, b = 0; j < c_; ++j) {
            if (j == dc) continue;
            m.at(a, b++) = at(i, j);
        }
        ++a;
    }
    return m;
}

std::vector<std::vector<mpz_class>> LMatrix::eval_int(long n) const {
    std::vector<std::vector<mpz_class>> v(r_, std::vector<mpz_class>(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) v[i][j] = at(i, j).eval_int(n);
    return v;
}

static Laurent cofactor_det(const LMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Laurent s;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Laurent term = m.at(0, j) * cofactor_det(m.minor_matrix(0, j));
        if (j % 2) s -= term;
        else s += term;
    }
    return s;
}

Laurent LMatrix::det() const {
    if (r_ != c_) throw Error(Err::Shape, "det of a non-square matrix");
    std::size_t n = r_;
    if (n <= 4) return cofactor_det(*this);
    // Clear t-denominators row by row, then fraction-free elimination.
    LMatrix a = *this;
    long shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long lo = 0;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const Laurent& x = a.at(i, j);
            if (x.is_zero()) continue;
            lo = any ? std::min(lo, x.low()) : x.low();
            any = true;
        }
        if (!any) return {};
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j).shifted(-lo);
        shift += lo;
    }
    int sign = 1;
    Laurent prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Laurent v = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto q = v.divide_exact(prev);
                if (!q) throw Error(Err::Internal, "Bareiss step was not exact");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = Laurent();
        }
        prev = a.at(k, k);
    }
    Laurent d = a.at(n - 1, n - 1).shifted(shift);
    return sign < 0 ? -d : d;
}

json LMatrix::to_json() const {
    json rows = json::array();
    for (std::size_t i = 0; i < r_; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c_; ++j) row.push_back(at(i, j).to_json());
        rows.push_back(row);
    }
    return {{"rows", r_}, {"cols", c_}, {"entries", rows}};
}

LMatrix LMatrix::from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries")) throw Error(Err::Schema, "matrix JSON needs 'entries'");
    const json& ent = j.at("entries");
    if (!ent.is_array()) throw Error(Err::Schema, "'entries' must be an array of rows");
    std::size_t r = ent.size(), c = r ? ent[0].size() : 0;
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != r)
        throw Error(Err::Schema, "'rows' does not match entries");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != c && r)
        throw Error(Err::Schema, "'cols' does not match entries");
    LMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!ent[i].is_array() || ent[i].size() != c) throw Error(Err::Schema, "ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = Laurent::from_json(ent[i][k]);
    }
    return m;
}

LMatrix solve_exact(LMatrix a, LMatrix b) {
    std::size_t n = a.rows(), k = b.cols();
    if (a.cols() != n || b.rows() != n) throw Error(Err::Shape, "solve_exact: shape mismatch");
    Laurent prev = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c).is_zero()) ++p;
        if (p == n) throw Error(Err::Singular, "solve_exact: singular system");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(p, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(b.at(c, j), b.at(p, j));
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            const Laurent f = a.at(i, c);
            auto step = [&](Laurent& x, const Laurent& top) {
                Laurent v = a.at(c, c) * x - f * top;
                auto q = v.divide_exact(prev);
                if (!q) throw Error(Err::Internal, "solve_exact: Bareiss step was not exact");
                x = std::move(*q);
            };
            for (std::size_t j = c + 1; j < n; ++j) step(a.at(i, j), a.at(c, j));
            for (std::size_t j = 0; j < k; ++j) step(b.at(i, j), b.at(c, j));
            a.at(i, c) = Laurent();
        }
        prev = a.at(c, c);
    }
    LMatrix x(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = n; i-- > 0;) {
            Laurent r = b.at(i, j);
            for (std::size_t m = i + 1; m < n; ++m)
                if (!a.at(i, m).is_zero()) r -= a.at(i, m) * x.at(m, j);
            auto q = r.divide_exact(a.at(i, i));
            if (!q) throw Error(Err::Internal, "solve_exact: solution is not a Laurent polynomial");
            x.at(i, j) = std::move(*q);
        }
    return x;
}

mpz_class int_det(std::vector<std::vector<mpz_class>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ---- fractions

Fraction::Fraction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Err::DivisionByZero, "fraction with zero denominator");
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw Error(Err::DivisionByZero, "inverting the zero fraction");
    return Fraction(den_, num_);
}

}  // namespace kinv
