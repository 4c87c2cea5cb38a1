#include "omega.hpp"

#include <regex>

#include "oracle.hpp"

namespace kinv {

namespace {

Laurent poly_field(const json& j, const char* name) {
    if (!j.contains(name)) return {};
    try {
        return Laurent::from_json(j.at(name));
    } catch (const Error& e) {
        throw Error(Err::Schema, std::string("field '") + name + "': " + e.what());
    }
}

long int_field(const json& j, const char* name, std::optional<long> dflt) {
    if (!j.contains(name)) {
        if (dflt) return *dflt;
        throw Error(Err::Schema, std::string("pair is missing '") + name + "'");
    }
    if (!j.at(name).is_number_integer()) throw Error(Err::Schema, std::string("'") + name + "' must be an integer");
    return j.at(name).get<long>();
}

}  // namespace

TowerData TowerData::from_json(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
        throw Error(Err::Schema, "tower JSON needs a 'pairs' array");
    TowerData t;
    for (const json& p : j.at("pairs")) {
        if (!p.is_object()) throw Error(Err::Schema, "each pair must be an object");
        TowerPair q;
        q.a = int_field(p, "a", std::nullopt);
        q.b = int_field(p, "b", std::nullopt);
        long s = int_field(p, "sign", 1);
        if (s != 1 && s != -1) throw Error(Err::Schema, "'sign' must be +1 or -1");
        q.sign = static_cast<int>(s);
        q.p_ww = poly_field(p, "p_ww");
        q.p_aa = poly_field(p, "p_aa");
        q.p_wa = poly_field(p, "p_wa");
        t.pairs.push_back(q);
    }
    if (j.contains("cross")) {
        if (!j.at("cross").is_object()) throw Error(Err::Schema, "'cross' must be an object");
        static const std::regex key_re(R"(^\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*$)");
        int d = static_cast<int>(t.size());
        for (const auto& [key, val] : j.at("cross").items()) {
            std::smatch m;
            if (!std::regex_match(key, m, key_re)) throw Error(Err::Schema, "bad cross key '" + key + "'");
            int r = std::stoi(m[1]), s = std::stoi(m[2]);
            if (r < 1 || s > d || r >= s) throw Error(Err::Shape, "cross key '" + key + "' out of range");
            if (r % 2 == 1 && s == r + 1) throw Error(Err::Shape, "cross key '" + key + "' names a pair; use p_wa");
            try {
                t.cross[{r, s}] = Laurent::from_json(val);
            } catch (const Error& e) {
                throw Error(Err::Schema, "cross '" + key + "': " + e.what());
            }
        }
    }
    return t;
}

json TowerData::to_json() const {
    json pj = json::array();
    for (const auto& p : pairs)
        pj.push_back({{"a", p.a}, {"b", p.b}, {"sign", p.sign}, {"p_ww", p.p_ww.to_json()},
                      {"p_aa", p.p_aa.to_json()}, {"p_wa", p.p_wa.to_json()}});
    json cj = json::object();
    for (const auto& [rs, p] : cross) cj["(" + std::to_string(rs.first) + "," + std::to_string(rs.second) + ")"] = p.to_json();
    return {{"pairs", pj}, {"cross", cj}};
}

LMatrix assemble_omega(const TowerData& t) {
    std::size_t d = t.size();
    const Laurent z = Laurent::z();
    LMatrix om(d, d);
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        const TowerPair& p = t.pairs[i];
        std::size_t w = 2 * i, a = 2 * i + 1;
        om.at(w, w) = z * (p.p_ww + p.p_ww.involute() + Laurent(p.a));
        om.at(a, a) = z * (p.p_aa + p.p_aa.involute() + Laurent(p.b)) + Laurent(p.sign);
        om.at(w, a) = z * p.p_wa + Laurent(1);
        om.at(a, w) = om.at(w, a).involute();
    }
    for (const auto& [rs, p] : t.cross) {
        auto r = static_cast<std::size_t>(rs.first - 1), s = static_cast<std::size_t>(rs.second - 1);
        if (s >= d || r >= s || (r % 2 == 0 && s == r + 1)) throw Error(Err::Shape, "inconsistent intersection table");
        om.at(r, s) = z * p;
        om.at(s, r) = om.at(r, s).involute();
    }
    return om;
}

int arf_from_tower(const TowerData& t) {
    int odd = 0;
    for (const auto& p : t.pairs) odd += p.a % 2 != 0;
    return odd % 2;
}

bool verify_arf_consistency(const TowerData& t) {
    return arf_levine(assemble_omega(t).det()) == arf_from_tower(t);
}

int det_mod8_blocked(const std::vector<long>& x, const std::vector<long>& y, const std::vector<std::vector<long>>& c) {
    std::size_t k = x.size(), d = 2 * k;
    if (y.size() != k) throw Error(Err::Shape, "x and y must have the same length");
    if (c.size() != d) throw Error(Err::Shape, "C must be 2k x 2k");
    for (std::size_t i = 0; i < k; ++i)
        if (x[i] % 4 != 0 || y[i] % 4 != 0) throw Error(Err::Domain, "x_i and y_i must be multiples of 4");
    std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c[i].size() != d) throw Error(Err::Shape, "C must be 2k x 2k");
        for (std::size_t j = 0; j < i; ++j)
            if (c[i][j] != 0) throw Error(Err::Domain, "C must be upper triangular");
    }
    for (std::size_t i = 0; i < k; ++i) {
        a[2 * i][2 * i] = x[i];
        a[2 * i][2 * i + 1] = 1;
        a[2 * i + 1][2 * i] = 1;
        a[2 * i + 1][2 * i + 1] = 1 + y[i];
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            a[i][j] += 4 * c[i][j];
            a[j][i] += 4 * c[i][j];
        }
    mpz_class det = int_det(a);
    auto mod8 = [](mpz_class v) {
        mpz_class r = v % 8;
        if (r < 0) r += 8;
        return static_cast<int>(r.get_si());
    };
    mpz_class expect = (k % 2 ? -1 : 1);
    for (long xi : x) expect += xi;
    int got = mod8(det);
    if (got != mod8(expect))
        throw Error(Err::Internal, "det A = " + det.get_str() + " is not (-1)^k + sum x_i mod 8");
    return got;
}

}  // namespace kinv
