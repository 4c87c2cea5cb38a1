#include "oracle.hpp"

#include <numeric>

namespace kinv {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Wirtinger wirtinger(const Diagram& d) {
    Wirtinger w;
    int n2 = static_cast<int>(d.passes());
    if (n2 == 0) {
        w.generators = 1;
        return w;
    }
    // an arc continues straight through every over-pass
    Dsu dsu(n2);
    for (int p = 0; p < n2; ++p)
        if (d.seq()[static_cast<std::size_t>(p)].over) dsu.unite((p - 1 + n2) % n2, p);
    std::vector<int> root_id(static_cast<std::size_t>(n2), -1);
    w.edge_gen.resize(static_cast<std::size_t>(n2));
    // generators numbered in order of their first edge
    for (int e = 0; e < n2; ++e) {
        int r = dsu.find(e);
        if (root_id[static_cast<std::size_t>(r)] < 0) root_id[static_cast<std::size_t>(r)] = w.generators++;
        w.edge_gen[static_cast<std::size_t>(e)] = root_id[static_cast<std::size_t>(r)];
    }
    for (std::size_t c = 0; c < d.crossings(); ++c) {
        int u = d.under_pass(static_cast<int>(c)), o = d.over_pass(static_cast<int>(c));
        w.relators.push_back({w.edge_gen[static_cast<std::size_t>(o)], w.edge_gen[static_cast<std::size_t>((u - 1 + n2) % n2)],
                              w.edge_gen[static_cast<std::size_t>(u)], d.sign_at(static_cast<int>(c))});
    }
    return w;
}

int abelian_rank(const Wirtinger& w) {
    // every relator abelianizes to x_out = x_in
    Dsu dsu(w.generators);
    for (const auto& r : w.relators) dsu.unite(r.in, r.out);
    int comps = 0;
    for (int g = 0; g < w.generators; ++g)
        if (dsu.find(g) == g) ++comps;
    return comps;
}

LMatrix fox_matrix(const Wirtinger& w) {
    LMatrix m(w.relators.size(), static_cast<std::size_t>(w.generators));
    const Laurent t = Laurent::t(), ti = Laurent::t(-1);
    for (std::size_t r = 0; r < w.relators.size(); ++r) {
        const Relator& x = w.relators[r];
        auto& ov = m.at(r, static_cast<std::size_t>(x.over));
        auto& in = m.at(r, static_cast<std::size_t>(x.in));
        if (x.sign > 0) {
            ov += Laurent(1) - ti;
            in += ti;
        } else {
            ov += Laurent(1) - t;
            in += t;
        }
        m.at(r, static_cast<std::size_t>(x.out)) -= Laurent(1);
    }
    return m;
}

Laurent alexander_poly_oracle(const Diagram& d) {
    if (d.crossings() == 0) return Laurent(1);
    Wirtinger w = wirtinger(d);
    if (abelian_rank(w) != 1) throw Error(Err::Internal, "Wirtinger abelianization is not Z");
    LMatrix f = fox_matrix(w);
    std::size_t rows = f.rows(), cols = f.cols();
    Laurent first = f.minor_matrix(rows - 1, cols - 1).det().normalize_unit();
    Laurent second = f.minor_matrix(0, 0).det().normalize_unit();
    if (first != second)
        throw Error(Err::Internal, "Alexander minors disagree: " + first.str() + " vs " + second.str());
    return first;
}

int arf_levine(const Laurent& delta) {
    mpz_class v = delta.eval_int(-1);
    mpz_class r = v % 8;
    if (r < 0) r += 8;
    if (r == 1 || r == 7) return 0;
    if (r == 3 || r == 5) return 1;
    throw Error(Err::Domain, "Delta(-1) = " + v.get_str() + " is even; not an Alexander polynomial");
}

}  // namespace kinv
