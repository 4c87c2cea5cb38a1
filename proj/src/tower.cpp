#include "tower.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "oracle.hpp"
#include "unknotting.hpp"

namespace kinv {

// ---- LinkDiagram

int LinkDiagram::add_crossing(int ca, std::vector<double> ka, int cb, std::vector<double> kb, bool a_over, int sign) {
    int id = static_cast<int>(x_.size());
    x_.push_back({a_over ? ca : cb, a_over ? cb : ca, sign});
    events_[static_cast<std::size_t>(ca)].push_back({std::move(ka), id, a_over});
    events_[static_cast<std::size_t>(cb)].push_back({std::move(kb), id, !a_over});
    return id;
}

long LinkDiagram::lk(int under, int over) const {
    long s = 0;
    for (const auto& x : x_)
        if (x.under == under && x.over == over) s += x.sign;
    return s;
}

std::vector<LinkEvent> LinkDiagram::traversal(int comp) const {
    std::vector<LinkEvent> ev = events_[static_cast<std::size_t>(comp)];
    std::stable_sort(ev.begin(), ev.end(), [](const LinkEvent& a, const LinkEvent& b) { return a.key < b.key; });
    if (!ev.empty()) {
        std::size_t r = start_[static_cast<std::size_t>(comp)] % ev.size();
        std::rotate(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(r), ev.end());
    }
    return ev;
}

// ---- CoverLinking

namespace {

Laurent tpow(long k) { return Laurent::t(k); }
int knot_weight(int comp) { return comp == 0 ? 1 : 0; }

}  // namespace

CoverLinking::CoverLinking(const LinkDiagram& link) : link_(link) {
    int C = link.components();
    const auto& X = link.crossings();
    arcs_.resize(static_cast<std::size_t>(C));
    for (int c = 0; c < C; ++c) {
        Arcs& a = arcs_[static_cast<std::size_t>(c)];
        a.ev = link.traversal(c);
        for (const auto& e : a.ev)
            if (!e.over) ++a.m;
        std::size_t cnt = 0;
        for (const auto& e : a.ev) {
            if (e.over) {
                a.over_arc[e.crossing] = a.m ? cnt % a.m : 0;
            } else {
                a.under_arc[e.crossing] = {cnt, (cnt + 1) % a.m};
                ++cnt;
            }
        }
    }
    // each component's cocycle on its own arcs: multiply by t^-s under U
    own_.resize(static_cast<std::size_t>(C));
    for (int b = 1; b < C; ++b) {
        const Arcs& a = arcs_[static_cast<std::size_t>(b)];
        std::vector<Laurent> cb(std::max<std::size_t>(a.m, 1));
        cb[0] = 1;
        for (const auto& e : a.ev) {
            if (e.over) continue;
            const LinkCrossing& x = X[static_cast<std::size_t>(e.crossing)];
            auto [in, out] = a.under_arc.at(e.crossing);
            Laurent nv = cb[in] * tpow(-x.sign * knot_weight(x.over));
            if (out == 0) {
                if (nv != Laurent(1))
                    throw Error(Err::Framing, component_name(b) + " links the unknot nontrivially");
            } else {
                cb[out] = nv;
            }
        }
        own_[static_cast<std::size_t>(b)] = std::move(cb);
    }
    // Fox equations at U's undercrossings; unknown 0 is pinned to zero and
    // the last equation is implied by the others.
    const Arcs& u = arcs_[0];
    std::size_t m = u.m, nb = static_cast<std::size_t>(std::max(C - 1, 0));
    LMatrix full(m, m), rhs(m, nb);
    std::vector<const LinkEvent*> rows;
    for (const auto& e : u.ev) {
        if (e.over) continue;
        std::size_t r = rows.size();
        rows.push_back(&e);
        const LinkCrossing& x = X[static_cast<std::size_t>(e.crossing)];
        auto [in, out] = u.under_arc.at(e.crossing);
        int aw = knot_weight(x.over);
        std::size_t w = arcs_[static_cast<std::size_t>(x.over)].over_arc.at(e.crossing);
        Laurent cw, cin;
        if (x.sign > 0) {
            cw = tpow(-aw) * (Laurent::t() - Laurent(1));
            cin = tpow(-aw);
        } else {
            cw = Laurent(1) - Laurent::t();
            cin = tpow(aw);
        }
        full.at(r, in) += cin;
        full.at(r, out) -= Laurent(1);
        if (x.over == 0) full.at(r, w) += cw;
        else rhs.at(r, static_cast<std::size_t>(x.over - 1)) -= cw * own_[static_cast<std::size_t>(x.over)][w];
    }
    knot_part_ = LMatrix(m, nb);
    if (m > 1) {
        LMatrix a(m - 1, m - 1), b(m - 1, nb);
        for (std::size_t r = 0; r + 1 < m; ++r) {
            for (std::size_t j = 1; j < m; ++j) a.at(r, j - 1) = full.at(r, j);
            for (std::size_t j = 0; j < nb; ++j) b.at(r, j) = rhs.at(r, j);
        }
        LMatrix x = solve_exact(a, b);
        for (std::size_t j = 1; j < m; ++j)
            for (std::size_t k = 0; k < nb; ++k) knot_part_.at(j, k) = x.at(j - 1, k);
    }
    if (m > 0)
        for (std::size_t k = 0; k < nb; ++k) {
            Laurent res;
            for (std::size_t j = 0; j < m; ++j) res += full.at(m - 1, j) * knot_part_.at(j, k);
            if (res != rhs.at(m - 1, k)) throw Error(Err::Internal, "cocycle equations are inconsistent");
        }
}

Laurent CoverLinking::value(int b, int comp, std::size_t arc) const {
    if (comp == b) return own_[static_cast<std::size_t>(b)][arc];
    if (comp == 0) return knot_part_.at(arc, static_cast<std::size_t>(b - 1));
    return {};
}

Laurent CoverLinking::lk_eq(int a, int b) const {
    const auto& X = link_.crossings();
    Laurent tot;
    long h = 0;
    for (const auto& e : arcs_[static_cast<std::size_t>(a)].ev) {
        if (e.over) continue;
        const LinkCrossing& x = X[static_cast<std::size_t>(e.crossing)];
        int aw = knot_weight(x.over);
        std::size_t w = arcs_[static_cast<std::size_t>(x.over)].over_arc.at(e.crossing);
        Laurent v = value(b, x.over, w);
        if (!v.is_zero()) {
            if (x.sign > 0) tot += tpow(h) * v;
            else tot -= tpow(h - aw) * v;
        }
        h += x.sign * aw;
    }
    return tot;
}

std::vector<long> CoverLinking::heights(int comp) const {
    const auto& X = link_.crossings();
    std::vector<long> out;
    long h = 0;
    for (const auto& e : arcs_[static_cast<std::size_t>(comp)].ev) {
        out.push_back(h);
        if (!e.over) {
            const LinkCrossing& x = X[static_cast<std::size_t>(e.crossing)];
            h += x.sign * knot_weight(x.over);
        }
    }
    out.push_back(h);
    return out;
}

// ---- singular diagram and loops

SingularDiagram make_singular(const Diagram& base, MarkedSet marked, int r3_budget) {
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
        throw Error(Err::Validation, "marked set has duplicate crossings");
    for (long id : marked) base.index_of(id);
    SingularDiagram s{base, marked, change_crossings(base, marked), {}};
    if (!verify_unknotted(s.changed, r3_budget))
        throw Error(Err::Certification, "changing the marked crossings was not certified to give the unknot");
    for (long id : marked) s.epsilon.push_back(s.changed.sign_at(s.changed.index_of(id)));
    return s;
}

std::vector<DoublePointLoop> build_loops(const SingularDiagram& s, const LoopChoices& ch) {
    std::vector<DoublePointLoop> loops;
    int n2 = static_cast<int>(s.changed.passes());
    for (std::size_t i = 0; i < s.marked.size(); ++i) {
        DoublePointLoop L;
        L.index = static_cast<int>(i);
        L.crossing = s.marked[i];
        int c = s.changed.index_of(L.crossing);
        // leave along the original under-strand, i.e. U's over-pass
        L.depart = s.changed.over_pass(c);
        L.arrive = s.changed.under_pass(c);
        if (i < ch.flip_subarc.size() && ch.flip_subarc[i]) std::swap(L.depart, L.arrive);
        for (int p = (L.depart + 1) % n2; p != L.arrive; p = (p + 1) % n2) L.interior.push_back(p);
        L.side = i < ch.side.size() ? ch.side[i] : 1;
        L.rank = static_cast<int>(i);
        L.basepoint_shift = i < ch.basepoint_shift.size() ? ch.basepoint_shift[i] : 0;
        loops.push_back(std::move(L));
    }
    return loops;
}

namespace {

constexpr long long kReach = 1000000;  // half-length of a crossing window

using Pt = std::pair<long long, long long>;

struct Piece {
    int comp;
    std::vector<Pt> pts;
    int height;
    std::vector<double> key;
};

int sgn(long long x) { return (x > 0) - (x < 0); }
int cross2(std::pair<int, int> a, std::pair<int, int> b) { return a.first * b.second - a.second * b.first; }

std::optional<Pt> seg_meet(Pt p0, Pt p1, Pt q0, Pt q1) {
    bool pv = p0.first == p1.first, qv = q0.first == q1.first;
    if (pv && !qv) {
        long long x = p0.first, y = q0.second;
        if (std::min(q0.first, q1.first) < x && x < std::max(q0.first, q1.first) &&
            std::min(p0.second, p1.second) < y && y < std::max(p0.second, p1.second))
            return Pt{x, y};
        return std::nullopt;
    }
    if (!pv && qv) return seg_meet(q0, q1, p0, p1);
    bool overlap = pv ? (p0.first == q0.first &&
                         std::max(std::min(p0.second, p1.second), std::min(q0.second, q1.second)) <
                             std::min(std::max(p0.second, p1.second), std::max(q0.second, q1.second)))
                      : (p0.second == q0.second &&
                         std::max(std::min(p0.first, p1.first), std::min(q0.first, q1.first)) <
                             std::min(std::max(p0.first, p1.first), std::max(q0.first, q1.first)));
    if (overlap) throw Error(Err::Internal, "overlapping strands in a crossing window");
    return std::nullopt;
}

struct Meet {
    double ta, tb;
    std::pair<int, int> da, db;
};

std::vector<Meet> piece_meets(const Piece& A, const Piece& B) {
    std::vector<Meet> out;
    long long la = 0;
    for (std::size_t a = 0; a + 1 < A.pts.size(); ++a) {
        Pt p0 = A.pts[a], p1 = A.pts[a + 1];
        long long lb = 0;
        for (std::size_t b = 0; b + 1 < B.pts.size(); ++b) {
            Pt q0 = B.pts[b], q1 = B.pts[b + 1];
            if (auto x = seg_meet(p0, p1, q0, q1)) {
                double ta = static_cast<double>(la + std::llabs(x->first - p0.first) + std::llabs(x->second - p0.second));
                double tb = static_cast<double>(lb + std::llabs(x->first - q0.first) + std::llabs(x->second - q0.second));
                out.push_back({ta, tb, {sgn(p1.first - p0.first), sgn(p1.second - p0.second)},
                               {sgn(q1.first - q0.first), sgn(q1.second - q0.second)}});
            }
            lb += std::llabs(q1.first - q0.first) + std::llabs(q1.second - q0.second);
        }
        la += std::llabs(p1.first - p0.first) + std::llabs(p1.second - p0.second);
    }
    return out;
}

long long loop_offset(const DoublePointLoop& L, bool pushoff) {
    return L.side * (2LL * L.rank + (pushoff ? 2 : 1));
}

bool contains(const std::vector<int>& v, int p) { return std::find(v.begin(), v.end(), p) != v.end(); }

std::vector<double> with(std::vector<double> k, double x) {
    k.push_back(x);
    return k;
}

}  // namespace

LinkDiagram loop_link(const SingularDiagram& s, const std::vector<DoublePointLoop>& loops) {
    const Diagram& U = s.changed;
    int n2 = static_cast<int>(U.passes());
    std::size_t d = loops.size();
    LinkDiagram link(static_cast<int>(1 + 2 * d));
    auto loopkey = [&](const DoublePointLoop& L, int p) { return static_cast<double>(2 * ((p - L.depart + n2) % n2)); };
    for (int c = 0; c < static_cast<int>(U.crossings()); ++c) {
        int u = U.under_pass(c), v = U.over_pass(c);
        long long sg = U.sign_at(c);
        std::vector<Piece> pieces;
        // the under strand runs along y = offset, the over strand along x = sign * offset
        auto line = [&](int comp, int p, long long o, double key) {
            if (p == u) pieces.push_back({comp, {{-kReach, o}, {kReach, o}}, 0, {key}});
            else pieces.push_back({comp, {{sg * o, sg * kReach}, {sg * o, -sg * kReach}}, 2, {key}});
        };
        for (int p : {u, v}) {
            line(0, p, 0, 2.0 * p);
            for (std::size_t i = 0; i < d; ++i)
                if (contains(loops[i].interior, p))
                    for (int k = 0; k < 2; ++k)
                        line(static_cast<int>(1 + 2 * i + k), p, loop_offset(loops[i], k == 1), loopkey(loops[i], p));
        }
        // the closing corner passes above everything in the window
        for (std::size_t i = 0; i < d; ++i) {
            if (U.index_of(loops[i].crossing) != c) continue;
            for (int k = 0; k < 2; ++k) {
                long long o = loop_offset(loops[i], k == 1);
                std::vector<Pt> arr, dep;
                if (loops[i].arrive == u) {
                    arr = {{-kReach, o}, {sg * o, o}};
                    dep = {{sg * o, o}, {sg * o, -sg * kReach}};
                } else {
                    arr = {{sg * o, sg * kReach}, {sg * o, o}};
                    dep = {{sg * o, o}, {kReach, o}};
                }
                int comp = static_cast<int>(1 + 2 * i + k);
                pieces.push_back({comp, arr, 4, {2.0 * n2, 0}});
                pieces.push_back({comp, dep, 4, {2.0 * n2, 1}});
            }
        }
        for (std::size_t a = 0; a < pieces.size(); ++a)
            for (std::size_t b = a + 1; b < pieces.size(); ++b) {
                const Piece &A = pieces[a], &B = pieces[b];
                for (const Meet& m : piece_meets(A, B)) {
                    if (A.height == B.height) throw Error(Err::Internal, "two strands at one height cross");
                    bool a_over = A.height > B.height;
                    int sign = a_over ? cross2(m.da, m.db) : cross2(m.db, m.da);
                    link.add_crossing(A.comp, with(A.key, m.ta), B.comp, with(B.key, m.tb), a_over, sign);
                }
            }
    }
    for (std::size_t i = 0; i < d; ++i) {
        link.set_start(static_cast<int>(1 + 2 * i), loops[i].basepoint_shift);
        link.set_start(static_cast<int>(2 + 2 * i), loops[i].basepoint_shift);
    }
    return link;
}

void frame_loops(LinkDiagram& link, std::vector<DoublePointLoop>& loops, std::size_t passes) {
    int n2 = static_cast<int>(passes);
    std::size_t d = loops.size();
    for (std::size_t i = 0; i < d; ++i) {
        loops[i].lk_initial = link.lk(static_cast<int>(1 + 2 * i), 0);
        loops[i].tau = -loops[i].lk_initial;
    }
    std::vector<long long> off(1 + 2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        off[1 + 2 * i] = loop_offset(loops[i], false);
        off[2 + 2 * i] = loop_offset(loops[i], true);
    }
    // fingers sit on the departure edge, pushed across the strands between
    // the loop and the knot
    for (std::size_t i = 0; i < d; ++i) {
        const DoublePointLoop& L = loops[i];
        long k = std::labs(L.tau);
        if (k == 0) continue;
        int pa = L.depart;
        int side = L.side;
        int T = (L.tau > 0 ? 1 : -1) * side;
        std::vector<int> along{0};
        for (std::size_t j = 0; j < d; ++j)
            if (j != i && contains(loops[j].interior, pa)) {
                along.push_back(static_cast<int>(1 + 2 * j));
                along.push_back(static_cast<int>(2 + 2 * j));
            }
        auto ekey = [&](int comp) {
            if (comp == 0) return std::vector<double>{2.0 * pa + 1};
            const DoublePointLoop& Lj = loops[static_cast<std::size_t>((comp - 1) / 2)];
            return std::vector<double>{2.0 * ((pa - Lj.depart + n2) % n2) + 1};
        };
        for (long f = 0; f < k; ++f)
            for (int inner = 0; inner < 2; ++inner) {
                int comp = static_cast<int>(1 + 2 * i + inner);
                long long o = off[static_cast<std::size_t>(comp)];
                std::vector<int> targets;
                for (int c : along)
                    if (c == 0 || (off[static_cast<std::size_t>(c)] * side > 0 && std::llabs(off[static_cast<std::size_t>(c)]) < std::llabs(o)))
                        targets.push_back(c);
                double xo = 10.0 * f + inner, xb = 10.0 * f + 9 - inner;
                auto by = [&](int dir) {
                    std::vector<int> v = targets;
                    std::stable_sort(v.begin(), v.end(), [&](int a, int b) {
                        return dir * side * off[static_cast<std::size_t>(a)] < dir * side * off[static_cast<std::size_t>(b)];
                    });
                    return v;
                };
                std::pair<int, int> along_dir{1, 0};
                auto out_leg = by(-1);
                for (std::size_t idx = 0; idx < out_leg.size(); ++idx) {
                    int c = out_leg[idx];
                    std::pair<int, int> dl{0, -side};
                    bool over = c == 0 ? T == 1 : true;
                    int sign = over ? cross2(dl, along_dir) : cross2(along_dir, dl);
                    link.add_crossing(comp, {1, static_cast<double>(f), 0, static_cast<double>(idx)}, c,
                                      with(ekey(c), -1e9 + xo), over, sign);
                }
                auto back_leg = by(1);
                for (std::size_t idx = 0; idx < back_leg.size(); ++idx) {
                    int c = back_leg[idx];
                    std::pair<int, int> dl{0, side};
                    bool over = c == 0 ? T != 1 : true;
                    int sign = over ? cross2(dl, along_dir) : cross2(along_dir, dl);
                    link.add_crossing(comp, {1, static_cast<double>(f), 1, static_cast<double>(idx)}, c,
                                      with(ekey(c), -1e9 + xb), over, sign);
                }
            }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (int k = 1; k <= 2; ++k)
            if (link.lk(static_cast<int>(2 * i + static_cast<std::size_t>(k)), 0) != 0)
                throw Error(Err::Framing, "loop " + std::to_string(i + 1) + " still links the knot after framing");
}

std::string component_name(int comp) {
    if (comp == 0) return "U";
    return "L" + std::to_string((comp + 1) / 2) + (comp % 2 == 0 ? "'" : "");
}

long grade_crossing(const LinkDiagram& link, const CoverLinking& cover, int crossing) {
    const LinkCrossing& x = link.crossings()[static_cast<std::size_t>(crossing)];
    auto at = [&](int comp, bool over) {
        auto ev = link.traversal(comp);
        auto h = cover.heights(comp);
        for (std::size_t k = 0; k < ev.size(); ++k)
            if (ev[k].crossing == crossing && ev[k].over == over) return h[k];
        throw Error(Err::Internal, "crossing missing from its component");
    };
    return at(x.over, true) - at(x.under, false);
}

std::vector<CatalogEntry> crossing_catalog(const LinkDiagram& link, const CoverLinking& cover) {
    std::vector<CatalogEntry> out;
    int C = link.components();
    // height of every event, looked up by (crossing, role)
    std::map<std::pair<int, bool>, long> h;
    for (int c = 0; c < C; ++c) {
        auto ev = link.traversal(c);
        auto hs = cover.heights(c);
        for (std::size_t k = 0; k < ev.size(); ++k) h[{ev[k].crossing, ev[k].over}] = hs[k];
    }
    const auto& X = link.crossings();
    for (std::size_t k = 0; k < X.size(); ++k) {
        CatalogEntry e{static_cast<int>(k), X[k].over, X[k].under, X[k].sign, std::nullopt};
        if (X[k].over != 0 && X[k].under != 0)
            e.grading = h[{static_cast<int>(k), true}] - h[{static_cast<int>(k), false}];
        out.push_back(e);
    }
    return out;
}

LMatrix lambda_from_loops(const LinkDiagram& framed, const std::vector<DoublePointLoop>& loops) {
    if (loops.size() != 1) throw Error(Err::Domain, "the loop route handles a single marked crossing");
    CoverLinking cover(framed);
    LMatrix lam(1, 1);
    lam.at(0, 0) = -cover.lk_eq(1, 2) - Laurent(loops[0].tau);
    return lam;
}

// ---- surgery route

LinkDiagram surgery_link(const SingularDiagram& s, const std::vector<std::size_t>& rotation) {
    const Diagram& U = s.changed;
    std::size_t d = s.marked.size();
    LinkDiagram link(static_cast<int>(1 + 2 * d));
    const double R = static_cast<double>(kReach);
    for (int c = 0; c < static_cast<int>(U.crossings()); ++c) {
        int u = U.under_pass(c), v = U.over_pass(c), sg = U.sign_at(c);
        link.add_crossing(0, {2.0 * v, R}, 0, {2.0 * u, R}, true, sg);
        auto it = std::find(s.marked.begin(), s.marked.end(), U.ids()[static_cast<std::size_t>(c)]);
        if (it == s.marked.end()) continue;
        std::size_t i = static_cast<std::size_t>(it - s.marked.begin());
        // a small square around the crossing, counterclockwise from the east leg
        const char* pattern = sg > 0 ? "uuoo" : "uoou";
        for (int k = 0; k < 2; ++k) {
            int comp = static_cast<int>(1 + 2 * i + static_cast<std::size_t>(k));
            int rho = k + 1;
            struct Leg {
                int x, y;
                std::pair<int, int> dir;
            };
            const Leg legs[4] = {{rho, 0, {0, 1}}, {0, rho, {-1, 0}}, {-rho, 0, {0, -1}}, {0, -rho, {1, 0}}};
            for (int g = 0; g < 4; ++g) {
                const Leg& L = legs[g];
                std::pair<int, int> ds;
                std::vector<double> ukey;
                if (g % 2 == 0) {
                    ds = {1, 0};
                    ukey = {2.0 * u, R + L.x};
                } else {
                    ds = {0, -sg};
                    ukey = {2.0 * v, std::abs(static_cast<double>(L.y) - sg * R)};
                }
                bool over = pattern[g] == 'o';
                int sign = over ? cross2(L.dir, ds) : cross2(ds, L.dir);
                link.add_crossing(comp, {static_cast<double>(g)}, 0, ukey, over, sign);
            }
            if (i < rotation.size()) link.set_start(comp, rotation[i]);
        }
    }
    return link;
}

SurgeryData lambda_from_surgery(const SingularDiagram& s, const std::vector<std::size_t>& rotation) {
    std::size_t d = s.marked.size();
    LinkDiagram link = surgery_link(s, rotation);
    for (std::size_t i = 0; i < d; ++i)
        if (link.lk(static_cast<int>(1 + 2 * i), 0) != 0) throw Error(Err::Framing, "crossing circle links the knot");
    CoverLinking cover(link);
    SurgeryData out;
    out.linking = LMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out.linking.at(i, j) = cover.lk_eq(static_cast<int>(1 + 2 * i), static_cast<int>(i == j ? 2 + 2 * i : 1 + 2 * j));
    LMatrix E = LMatrix::diag(std::vector<Laurent>(s.epsilon.begin(), s.epsilon.end()));
    // Unitriangular P = I + E * (strict upper part of A). Off-diagonal A_ij
    // vanish at t = 1, and a product of two such entries is divisible by
    // z = -t^-1 (1-t)^2, so P* (E - A) P = E mod z. P moves with basepoint
    // changes (A -> D* A D gives P -> D* P D), keeping Psi covariant.
    LMatrix P = LMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            if (out.linking.at(i, j).eval_int(1) != 0) throw Error(Err::Internal, "crossing circles link each other");
            P.at(i, j) = out.linking.at(i, j).scaled(s.epsilon[i]);
        }
    out.psi = P.star() * (E - out.linking) * P;
    out.lambda = LMatrix(d, d);
    const Laurent z = Laurent::z();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto q = (out.psi.at(i, j) - E.at(i, j)).divide_exact(z);
            if (!q) throw Error(Err::Internal, "surgery matrix is not congruent to z Lambda + E");
            out.lambda.at(i, j) = *q;
        }
    return out;
}

LMatrix assemble_psi(const LMatrix& lambda, const std::vector<int>& epsilon) {
    if (lambda.rows() != lambda.cols() || lambda.rows() != epsilon.size())
        throw Error(Err::Shape, "assemble_psi: Lambda must be d x d with d signs");
    LMatrix psi = lambda.scaled(Laurent::z());
    for (std::size_t i = 0; i < epsilon.size(); ++i) psi.at(i, i) += Laurent(epsilon[i]);
    return psi;
}

bool diagonal_unit_congruent(const LMatrix& a, const LMatrix& b) {
    std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i) != b.at(i, i)) return false;
    // b_ij = t^(k_j - k_i) a_ij; propagate k along nonzero entries
    std::vector<std::optional<long>> k(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (k[root]) continue;
        k[root] = 0;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const Laurent &x = a.at(i, j), &y = b.at(i, j);
                if (x.is_zero() != y.is_zero()) return false;
                if (x.is_zero()) continue;
                long delta = y.low() - x.low();
                if (x.shifted(delta) != y) return false;
                long want = *k[i] + delta;
                if (!k[j]) {
                    k[j] = want;
                    q.push(j);
                } else if (*k[j] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- end to end

PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opt) {
    PipelineResult r;
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    bool randomize = opt.seed != 0;
    MarkedSet marked;
    if (opt.marked) {
        marked = *opt.marked;
    } else if (opt.auto_unknot == AutoUnknot::Minimal) {
        marked = minimal_search(d, opt.size_budget, opt.r3_budget);
    } else {
        int n2 = static_cast<int>(d.passes());
        if (randomize && n2 > 0) r.descending_basepoint = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n2));
        marked = descending_set(d, r.descending_basepoint);
    }
    r.singular = make_singular(d, marked, opt.r3_budget);
    const SingularDiagram& S = r.singular;
    std::size_t dd = S.marked.size();

    LoopChoices ch;
    for (std::size_t i = 0; i < dd; ++i) {
        ch.flip_subarc.push_back(randomize ? static_cast<int>(rng() % 2) : 0);
        ch.side.push_back(randomize && rng() % 2 ? -1 : 1);
        ch.basepoint_shift.push_back(randomize ? static_cast<std::size_t>(rng() % 64) : 0);
        r.rotation.push_back(randomize ? static_cast<std::size_t>(rng() % 4) : 0);
    }
    r.loops = build_loops(S, ch);
    LinkDiagram link = loop_link(S, r.loops);
    frame_loops(link, r.loops, S.changed.passes());
    CoverLinking cover(link);
    r.catalog = crossing_catalog(link, cover);
    for (std::size_t i = 0; i < dd; ++i) {
        auto h = cover.heights(static_cast<int>(1 + 2 * i));
        if (h.back() != 0) throw Error(Err::Framing, "loop gradings do not close up");
    }

    if (dd == 1) {
        r.route = "loops";
        r.lambda = lambda_from_loops(link, r.loops);
    } else {
        r.route = "surgery";
        r.lambda = lambda_from_surgery(S, r.rotation).lambda;
    }
    r.psi = assemble_psi(r.lambda, S.epsilon);
    r.det_psi = r.psi.det();
    r.delta = r.det_psi.normalize_unit();
    r.arf = arf_levine(r.det_psi);
    return r;
}

LMatrix psi_with_moved_basepoints(const PipelineResult& r, std::size_t extra) {
    std::size_t d = r.singular.marked.size();
    if (d == 0) return LMatrix();
    LMatrix lam;
    if (r.route == "loops") {
        std::vector<DoublePointLoop> loops = r.loops;
        for (auto& L : loops) L.basepoint_shift += extra;
        LinkDiagram link = loop_link(r.singular, loops);
        frame_loops(link, loops, r.singular.changed.passes());
        lam = lambda_from_loops(link, loops);
    } else {
        std::vector<std::size_t> rot = r.rotation;
        for (auto& x : rot) x += extra;
        lam = lambda_from_surgery(r.singular, rot).lambda;
    }
    return assemble_psi(lam, r.singular.epsilon);
}

json PipelineResult::to_json() const {
    json loops_j = json::array();
    for (const auto& L : loops)
        loops_j.push_back({{"crossing", L.crossing}, {"depart_pass", L.depart}, {"arrive_pass", L.arrive},
                           {"interior", L.interior}, {"side", L.side}, {"lk_initial", L.lk_initial},
                           {"tau", L.tau}, {"basepoint_shift", L.basepoint_shift}});
    json cat = json::array();
    for (const auto& e : catalog) {
        json g = e.grading ? json(*e.grading) : json(nullptr);
        cat.push_back({{"over", component_name(e.over)}, {"under", component_name(e.under)}, {"sign", e.sign}, {"grading", g}});
    }
    std::vector<long> tau;
    for (const auto& L : loops) tau.push_back(L.tau);
    return {{"seed", seed},
            {"marked", singular.marked},
            {"descending_basepoint", descending_basepoint},
            {"epsilon", singular.epsilon},
            {"tau", tau},
            {"route", route},
            {"loops", loops_j},
            {"catalog", cat},
            {"lambda", lambda.to_json()},
            {"psi", psi.to_json()},
            {"det_psi", det_psi.to_json()},
            {"delta", delta.to_json()},
            {"delta_text", delta.str()},
            {"arf", arf}};
}

}  // namespace kinv
