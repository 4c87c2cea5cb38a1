#include "unknotting.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <thread>
#include <unordered_set>

#include "oracle.hpp"

namespace kinv {

namespace {

using Face = std::vector<int>;  // arc labels around one face

std::vector<Face> faces_of(const Diagram& d) {
    auto pd = d.pd();
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int s = 0; s < 4; ++s) where[pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    std::set<std::pair<int, int>> seen;
    std::vector<Face> out;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int s = 0; s < 4; ++s) {
            std::pair<int, int> x{c, s};
            if (seen.count(x)) continue;
            Face f;
            while (!seen.count(x)) {
                seen.insert(x);
                int lab = pd[static_cast<std::size_t>(x.first)][static_cast<std::size_t>(x.second)];
                f.push_back(lab);
                const auto& v = where[lab];
                auto y = v[0] == x ? v[1] : v[0];
                x = {y.first, (y.second + 1) % 4};
            }
            out.push_back(f);
        }
    return out;
}

// Passes joined by the edge with this label: (from, to).
std::pair<int, int> edge_passes(const Diagram& d, int label) {
    int n2 = static_cast<int>(d.passes());
    return {(label - 2 + n2) % n2, (label - 1) % n2};
}

Diagram drop_crossings(const Diagram& d, const std::set<int>& gone) {
    std::vector<int> remap(d.crossings(), -1);
    std::vector<int> signs;
    std::vector<long> ids;
    for (std::size_t c = 0; c < d.crossings(); ++c)
        if (!gone.count(static_cast<int>(c))) {
            remap[c] = static_cast<int>(signs.size());
            signs.push_back(d.signs()[c]);
            ids.push_back(d.ids()[c]);
        }
    std::vector<Pass> seq;
    for (const auto& p : d.seq())
        if (remap[static_cast<std::size_t>(p.crossing)] >= 0) seq.push_back({remap[static_cast<std::size_t>(p.crossing)], p.over});
    return Diagram(std::move(seq), std::move(signs), std::move(ids));
}

std::string state_key(const Diagram& d) {
    std::string k;
    k.reserve(d.passes() * 3);
    for (const auto& p : d.seq()) {
        k += std::to_string(p.crossing);
        k += p.over ? 'o' : 'u';
        k += d.sign_at(p.crossing) > 0 ? '+' : '-';
    }
    return k;
}

Diagram simplify_greedy(Diagram d) {
    for (;;) {
        if (auto r = r1_step(d)) {
            d = *r;
            continue;
        }
        if (auto r = r2_step(d)) {
            d = *r;
            continue;
        }
        return d;
    }
}

}  // namespace

MarkedSet descending_set(const Diagram& d, int basepoint) {
    int n2 = static_cast<int>(d.passes());
    if (n2 == 0) {
        if (basepoint != 1) throw Error(Err::UnknownArc, "the unknot diagram has only arc 1");
        return {};
    }
    if (basepoint < 1 || basepoint > n2) throw Error(Err::UnknownArc, "no arc " + std::to_string(basepoint));
    std::vector<bool> seen(d.crossings(), false);
    MarkedSet out;
    for (int k = 0; k < n2; ++k) {
        const Pass& p = d.seq()[static_cast<std::size_t>((basepoint - 1 + k) % n2)];
        if (seen[static_cast<std::size_t>(p.crossing)]) continue;
        seen[static_cast<std::size_t>(p.crossing)] = true;
        if (!p.over) out.push_back(d.ids()[static_cast<std::size_t>(p.crossing)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Diagram> r1_step(const Diagram& d) {
    std::size_t n2 = d.passes();
    for (std::size_t p = 0; p < n2; ++p)
        if (d.seq()[p].crossing == d.seq()[(p + 1) % n2].crossing) return drop_crossings(d, {d.seq()[p].crossing});
    return std::nullopt;
}

std::optional<Diagram> r2_step(const Diagram& d) {
    for (const Face& f : faces_of(d)) {
        if (f.size() != 2) continue;
        auto [a0, a1] = edge_passes(d, f[0]);
        auto [b0, b1] = edge_passes(d, f[1]);
        const auto& s = d.seq();
        bool a_over = s[static_cast<std::size_t>(a0)].over && s[static_cast<std::size_t>(a1)].over;
        bool a_under = !s[static_cast<std::size_t>(a0)].over && !s[static_cast<std::size_t>(a1)].over;
        bool b_over = s[static_cast<std::size_t>(b0)].over && s[static_cast<std::size_t>(b1)].over;
        bool b_under = !s[static_cast<std::size_t>(b0)].over && !s[static_cast<std::size_t>(b1)].over;
        if ((a_over && b_under) || (a_under && b_over))
            return drop_crossings(d, {s[static_cast<std::size_t>(a0)].crossing, s[static_cast<std::size_t>(a1)].crossing});
    }
    return std::nullopt;
}

std::vector<Diagram> r3_moves(const Diagram& d) {
    std::vector<Diagram> out;
    const auto& s = d.seq();
    for (const Face& f : faces_of(d)) {
        if (f.size() != 3) continue;
        int oo = 0, uu = 0, mixed = 0;
        std::set<int> xs;
        for (int lab : f) {
            auto [p, q] = edge_passes(d, lab);
            bool po = s[static_cast<std::size_t>(p)].over, qo = s[static_cast<std::size_t>(q)].over;
            xs.insert(s[static_cast<std::size_t>(p)].crossing);
            xs.insert(s[static_cast<std::size_t>(q)].crossing);
            if (po && qo) ++oo;
            else if (!po && !qo) ++uu;
            else ++mixed;
        }
        if (xs.size() != 3 || oo != 1 || uu != 1 || mixed != 1) continue;
        std::vector<Pass> seq = s;
        for (int lab : f) {
            auto [p, q] = edge_passes(d, lab);
            std::swap(seq[static_cast<std::size_t>(p)], seq[static_cast<std::size_t>(q)]);
        }
        try {
            out.emplace_back(std::move(seq), d.signs(), d.ids());
        } catch (const Error&) {
            // a triangle that is not a genuine R3 configuration
        }
    }
    return out;
}

bool verify_unknotted(const Diagram& input, int r3_budget) {
    Diagram cur = simplify_greedy(input);
    int budget = std::max(r3_budget, 0);
    while (cur.crossings() > 0) {
        // breadth-first over R3 moves until something simplifies
        std::deque<Diagram> queue{cur};
        std::unordered_set<std::string> seen{state_key(cur)};
        bool progressed = false;
        while (!queue.empty() && !progressed) {
            Diagram x = queue.front();
            queue.pop_front();
            for (Diagram& y : r3_moves(x)) {
                if (budget-- <= 0) return false;
                if (!seen.insert(state_key(y)).second) continue;
                Diagram r = simplify_greedy(y);
                if (r.crossings() < cur.crossings()) {
                    cur = r;
                    progressed = true;
                    break;
                }
                queue.push_back(std::move(y));
            }
        }
        if (!progressed) return false;
    }
    return true;
}

namespace {

void subsets_of_size(const std::vector<long>& ids, std::size_t k, std::size_t start, MarkedSet& cur,
                     std::vector<MarkedSet>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= ids.size(); ++i) {
        cur.push_back(ids[i]);
        subsets_of_size(ids, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MarkedSet minimal_search(const Diagram& d, int size_budget, int r3_budget, int jobs) {
    if (d.crossings() == 0) return {};
    std::vector<long> ids = d.ids();
    std::sort(ids.begin(), ids.end());
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t width = jobs > 0 ? static_cast<std::size_t>(jobs) : hw;
    auto certified = [&](const MarkedSet& s) {
        Diagram c = change_crossings(d, s);
        // Delta != 1 proves the change did not unknot
        if (alexander_poly_oracle(c) != Laurent(1)) return false;
        return verify_unknotted(c, r3_budget);
    };
    std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(size_budget, 0)), ids.size());
    for (std::size_t k = 0; k <= limit; ++k) {
        std::vector<MarkedSet> cands;
        MarkedSet cur;
        subsets_of_size(ids, k, 0, cur, cands);
        for (std::size_t b = 0; b < cands.size(); b += width) {
            std::size_t e = std::min(cands.size(), b + width);
            std::vector<std::future<bool>> fut;
            for (std::size_t i = b; i < e; ++i) fut.push_back(std::async(std::launch::async, certified, std::cref(cands[i])));
            std::vector<bool> ok;
            for (auto& f : fut) ok.push_back(f.get());
            for (std::size_t i = b; i < e; ++i)
                if (ok[i - b]) return cands[i];
        }
    }
    return descending_set(d, 1);
}

}  // namespace kinv
