#include "reference.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ref {

static void clean(Poly& p) {
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

Poly mono(long long c, long e) {
    Poly p;
    if (c) p[e] = c;
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) r[e] += c;
    clean(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    clean(r);
    return r;
}

Poly neg(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

Poly normalize(const Poly& p) {
    if (p.empty()) return p;
    long low = p.begin()->first;
    long long s = p.begin()->second < 0 ? -1 : 1;
    Poly r;
    for (const auto& [e, c] : p) r[e - low] = s * c;
    return r;
}

long long at(const Poly& p, long t) {
    if (t != 1 && t != -1) throw std::invalid_argument("t must be 1 or -1");
    long long v = 0;
    for (const auto& [e, c] : p) v += (t == -1 && std::labs(e) % 2 == 1) ? -c : c;
    return v;
}

Poly det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    std::map<unsigned long, Poly> memo;
    // minor of rows row..n-1 using the columns not in `used`
    std::function<Poly(std::size_t, unsigned long)> go = [&](std::size_t row, unsigned long used) -> Poly {
        if (row == n) return mono(1, 0);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        Poly acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used >> c & 1UL) continue;
            if (!m[row][c].empty()) {
                Poly term = mul(m[row][c], go(row + 1, used | (1UL << c)));
                acc = add(acc, sign > 0 ? term : neg(term));
            }
            sign = -sign;
        }
        memo[used] = acc;
        return acc;
    };
    return go(0, 0);
}

std::vector<std::vector<std::pair<int, int>>> faces(const PD& pd) {
    // other end of each (crossing, slot)
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (std::size_t c = 0; c < pd.size(); ++c)
        for (int s = 0; s < 4; ++s) where[pd[c][static_cast<std::size_t>(s)]].push_back({static_cast<int>(c), s});
    auto other = [&](int c, int s) {
        const auto& w = where.at(pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]);
        return w[0] == std::make_pair(c, s) ? w[1] : w[0];
    };
    std::vector<std::vector<bool>> seen(pd.size(), std::vector<bool>(4, false));
    std::vector<std::vector<std::pair<int, int>>> out;
    for (std::size_t c0 = 0; c0 < pd.size(); ++c0)
        for (int k0 = 0; k0 < 4; ++k0) {
            if (seen[c0][static_cast<std::size_t>(k0)]) continue;
            std::vector<std::pair<int, int>> face;
            int c = static_cast<int>(c0), k = k0;
            while (!seen[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = true;
                face.push_back({c, k});
                // leave along slot k+1; the same face is the corner starting at
                // that edge's slot on the far crossing
                auto [c2, s2] = other(c, (k + 1) % 4);
                c = c2;
                k = s2;
            }
            out.push_back(face);
        }
    return out;
}

Poly alexander_regions(const PD& pd) {
    std::size_t n = pd.size();
    if (n == 0) return mono(1, 0);
    auto fs = faces(pd);
    if (fs.size() != n + 2) throw std::runtime_error("diagram is not planar");
    std::vector<std::vector<int>> face_of(n, std::vector<int>(4, -1));
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (auto [c, k] : fs[f]) face_of[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = static_cast<int>(f);
    // corners: 0 (in-under, b) right-before, 1 right-after, 2 left-after, 3 left-before
    const Poly weight[4] = {mono(-1, 0), mono(1, 0), mono(-1, 1), mono(1, 1)};
    std::vector<std::vector<Poly>> full(n, std::vector<Poly>(fs.size()));
    for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            auto f = static_cast<std::size_t>(face_of[c][static_cast<std::size_t>(k)]);
            full[c][f] = add(full[c][f], weight[k]);
        }
    // the faces on both sides of the edge in slot 0 of crossing 0
    int drop1 = face_of[0][3], drop2 = face_of[0][0];
    std::vector<std::vector<Poly>> m(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t f = 0; f < fs.size(); ++f)
            if (static_cast<int>(f) != drop1 && static_cast<int>(f) != drop2) m[c].push_back(full[c][f]);
    return normalize(det(m));
}

PD parse_pd_loose(const std::string& text) {
    PD pd;
    std::vector<int> nums;
    std::string digits;
    for (char ch : text + " ") {
        if (ch >= '0' && ch <= '9') {
            digits += ch;
        } else if (!digits.empty()) {
            nums.push_back(std::stoi(digits));
            digits.clear();
        }
    }
    if (nums.size() % 4) throw std::invalid_argument("PD needs 4 labels per crossing");
    for (std::size_t i = 0; i < nums.size(); i += 4) pd.push_back({nums[i], nums[i + 1], nums[i + 2], nums[i + 3]});
    return pd;
}

std::string str(const Poly& p) {
    std::ostringstream ss;
    ss << "{";
    bool first = true;
    for (const auto& [e, c] : p) {
        ss << (first ? "" : ", ") << e << ": " << c;
        first = false;
    }
    ss << "}";
    return ss.str();
}

}  // namespace ref
