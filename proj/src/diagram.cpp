#include "diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace kinv {

namespace {

int arc_in(int p) { return p + 1; }
int arc_out(int p, int n2) { return (p + 1) % n2 + 1; }

std::vector<std::array<int, 4>> pd_from_seq(const std::vector<Pass>& seq, const std::vector<int>& signs,
                                            std::size_t n) {
    int n2 = static_cast<int>(seq.size());
    std::vector<int> ov(n, -1), un(n, -1);
    for (int p = 0; p < n2; ++p) (seq[static_cast<std::size_t>(p)].over ? ov : un)[static_cast<std::size_t>(seq[static_cast<std::size_t>(p)].crossing)] = p;
    std::vector<std::array<int, 4>> pd(n);
    for (std::size_t c = 0; c < n; ++c) {
        int u = un[c], o = ov[c];
        if (signs[c] > 0) pd[c] = {arc_in(u), arc_in(o), arc_out(u, n2), arc_out(o, n2)};
        else pd[c] = {arc_in(u), arc_out(o, n2), arc_out(u, n2), arc_in(o)};
    }
    return pd;
}

}  // namespace

int face_count(const std::vector<std::array<int, 4>>& pd) {
    if (pd.empty()) return 2;
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int s = 0; s < 4; ++s) where[pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    for (const auto& [lab, v] : where)
        if (v.size() != 2) return -1;
    auto opp = [&](std::pair<int, int> d) {
        const auto& v = where[pd[static_cast<std::size_t>(d.first)][static_cast<std::size_t>(d.second)]];
        return v[0] == d ? v[1] : v[0];
    };
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c)
        for (int s = 0; s < 4; ++s) {
            std::pair<int, int> d{c, s};
            if (seen.count(d)) continue;
            ++faces;
            while (!seen.count(d)) {
                seen.insert(d);
                auto y = opp(d);
                d = {y.first, (y.second + 1) % 4};
            }
        }
    return faces;
}

Diagram::Diagram(std::vector<Pass> seq, std::vector<int> signs, std::vector<long> ids)
    : seq_(std::move(seq)), sign_(std::move(signs)), ids_(std::move(ids)) {
    std::size_t n = sign_.size();
    if (seq_.size() != 2 * n) throw Error(Err::Validation, "Gauss sequence length must be twice the crossing count");
    if (ids_.size() != n) throw Error(Err::Validation, "one id per crossing required");
    std::set<long> idset(ids_.begin(), ids_.end());
    if (idset.size() != n) throw Error(Err::Validation, "duplicate crossing ids");
    over_.assign(n, -1);
    under_.assign(n, -1);
    for (std::size_t p = 0; p < seq_.size(); ++p) {
        const Pass& ps = seq_[p];
        if (ps.crossing < 0 || static_cast<std::size_t>(ps.crossing) >= n)
            throw Error(Err::Validation, "pass refers to a missing crossing");
        int& slot = ps.over ? over_[static_cast<std::size_t>(ps.crossing)] : under_[static_cast<std::size_t>(ps.crossing)];
        if (slot >= 0)
            throw Error(Err::Validation, "crossing " + std::to_string(ids_[static_cast<std::size_t>(ps.crossing)]) +
                                             " has two " + (ps.over ? "over" : "under") + "-passes");
        slot = static_cast<int>(p);
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (sign_[c] != 1 && sign_[c] != -1) throw Error(Err::Validation, "crossing signs must be +1 or -1");
        if (over_[c] < 0 || under_[c] < 0)
            throw Error(Err::Validation, "crossing " + std::to_string(ids_[c]) + " lacks an " +
                                             (over_[c] < 0 ? "over" : "under") + "-pass");
    }
    if (face_count(pd()) != static_cast<int>(n) + 2)
        throw Error(Err::Validation, "the code is not realisable by a planar diagram");
}

bool Diagram::same_seq(const Diagram& b) const {
    for (std::size_t i = 0; i < seq_.size(); ++i)
        if (seq_[i].crossing != b.seq_[i].crossing || seq_[i].over != b.seq_[i].over) return false;
    return true;
}

int Diagram::index_of(long id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id) return static_cast<int>(i);
    throw Error(Err::UnknownCrossing, "no crossing with id " + std::to_string(id));
}

std::vector<std::array<int, 4>> Diagram::pd() const { return pd_from_seq(seq_, sign_, sign_.size()); }

int Diagram::writhe() const {
    int w = 0;
    for (int s : sign_) w += s;
    return w;
}

// ---- PD text

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw Error(Err::Parse, std::string("expected '") + c + "' at offset " + std::to_string(i));
    }
    long integer() {
        ws();
        std::size_t b = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i || (i == b + 1 && !std::isdigit(static_cast<unsigned char>(s[b]))))
            throw Error(Err::Parse, "expected an integer at offset " + std::to_string(b));
        return std::stol(s.substr(b, i - b));
    }
    void word(const char* w) {
        ws();
        std::size_t L = std::char_traits<char>::length(w);
        if (s.compare(i, L, w) == 0) i += L;
    }
};

}  // namespace

Diagram parse_pd(const std::string& text) {
    Cursor cur{text};
    cur.word("PD");
    cur.expect('[');
    std::vector<std::array<long, 4>> tuples;
    if (!cur.eat(']')) {
        for (;;) {
            cur.word("X");
            cur.expect('[');
            std::array<long, 4> a{};
            for (int k = 0; k < 4; ++k) {
                if (k) cur.expect(',');
                a[static_cast<std::size_t>(k)] = cur.integer();
            }
            cur.expect(']');
            tuples.push_back(a);
            if (cur.eat(']')) break;
            cur.expect(',');
        }
    }
    cur.ws();
    if (cur.i != text.size()) throw Error(Err::Parse, "trailing characters after the PD list");

    std::size_t n = tuples.size();
    long n2 = static_cast<long>(2 * n);
    std::map<long, int> count;
    for (const auto& a : tuples)
        for (long x : a) ++count[x];
    std::vector<long> bad;
    for (const auto& [lab, k] : count)
        if (lab < 1 || lab > n2 || k != 2) bad.push_back(lab);
    if (!bad.empty()) {
        std::string msg = "arc labels must be 1.." + std::to_string(n2) + ", each used twice; offending:";
        for (long b : bad) msg += " " + std::to_string(b);
        throw Error(Err::Validation, msg);
    }
    auto next = [&](long a) { return a % n2 + 1; };
    std::vector<Pass> seq(static_cast<std::size_t>(n2), Pass{-1, false});
    std::vector<int> signs(n);
    auto place = [&](long in_arc, int c, bool over) {
        Pass& p = seq[static_cast<std::size_t>(in_arc - 1)];
        if (p.crossing >= 0)
            throw Error(Err::Validation, "arc " + std::to_string(in_arc) +
                                             " enters two crossings (several components or broken numbering)");
        p = Pass{c, over};
    };
    for (std::size_t c = 0; c < n; ++c) {
        const auto& a = tuples[c];
        if (a[2] != next(a[0]))
            throw Error(Err::Validation, "crossing " + std::to_string(c + 1) +
                                             ": under strand labels are not consecutive along the orientation");
        bool fwd = a[3] == next(a[1]), bwd = a[1] == next(a[3]);
        if (!fwd && !bwd)
            throw Error(Err::Validation, "crossing " + std::to_string(c + 1) +
                                             ": over strand labels are not consecutive along the orientation");
        place(a[0], static_cast<int>(c), false);
        if (fwd && bwd) {
            // only possible with two arcs; the free in-arc decides
            long in = seq[static_cast<std::size_t>(a[1] - 1)].crossing < 0 ? a[1] : a[3];
            fwd = in == a[1];
        }
        signs[c] = fwd ? 1 : -1;
        place(fwd ? a[1] : a[3], static_cast<int>(c), true);
    }
    std::vector<long> ids(n);
    for (std::size_t c = 0; c < n; ++c) ids[c] = static_cast<long>(c + 1);
    Diagram d(std::move(seq), std::move(signs), std::move(ids));
    auto derived = d.pd();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < 4; ++k)
            if (derived[c][k] != tuples[c][k])
                throw Error(Err::Validation, "PD slots are not in counterclockwise order at crossing " +
                                                 std::to_string(c + 1));
    return d;
}

Diagram parse_gauss(const std::string& text) {
    // Tokens like O12+ or U3-; separators are whitespace and commas.
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        // accept the unicode minus sign
        if (static_cast<unsigned char>(text[i]) == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 2;
        } else {
            s += text[i] == ',' ? ' ' : text[i];
        }
    }
    std::istringstream is(s);
    std::string tok;
    struct Tok {
        bool over;
        long label;
        int sign;
    };
    std::vector<Tok> toks;
    while (is >> tok) {
        if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U' && tok[0] != 'o' && tok[0] != 'u'))
            throw Error(Err::Parse, "bad Gauss token '" + tok + "'");
        char sg = tok.back();
        if (sg != '+' && sg != '-') throw Error(Err::Parse, "Gauss token '" + tok + "' lacks a sign");
        std::string num = tok.substr(1, tok.size() - 2);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error(Err::Parse, "bad crossing label in '" + tok + "'");
        toks.push_back({tok[0] == 'O' || tok[0] == 'o', std::stol(num), sg == '+' ? 1 : -1});
    }
    // crossings are stored in increasing label order
    std::map<long, int> index;
    for (const auto& t : toks) index.emplace(t.label, 0);
    std::vector<long> ids;
    for (auto& [label, idx] : index) {
        idx = static_cast<int>(ids.size());
        ids.push_back(label);
    }
    std::vector<int> signs(ids.size(), 0);
    std::vector<Pass> seq;
    for (const auto& t : toks) {
        int& sg = signs[static_cast<std::size_t>(index[t.label])];
        if (sg != 0 && sg != t.sign)
            throw Error(Err::Validation, "crossing " + std::to_string(t.label) + " has inconsistent signs");
        sg = t.sign;
        seq.push_back({index[t.label], t.over});
    }
    std::vector<int> cnt(ids.size(), 0);
    for (const auto& p : seq) ++cnt[static_cast<std::size_t>(p.crossing)];
    for (std::size_t c = 0; c < ids.size(); ++c)
        if (cnt[c] != 2)
            throw Error(Err::Validation, "crossing " + std::to_string(ids[c]) + " must appear exactly twice");
    return Diagram(std::move(seq), std::move(signs), std::move(ids));
}

std::string emit_pd(const Diagram& d) {
    std::ostringstream os;
    os << "[";
    auto pd = d.pd();
    for (std::size_t c = 0; c < pd.size(); ++c) {
        if (c) os << ",";
        os << "[" << pd[c][0] << "," << pd[c][1] << "," << pd[c][2] << "," << pd[c][3] << "]";
    }
    os << "]";
    return os.str();
}

std::string emit_gauss(const Diagram& d) {
    std::ostringstream os;
    for (std::size_t p = 0; p < d.seq().size(); ++p) {
        const Pass& ps = d.seq()[p];
        if (p) os << " ";
        os << (ps.over ? 'O' : 'U') << d.ids()[static_cast<std::size_t>(ps.crossing)]
           << (d.sign_at(ps.crossing) > 0 ? '+' : '-');
    }
    return os.str();
}

json diagram_json(const Diagram& d) {
    json cs = json::array();
    auto pd = d.pd();
    for (std::size_t c = 0; c < d.crossings(); ++c)
        cs.push_back({{"id", d.ids()[c]}, {"slots", pd[c]}, {"sign", d.signs()[c]}});
    return {{"crossings", cs}, {"gauss", emit_gauss(d)}, {"pd", emit_pd(d)}, {"writhe", d.writhe()}};
}

int crossing_sign(const Diagram& d, long id) { return d.sign_at(d.index_of(id)); }
int writhe(const Diagram& d) { return d.writhe(); }

Diagram change_crossings(const Diagram& d, const MarkedSet& s) {
    std::vector<bool> flip(d.crossings(), false);
    for (long id : s) flip[static_cast<std::size_t>(d.index_of(id))] = !flip[static_cast<std::size_t>(d.index_of(id))];
    std::vector<Pass> seq = d.seq();
    for (auto& p : seq)
        if (flip[static_cast<std::size_t>(p.crossing)]) p.over = !p.over;
    std::vector<int> signs = d.signs();
    for (std::size_t c = 0; c < signs.size(); ++c)
        if (flip[c]) signs[c] = -signs[c];
    return Diagram(std::move(seq), std::move(signs), d.ids());
}

Diagram mirror(const Diagram& d) { return change_crossings(d, d.ids()); }

std::vector<std::vector<int>> planar_signs(const std::vector<Pass>& seq, std::size_t n) {
    std::vector<std::vector<int>> out;
    if (n > 24) throw Error(Err::Domain, "planar_signs: too many crossings for brute force");
    for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
        std::vector<int> signs(n);
        // the last crossing varies fastest
        for (std::size_t c = 0; c < n; ++c) signs[c] = (bits >> (n - 1 - c)) & 1UL ? -1 : 1;
        if (face_count(pd_from_seq(seq, signs, n)) == static_cast<int>(n) + 2) out.push_back(signs);
    }
    return out;
}

Diagram from_dt(const std::vector<int>& dt) {
    std::size_t n = dt.size();
    std::vector<Pass> seq(2 * n, Pass{-1, false});
    for (std::size_t k = 0; k < n; ++k) {
        int b = std::abs(dt[k]);
        if (b % 2 || b < 2 || static_cast<std::size_t>(b) > 2 * n) throw Error(Err::Validation, "bad DT code entry");
        seq[2 * k].crossing = static_cast<int>(k);
        if (seq[static_cast<std::size_t>(b - 1)].crossing >= 0) throw Error(Err::Validation, "repeated DT entry");
        seq[static_cast<std::size_t>(b - 1)].crossing = static_cast<int>(k);
    }
    for (std::size_t p = 0; p < 2 * n; ++p) seq[p].over = p % 2 == 0;
    auto sols = planar_signs(seq, n);
    if (sols.empty()) throw Error(Err::Validation, "DT code has no planar realisation");
    std::vector<long> ids(n);
    for (std::size_t c = 0; c < n; ++c) ids[c] = static_cast<long>(c + 1);
    return Diagram(seq, sols.front(), ids);
}

}  // namespace kinv
