#pragma once
// Oriented knot diagrams stored as a signed Gauss sequence.
//
// Pass p (0-based) is the p-th visit to a crossing along the orientation.
// Its incoming arc has label p+1 and its outgoing arc label (p+1) % 2n + 1,
// which is the standard PD arc numbering.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace kinv {

struct Pass {
    int crossing;  // internal index 0..n-1
    bool over;
};

class Diagram {
public:
    Diagram() = default;
    // Validates one over and one under pass per crossing and planarity.
    Diagram(std::vector<Pass> seq, std::vector<int> signs, std::vector<long> ids);

    std::size_t crossings() const { return sign_.size(); }
    std::size_t passes() const { return seq_.size(); }
    const std::vector<Pass>& seq() const { return seq_; }
    const std::vector<int>& signs() const { return sign_; }
    const std::vector<long>& ids() const { return ids_; }

    int index_of(long id) const;  // throws UnknownCrossing
    int sign_at(int idx) const { return sign_[static_cast<std::size_t>(idx)]; }
    int over_pass(int idx) const { return over_[static_cast<std::size_t>(idx)]; }
    int under_pass(int idx) const { return under_[static_cast<std::size_t>(idx)]; }

    // PD slots (incoming under first, counterclockwise) per crossing.
    std::vector<std::array<int, 4>> pd() const;
    int writhe() const;

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.seq_.size() == b.seq_.size() && a.sign_ == b.sign_ && a.ids_ == b.ids_ && a.same_seq(b);
    }

private:
    bool same_seq(const Diagram& b) const;
    std::vector<Pass> seq_;
    std::vector<int> sign_;
    std::vector<long> ids_;
    std::vector<int> over_, under_;
};

using MarkedSet = std::vector<long>;  // crossing ids, in enumeration order

Diagram parse_pd(const std::string& text);
Diagram parse_gauss(const std::string& text);
std::string emit_pd(const Diagram& d);
std::string emit_gauss(const Diagram& d);
json diagram_json(const Diagram& d);

int crossing_sign(const Diagram& d, long id);
int writhe(const Diagram& d);
Diagram change_crossings(const Diagram& d, const MarkedSet& s);
Diagram mirror(const Diagram& d);

// Face count of the planar structure encoded by PD slots.
int face_count(const std::vector<std::array<int, 4>>& pd);

// All sign vectors making the unsigned Gauss sequence planar (brute force,
// meant for small corpora).
std::vector<std::vector<int>> planar_signs(const std::vector<Pass>& seq, std::size_t n);

// Alternating diagram from a Dowker-Thistlethwaite code (even entries,
// no sign flips); the first planar realisation is used.
Diagram from_dt(const std::vector<int>& dt);

}  // namespace kinv
