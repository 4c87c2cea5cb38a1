#pragma once
// Presentation matrix Psi = z Lambda + E from a diagram and an unknotting set.
//
// The changed diagram U (all marked crossings switched) is an unknot. Every
// geometric object is realised as a link diagram whose component 0 is U;
// equivariant linking numbers are read off a Fox-calculus 1-cocycle on U's
// arcs, i.e. linking numbers of lifts to the infinite cyclic cover of the
// unknot complement.

#include <cstdint>
#include <optional>

#include "diagram.hpp"

namespace kinv {

// ---- generic link diagrams

struct LinkCrossing {
    int over;
    int under;
    int sign;
};

struct LinkEvent {
    std::vector<double> key;  // position along the component
    int crossing;
    bool over;
};

class LinkDiagram {
public:
    explicit LinkDiagram(int components = 1) : events_(static_cast<std::size_t>(components)), start_(events_.size(), 0) {}

    int components() const { return static_cast<int>(events_.size()); }
    int add_crossing(int ca, std::vector<double> ka, int cb, std::vector<double> kb, bool a_over, int sign);
    const std::vector<LinkCrossing>& crossings() const { return x_; }

    // Signed count of crossings where `under` passes beneath `over`.
    long lk(int under, int over) const;
    // Traversal starts `shift` events after the lowest key (basepoint move).
    void set_start(int comp, std::size_t shift) { start_[static_cast<std::size_t>(comp)] = shift; }
    std::vector<LinkEvent> traversal(int comp) const;

private:
    std::vector<std::vector<LinkEvent>> events_;
    std::vector<std::size_t> start_;
    std::vector<LinkCrossing> x_;
};

// Equivariant linking over the cover of component 0, which must be an
// unknot. Cocycles for all other components are solved together.
class CoverLinking {
public:
    explicit CoverLinking(const LinkDiagram& link);
    // Sum over undercrossings of a, weighted by the cocycle of b.
    Laurent lk_eq(int a, int b) const;
    // Running count of undercrossings beneath component 0, recorded before
    // each event; the last entry is the total.
    std::vector<long> heights(int comp) const;

private:
    struct Arcs {
        std::vector<LinkEvent> ev;
        std::size_t m = 0;
        std::map<int, std::size_t> over_arc;
        std::map<int, std::pair<std::size_t, std::size_t>> under_arc;
    };
    const LinkDiagram& link_;
    std::vector<Arcs> arcs_;
    std::vector<std::vector<Laurent>> own_;  // cocycle of comp b on its own arcs
    LMatrix knot_part_;                       // cocycle of comp b on U's arcs, column b
    Laurent value(int b, int comp, std::size_t arc) const;
};

// ---- the singular diagram and its loops

struct SingularDiagram {
    Diagram base;
    MarkedSet marked;  // sorted crossing ids
    Diagram changed;
    std::vector<int> epsilon;  // sign of each marked crossing after the change
};

// Certifies the change with verify_unknotted; Certification otherwise.
SingularDiagram make_singular(const Diagram& base, MarkedSet marked, int r3_budget);

struct DoublePointLoop {
    int index = 0;
    long crossing = 0;
    int depart = 0;  // pass of U the loop leaves along
    int arrive = 0;  // pass it returns on
    std::vector<int> interior;  // passes strictly between, in order
    int side = 1;               // pushoff side, +1 left of orientation
    int rank = 0;               // nesting order of parallel copies
    long lk_initial = 0;        // lk(L, U) before framing
    long tau = 0;               // signed fingers inserted
    std::size_t basepoint_shift = 0;
};

struct LoopChoices {
    std::vector<int> flip_subarc;  // per loop, 1 = return along the other strand
    std::vector<int> side;         // per loop, +1 / -1
    std::vector<std::size_t> basepoint_shift;
};

std::vector<DoublePointLoop> build_loops(const SingularDiagram& s, const LoopChoices& ch = {});

// Component layout: 0 = U, 1 + 2i = loop i, 2 + 2i = its pushoff.
LinkDiagram loop_link(const SingularDiagram& s, const std::vector<DoublePointLoop>& loops);
// Sets tau = -lk_initial and inserts the fingers; Framing if lk stays nonzero.
void frame_loops(LinkDiagram& link, std::vector<DoublePointLoop>& loops, std::size_t passes);

struct CatalogEntry {
    int crossing;
    int over;
    int under;
    int sign;
    std::optional<long> grading;  // only between loop components
};

std::string component_name(int comp);
std::vector<CatalogEntry> crossing_catalog(const LinkDiagram& link, const CoverLinking& cover);
// lk(gamma_x, U) for the crossing; basing paths run above the diagram.
long grade_crossing(const LinkDiagram& link, const CoverLinking& cover, int crossing);

// Single loop: Lambda_11 = -lk_eq(L, L') - tau.
LMatrix lambda_from_loops(const LinkDiagram& framed, const std::vector<DoublePointLoop>& loops);

// Crossing-circle surgery route, valid for every d. `rotation` moves the
// basepoint of circle i by that many legs.
struct SurgeryData {
    LMatrix linking;  // equivariant linking matrix A of the circles
    LMatrix lambda;
    LMatrix psi;
};
LinkDiagram surgery_link(const SingularDiagram& s, const std::vector<std::size_t>& rotation = {});
SurgeryData lambda_from_surgery(const SingularDiagram& s, const std::vector<std::size_t>& rotation = {});

// Psi = z Lambda + diag(epsilon).
LMatrix assemble_psi(const LMatrix& lambda, const std::vector<int>& epsilon);

// True iff b = D* a D for a diagonal matrix D of monomials t^k.
bool diagonal_unit_congruent(const LMatrix& a, const LMatrix& b);

// ---- end to end

enum class AutoUnknot { Descending, Minimal };

struct PipelineOptions {
    std::optional<MarkedSet> marked;
    AutoUnknot auto_unknot = AutoUnknot::Descending;
    int r3_budget = 1000;
    int size_budget = 3;
    std::uint64_t seed = 0;  // 0 = canonical choices
};

struct PipelineResult {
    SingularDiagram singular;
    std::vector<DoublePointLoop> loops;
    std::vector<CatalogEntry> catalog;
    std::string route;  // "loops" or "surgery"
    LMatrix lambda, psi;
    Laurent det_psi;
    Laurent delta;  // normalized det_psi
    int arf = 0;
    std::uint64_t seed = 0;
    int descending_basepoint = 1;
    std::vector<std::size_t> rotation;
    json to_json() const;
};

PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opt);

// Psi of the same run with every loop / circle basepoint moved `extra`
// steps further along its component.
LMatrix psi_with_moved_basepoints(const PipelineResult& r, std::size_t extra);

}  // namespace kinv
