#pragma once

#include "rauzy/fractal.hpp"
#include "rauzy/numeration.hpp"
#include "rauzy/ring.hpp"
#include "rauzy/roots.hpp"

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

class LatticeViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Which digit streams the automaton reads. Admissible runs both streams through
// the admissibility DFA (product automaton); Unrestricted lets every pair of
// digits in {0..a-1} through.
enum class Language { Admissible, Unrestricted };

struct ExploreOptions {
    Language language = Language::Admissible;
    bool beta_filter = false;  // keep only |S| < beta^3 at the Pisot root
    double slack = 1e-9;       // multiplicative slack on the contracting bounds
    std::size_t max_states = 5'000'000;
};

struct DiffState {
    RingElem value;
    AdmissibilityDfa::State x_track = AdmissibilityDfa::State::Fresh;
    AdmissibilityDfa::State y_track = AdmissibilityDfa::State::Fresh;
    std::array<Complex, 3> emb{};  // at beta, alpha, lambda
};

// to = from / alpha + (c - d) alpha^2, c read on the y stream, d on the x stream.
struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    int c = 0;
    int d = 0;
    int diff() const noexcept { return c - d; }
};

struct DiffAutomaton {
    Params params;
    Language language = Language::Admissible;
    std::vector<DiffState> states;
    std::vector<Edge> edges;
    std::optional<std::size_t> initial;

    // Distinct state values in (q,p,n) order.
    std::vector<RingElem> values() const;
    bool contains(const RingElem& v) const;
};

// C_sigma = (a-1)|sigma|^3 / (1-|sigma|): bound on every reachable remainder.
double state_bound(const Params& params, Complex sigma);

// The listed set: {0} and +-E_{a,b} together with +-t alpha^2,
// +-(t alpha + t(b+1) alpha^2), +-(t + t(b+1) alpha + t(a+b+1) alpha^2) for 2 <= t <= K.
std::set<RingElem> expected_states(const Params& params);
// +-E_{a,b} without 0.
std::set<RingElem> base_states(const Params& params);
// t + t(b+1) alpha + t(a+b+1) alpha^2 for 1 <= t <= K.
std::vector<RingElem> chain_states(const Params& params);

DiffAutomaton explore(const Params& params, const RootData& rd, const RingElem& start, const ExploreOptions& opt = {});

// Keeps exactly the states that start an infinite path.
DiffAutomaton trim(const DiffAutomaton& aut);

DiffAutomaton boundary_automaton(const Params& params, const RootData& rd, const ExploreOptions& opt = {});

// u = m + n alpha. True iff some x, y (digits from index 2) satisfy x = y + u.
bool neighbor_test(const Params& params, const RootData& rd, const RingElem& u, const ExploreOptions& opt = {});

enum class DiskVerdict { NotDisk, Unknown };
DiskVerdict disk_test(const Params& params);
const char* to_string(DiskVerdict v);

struct NeighborReport {
    Params params;
    Language language = Language::Admissible;
    std::vector<RingElem> H;  // (q,p,n) order, 0 excluded
    std::size_t candidates = 0;
    std::size_t count = 0;
    int K = 1;
    DiskVerdict disk = DiskVerdict::Unknown;
    bool negation_symmetric = false;
};

// Candidate bound on |m + n sigma| at each contracting root.
double neighbor_bound(const Params& params, Complex sigma);
std::vector<RingElem> neighbor_candidates(const Params& params, const RootData& rd);
NeighborReport neighbor_set(const Params& params, const RootData& rd, const ExploreOptions& opt = {});

// States of the unfiltered trimmed machine with |S| >= beta^3 at the Pisot root.
std::vector<RingElem> beta_filter_violations(const Params& params, const RootData& rd, Language language);

// Nodes are the distinct values, labeled n+pα+qα²; parallel edges with equal
// difference are merged into one "c-d=k" label.
std::string export_dot(const DiffAutomaton& aut);

// x-parts of the words of length depth-1 (indices 2..depth) that begin an
// infinite path from alpha*u in the trimmed machine: truncations of the points of
// R ∩ (R + u).
std::vector<Point2> intersection_points(const Params& params, const RootData& rd, const RingElem& u, int depth,
                                        std::size_t budget = default_budget(), const ExploreOptions& opt = {});

}  // namespace rauzy
