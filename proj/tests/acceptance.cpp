// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "rauzy/boundary.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/ifs32.hpp"
#include "rauzy/numeration.hpp"
#include "rauzy/render.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace rauzy;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[" << what << "] ";
        }
    }
};

std::vector<std::pair<int, int>> all_params(int amax) {
    std::vector<std::pair<int, int>> out;
    for (int a = 3; a <= amax; ++a)
        for (int b = 1 - a; b <= -2; ++b) out.emplace_back(a, b);
    return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Calls f on every word of length len over {0..a-1}, lowest index first.
void for_each_word(int a, int len, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> w(len, 0);
    while (true) {
        f(w);
        int i = 0;
        while (i < len && ++w[i] == a) w[i++] = 0;
        if (i == len) return;
    }
}

void numeration_round_trip(Outcome& o) {
    const auto t0 = Clock::now();
    for (auto [a, b] : {std::pair{3, -2}, {4, -3}, {6, -5}, {8, -7}}) {
        const Params p = Params::make(a, b);
        const TSequence t = t_sequence(p, 40);
        std::size_t bad = 0;
        for (long n = 0; n <= 100000; ++n) {
            const DigitWord w = greedy_expand(Integer(n), t);
            bad += !(is_admissible(w, p) && word_value(w, p) == n);
        }
        o.require(bad == 0, std::to_string(bad) + " round-trip failures for (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");

        const int len = static_cast<int>(greedy_expand(500, t).digits.size()) + 1;
        std::map<Integer, int> hits;
        for_each_word(a, len, [&](const std::vector<int>& w) {
            if (!is_admissible(w, p)) return;
            Integer v = 0;
            for (int i = 0; i < len; ++i) v += w[i] * t.values[i];
            if (v <= 500) ++hits[v];
        });
        int dup = 0;
        for (int n = 0; n <= 500; ++n) dup += hits[n] != 1;
        o.require(dup == 0, "uniqueness broken for " + std::to_string(dup) + " values");
    }
    const double s = seconds_since(t0);
    o.require(s < 30, "runtime");
    o.detail << s << " s";
}

void t_identity(Outcome& o) {
    int checked = 0;
    for (auto [a, b] : all_params(10)) {
        const TSequence t = t_sequence(Params::make(a, b), 60);
        for (int n = 4; n <= 60; ++n, ++checked)
            o.require(t_identity_check(t, n), "(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(n));
    }
    o.detail << checked << " identities";
}

void roots(Outcome& o) {
    const RootData r = solve_roots(Params::make(3, -2));
    const double e1 = std::abs(r.alpha - Complex(0.33764, 0.56228));
    o.require(e1 < 1e-4, "(3,-2) alpha");
    const RootData s = solve_roots(Params::make(6, -5));
    const double e2 = std::max({std::abs(s.beta - 5.048917340), std::abs(s.alpha.real() - 0.3079785280),
                                std::abs(s.lambda.real() - 0.6431041320)});
    o.require(e2 < 1e-6 && s.kind == RootCase::TotallyReal, "(6,-5) triple");
    o.detail << "errors " << e1 << ", " << e2;
}

void junction(Outcome& o) {
    int n = 0;
    for (auto [a, b] : all_params(10)) {
        try {
            verify_junction_identities(Params::make(a, b));
            ++n;
        } catch (const IdentityFailed& e) {
            o.require(false, e.what());
        }
    }
    o.detail << n << " parameter pairs exact";
}

void automaton_3_2(Outcome& o) {
    const auto t0 = Clock::now();
    const Params p = Params::make(3, -2);
    const DiffAutomaton g = boundary_automaton(p, solve_roots(p));
    std::set<RingElem> nonzero;
    for (const RingElem& v : g.values())
        if (!v.is_zero()) nonzero.insert(v);
    std::set<RingElem> expect = expected_states(p);
    expect.erase(RingElem());
    o.require(nonzero == expect, "states differ from ±E");
    const std::size_t bound = 2 * (6 + 2 * (p.K() - 1));
    o.require(nonzero.size() == 12 && nonzero.size() == bound, "count");
    const double s = seconds_since(t0);
    o.require(s < 5, "runtime");
    o.detail << nonzero.size() << " nonzero states, bound " << bound << ", " << s << " s";
}

void chain_states_present(Outcome& o) {
    for (auto [a, b] : {std::pair{8, -7}, {7, -6}}) {
        const Params p = Params::make(a, b);
        const DiffAutomaton g = boundary_automaton(p, solve_roots(p));
        for (long t = 1; t <= p.K(); ++t) {
            const RingElem s(t, t * (b + 1), t * (a + b + 1));
            o.require(g.contains(s) && g.contains(-s), "(" + std::to_string(a) + "," + std::to_string(b) + ") t=" + std::to_string(t));
        }
        o.detail << "(" << a << "," << b << ") K=" << p.K() << " ";
    }
}

void neighbor_counts(Outcome& o) {
    const auto count = [](int a, int b) {
        const Params p = Params::make(a, b);
        return neighbor_set(p, solve_roots(p)).count;
    };
    const std::size_t c32 = count(3, -2), c87 = count(8, -7);
    o.require(c32 == 6, "(3,-2) has " + std::to_string(c32));
    o.require(c87 == 10, "(8,-7) has " + std::to_string(c87) + ", expected 10");
    for (auto [a, b] : all_params(10)) {
        const Params p = Params::make(a, b);
        const NeighborReport n = neighbor_set(p, solve_roots(p));
        o.require(n.count >= static_cast<std::size_t>(6 + 2 * (p.K() - 1)) && n.negation_symmetric,
                  "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    o.detail << "(3,-2): " << c32 << ", (8,-7): " << c87;
}

void disk(Outcome& o) {
    int n = 0;
    for (auto [a, b] : all_params(12)) {
        const bool not_disk = disk_test(Params::make(a, b)) == DiskVerdict::NotDisk;
        o.require(not_disk == (2 * a + 3 * b + 4 <= 0), "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        ++n;
    }
    o.require(disk_test(Params::make(8, -7)) == DiskVerdict::NotDisk, "(8,-7)");
    o.require(disk_test(Params::make(3, -2)) == DiskVerdict::Unknown, "(3,-2)");
    o.detail << n << " parameter pairs";
}

void ifs_identities(Outcome& o) {
    const std::vector<TriplePoint> tp = triple_points();
    o.require(tp.size() == 6, "six triple points");
    const Params p = ifs_params();
    const FieldElem al = to_field(RingElem(0, 1, 0));
    o.require(curve_y0() == mul(al, curve_z0(), p), "y0 = alpha z0");
    if (tp.size() == 6) {
        o.require(tp[0].value - tp[2].value == al, "alpha + z0");
        o.require(tp[3].value - tp[1].value == to_field(RingElem(-1, 1, 0)), "-1+alpha+y0");
        o.require(tp[4].value - tp[2].value == to_field(RingElem(-1, 2, 0)), "-1+2alpha+z0");
        o.require(tp[5].value - tp[1].value == to_field(RingElem(-1, 2, 0)), "-1+2alpha+y0");
    }
    try {
        const AdjacencyReport r = adjacency_check(10, {}, 0.0);
        for (const auto& [name, ok] : r.identities) o.require(ok, name);
        o.detail << r.identities.size() << " adjacency identities";
    } catch (const AdjacencyFailed& e) {
        o.require(false, e.what());
    }
}

void ifs_cross_validation(Outcome& o) {
    const auto t0 = Clock::now();
    const PointCloud R = generate_points(ifs_params(), 14, ifs_roots());
    const double px = pixel_size(fit_viewport(R.points, 512, 512), 512);
    const double eps = 1e-4 * curve_diameter();
    const std::vector<Point2> A = attractor(curve_maps(eps), 6, curve_z0(), eps);
    const std::vector<Point2> C = boundary_curve(RingElem(1, -2, 0), 18).samples;
    const double h = hausdorff_distance(A, C);
    const double s = seconds_since(t0);
    o.require(h <= 3 * px, "distance");
    o.require(s < 60, "runtime");
    o.detail << "d = " << h << " vs 3 px = " << 3 * px << ", " << A.size() << " attractor points, " << s << " s";
}

void phi_convergence(Outcome& o) {
    const double eps = 1e-4 * curve_diameter();
    const double bound = std::abs(ifs_roots().alpha) + 0.1;
    std::vector<PolygonalApprox> phi;
    for (int n = 0; n <= 7; ++n) phi.push_back(parametrize_phi(n, eps));
    o.detail << "ratios";
    for (int n = 2; n <= 6; ++n) {
        const double r = sup_distance(phi[n + 1], phi[n]) / sup_distance(phi[n], phi[n - 1]);
        o.require(r <= bound, "n=" + std::to_string(n));
        o.detail << " " << r;
    }
    o.detail << " (bound " << bound << ")";
}

void tiling(Outcome& o) {
    const Params p = Params::make(3, -2);
    const TilingCheck tc = check_tiling(p, solve_roots(p), 14, 10000);
    o.require(tc.samples == 10000 && tc.uncovered == 0, std::to_string(tc.uncovered) + " uncovered");
    o.require(tc.overlap_ratio - 1.0 <= 0.05, "overlap");
    o.detail << "max distance " << tc.max_distance << " vs eps " << tc.eps << ", overlap " << tc.overlap_ratio - 1.0;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"numeration round trip and uniqueness", numeration_round_trip},
        {"T decomposition identity, a <= 10, 4 <= n <= 60", t_identity},
        {"roots of (3,-2) and (6,-5)", roots},
        {"junction identities w1 = w2 = w3, z1 = z2, a <= 10", junction},
        {"(3,-2) boundary automaton has the 12 states ±E", automaton_3_2},
        {"chain states t + t(b+1)alpha + t(a+b+1)alpha^2 for (8,-7), (7,-6)", chain_states_present},
        {"neighbor counts 6 and 10, lower bound and symmetry for a <= 10", neighbor_counts},
        {"disk test over a <= 12", disk},
        {"triple points and f/g adjacency identities", ifs_identities},
        {"f/g attractor within 3 px of R_{1-2alpha}", ifs_cross_validation},
        {"phi_n sup-distance ratios", phi_convergence},
        {"tiling covering and overlap", tiling},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail.str()
                  << std::endl;
    }
    std::cout << failed << " of " << criteria.size() << " criteria failed" << std::endl;
    return failed ? 1 : 0;
}
