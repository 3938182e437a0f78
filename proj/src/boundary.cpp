#include "rauzy/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace rauzy {

namespace {

using DfaState = AdmissibilityDfa::State;

struct Key {
    RingElem value;
    DfaState x;
    DfaState y;
    friend bool operator<(const Key& l, const Key& r) {
        if (!(l.value == r.value)) return l.value < r.value;
        if (l.x != r.x) return l.x < r.x;
        return l.y < r.y;
    }
};

// |v(beta)| < beta^3, decided exactly when v = +-alpha^3.
bool below_beta_cube(const RingElem& v, const Params& params, const RootData& rd) {
    const RingElem a3(1, params.b, params.a);
    const RingElem hi = v - a3, lo = -v - a3;
    if (hi.is_zero() || lo.is_zero()) return false;
    const Complex b(rd.beta, 0.0);
    return embed(hi, b).real() < 0 && embed(lo, b).real() < 0;
}

std::array<Complex, 3> embeddings(const RingElem& v, const RootData& rd) {
    return {embed(v, Complex(rd.beta, 0.0)), embed(v, rd.alpha), embed(v, rd.lambda)};
}

}  // namespace

std::vector<RingElem> DiffAutomaton::values() const {
    std::vector<RingElem> out;
    out.reserve(states.size());
    for (const DiffState& s : states) out.push_back(s.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool DiffAutomaton::contains(const RingElem& v) const {
    return std::any_of(states.begin(), states.end(), [&](const DiffState& s) { return s.value == v; });
}

double state_bound(const Params& params, Complex sigma) {
    const double r = std::abs(sigma);
    return (params.a - 1) * r * r * r / (1.0 - r);
}

std::set<RingElem> base_states(const Params& params) {
    const long a = params.a, b = params.b;
    const std::vector<RingElem> e{
        {0, 0, 1},
        {0, 1, b},
        {0, 1, b + 1},
        {1, b, a - 1},
        {1, b + 1, a + b},
        {1, b + 1, a + b + 1},
    };
    std::set<RingElem> out;
    for (const RingElem& x : e) {
        out.insert(x);
        out.insert(-x);
    }
    return out;
}

std::vector<RingElem> chain_states(const Params& params) {
    std::vector<RingElem> out;
    const long b = params.b, a = params.a;
    for (long t = 1; t <= params.K(); ++t) out.emplace_back(t, t * (b + 1), t * (a + b + 1));
    return out;
}

std::set<RingElem> expected_states(const Params& params) {
    std::set<RingElem> out = base_states(params);
    out.insert(RingElem{});
    const long b = params.b, a = params.a;
    for (long t = 2; t <= params.K(); ++t) {
        for (const RingElem& x : {RingElem(0, 0, t), RingElem(0, t, t * (b + 1)), RingElem(t, t * (b + 1), t * (a + b + 1))}) {
            out.insert(x);
            out.insert(-x);
        }
    }
    return out;
}

DiffAutomaton explore(const Params& params, const RootData& rd, const RingElem& start, const ExploreOptions& opt) {
    DiffAutomaton aut;
    aut.params = params;
    aut.language = opt.language;
    const AdmissibilityDfa dfa(params);
    const std::vector<Root> contracting = rd.contracting();
    std::vector<std::pair<int, double>> bounds;  // index into emb, bound
    for (Root r : contracting)
        bounds.emplace_back(r == Root::Alpha ? 1 : 2, state_bound(params, rd.value(r)) * (1.0 + opt.slack));

    std::map<Key, std::size_t> index;
    auto add_state = [&](const RingElem& v, DfaState x, DfaState y) -> std::size_t {
        auto [it, inserted] = index.emplace(Key{v, x, y}, aut.states.size());
        if (inserted) {
            aut.states.push_back({v, x, y, embeddings(v, rd)});
            if (aut.states.size() > opt.max_states) throw std::runtime_error("explore: state limit exceeded");
        }
        return it->second;
    };
    aut.initial = add_state(start, DfaState::Fresh, DfaState::Fresh);

    const int a = params.a;
    const RingElem a2(0, 0, 1);
    for (std::size_t cur = 0; cur < aut.states.size(); ++cur) {
        const RingElem base = div_by_alpha(aut.states[cur].value, params);
        for (int k = -(a - 1); k <= a - 1; ++k) {
            const RingElem next = base + Integer(k) * a2;
            const std::array<Complex, 3> e = embeddings(next, rd);
            bool keep = true;
            for (auto [i, bound] : bounds) keep = keep && std::abs(e[i]) <= bound;
            if (opt.beta_filter) keep = keep && below_beta_cube(next, params, rd);
            if (!keep) continue;
            for (int d = std::max(0, -k); d < a && d + k < a; ++d) {
                const int c = d + k;
                DfaState nx = DfaState::Fresh, ny = DfaState::Fresh;
                if (opt.language == Language::Admissible) {
                    const auto sx = dfa.step(aut.states[cur].x_track, d);
                    const auto sy = dfa.step(aut.states[cur].y_track, c);
                    if (!sx || !sy) continue;
                    nx = *sx;
                    ny = *sy;
                }
                const std::size_t to = add_state(next, nx, ny);
                aut.edges.push_back({cur, to, c, d});
            }
        }
    }
    return aut;
}

DiffAutomaton trim(const DiffAutomaton& aut) {
    const std::size_t n = aut.states.size();
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::vector<std::size_t>> incoming(n);
    for (const Edge& e : aut.edges) {
        ++outdeg[e.from];
        incoming[e.to].push_back(e.from);
    }
    std::vector<bool> alive(n, true);
    std::deque<std::size_t> dead;
    for (std::size_t i = 0; i < n; ++i)
        if (outdeg[i] == 0) {
            alive[i] = false;
            dead.push_back(i);
        }
    while (!dead.empty()) {
        const std::size_t s = dead.front();
        dead.pop_front();
        for (std::size_t p : incoming[s])
            if (alive[p] && --outdeg[p] == 0) {
                alive[p] = false;
                dead.push_back(p);
            }
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        const DiffState &x = aut.states[l], &y = aut.states[r];
        return Key{x.value, x.x_track, x.y_track} < Key{y.value, y.x_track, y.y_track};
    });
    std::vector<std::size_t> remap(n, SIZE_MAX);
    DiffAutomaton out;
    out.params = aut.params;
    out.language = aut.language;
    for (std::size_t i : order) {
        remap[i] = out.states.size();
        out.states.push_back(aut.states[i]);
    }
    for (const Edge& e : aut.edges)
        if (alive[e.from] && alive[e.to]) out.edges.push_back({remap[e.from], remap[e.to], e.c, e.d});
    std::sort(out.edges.begin(), out.edges.end(), [](const Edge& l, const Edge& r) {
        return std::tie(l.from, l.to, l.c, l.d) < std::tie(r.from, r.to, r.c, r.d);
    });
    if (aut.initial && alive[*aut.initial]) out.initial = remap[*aut.initial];
    return out;
}

DiffAutomaton boundary_automaton(const Params& params, const RootData& rd, const ExploreOptions& opt) {
    return trim(explore(params, rd, RingElem{}, opt));
}

bool neighbor_test(const Params& params, const RootData& rd, const RingElem& u, const ExploreOptions& opt) {
    if (u.q != 0) throw LatticeViolation("translate " + to_string(u) + " is not in Z + Z alpha");
    return trim(explore(params, rd, times_alpha(u, params), opt)).initial.has_value();
}

DiskVerdict disk_test(const Params& params) {
    return 2 * params.a + 3 * params.b + 4 <= 0 ? DiskVerdict::NotDisk : DiskVerdict::Unknown;
}

const char* to_string(DiskVerdict v) { return v == DiskVerdict::NotDisk ? "NotDisk" : "Unknown"; }

double neighbor_bound(const Params& params, Complex sigma) {
    const double r = std::abs(sigma);
    return 2.0 * (params.a - 1) * r * r / (1.0 - r);
}

std::vector<RingElem> neighbor_candidates(const Params& params, const RootData& rd) {
    const double ra = neighbor_bound(params, rd.alpha) * (1.0 + 1e-9);
    const double rl = neighbor_bound(params, rd.lambda) * (1.0 + 1e-9);
    long nmax = 0;
    if (rd.kind == RootCase::Complex)
        nmax = static_cast<long>(std::ceil(ra / std::abs(rd.alpha.imag())));
    else
        nmax = static_cast<long>(std::ceil((ra + rl) / std::abs(rd.alpha.real() - rd.lambda.real())));
    std::vector<RingElem> out;
    for (long n = -nmax; n <= nmax; ++n) {
        const long mmax = static_cast<long>(std::ceil(ra + std::abs(double(n)) * std::abs(rd.alpha)));
        for (long m = -mmax; m <= mmax; ++m) {
            if (m == 0 && n == 0) continue;
            const Complex ea = double(m) + double(n) * rd.alpha;
            const Complex el = double(m) + double(n) * rd.lambda;
            bool ok = std::abs(ea) <= ra;
            if (rd.kind == RootCase::TotallyReal) ok = ok && std::abs(el) <= rl;
            if (ok) out.emplace_back(m, n, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

NeighborReport neighbor_set(const Params& params, const RootData& rd, const ExploreOptions& opt) {
    NeighborReport r;
    r.params = params;
    r.language = opt.language;
    r.K = params.K();
    r.disk = disk_test(params);
    const std::vector<RingElem> cand = neighbor_candidates(params, rd);
    r.candidates = cand.size();
    for (const RingElem& u : cand)
        if (neighbor_test(params, rd, u, opt)) r.H.push_back(u);
    r.count = r.H.size();
    r.negation_symmetric = std::all_of(r.H.begin(), r.H.end(), [&](const RingElem& u) {
        return std::binary_search(r.H.begin(), r.H.end(), -u);
    });
    return r;
}

std::vector<RingElem> beta_filter_violations(const Params& params, const RootData& rd, Language language) {
    ExploreOptions opt;
    opt.language = language;
    const DiffAutomaton aut = boundary_automaton(params, rd, opt);
    std::vector<RingElem> out;
    for (const RingElem& v : aut.values())
        if (!below_beta_cube(v, params, rd)) out.push_back(v);
    return out;
}

std::string export_dot(const DiffAutomaton& aut) {
    const std::vector<RingElem> vals = aut.values();
    auto id = [&](const RingElem& v) {
        return static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
    };
    std::set<std::tuple<std::size_t, std::size_t, int>> arcs;
    for (const Edge& e : aut.edges) arcs.emplace(id(aut.states[e.from].value), id(aut.states[e.to].value), e.diff());

    std::ostringstream os;
    os << "digraph G {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        os << "  s" << i << " [label=\"" << to_string(vals[i]) << "\"";
        if (aut.initial && vals[i] == aut.states[*aut.initial].value) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& [f, t, k] : arcs) os << "  s" << f << " -> s" << t << " [label=\"c-d=" << k << "\"];\n";
    os << "}\n";
    return os.str();
}

std::vector<Point2> intersection_points(const Params& params, const RootData& rd, const RingElem& u, int depth,
                                        std::size_t budget, const ExploreOptions& opt) {
    if (depth < 2) throw std::invalid_argument("intersection_points: depth must be >= 2");
    if (u.q != 0) throw LatticeViolation("translate " + to_string(u) + " is not in Z + Z alpha");
    const DiffAutomaton aut = trim(explore(params, rd, times_alpha(u, params), opt));
    std::vector<Point2> out;
    if (!aut.initial) return out;
    const int len = depth - 1;
    const int a = params.a;
    // succ[s][d]: targets reached from s reading x digit d.
    std::vector<std::vector<std::vector<std::size_t>>> succ(aut.states.size(), std::vector<std::vector<std::size_t>>(a));
    for (const Edge& e : aut.edges) succ[e.from][e.d].push_back(e.to);
    std::vector<Complex> pa(len), pl(len);
    for (int i = 0; i < len; ++i) {
        pa[i] = std::pow(rd.alpha, i + 2);
        pl[i] = std::pow(rd.lambda, i + 2);
    }
    // Subset walk over x digits: each node is the set of product states
    // compatible with the x prefix read so far.
    struct Frame {
        std::vector<std::size_t> set;
        Complex va, vl;
        int digit;
    };
    std::vector<Frame> stack;
    stack.push_back({{*aut.initial}, 0.0, 0.0, -1});
    std::vector<char> mark(aut.states.size(), 0);
    while (!stack.empty()) {
        const int level = static_cast<int>(stack.size()) - 1;
        if (level == len) {
            out.push_back(plane(stack.back().va, stack.back().vl, rd.kind));
            if (out.size() > budget) throw BudgetExceeded("intersection_points: point budget exceeded");
            stack.pop_back();
            continue;
        }
        Frame& f = stack.back();
        std::vector<std::size_t> next;
        int d = f.digit + 1;
        for (; d < a; ++d) {
            next.clear();
            for (std::size_t s : f.set)
                for (std::size_t t : succ[s][d])
                    if (!mark[t]) {
                        mark[t] = 1;
                        next.push_back(t);
                    }
            for (std::size_t t : next) mark[t] = 0;
            if (!next.empty()) break;
        }
        if (d >= a) {
            stack.pop_back();
            continue;
        }
        f.digit = d;
        std::sort(next.begin(), next.end());
        const Complex va = f.va + double(d) * pa[level], vl = f.vl + double(d) * pl[level];
        stack.push_back({std::move(next), va, vl, -1});
    }
    return out;
}

}  // namespace rauzy
