#include "rauzy/numeration.hpp"

#include <algorithm>

namespace rauzy {

TSequence t_sequence(const Params& params, int N) {
    if (N < 0) throw std::invalid_argument("t_sequence: N must be >= 0");
    TSequence t{params, {}};
    t.values.reserve(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        if (i == 0)
            t.values.emplace_back(1);
        else if (i == 1)
            t.values.emplace_back(params.a);
        else if (i == 2)
            t.values.emplace_back(params.a * params.a + params.b);
        else
            t.values.push_back(params.a * t.values[i - 1] + params.b * t.values[i - 2] + t.values[i - 3]);
    }
    return t;
}

int DigitWord::at(int index) const noexcept {
    const int i = index - start_index;
    if (i < 0 || i >= static_cast<int>(digits.size())) return 0;
    return digits[static_cast<std::size_t>(i)];
}

std::vector<int> DigitWord::msd_first() const {
    std::vector<int> out(digits.rbegin(), digits.rend());
    auto nz = std::find_if(out.begin(), out.end(), [](int d) { return d != 0; });
    out.erase(out.begin(), nz);
    return out;
}

DigitWord DigitWord::from_msd(std::span<const int> msd, int start_index) {
    DigitWord w;
    w.start_index = start_index;
    w.digits.assign(msd.rbegin(), msd.rend());
    return w;
}

int pattern_letter(std::size_t i, const Params& params) noexcept {
    if (i == 0) return params.a - 1;
    if (i == 1) return params.a + params.b - 1;
    return params.a + params.b;
}

bool is_admissible(std::span<const int> ascending, const Params& params) {
    for (int d : ascending)
        if (d < 0 || d >= params.a) return false;
    const std::size_t len = ascending.size();
    for (std::size_t top = len; top-- > 0;) {
        // Window starting at index `top`, read downward.
        for (std::size_t k = 0; k <= top; ++k) {
            const int d = ascending[top - k];
            const int p = pattern_letter(k, params);
            if (d < p) break;
            if (d > p) return false;
        }
    }
    return true;
}

namespace {

int strict_letter(std::size_t i, std::size_t len, const Params& params) {
    if (len == 1) return params.a;
    if (len == 2) return i == 0 ? params.a - 1 : params.a + params.b;
    if (i + 1 == len) return params.a + params.b + 1;
    return pattern_letter(i, params);
}

}  // namespace

bool satisfies_strict_bound(std::span<const int> ascending, const Params& params) {
    for (int d : ascending)
        if (d < 0 || d >= params.a) return false;
    const std::size_t len = ascending.size();
    for (std::size_t top = len; top-- > 0;) {
        const std::size_t wlen = top + 1;
        bool less = false;
        for (std::size_t k = 0; k < wlen; ++k) {
            const int d = ascending[top - k];
            const int p = strict_letter(k, wlen, params);
            if (d < p) {
                less = true;
                break;
            }
            if (d > p) return false;
        }
        if (!less) return false;
    }
    return true;
}

DigitWord greedy_expand(const Integer& n, const TSequence& t) {
    if (n < 0) throw std::invalid_argument("greedy_expand: n must be nonnegative");
    DigitWord w;
    if (n == 0) return w;
    std::size_t k = 0;
    while (k + 1 < t.values.size() && t.values[k + 1] <= n) ++k;
    if (k + 1 >= t.values.size()) throw std::invalid_argument("greedy_expand: T-sequence too short");
    w.digits.assign(k + 1, 0);
    Integer rem = n;
    for (std::size_t i = k + 1; i-- > 0;) {
        const Integer d = rem / t.values[i];
        w.digits[i] = d.convert_to<int>();
        rem -= d * t.values[i];
    }
    return w;
}

DigitWord greedy_expand(const Integer& n, const Params& params) {
    if (n < 0) throw std::invalid_argument("greedy_expand: n must be nonnegative");
    TSequence t = t_sequence(params, 2);
    while (t.values.back() <= n) {
        const std::size_t m = t.values.size();
        t.values.push_back(params.a * t.values[m - 1] + params.b * t.values[m - 2] + t.values[m - 3]);
    }
    return greedy_expand(n, t);
}

Integer word_value(const DigitWord& w, const Params& params) {
    if (!is_admissible(w, params)) throw InadmissibleWord("word is not admissible");
    if (w.start_index < 0) throw InadmissibleWord("word starts below index 0");
    const TSequence t = t_sequence(params, std::max(w.top_index(), 0));
    Integer sum = 0;
    for (std::size_t i = 0; i < w.digits.size(); ++i) sum += w.digits[i] * t.values[w.start_index + i];
    return sum;
}

std::optional<AdmissibilityDfa::State> AdmissibilityDfa::step(State s, int d) const noexcept {
    const int a = params_.a;
    const int ab = params_.a + params_.b;
    if (d < 0 || d >= a) return std::nullopt;
    if (d == a - 1 && s != State::Fresh) return std::nullopt;
    if (s == State::Chain && d == ab) return State::Chain;
    if (s == State::Chain && d == ab - 1) return State::ChainEnd;
    if (d >= ab + 1) return State::Chain;
    if (d == ab) return State::SawHigh;
    return State::Fresh;
}

bool AdmissibilityDfa::accepts(std::span<const int> ascending) const noexcept {
    State s = initial();
    for (int d : ascending) {
        auto next = step(s, d);
        if (!next) return false;
        s = *next;
    }
    return true;
}

bool t_identity_check(const TSequence& t, int n) {
    if (n < 4) throw std::invalid_argument("t_identity_check: n must be >= 4");
    if (static_cast<std::size_t>(n) >= t.values.size()) throw std::invalid_argument("t_identity_check: sequence too short");
    const int a = t.params.a;
    const int b = t.params.b;
    Integer rhs = (a - 1) * t.values[n - 1] + (a + b - 1) * t.values[n - 2] + (a + b + 1) * t.values[0];
    for (int i = 1; i <= n - 3; ++i) rhs += (a + b) * t.values[i];
    return rhs == t.values[n];
}

bool t_identity_check(const Params& params, int n) { return t_identity_check(t_sequence(params, std::max(n, 0)), n); }

}  // namespace rauzy
