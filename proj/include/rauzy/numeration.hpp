#pragma once

#include "rauzy/ring.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rauzy {

class InadmissibleWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TSequence {
    Params params;
    std::vector<Integer> values;  // T_0 .. T_N
};

TSequence t_sequence(const Params& params, int N);

// Digits are stored by ascending index: digits[i] is the digit at position
// start_index + i. Lexicographic comparisons read them from the top index down.
struct DigitWord {
    std::vector<int> digits;
    int start_index = 0;

    bool empty() const noexcept { return digits.empty(); }
    int top_index() const noexcept { return start_index + static_cast<int>(digits.size()) - 1; }
    int at(int index) const noexcept;  // 0 outside the stored range

    // Most significant digit first, leading zeros dropped ("" for zero).
    std::vector<int> msd_first() const;
    static DigitWord from_msd(std::span<const int> msd, int start_index = 0);

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

// Letter i (0-based) of (a-1)(a+b-1)(a+b)(a+b)...
int pattern_letter(std::size_t i, const Params& params) noexcept;

// Every descending window compared to the pattern; digits ascending by index.
// Out-of-range digits make the word inadmissible.
bool is_admissible(std::span<const int> ascending, const Params& params);
inline bool is_admissible(const DigitWord& w, const Params& params) { return is_admissible(w.digits, params); }

// Strict-bound form: every suffix window ending at the lowest index is
// lexicographically below the digits of T_{len}, i.e. a, (a-1)(a+b) or
// (a-1)(a+b-1)(a+b)...(a+b)(a+b+1).
bool satisfies_strict_bound(std::span<const int> ascending, const Params& params);

DigitWord greedy_expand(const Integer& n, const Params& params);
DigitWord greedy_expand(const Integer& n, const TSequence& t);

Integer word_value(const DigitWord& w, const Params& params);

// Streaming acceptor over ascending-index digits. A word is rejected as soon as
// it contains, read upward, (y, a-1) with y >= a+b or
// (y, (a+b)^m, a+b-1, a-1) with y >= a+b+1.
class AdmissibilityDfa {
public:
    enum class State : unsigned char {
        Fresh = 0,     // no pending constraint
        SawHigh = 1,   // last digit equals a+b
        Chain = 2,     // suffix y (a+b)^m with y >= a+b+1
        ChainEnd = 3,  // suffix y (a+b)^m (a+b-1) with y >= a+b+1
    };

    explicit AdmissibilityDfa(const Params& params) : params_(params) {}

    static constexpr State initial() noexcept { return State::Fresh; }
    static constexpr int state_count() noexcept { return 4; }
    std::optional<State> step(State s, int digit) const noexcept;
    bool accepts(std::span<const int> ascending) const noexcept;
    const Params& params() const noexcept { return params_; }

private:
    Params params_;
};

bool t_identity_check(const Params& params, int n);
bool t_identity_check(const TSequence& t, int n);

}  // namespace rauzy
