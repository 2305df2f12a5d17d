#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace planefold {

enum class Family { Square, Triangular, Gosper };

// A finite sign sequence selecting one member of a curve family.
struct FoldSpec {
    Family family = Family::Triangular;
    std::vector<int> signs;  // each +1 or -1

    FoldSpec(Family f, std::vector<int> s) : family(f), signs(std::move(s)) {
        for (int v : signs)
            if (v != 1 && v != -1) throw std::invalid_argument("fold sign must be +1 or -1");
    }
    size_t order() const { return signs.size(); }
};

// Intrinsic encoding of a curve: one turn letter per interior vertex.
// Square/triangular words use {-1,+1}; Gosper words use {-2,...,+2}
// (multiples of pi/3).
using TurnWord = std::vector<int>;

struct BadLength : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDerivable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word of length 3^n - 1 via T_{L,l} = (T_L, l, T_L, -l, T_L).
TurnWord tri_fold_word(const FoldSpec& spec);

// Word of length 2^n - 1 via W_{L,l} = (W_L, l, reverse_negate(W_L)).
TurnWord square_fold_word(const FoldSpec& spec);

// Word of length 7^n - 1; base words S_+ = (+1,+2,-1,-2,0,-1), S_- = -S_+,
// deeper levels by blockwise substitution that keeps every 7th connector letter.
TurnWord gosper_word(const FoldSpec& spec);

// (a_1,...,a_n) -> (-a_n,...,-a_1); an involution.
TurnWord reverse_negate(const TurnWord& w);

// Letters at indices divisible by 3; requires the triple structure
// s_{3k+1} = e, s_{3k+2} = -e with e the first letter.
TurnWord derive_tri_word(const TurnWord& w);

// For each k <= k_max, the residues h mod 3^{k+1} such that throughout the
// window the letters at positions h + 3^k (mod 3^{k+1}) are one constant sign
// and those at h + 2*3^k the opposite sign. Nonempty sets certify that the
// window is compatible with a complete folding sequence.
std::vector<std::vector<int>> check_complete_folding_condition(const TurnWord& w, int k_max);

// Parses "+-+" / "++-" style sign strings.
FoldSpec parse_spec(Family family, const std::string& s);

int64_t ipow(int64_t base, int exp);

}  // namespace planefold
