#include "planefold/words.hpp"

#include <algorithm>

namespace planefold {

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

TurnWord reverse_negate(const TurnWord& w) {
    TurnWord r(w.rbegin(), w.rend());
    for (int& v : r) v = -v;
    return r;
}

TurnWord tri_fold_word(const FoldSpec& spec) {
    if (spec.family != Family::Triangular) throw std::invalid_argument("tri_fold_word: wrong family");
    TurnWord w;
    for (int l : spec.signs) {
        TurnWord next;
        next.reserve(3 * w.size() + 2);
        next.insert(next.end(), w.begin(), w.end());
        next.push_back(l);
        next.insert(next.end(), w.begin(), w.end());
        next.push_back(-l);
        next.insert(next.end(), w.begin(), w.end());
        w = std::move(next);
    }
    return w;
}

TurnWord square_fold_word(const FoldSpec& spec) {
    if (spec.family != Family::Square) throw std::invalid_argument("square_fold_word: wrong family");
    TurnWord w;
    for (int l : spec.signs) {
        TurnWord next;
        next.reserve(2 * w.size() + 1);
        next.insert(next.end(), w.begin(), w.end());
        next.push_back(l);
        TurnWord rn = reverse_negate(w);
        next.insert(next.end(), rn.begin(), rn.end());
        w = std::move(next);
    }
    return w;
}

namespace {

const TurnWord kGosperPlus = {+1, +2, -1, -2, 0, -1};

// Level-2 word with innermost sign l1 and outer sign l2. For l1 = +1:
//   S_{++} = (S,+1,S~,+1,S~,-1,S,-1,S,+1,S,-1,S~)
//   S_{+-} = (S~,-1,S,-1,S,+1,S~,+1,S~,-1,S~,+1,S)
// where S~ = reverse_negate(S); negating both signs negates the word.
TurnWord gosper_level2(int l1, int l2) {
    TurnWord s = kGosperPlus;
    TurnWord sb = reverse_negate(s);
    auto cat = [](const std::vector<const TurnWord*>& blocks, const std::vector<int>& conns) {
        TurnWord out;
        for (size_t i = 0; i < blocks.size(); ++i) {
            out.insert(out.end(), blocks[i]->begin(), blocks[i]->end());
            if (i < conns.size()) out.push_back(conns[i]);
        }
        return out;
    };
    TurnWord w;
    if (l1 * l2 > 0)
        w = cat({&s, &sb, &sb, &s, &s, &s, &sb}, {+1, +1, -1, -1, +1, -1});
    else
        w = cat({&sb, &s, &s, &sb, &sb, &sb, &s}, {-1, -1, +1, +1, -1, +1});
    if (l1 < 0)
        for (int& v : w) v = -v;
    return w;
}

}  // namespace

TurnWord gosper_word(const FoldSpec& spec) {
    if (spec.family != Family::Gosper) throw std::invalid_argument("gosper_word: wrong family");
    if (spec.signs.empty()) throw std::invalid_argument("gosper_word: need at least one sign");
    size_t n = spec.signs.size();
    if (n == 1) {
        TurnWord w = kGosperPlus;
        if (spec.signs[0] < 0)
            for (int& v : w) v = -v;
        return w;
    }
    if (n == 2) return gosper_level2(spec.signs[0], spec.signs[1]);
    // S_{l1 l2 ... ln}: take S_{l2...ln}, whose 6-letter blocks are copies of
    // S_{l2} or reverse_negate(S_{l2}); replace each by S_{l1 l2} or its
    // reverse_negate, keeping the single connector letter between blocks.
    FoldSpec tail(Family::Gosper, {spec.signs.begin() + 1, spec.signs.end()});
    TurnWord outer = gosper_word(tail);
    TurnWord base(kGosperPlus);
    if (spec.signs[1] < 0)
        for (int& v : base) v = -v;
    TurnWord base_bar = reverse_negate(base);
    TurnWord rep = gosper_level2(spec.signs[0], spec.signs[1]);
    TurnWord rep_bar = reverse_negate(rep);

    TurnWord out;
    out.reserve(ipow(7, static_cast<int>(n)) - 1);
    for (size_t pos = 0; pos < outer.size(); pos += 7) {
        TurnWord block(outer.begin() + pos, outer.begin() + pos + 6);
        if (block == base)
            out.insert(out.end(), rep.begin(), rep.end());
        else if (block == base_bar)
            out.insert(out.end(), rep_bar.begin(), rep_bar.end());
        else
            throw std::logic_error("gosper_word: block structure broken");
        if (pos + 6 < outer.size()) out.push_back(outer[pos + 6]);
    }
    return out;
}

TurnWord derive_tri_word(const TurnWord& w) {
    size_t len = w.size();
    // length must be 3^n - 1 for some n >= 1
    int64_t q = 3;
    bool good = false;
    while (q - 1 <= static_cast<int64_t>(len)) {
        if (q - 1 == static_cast<int64_t>(len)) { good = true; break; }
        q *= 3;
    }
    if (!good) throw BadLength("derive_tri_word: length is not 3^n - 1");
    if (len == 2) {
        if (w[1] != -w[0]) throw NotDerivable("derive_tri_word: triple structure fails");
        return {};
    }
    int eps = w[0];
    TurnWord out;
    out.reserve(len / 3);
    for (size_t k = 0; 3 * k < len; ++k) {
        if (w[3 * k] != eps || w[3 * k + 1] != -eps)
            throw NotDerivable("derive_tri_word: triple structure fails");
        if (3 * k + 2 < len) out.push_back(w[3 * k + 2]);
    }
    return out;
}

std::vector<std::vector<int>> check_complete_folding_condition(const TurnWord& w, int k_max) {
    int64_t need = 2 * ipow(3, k_max + 1);
    if (static_cast<int64_t>(w.size()) < need)
        throw WindowTooSmall("check_complete_folding_condition: window shorter than 2 periods");
    std::vector<std::vector<int>> result;
    for (int k = 0; k <= k_max; ++k) {
        int64_t step = ipow(3, k);
        int64_t period = 3 * step;
        std::vector<int> residues;
        for (int64_t h = 0; h < period; ++h) {
            // positions congruent to h+step get one constant sign, h+2*step the
            // opposite sign, throughout the window
            int eps = 0;
            bool ok = true;
            for (int64_t i = (h + step) % period; ok && i < static_cast<int64_t>(w.size()); i += period) {
                if (eps == 0) eps = w[i];
                else if (w[i] != eps) ok = false;
            }
            if (!ok || eps == 0) continue;
            for (int64_t i = (h + 2 * step) % period; ok && i < static_cast<int64_t>(w.size()); i += period) {
                if (w[i] != -eps) ok = false;
            }
            if (ok) residues.push_back(static_cast<int>(h));
        }
        result.push_back(std::move(residues));
    }
    return result;
}

FoldSpec parse_spec(Family family, const std::string& s) {
    std::vector<int> signs;
    for (char c : s) {
        if (c == '+') signs.push_back(+1);
        else if (c == '-') signs.push_back(-1);
        else throw std::invalid_argument(std::string("bad sign character '") + c + "' in spec");
    }
    return FoldSpec(family, std::move(signs));
}

}  // namespace planefold
