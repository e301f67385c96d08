#pragma once

// Generalized permutations: two rows of letters, every letter used exactly
// twice. Letters are stored as integers 1..k numbered by first appearance
// (top row first); the original tokens are kept for rendering.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/error.hpp"

namespace gperm {

struct GeneralizedPermutation {
    std::vector<int> top;
    std::vector<int> bottom;
    std::vector<std::string> names;  // names[a - 1] is the token of letter a

    int r() const { return static_cast<int>(top.size()); }
    int l() const { return static_cast<int>(bottom.size()); }
    int size() const { return r() + l(); }
    int letters() const { return static_cast<int>(names.size()); }

    // Letter at a 0-based position counted over top then bottom.
    int at(int pos) const { return pos < r() ? top[pos] : bottom[pos - r()]; }

    // partner[pos] is the position of the other occurrence of at(pos).
    std::vector<int> involution() const;

    // Number of occurrences of letter a in the top row (0, 1 or 2).
    int top_count(int a) const;

    bool operator==(const GeneralizedPermutation&) const = default;
};

// Symmetries used to identify permutations. Relabelling is always on.
struct SymmetryGroup {
    bool rotate = true;
    bool swap = true;
    bool reverse = false;

    static SymmetryGroup calibrated() { return {}; }
    static SymmetryGroup parse(std::string_view flags);
    std::string to_string() const;
    bool operator==(const SymmetryGroup&) const = default;
};

GeneralizedPermutation parse(std::string_view text);

// Builds a permutation from token rows; validates letter counts.
GeneralizedPermutation from_tokens(const std::vector<std::string>& top,
                                   const std::vector<std::string>& bottom);

// Builds a permutation from integer rows, renumbering by first appearance.
GeneralizedPermutation from_letters(const std::vector<int>& top, const std::vector<int>& bottom);

std::string render(const GeneralizedPermutation& gp);

// Same permutation with tokens replaced by the decimal letters 1..k.
GeneralizedPermutation relabeled(const GeneralizedPermutation& gp);

bool is_abelian(const GeneralizedPermutation& gp);

// Both rows contain a letter occurring twice in that row.
bool has_same_row_pairs(const GeneralizedPermutation& gp);

GeneralizedPermutation rotate(const GeneralizedPermutation& gp, int top_shift, int bottom_shift);
std::vector<GeneralizedPermutation> rotations(const GeneralizedPermutation& gp);

GeneralizedPermutation swap_rows(const GeneralizedPermutation& gp);
GeneralizedPermutation reverse_rows(const GeneralizedPermutation& gp);

// Sortable key of the canonical form; equal keys mean equivalent permutations.
using CanonicalKey = std::vector<std::uint8_t>;
CanonicalKey canonical_key(const std::vector<int>& top, const std::vector<int>& bottom,
                           const SymmetryGroup& sym);
CanonicalKey canonical_key(const GeneralizedPermutation& gp, const SymmetryGroup& sym);
GeneralizedPermutation from_key(const CanonicalKey& key);

GeneralizedPermutation canonical_form(const GeneralizedPermutation& gp, const SymmetryGroup& sym);
bool equivalent(const GeneralizedPermutation& a, const GeneralizedPermutation& b,
                const SymmetryGroup& sym);

// Deletes the shared head letter of both rows.
GeneralizedPermutation restrict_head(const GeneralizedPermutation& gp);

// Adds a fresh letter at the head of both rows.
GeneralizedPermutation prepend_shared_head(const GeneralizedPermutation& gp);

// Deletes both occurrences of letter a.
GeneralizedPermutation delete_letter(const GeneralizedPermutation& gp, int a);

}  // namespace gperm
