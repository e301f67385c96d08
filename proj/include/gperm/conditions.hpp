#pragma once

// Weak reducibility, condition Red, condition (*) and irreducibility, each
// with a certificate that can be re-checked on its own.

#include <optional>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"

namespace gperm {

// i0 counts top positions (1..r-1); j0 is an absolute position (r+1..p-1).
struct WeakSplit {
    int i0 = 0;
    int j0 = 0;
    int bullet = 1;
    bool operator==(const WeakSplit&) const = default;
};

// Top row = Y1' Y1'' Y1''' split at i0 <= i1; bottom row = Y2' 0 Y2'' 0 Y2'''
// with the doubled letter 0 at 0-based bottom positions j0 < j1. When swapped
// is set the decomposition refers to the permutation with its rows exchanged.
struct RedDecomposition {
    int i0 = 0;
    int i1 = 0;
    int j0 = 0;
    int j1 = 0;
    bool swapped = false;

    struct Lists {
        std::vector<int> y1a, y1b, y1c, y2a, y2b, y2c;
        int zero = 0;
    };
    Lists lists(const GeneralizedPermutation& gp) const;
    bool operator==(const RedDecomposition&) const = default;
};

std::optional<WeakSplit> weak_reducibility(const GeneralizedPermutation& gp);
std::optional<RedDecomposition> red_condition(const GeneralizedPermutation& gp);
bool condition_star(const GeneralizedPermutation& gp);

struct IrreducibilityVerdict {
    enum class Kind { Irreducible, FailsWeak, FailsRed } kind = Kind::Irreducible;
    std::optional<WeakSplit> weak;
    std::optional<RedDecomposition> red;
    bool irreducible() const { return kind == Kind::Irreducible; }
};
IrreducibilityVerdict is_irreducible(const GeneralizedPermutation& gp);

// Re-validate a certificate against the definitions.
bool check_weak_split(const GeneralizedPermutation& gp, const WeakSplit& w);
bool check_red_decomposition(const GeneralizedPermutation& gp, const RedDecomposition& d);

std::string describe(const WeakSplit& w);
std::string describe(const GeneralizedPermutation& gp, const RedDecomposition& d);

}  // namespace gperm
