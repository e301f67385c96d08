#pragma once

// Small independent re-derivations used as test oracles. None of them call
// into the library beyond the permutation container and its parser.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"

namespace oracle {

using gperm::GeneralizedPermutation;

// Cone orders from a union-find over the endpoints of both boundary circles.
// A pair on opposite rows is glued by translation (left to left, right to
// right); a pair on one row by a half turn (left to right).
inline std::vector<int> pattern(const GeneralizedPermutation& gp) {
    int r = gp.r(), l = gp.l();
    std::vector<int> parent(r + l);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto left = [&](bool top, int i) { return top ? i : r + i; };
    auto right = [&](bool top, int i) { return top ? (i + 1) % r : r + (i + 1) % l; };
    std::map<int, std::vector<std::pair<bool, int>>> where;
    for (int i = 0; i < r; ++i) where[gp.top[i]].push_back({true, i});
    for (int j = 0; j < l; ++j) where[gp.bottom[j]].push_back({false, j});
    for (auto& [letter, occ] : where) {
        auto [t1, i1] = occ[0];
        auto [t2, i2] = occ[1];
        if (t1 != t2) {
            unite(left(t1, i1), left(t2, i2));
            unite(right(t1, i1), right(t2, i2));
        } else {
            unite(left(t1, i1), right(t2, i2));
            unite(right(t1, i1), left(t2, i2));
        }
    }
    std::map<int, int> count;
    for (int x = 0; x < r + l; ++x) ++count[find(x)];
    std::vector<int> orders;
    for (auto [root, c] : count) orders.push_back(c - 2);
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

// Renumbers the letters of two rows by first appearance, top row first.
inline std::pair<std::vector<int>, std::vector<int>> renumber(const std::vector<int>& top,
                                                              const std::vector<int>& bottom) {
    std::map<int, int> name;
    auto map_row = [&](const std::vector<int>& row) {
        std::vector<int> out;
        for (int a : row) {
            auto it = name.find(a);
            if (it == name.end()) it = name.emplace(a, static_cast<int>(name.size()) + 1).first;
            out.push_back(it->second);
        }
        return out;
    };
    auto t = map_row(top);
    auto b = map_row(bottom);
    return {t, b};
}

inline std::string text(const std::vector<int>& top, const std::vector<int>& bottom) {
    std::string s;
    for (int a : top) s += std::to_string(a) + " ";
    s += "/";
    for (int a : bottom) s += " " + std::to_string(a);
    return s;
}

// Minimum over the whole symmetry orbit, comparing (row lengths, letters).
inline std::string canonical(const GeneralizedPermutation& gp, bool rotate, bool swap, bool reverse) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seeds = {{gp.top, gp.bottom}};
    if (swap) seeds.push_back({gp.bottom, gp.top});
    if (reverse) {
        auto n = seeds.size();
        for (size_t i = 0; i < n; ++i) {
            auto [t, b] = seeds[i];
            std::reverse(t.begin(), t.end());
            std::reverse(b.begin(), b.end());
            seeds.push_back({t, b});
        }
    }
    std::vector<int> best;
    std::pair<std::vector<int>, std::vector<int>> best_rows;
    bool have = false;
    for (auto [t, b] : seeds) {
        int rs = rotate ? static_cast<int>(t.size()) : 1, ls = rotate ? static_cast<int>(b.size()) : 1;
        for (int x = 0; x < rs; ++x)
            for (int y = 0; y < ls; ++y) {
                auto tt = t, bb = b;
                std::rotate(tt.begin(), tt.begin() + x, tt.end());
                std::rotate(bb.begin(), bb.begin() + y, bb.end());
                auto [nt, nb] = renumber(tt, bb);
                std::vector<int> key = {static_cast<int>(nt.size())};
                key.insert(key.end(), nt.begin(), nt.end());
                key.insert(key.end(), nb.begin(), nb.end());
                if (!have || key < best) {
                    best = key;
                    best_rows = {nt, nb};
                    have = true;
                }
            }
    }
    return text(best_rows.first, best_rows.second);
}

// Condition Red from the unordered letter-pair description: every letter
// has its two occurrences in one of the allowed part pairs.
inline bool red_violated(const GeneralizedPermutation& gp) {
    enum { A1, B1, C1, A2, B2, C2 };
    const std::set<std::pair<int, int>> ok = {{A1, C1}, {A1, A2}, {B1, B1}, {B1, B2}, {B2, B2}, {C1, C2}, {A2, C2}};
    auto attempt = [&](const std::vector<int>& top, const std::vector<int>& bottom) {
        int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
        for (int j0 = 0; j0 < l; ++j0)
            for (int j1 = j0 + 1; j1 < l; ++j1) {
                if (bottom[j0] != bottom[j1]) continue;
                for (int i0 = 1; i0 <= r; ++i0)
                    for (int i1 = i0; i1 <= r; ++i1) {
                        std::map<int, std::vector<int>> parts;
                        for (int i = 0; i < r; ++i) parts[top[i]].push_back(i < i0 ? A1 : i < i1 ? B1 : C1);
                        for (int j = 0; j < l; ++j) {
                            if (j == j0 || j == j1) continue;
                            parts[bottom[j]].push_back(j < j0 ? A2 : j < j1 ? B2 : C2);
                        }
                        bool good = true;
                        for (auto& [letter, v] : parts) {
                            if (letter == bottom[j0]) continue;
                            std::pair<int, int> pr{std::min(v[0], v[1]), std::max(v[0], v[1])};
                            if (!ok.count(pr)) good = false;
                        }
                        if (good) return true;
                    }
            }
        return false;
    };
    return attempt(gp.top, gp.bottom) || attempt(gp.bottom, gp.top);
}

// Circumferences of the vertical cylinders of the all-ones suspension,
// following a leaf through unit columns. A leaf leaving a column through an
// interval glued to the bottom row re-enters going up, otherwise going down.
inline std::vector<int> column_cylinders(const GeneralizedPermutation& gp) {
    std::map<int, std::vector<std::pair<bool, int>>> where;
    for (int i = 0; i < gp.r(); ++i) where[gp.top[i]].push_back({true, i});
    for (int j = 0; j < gp.l(); ++j) where[gp.bottom[j]].push_back({false, j});
    auto other = [&](bool row, int x) {
        auto& v = where[row ? gp.top[x] : gp.bottom[x]];
        return v[0] == std::pair{row, x} ? v[1] : v[0];
    };
    std::vector<int> sizes;
    // A column crossed upwards and the same column crossed downwards belong
    // to the same leaf family, traversed in opposite directions.
    std::vector<bool> seen(gp.r(), false);
    for (int start = 0; start < gp.r(); ++start) {
        if (seen[start]) continue;
        int x = start, length = 0;
        bool up = true;
        do {
            seen[x] = true;
            ++length;
            auto [row, y] = other(up, x);
            up = !row;
            x = y;
        } while (!(x == start && up));
        sizes.push_back(length);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// Positive integer solution with entries <= bound, by exhaustive search.
inline bool feasible_small(const GeneralizedPermutation& gp, int bound) {
    int k = gp.letters();
    std::vector<int> coef(k, 0);
    for (int a : gp.top) ++coef[a - 1];
    for (int a : gp.bottom) --coef[a - 1];
    std::vector<int> lambda(k, 1);
    while (true) {
        long s = 0;
        for (int i = 0; i < k; ++i) s += static_cast<long>(coef[i]) * lambda[i];
        if (s == 0) return true;
        int i = 0;
        while (i < k && lambda[i] == bound) lambda[i++] = 1;
        if (i == k) return false;
        ++lambda[i];
    }
}

// Random valid permutation with the given letter count.
inline GeneralizedPermutation random_perm(std::mt19937_64& rng, int letters) {
    std::vector<int> cells;
    for (int a = 1; a <= letters; ++a) cells.insert(cells.end(), {a, a});
    std::shuffle(cells.begin(), cells.end(), rng);
    int r = std::uniform_int_distribution<int>(1, 2 * letters - 1)(rng);
    std::vector<int> top(cells.begin(), cells.begin() + r), bottom(cells.begin() + r, cells.end());
    return gperm::from_letters(top, bottom);
}

}  // namespace oracle
