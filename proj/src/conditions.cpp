#include "gperm/conditions.hpp"

#include <algorithm>

namespace gperm {

bool check_weak_split(const GeneralizedPermutation& gp, const WeakSplit& w) {
    int r = gp.r(), p = gp.size();
    if (w.i0 < 1 || w.i0 > r - 1 || w.j0 < r + 1 || w.j0 > p - 1) return false;
    auto partner = gp.involution();
    // 1-based positions as in the tables.
    auto pi = [&](int pos) { return partner[pos - 1] + 1; };
    if (w.bullet == 1) {
        auto image_is = [&](int lo, int hi, int tlo, int thi) {
            std::vector<int> img;
            for (int i = lo; i <= hi; ++i) img.push_back(pi(i));
            std::sort(img.begin(), img.end());
            std::vector<int> target;
            for (int j = tlo; j <= thi; ++j) target.push_back(j);
            return img == target;
        };
        return image_is(1, w.i0, r + 1, w.j0) || image_is(w.i0 + 1, r, w.j0 + 1, p);
    }
    if (w.bullet != 2) return false;
    for (int i = 1; i <= r; ++i) {
        int q = pi(i);
        if (q <= r) {
            if (!(std::min(i, q) <= w.i0 && std::max(i, q) > w.i0)) return false;
        } else if (i <= w.i0 && q > w.j0) {
            return false;
        }
    }
    for (int j = r + 1; j <= p; ++j) {
        int q = pi(j);
        if (q > r) {
            if (!(std::min(j, q) <= w.j0 && std::max(j, q) > w.j0)) return false;
        } else if (j <= w.j0 && q > w.i0) {
            return false;
        }
    }
    return true;
}

std::optional<WeakSplit> weak_reducibility(const GeneralizedPermutation& gp) {
    int r = gp.r(), p = gp.size();
    for (int bullet = 1; bullet <= 2; ++bullet)
        for (int i0 = 1; i0 <= r - 1; ++i0)
            for (int j0 = r + 1; j0 <= p - 1; ++j0) {
                WeakSplit w{i0, j0, bullet};
                if (check_weak_split(gp, w)) return w;
            }
    return std::nullopt;
}

namespace {

enum Part { Y1a, Y1b, Y1c, Y2a, Y2b, Y2c, Zero };

// Label of every 0-based position of (top, bottom) under a decomposition.
std::vector<Part> part_labels(const std::vector<int>& top, const std::vector<int>& bottom,
                              const RedDecomposition& d) {
    int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
    std::vector<Part> part(r + l);
    for (int i = 0; i < r; ++i) part[i] = i < d.i0 ? Y1a : (i < d.i1 ? Y1b : Y1c);
    for (int j = 0; j < l; ++j) {
        Part x = j < d.j0 ? Y2a : (j == d.j0 ? Zero : (j < d.j1 ? Y2b : (j == d.j1 ? Zero : Y2c)));
        part[r + j] = x;
    }
    return part;
}

bool allowed(Part from, Part to) {
    switch (from) {
        case Y1a: return to == Y1c || to == Y2a;
        case Y1b: return to == Y1b || to == Y2b;
        case Y1c: return to == Y1a || to == Y2c;
        case Y2a: return to == Y2c || to == Y1a;
        case Y2b: return to == Y2b || to == Y1b;
        case Y2c: return to == Y2a || to == Y1c;
        case Zero: return to == Zero;
    }
    return false;
}

bool valid_rows(const std::vector<int>& top, const std::vector<int>& bottom, const RedDecomposition& d) {
    int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
    if (d.i0 < 1 || d.i0 > d.i1 || d.i1 > r) return false;
    if (d.j0 < 0 || d.j0 >= d.j1 || d.j1 >= l) return false;
    if (bottom[d.j0] != bottom[d.j1]) return false;
    auto part = part_labels(top, bottom, d);
    std::vector<int> seq(top);
    seq.insert(seq.end(), bottom.begin(), bottom.end());
    for (int x = 0; x < r + l; ++x)
        for (int y = 0; y < r + l; ++y)
            if (x != y && seq[x] == seq[y] && !allowed(part[x], part[y])) return false;
    return true;
}

std::optional<RedDecomposition> search_red(const std::vector<int>& top, const std::vector<int>& bottom,
                                           bool swapped) {
    int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
    for (int j0 = 0; j0 < l; ++j0)
        for (int j1 = j0 + 1; j1 < l; ++j1) {
            if (bottom[j0] != bottom[j1]) continue;
            for (int i0 = 1; i0 <= r; ++i0)
                for (int i1 = i0; i1 <= r; ++i1) {
                    RedDecomposition d{i0, i1, j0, j1, swapped};
                    if (valid_rows(top, bottom, d)) return d;
                }
        }
    return std::nullopt;
}

}  // namespace

bool check_red_decomposition(const GeneralizedPermutation& gp, const RedDecomposition& d) {
    return d.swapped ? valid_rows(gp.bottom, gp.top, d) : valid_rows(gp.top, gp.bottom, d);
}

std::optional<RedDecomposition> red_condition(const GeneralizedPermutation& gp) {
    if (auto d = search_red(gp.top, gp.bottom, false)) return d;
    return search_red(gp.bottom, gp.top, true);
}

RedDecomposition::Lists RedDecomposition::lists(const GeneralizedPermutation& gp) const {
    const auto& top = swapped ? gp.bottom : gp.top;
    const auto& bottom = swapped ? gp.top : gp.bottom;
    Lists out;
    out.y1a.assign(top.begin(), top.begin() + i0);
    out.y1b.assign(top.begin() + i0, top.begin() + i1);
    out.y1c.assign(top.begin() + i1, top.end());
    out.y2a.assign(bottom.begin(), bottom.begin() + j0);
    out.y2b.assign(bottom.begin() + j0 + 1, bottom.begin() + j1);
    out.y2c.assign(bottom.begin() + j1 + 1, bottom.end());
    out.zero = bottom[j0];
    return out;
}

bool condition_star(const GeneralizedPermutation& gp) {
    int top_doubled = 0, bottom_doubled = 0;
    for (int a = 1; a <= gp.letters(); ++a) {
        int c = gp.top_count(a);
        top_doubled += c == 2;
        bottom_doubled += c == 0;
    }
    return top_doubled == 1 && bottom_doubled == 1;
}

IrreducibilityVerdict is_irreducible(const GeneralizedPermutation& gp) {
    IrreducibilityVerdict v;
    if ((v.weak = weak_reducibility(gp))) {
        v.kind = IrreducibilityVerdict::Kind::FailsWeak;
    } else if ((v.red = red_condition(gp))) {
        v.kind = IrreducibilityVerdict::Kind::FailsRed;
    }
    return v;
}

std::string describe(const WeakSplit& w) {
    return "i0=" + std::to_string(w.i0) + " j0=" + std::to_string(w.j0) + " bullet=" +
           std::to_string(w.bullet);
}

std::string describe(const GeneralizedPermutation& gp, const RedDecomposition& d) {
    auto l = d.lists(gp);
    auto show = [&](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + gp.names[v[i] - 1];
        return s + "}";
    };
    return "Y1'=" + show(l.y1a) + " Y1''=" + show(l.y1b) + " Y1'''=" + show(l.y1c) + " Y2'=" +
           show(l.y2a) + " Y2''=" + show(l.y2b) + " Y2'''=" + show(l.y2c) + " zero=" +
           gp.names[l.zero - 1] + (d.swapped ? " swapped" : "");
}

}  // namespace gperm
