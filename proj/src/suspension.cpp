#include "gperm/suspension.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace gperm {

bool admissible_feasible(const GeneralizedPermutation& gp) {
    bool top_only = false, bottom_only = false;
    for (int a = 1; a <= gp.letters(); ++a) {
        int c = gp.top_count(a);
        top_only = top_only || c == 2;
        bottom_only = bottom_only || c == 0;
    }
    return top_only == bottom_only;
}

namespace {

long row_sum(const std::vector<int>& row, const AdmissibleVector& lambda) {
    long s = 0;
    for (int a : row) s += lambda[a - 1];
    return s;
}

}  // namespace

bool is_admissible(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    if (static_cast<int>(lambda.size()) != gp.letters()) return false;
    if (std::any_of(lambda.begin(), lambda.end(), [](long v) { return v <= 0; })) return false;
    return row_sum(gp.top, lambda) == row_sum(gp.bottom, lambda);
}

long width(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    return row_sum(gp.top, lambda);
}

AdmissibleVector sample_admissible(const GeneralizedPermutation& gp, std::uint64_t seed, long bound) {
    if (!admissible_feasible(gp)) throw Error(ErrorKind::Infeasible, "no positive balanced lengths exist");
    if (bound < 1) throw Error(ErrorKind::BoundTooSmall, "bound must be at least 1");
    AdmissibleVector ones(gp.letters(), 1);
    if (seed == 0 && is_admissible(gp, ones)) return ones;
    // Balance reads sum_a c_a lambda_a = 0 with c_a = (top count) - (bottom count).
    std::vector<int> coef(gp.letters());
    for (int a = 1; a <= gp.letters(); ++a) coef[a - 1] = 2 * gp.top_count(a) - 2;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, bound);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        AdmissibleVector lambda(gp.letters());
        for (auto& v : lambda) v = draw(rng);
        long total = 0;
        for (int a = 0; a < gp.letters(); ++a) total += coef[a] * lambda[a];
        if (total == 0) return lambda;
        for (int f = 0; f < gp.letters(); ++f) {
            if (coef[f] == 0) continue;
            long rest = total - coef[f] * lambda[f];
            if ((-rest) % coef[f] != 0) continue;
            long v = -rest / coef[f];
            if (v >= 1 && v <= bound) {
                lambda[f] = v;
                return lambda;
            }
        }
    }
    throw Error(ErrorKind::BoundTooSmall, "no balanced vector found within the bound");
}

AdmissibleVector default_lambda(const GeneralizedPermutation& gp) {
    AdmissibleVector ones(gp.letters(), 1);
    if (is_admissible(gp, ones)) return ones;
    for (long bound = 2;; bound *= 2) {
        try {
            return sample_admissible(gp, 1, bound);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BoundTooSmall || bound > 1 << 20) throw;
        }
    }
}

AdmissibleVector lambda_from_positions(const GeneralizedPermutation& gp, const std::vector<long>& lengths) {
    if (static_cast<int>(lengths.size()) != gp.size())
        throw Error(ErrorKind::BadParameters, "expected one length per position");
    AdmissibleVector lambda(gp.letters(), 0);
    for (int pos = 0; pos < gp.size(); ++pos) {
        long& v = lambda[gp.at(pos) - 1];
        if (v != 0 && v != lengths[pos])
            throw Error(ErrorKind::BadParameters, "the two occurrences of a letter need equal lengths");
        v = lengths[pos];
    }
    if (!is_admissible(gp, lambda)) throw Error(ErrorKind::Infeasible, "lengths are not admissible");
    return lambda;
}

AdmissibleVector parse_lambda(const GeneralizedPermutation& gp, const std::string& text) {
    std::string cleaned;
    for (char c : text) cleaned += (c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream in(cleaned);
    std::vector<std::string> items;
    for (std::string tok; in >> tok;) items.push_back(tok);
    auto number = [](const std::string& s) {
        try {
            size_t used = 0;
            long v = std::stol(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::BadParameters, "cannot read length '" + s + "'");
    };
    if (!items.empty() && items.front().find('=') != std::string::npos) {
        AdmissibleVector lambda(gp.letters(), 0);
        for (const auto& item : items) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::BadParameters, "expected letter=value");
            auto name = item.substr(0, eq);
            auto it = std::find(gp.names.begin(), gp.names.end(), name);
            if (it == gp.names.end()) throw Error(ErrorKind::BadParameters, "unknown letter '" + name + "'");
            lambda[it - gp.names.begin()] = number(item.substr(eq + 1));
        }
        if (!is_admissible(gp, lambda)) throw Error(ErrorKind::Infeasible, "lengths are not admissible");
        return lambda;
    }
    std::vector<long> lengths;
    for (const auto& item : items) lengths.push_back(number(item));
    if (static_cast<int>(lengths.size()) == gp.letters() && gp.letters() != gp.size()) {
        AdmissibleVector lambda(lengths.begin(), lengths.end());
        if (!is_admissible(gp, lambda)) throw Error(ErrorKind::Infeasible, "lengths are not admissible");
        return lambda;
    }
    return lambda_from_positions(gp, lengths);
}

namespace {

struct Cell {
    int letter;
    long offset;
    long start;
};

struct Layout {
    long w = 0;
    std::vector<Cell> top_cells, bottom_cells;
    // (on_top, start) of the two occurrences of every letter
    std::vector<std::vector<std::pair<bool, long>>> occ;
    std::vector<long> top_start, bottom_start;
};

Layout make_layout(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    if (!is_admissible(gp, lambda)) throw Error(ErrorKind::Infeasible, "lengths are not admissible");
    Layout lay;
    lay.occ.resize(gp.letters() + 1);
    long x = 0;
    for (int a : gp.top) {
        lay.top_start.push_back(x);
        lay.occ[a].emplace_back(true, x);
        for (long o = 0; o < lambda[a - 1]; ++o) lay.top_cells.push_back({a, o, x});
        x += lambda[a - 1];
    }
    lay.w = x;
    x = 0;
    for (int a : gp.bottom) {
        lay.bottom_start.push_back(x);
        lay.occ[a].emplace_back(false, x);
        for (long o = 0; o < lambda[a - 1]; ++o) lay.bottom_cells.push_back({a, o, x});
        x += lambda[a - 1];
    }
    return lay;
}

std::pair<bool, long> other_occurrence(const Layout& lay, int a, bool on_top, long start) {
    const auto& o = lay.occ[a];
    return (o[0].first == on_top && o[0].second == start) ? o[1] : o[0];
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

// (f o g)(x) = f(g(x))
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(g.size());
    for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

}  // namespace

SquareTiledCover build_cover(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    auto lay = make_layout(gp, lambda);
    int w = static_cast<int>(lay.w);
    SquareTiledCover c;
    c.right.resize(2 * w);
    c.up.resize(2 * w);
    c.deck.resize(2 * w);
    for (int x = 0; x < w; ++x) {
        c.right[x] = (x + 1) % w;
        c.right[w + x] = w + (x + w - 1) % w;
        c.deck[x] = w + x;
        c.deck[w + x] = x;
        {
            const auto& cell = lay.top_cells[x];
            long len = lambda[cell.letter - 1];
            auto [other_top, c0] = other_occurrence(lay, cell.letter, true, cell.start);
            c.up[x] = other_top ? static_cast<int>(w + c0 + len - 1 - cell.offset) : static_cast<int>(c0 + cell.offset);
        }
        {
            const auto& cell = lay.bottom_cells[x];
            long len = lambda[cell.letter - 1];
            auto [other_top, c0] = other_occurrence(lay, cell.letter, false, cell.start);
            c.up[w + x] = other_top ? static_cast<int>(w + c0 + cell.offset) : static_cast<int>(c0 + len - 1 - cell.offset);
        }
    }

    auto classes = endpoint_classes(gp);
    c.marked.assign(2 * w, 0);
    for (int i = 0; i < gp.r(); ++i)
        if (classes.size[classes.of[i]] == 2) c.marked[c.up[lay.top_start[i]]] = 1;
    for (int j = 0; j < gp.l(); ++j)
        if (classes.size[classes.of[gp.r() + j]] == 2) c.marked[lay.bottom_start[j]] = 1;
    auto vs = cover_vertices(c);
    for (const auto& v : vs) {
        if (!v.marked) continue;
        for (int i : v.corners) c.marked[i] = 1;
        for (int i : vs[v.deck_image].corners) c.marked[i] = 1;
    }
    return c;
}

SquareTiledCover apply_s(const SquareTiledCover& c) {
    std::vector<char> marked(c.marked.size());
    for (size_t i = 0; i < marked.size(); ++i) marked[i] = c.marked[c.up[i]];
    return {inverse(c.up), c.right, c.deck, std::move(marked)};
}

SquareTiledCover apply_t(const SquareTiledCover& c) {
    return {c.right, compose(c.up, inverse(c.right)), compose(c.right, c.deck), c.marked};
}

namespace {

// Breadth-first labelling of the component of start under right and up.
int label_component(const SquareTiledCover& c, int start, std::vector<int>& label, std::vector<int>& order) {
    int n = c.squares();
    label.assign(n, -1);
    order.clear();
    label[start] = 0;
    order.push_back(start);
    for (size_t k = 0; k < order.size(); ++k) {
        int x = order[k];
        for (int y : {c.right[x], c.up[x]}) {
            if (label[y] < 0) {
                label[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    return static_cast<int>(order.size());
}

}  // namespace

bool is_connected(const SquareTiledCover& c) {
    std::vector<int> label, order;
    return label_component(c, 0, label, order) == c.squares();
}

CoverForm canonical_cover_form(const SquareTiledCover& c) {
    int n = c.squares();
    std::vector<int> label, order;
    CoverForm best, key;
    key.reserve(3 * n + 1);
    for (int s = 0; s < n; ++s) {
        int size = label_component(c, s, label, order);
        if (size < n) {
            if (2 * size != n) throw Error(ErrorKind::BadParameters, "cover has more than two components");
            for (int k = 0; k < size; ++k) {
                int y = c.deck[order[k]];
                if (label[y] >= 0) throw Error(ErrorKind::BadParameters, "deck involution preserves a component");
                label[y] = size + k;
            }
            order.resize(n);
            for (int x = 0; x < n; ++x) order[label[x]] = x;
        }
        key.clear();
        key.push_back(size == n ? 1 : 2);
        for (int x : order) key.push_back(label[c.right[x]]);
        for (int x : order) key.push_back(label[c.up[x]]);
        for (int x : order) key.push_back(label[c.deck[x]]);
        for (int x : order) key.push_back(c.marked.empty() ? 0 : c.marked[x]);
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<CoverVertex> cover_vertices(const SquareTiledCover& c) {
    int n = c.squares();
    auto ri = inverse(c.right), ui = inverse(c.up);
    std::vector<int> vid(n, -1);
    std::vector<CoverVertex> vs;
    for (int i = 0; i < n; ++i) {
        if (vid[i] >= 0) continue;
        CoverVertex v;
        for (int j = i; vid[j] < 0; j = c.up[c.right[ui[ri[j]]]]) {
            vid[j] = static_cast<int>(vs.size());
            v.corners.push_back(j);
            v.marked = v.marked || (!c.marked.empty() && c.marked[j]);
        }
        vs.push_back(std::move(v));
    }
    for (auto& v : vs) v.deck_image = vid[c.right[c.up[c.deck[v.corners.front()]]]];
    for (size_t k = 0; k < vs.size(); ++k) {
        int m = static_cast<int>(vs[k].corners.size());
        vs[k].base_order = vs[k].deck_image == static_cast<int>(k) ? m - 2 : 2 * m - 2;
    }
    return vs;
}

std::vector<int> corner_vertex(const SquareTiledCover& c, const std::vector<CoverVertex>& vs) {
    std::vector<int> of(c.squares(), -1);
    for (size_t k = 0; k < vs.size(); ++k)
        for (int i : vs[k].corners) of[i] = static_cast<int>(k);
    return of;
}

std::vector<int> base_orders(const SquareTiledCover& c) {
    auto vs = cover_vertices(c);
    std::vector<int> orders;
    for (size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].deck_image < static_cast<int>(k)) continue;
        if (vs[k].base_order != 0) orders.push_back(vs[k].base_order);
    }
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

int cover_euler_characteristic(const SquareTiledCover& c) {
    return static_cast<int>(cover_vertices(c).size()) - c.squares();
}

CoverCylinders horizontal_cylinders(const SquareTiledCover& c) {
    int n = c.squares();
    auto vs = cover_vertices(c);
    auto vof = corner_vertex(c, vs);
    auto singular = [&](int i) { return vs[vof[i]].singular(); };

    std::vector<int> row_of(n, -1);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        if (row_of[i] >= 0) continue;
        std::vector<int> row;
        for (int j = i; row_of[j] < 0; j = c.right[j]) {
            row_of[j] = static_cast<int>(rows.size());
            row.push_back(j);
        }
        rows.push_back(std::move(row));
    }
    int nr = static_cast<int>(rows.size());
    std::vector<int> up_row(nr, -1), down_row(nr, -1);
    for (int k = 0; k < nr; ++k) {
        bool open = std::none_of(rows[k].begin(), rows[k].end(), [&](int i) { return singular(c.up[i]); });
        if (open) {
            up_row[k] = row_of[c.up[rows[k][0]]];
            down_row[up_row[k]] = k;
        }
    }

    CoverCylinders out;
    out.cylinder_of.assign(n, -1);
    std::vector<int> cyl_of_row(nr, -1);
    for (int k = 0; k < nr; ++k) {
        if (cyl_of_row[k] >= 0) continue;
        int bottom = k;
        while (down_row[bottom] >= 0 && down_row[bottom] != k) bottom = down_row[bottom];
        if (down_row[bottom] == k) {
            // closed stack without singular boundary: start at the lowest index
            int lowest = k;
            for (int j = up_row[k]; j != k; j = up_row[j]) lowest = std::min(lowest, j);
            bottom = lowest;
        }
        HorizontalCylinder cyl;
        int id = static_cast<int>(out.cylinders.size());
        for (int j = bottom; j >= 0 && cyl_of_row[j] < 0; j = up_row[j]) {
            cyl_of_row[j] = id;
            cyl.rows.push_back(rows[j]);
        }
        for (int i : cyl.rows.back())
            if (singular(c.up[i])) ++cyl.singular_top;
        for (int i : cyl.rows.front())
            if (singular(i)) ++cyl.singular_bottom;
        out.cylinders.push_back(std::move(cyl));
    }
    for (size_t id = 0; id < out.cylinders.size(); ++id)
        for (const auto& row : out.cylinders[id].rows)
            for (int i : row) out.cylinder_of[i] = static_cast<int>(id);
    std::vector<bool> done(out.cylinders.size(), false);
    for (size_t id = 0; id < out.cylinders.size(); ++id) {
        int lift = out.cylinder_of[c.deck[out.cylinders[id].rows[0][0]]];
        out.cylinders[id].lift = lift;
        if (done[id]) continue;
        done[id] = true;
        done[lift] = true;
        out.base.emplace_back(static_cast<int>(id), lift);
    }
    return out;
}

ExtractedPermutation extract_permutation(const SquareTiledCover& c) {
    auto cc = horizontal_cylinders(c);
    if (cc.base.size() != 1) throw Error(ErrorKind::NotSingleCylinder, "surface has " + std::to_string(cc.base.size()) + " cylinders");
    auto vs = cover_vertices(c);
    auto vof = corner_vertex(c, vs);
    auto singular = [&](int i) { return vs[vof[i]].singular(); };
    auto ui = inverse(c.up);
    const auto& cyl = cc.cylinders[cc.base[0].first];
    int id = cc.base[0].first;
    const auto& top_row = cyl.rows.back();
    const auto& bottom_row = cyl.rows.front();

    // Split a boundary row into segments starting at singular corners.
    auto segments = [](const std::vector<int>& row, auto corner_singular) {
        int n = static_cast<int>(row.size());
        std::vector<int> cuts;
        for (int k = 0; k < n; ++k)
            if (corner_singular(row[k])) cuts.push_back(k);
        if (cuts.empty()) throw Error(ErrorKind::NotSingleCylinder, "boundary without singular point");
        std::vector<std::vector<int>> segs;
        for (size_t s = 0; s < cuts.size(); ++s) {
            int a = cuts[s], b = cuts[(s + 1) % cuts.size()];
            int len = ((b - a) % n + n) % n;
            if (len == 0) len = n;
            std::vector<int> seg;
            for (int t = 0; t < len; ++t) seg.push_back(row[(a + t) % n]);
            segs.push_back(std::move(seg));
        }
        return segs;
    };
    auto tsegs = segments(top_row, [&](int i) { return singular(c.up[i]); });
    auto bsegs = segments(bottom_row, [&](int i) { return singular(i); });
    std::map<int, int> top_seg_of, bottom_seg_of;
    for (size_t s = 0; s < tsegs.size(); ++s)
        for (int i : tsegs[s]) top_seg_of[i] = static_cast<int>(s);
    for (size_t s = 0; s < bsegs.size(); ++s)
        for (int i : bsegs[s]) bottom_seg_of[i] = static_cast<int>(s);

    std::vector<int> ttok(tsegs.size(), -1), btok(bsegs.size(), -1);
    std::vector<long> len;
    for (size_t s = 0; s < tsegs.size(); ++s) {
        if (ttok[s] >= 0) continue;
        int y = c.up[tsegs[s][0]];
        int tok = static_cast<int>(len.size());
        ttok[s] = tok;
        if (cc.cylinder_of[y] == id) btok[bottom_seg_of.at(y)] = tok;
        else ttok[top_seg_of.at(c.deck[y])] = tok;
        len.push_back(static_cast<long>(tsegs[s].size()));
    }
    for (size_t s = 0; s < bsegs.size(); ++s) {
        if (btok[s] >= 0) continue;
        int y = ui[bsegs[s][0]];
        int tok = static_cast<int>(len.size());
        btok[s] = tok;
        if (cc.cylinder_of[y] == id) ttok[top_seg_of.at(y)] = tok;
        else btok[bottom_seg_of.at(c.deck[y])] = tok;
        len.push_back(static_cast<long>(bsegs[s].size()));
    }
    std::vector<std::string> t, b;
    for (int tok : ttok) t.push_back(std::to_string(tok));
    for (int tok : btok) b.push_back(std::to_string(tok));
    auto gp = from_tokens(t, b);
    AdmissibleVector lambda(gp.letters());
    for (int a = 1; a <= gp.letters(); ++a) lambda[a - 1] = len[std::stoi(gp.names[a - 1])];
    return {relabeled(gp), lambda};
}

namespace {

Segment trace(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, const Layout& lay, Germ from) {
    long w = lay.w;
    const std::vector<long>* starts[2] = {&lay.top_start, &lay.bottom_start};
    const std::vector<int>* rows[2] = {&gp.top, &gp.bottom};
    auto is_endpoint = [&](int side, long x) {
        return std::binary_search(starts[side]->begin(), starts[side]->end(), x);
    };
    // side we are moving towards: 0 = top, 1 = bottom
    int heading = from.top ? 1 : 0;
    long x = from.x;
    long budget = 2 * w + 2;
    for (long n = 1; n <= budget; ++n) {
        if (is_endpoint(heading, x)) {
            Germ end{heading == 0, x};
            bool gamma = from.x == 0 && x == 0 && from.top != end.top;
            return {from, end, n, gamma};
        }
        const auto& st = *starts[heading];
        int idx = static_cast<int>(std::upper_bound(st.begin(), st.end(), x) - st.begin()) - 1;
        int a = (*rows[heading])[idx];
        long off = x - st[idx];
        auto [other_top, c0] = other_occurrence(lay, a, heading == 0, st[idx]);
        int other_side = other_top ? 0 : 1;
        if (other_side != heading) {
            x = c0 + off;  // translation: keep the direction
        } else {
            x = c0 + lambda[a - 1] - off;  // half-turn: come back
            heading = 1 - heading;
        }
    }
    throw Error(ErrorKind::TraceBudgetExceeded, "vertical trace did not close");
}

}  // namespace

Segment trace_separatrix(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, Germ from) {
    auto lay = make_layout(gp, lambda);
    return trace(gp, lambda, lay, from);
}

SeparatrixSpectrum separatrix_spectrum(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    auto lay = make_layout(gp, lambda);
    SeparatrixSpectrum spectrum;
    std::vector<Germ> germs;
    for (long x : lay.top_start) germs.push_back({true, x});
    for (long x : lay.bottom_start) germs.push_back({false, x});
    for (const auto& g : germs) {
        auto seg = trace(gp, lambda, lay, g);
        if (seg.end < seg.start) continue;
        spectrum.segments.push_back(seg);
    }
    return spectrum;
}

long shortest_non_gamma(const SeparatrixSpectrum& s) {
    long best = -1;
    for (const auto& seg : s.segments)
        if (!seg.is_gamma && (best < 0 || seg.crossings < best)) best = seg.crossings;
    return best;
}

bool gamma_mult_one_evidence(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    long m = shortest_non_gamma(separatrix_spectrum(gp, lambda));
    return m < 0 || m >= 3;
}

namespace {

std::optional<SimpleAngle> angle_of(const SquareTiledCover& c, const CoverCylinders& cc, const std::pair<int, int>& pair,
                                    const std::vector<CoverVertex>& vs, const std::vector<int>& vof) {
    const auto& cyl = cc.cylinders[pair.first];
    auto singular = [&](int i) { return vs[vof[i]].singular(); };
    std::vector<int> ts, bs;
    for (int i : cyl.rows.back())
        if (singular(c.up[i])) ts.push_back(i);
    for (int i : cyl.rows.front())
        if (singular(i)) bs.push_back(i);
    if (ts.size() != 1 || bs.size() != 1) return std::nullopt;
    int vt = vof[c.up[ts[0]]], vb = vof[bs[0]];
    if (vt != vb && vs[vt].deck_image != vb) return std::nullopt;
    auto ri = inverse(c.right), ui = inverse(c.up);
    auto inside = [&](int i) { return cc.cylinder_of[i] == pair.first || cc.cylinder_of[i] == pair.second; };
    // Walk the corners around the singular point, leaving the cylinder through
    // its top boundary, until a square of the cylinder (or its lift) is reached.
    int i = c.up[ts[0]];
    int corner = 0;  // 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left
    int count = 0;
    int limit = 4 * c.squares();
    while (!inside(i)) {
        ++count;
        switch (corner) {
            case 0: i = ri[i]; break;
            case 1: i = ui[i]; break;
            case 2: i = c.right[i]; break;
            case 3: i = c.up[i]; break;
        }
        corner = (corner + 1) % 4;
        if (count > limit) return std::nullopt;
    }
    int k = vs[vt].base_order;
    int a = count / 2;
    int b = k - a;
    return SimpleAngle{std::min(a, b), std::max(a, b)};
}

}  // namespace

CylinderDecomposition cylinder_decomposition(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    auto base = build_cover(gp, lambda);
    int w = base.squares() / 2;
    auto c = apply_s(base);
    auto cc = horizontal_cylinders(c);
    auto vs = cover_vertices(c);
    auto vof = corner_vertex(c, vs);
    CylinderDecomposition d;
    for (const auto& pair : cc.base) {
        const auto& cyl = cc.cylinders[pair.first];
        VerticalCylinder v;
        v.width = static_cast<long>(cyl.rows.size());
        v.circumference = static_cast<long>(cyl.rows.front().size());
        v.boundary_top = cyl.singular_top;
        v.boundary_bottom = cyl.singular_bottom;
        v.simple = cyl.singular_top == 1 && cyl.singular_bottom == 1;
        for (int x = 0; x < w; ++x) {
            int id = cc.cylinder_of[x];
            if (id == pair.first || id == pair.second) v.columns.push_back(x);
        }
        if (v.simple) v.angle = angle_of(c, cc, pair, vs, vof);
        d.cylinders.push_back(std::move(v));
    }
    std::sort(d.cylinders.begin(), d.cylinders.end(),
              [](const VerticalCylinder& a, const VerticalCylinder& b) { return a.columns.front() < b.columns.front(); });
    return d;
}

int head_cylinder(const CylinderDecomposition& d) {
    for (size_t k = 0; k < d.cylinders.size(); ++k)
        if (!d.cylinders[k].columns.empty() && d.cylinders[k].columns.front() == 0) return static_cast<int>(k);
    return -1;
}

SimpleAngle simple_cylinder_angle(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, int cylinder) {
    auto d = cylinder_decomposition(gp, lambda);
    if (cylinder < 0 || cylinder >= static_cast<int>(d.cylinders.size()))
        throw Error(ErrorKind::BadParameters, "no cylinder with index " + std::to_string(cylinder));
    const auto& v = d.cylinders[cylinder];
    if (!v.simple || !v.angle) throw Error(ErrorKind::NotSimple, "cylinder " + std::to_string(cylinder) + " is not simple");
    return *v.angle;
}

ExtractedPermutation vertical_permutation(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    return extract_permutation(apply_s(build_cover(gp, lambda)));
}

Orbit sl2z_orbit(const SquareTiledCover& start, std::size_t cap) {
    Orbit orbit;
    std::set<CoverForm> seen;
    // Returns false once a new element would exceed the cap.
    auto add = [&](SquareTiledCover c, std::string word) {
        auto form = canonical_cover_form(c);
        if (seen.count(form)) return true;
        if (orbit.forms.size() >= cap) {
            orbit.truncated = true;
            return false;
        }
        seen.insert(form);
        orbit.forms.push_back(std::move(form));
        orbit.words.push_back(std::move(word));
        orbit.covers.push_back(std::move(c));
        return true;
    };
    add(start, "");
    for (size_t k = 0; k < orbit.covers.size(); ++k) {
        std::string w = orbit.words[k];
        if (!add(apply_s(orbit.covers[k]), w + "S")) break;
        if (!add(apply_t(orbit.covers[k]), w + "T")) break;
    }
    return orbit;
}

Orbit sl2z_orbit(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, std::size_t cap) {
    return sl2z_orbit(build_cover(gp, lambda), cap);
}

}  // namespace gperm
