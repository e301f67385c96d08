#include "gperm/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gperm/conditions.hpp"

namespace gperm {

namespace {

// Calls visit(seq) for every word of length n in which each of n/2 letters
// occurs twice and letters first appear in increasing order.
template <typename Visit>
void for_each_pairing(int n, Visit&& visit) {
    std::vector<int> seq(n), count(n / 2 + 2, 0);
    auto rec = [&](auto&& self, int pos, int opened, int open_now) -> void {
        if (pos == n) {
            visit(seq);
            return;
        }
        int remaining = n - pos;
        for (int a = 1; a <= opened; ++a) {
            if (count[a] != 1) continue;
            count[a] = 2;
            seq[pos] = a;
            self(self, pos + 1, opened, open_now - 1);
            count[a] = 1;
        }
        if (opened < n / 2 && open_now + 1 <= remaining - 1) {
            int a = opened + 1;
            count[a] = 1;
            seq[pos] = a;
            self(self, pos + 1, opened + 1, open_now + 1);
            count[a] = 0;
        }
    };
    rec(rec, 0, 0, 0);
}

bool rows_have_pairs(const std::vector<int>& seq, int r) {
    int n = static_cast<int>(seq.size());
    std::vector<int> top_count(n / 2 + 1, 0);
    for (int i = 0; i < r; ++i) ++top_count[seq[i]];
    bool top_pair = false, bottom_pair = false;
    for (int a = 1; a <= n / 2; ++a) {
        top_pair = top_pair || top_count[a] == 2;
        bottom_pair = bottom_pair || top_count[a] == 0;
    }
    return top_pair && bottom_pair;
}

void collect_type(int r, int l, const EnumOptions& opts, const std::vector<int>* orders,
                  std::set<CanonicalKey>& keys) {
    for_each_pairing(r + l, [&](const std::vector<int>& seq) {
        if (!rows_have_pairs(seq, r)) return;
        std::vector<int> top(seq.begin(), seq.begin() + r), bottom(seq.begin() + r, seq.end());
        if (orders && pattern_orders(top, bottom) != *orders) return;
        keys.insert(canonical_key(top, bottom, opts.sym));
    });
}

void check_limit(int n, const EnumOptions& opts) {
    if (n > opts.limit)
        throw Error(ErrorKind::SizeLimit, "r+l=" + std::to_string(n) + " exceeds the limit " + std::to_string(opts.limit));
}

}  // namespace

std::vector<GeneralizedPermutation> enumerate_type(int r, int l, const EnumOptions& opts, const std::vector<int>* orders) {
    if (r < 1 || l < 1 || (r + l) % 2 != 0) throw Error(ErrorKind::BadParameters, "type needs r,l >= 1 and r+l even");
    check_limit(r + l, opts);
    std::set<CanonicalKey> keys;
    collect_type(r, l, opts, orders, keys);
    std::vector<GeneralizedPermutation> out;
    for (const auto& k : keys) out.push_back(from_key(k));
    return out;
}

std::vector<GeneralizedPermutation> enumerate_stratum(const std::vector<int>& orders_in, const EnumOptions& opts) {
    auto pattern = make_pattern(orders_in);
    int n = 0;
    for (int k : pattern.orders) n += k + 2;
    std::vector<GeneralizedPermutation> out;
    if (n % 2 != 0 || n < 2) return out;
    check_limit(n, opts);
    std::set<CanonicalKey> keys;
    for (int r = 1; r < n; ++r) {
        int l = n - r;
        if (opts.sym.swap && r < l) continue;
        collect_type(r, l, opts, &pattern.orders, keys);
    }
    for (const auto& k : keys) out.push_back(from_key(k));
    return out;
}

std::optional<GeneralizedPermutation> collapse_seam(const GeneralizedPermutation& hat) {
    auto ec = endpoint_classes(hat);
    int r = hat.r(), l = hat.l();
    int p1 = ec.of[0], p2 = ec.of[r];
    if (p1 == p2) return std::nullopt;
    std::vector<int> expected;
    for (size_t c = 0; c < ec.size.size(); ++c)
        if (static_cast<int>(c) != p1 && static_cast<int>(c) != p2) expected.push_back(ec.size[c] - 2);
    expected.push_back(ec.size[p1] + ec.size[p2] - 4);
    std::sort(expected.rbegin(), expected.rend());
    auto accept = [&](int a) -> std::optional<GeneralizedPermutation> {
        int keep_top = r - hat.top_count(a), keep_bottom = l - (2 - hat.top_count(a));
        if (keep_top < 1 || keep_bottom < 1) return std::nullopt;
        auto g = delete_letter(hat, a);
        if (!has_same_row_pairs(g) || !admissible_feasible(g)) return std::nullopt;
        if (singularity_pattern(g).orders != expected) return std::nullopt;
        return g;
    };
    // A letter on both rows whose top interval runs from one seam end to the other.
    for (int i = 0; i < r; ++i) {
        int a = hat.top[i];
        if (hat.top_count(a) != 1) continue;
        int left = ec.of[i], right = ec.of[(i + 1) % r];
        if (!((left == p1 && right == p2) || (left == p2 && right == p1))) continue;
        if (auto g = accept(a)) return g;
    }
    // A pole at a seam end folded between two adjacent copies of one letter.
    for (int pole : {p1, p2}) {
        if (ec.size[pole] != 1) continue;
        int e = static_cast<int>(std::find(ec.of.begin(), ec.of.end(), pole) - ec.of.begin());
        bool on_top = e < r;
        const auto& row = on_top ? hat.top : hat.bottom;
        int n = static_cast<int>(row.size()), j = on_top ? e : e - r;
        int before = row[(j + n - 1) % n], after = row[j];
        if (before != after) continue;
        if (auto g = accept(after)) return g;
    }
    return std::nullopt;
}

std::vector<Excision> excisions(const GeneralizedPermutation& gp) {
    std::vector<Excision> out;
    if (gp.r() < 2 || gp.l() < 2) return out;
    for (int i = 0; i < gp.r(); ++i)
        for (int j = 0; j < gp.l(); ++j) {
            if (gp.top[i] != gp.bottom[j]) continue;
            auto rotated = rotate(gp, i, j);
            auto hat = restrict_head(rotated);
            if (!has_same_row_pairs(hat) || !admissible_feasible(hat)) continue;
            if (!is_irreducible(hat).irreducible()) continue;
            auto d = cylinder_decomposition(rotated, default_lambda(rotated));
            int h = head_cylinder(d);
            if (h < 0 || !d.cylinders[h].simple || !d.cylinders[h].angle) continue;
            out.push_back({i, j, rotated, hat, *d.cylinders[h].angle, collapse_seam(hat)});
        }
    return out;
}

Excision excise_simple_cylinder(const GeneralizedPermutation& gp) {
    auto all = excisions(gp);
    if (all.empty()) throw Error(ErrorKind::NoSimpleCylinderForm, "no rotation carries a certified simple cylinder");
    return all.front();
}

namespace {

// Permutations obtained from gp by breaking its largest zero in two with a
// new letter: either a letter on both rows joining the two pieces, or two
// adjacent copies of a letter on one row folding off a pole.
std::vector<GeneralizedPermutation> broken_zeros(const GeneralizedPermutation& gp, int zero) {
    std::vector<std::string> top, bottom;
    for (int a : gp.top) top.push_back(gp.names[a - 1]);
    for (int a : gp.bottom) bottom.push_back(gp.names[a - 1]);
    std::string cut = "c";
    while (std::find(gp.names.begin(), gp.names.end(), cut) != gp.names.end()) cut += "'";

    std::vector<GeneralizedPermutation> out;
    for (int i = 0; i <= gp.r(); ++i)
        for (int j = 0; j <= gp.l(); ++j) {
            auto t = top, b = bottom;
            t.insert(t.begin() + i, cut);
            b.insert(b.begin() + j, cut);
            auto broken = from_tokens(t, b);
            auto ec = endpoint_classes(broken);
            int p1 = ec.of[i], p2 = ec.of[(i + 1) % broken.r()];
            if (p1 != p2 && ec.size[p1] + ec.size[p2] - 4 == zero) out.push_back(broken);
        }
    auto fold = [&](bool on_top) {
        int n = on_top ? gp.r() : gp.l();
        for (int i = 0; i < n; ++i) {
            auto t = top, b = bottom;
            auto& row = on_top ? t : b;
            row.insert(row.begin() + i, {cut, cut});
            auto broken = from_tokens(t, b);
            auto ec = endpoint_classes(broken);
            int pole = ec.of[(on_top ? 0 : broken.r()) + i + 1];
            int rest = ec.of[(on_top ? 0 : broken.r()) + i];
            if (ec.size[pole] == 1 && ec.size[rest] - 2 == zero + 1) out.push_back(broken);
        }
    };
    fold(true);
    fold(false);
    return out;
}

}  // namespace

GeneralizedPermutation bubble(const GeneralizedPermutation& gp_hat, int s, long budget) {
    auto base = singularity_pattern(gp_hat);
    int zero = base.orders.front();
    if (zero <= 0) throw Error(ErrorKind::BadParameters, "no zero to bubble at");
    if (s < 1 || s > zero + 2) throw Error(ErrorKind::BadParameters, "angle parameter out of range");
    std::vector<int> target = base.orders;
    target.front() += 4;
    std::sort(target.rbegin(), target.rend());
    const auto sym = SymmetryGroup::calibrated();
    const auto home = canonical_key(gp_hat, sym);

    long tried = 0;
    for (const auto& broken : broken_zeros(gp_hat, zero))
        for (int a = 0; a < broken.r(); ++a)
            for (int c = 0; c < broken.l(); ++c) {
                if (++tried > budget) throw Error(ErrorKind::NotFoundWithinBudget, "bubble search budget exhausted");
                auto hat = rotate(broken, a, c);
                if (!is_irreducible(hat).irreducible()) continue;
                auto collapsed = collapse_seam(hat);
                if (!collapsed || canonical_key(*collapsed, sym) != home) continue;
                auto pi = prepend_shared_head(hat);
                if (singularity_pattern(pi).orders != target) continue;
                auto d = cylinder_decomposition(pi, default_lambda(pi));
                int hc = head_cylinder(d);
                if (hc < 0 || !d.cylinders[hc].simple || !d.cylinders[hc].angle || d.cylinders[hc].angle->s != s)
                    continue;
                return pi;
            }
    throw Error(ErrorKind::NotFoundWithinBudget, "no bubbling with angle " + std::to_string(s) + " found");
}

OrbitLink link_by_orbits(const GeneralizedPermutation& a, const GeneralizedPermutation& b, std::size_t cap) {
    const auto sym = SymmetryGroup::calibrated();
    auto reached = [&](const GeneralizedPermutation& gp, std::size_t& explored) {
        std::map<CanonicalKey, GeneralizedPermutation> out;
        auto orbit = sl2z_orbit(gp, default_lambda(gp), cap);
        explored = orbit.covers.size();
        for (const auto& c : orbit.covers) {
            if (horizontal_cylinders(c).base.size() != 1) continue;
            auto e = extract_permutation(c);
            out.emplace(canonical_key(e.gp, sym), e.gp);
        }
        return out;
    };
    OrbitLink link;
    auto from_a = reached(a, link.explored_a);
    auto from_b = reached(b, link.explored_b);
    for (const auto& [key, gp] : from_a)
        if (from_b.count(key)) {
            link.found = true;
            link.witness = gp;
            break;
        }
    return link;
}

int ComponentReport::index_of(const GeneralizedPermutation& gp) const {
    auto it = key_index.find(canonical_key(gp, sym));
    return it == key_index.end() ? -1 : it->second;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

// Pattern after merging the two singularities at the ends of the seam.
std::vector<int> seam_merged_orders(const GeneralizedPermutation& hat) {
    auto ec = endpoint_classes(hat);
    int p1 = ec.of[0], p2 = ec.of[hat.r()];
    if (p1 == p2) return {};
    std::vector<int> out;
    for (size_t c = 0; c < ec.size.size(); ++c)
        if (static_cast<int>(c) != p1 && static_cast<int>(c) != p2) out.push_back(ec.size[c] - 2);
    out.push_back(ec.size[p1] + ec.size[p2] - 4);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string lambda_text(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    std::string s;
    for (int a = 1; a <= gp.letters(); ++a) s += (a > 1 ? " " : "") + gp.names[a - 1] + "=" + std::to_string(lambda[a - 1]);
    return s;
}

}  // namespace

ComponentReport component_report(const std::vector<int>& orders, const MoveConfig& cfg) {
    ReportCache cache(cfg);
    return component_report(orders, cache);
}

const ComponentReport& ReportCache::get(const std::vector<int>& orders) {
    auto key = make_pattern(orders).orders;
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto report = std::make_unique<ComponentReport>(component_report(key, *this));
        it = cache_.emplace(key, std::move(report)).first;
    }
    return *it->second;
}

ComponentReport component_report(const std::vector<int>& orders, ReportCache& cache) {
    const auto& cfg = cache.config();
    ComponentReport rep;
    rep.stratum = make_pattern(orders);
    rep.sym = cfg.enumeration.sym;
    rep.symmetry = rep.sym.to_string();
    rep.classes = enumerate_stratum(rep.stratum.orders, cfg.enumeration);
    int n = static_cast<int>(rep.classes.size());
    for (int i = 0; i < n; ++i) {
        rep.key_index[canonical_key(rep.classes[i], rep.sym)] = i;
        rep.tags.push_back(match_component(rep.classes[i], rep.sym));
    }
    DisjointSets ds(n);
    auto link = [&](int a, int b, const char* kind, std::string detail) {
        if (b < 0 || !ds.unite(a, b)) return;
        rep.edges.push_back({a, b, kind, std::move(detail)});
    };

    if (cfg.vperm) {
        for (int i = 0; i < n; ++i) {
            const auto& gp = rep.classes[i];
            std::vector<AdmissibleVector> lambdas = {default_lambda(gp)};
            for (int k = 1; k <= cfg.samples; ++k)
                lambdas.push_back(sample_admissible(gp, cfg.seed * 1000003ULL + static_cast<std::uint64_t>(k), cfg.sample_bound));
            for (const auto& lambda : lambdas) {
                auto turned = apply_s(build_cover(gp, lambda));
                if (horizontal_cylinders(turned).base.size() != 1) continue;
                auto v = extract_permutation(turned);
                link(i, rep.index_of(v.gp), "vperm", lambda_text(gp, lambda) + " -> " + render(v.gp));
            }
        }
    }

    if (cfg.orbit) {
        std::vector<bool> reached(n, false);
        for (int i = 0; i < n; ++i) {
            if (reached[i]) continue;
            reached[i] = true;
            const auto& gp = rep.classes[i];
            auto orbit = sl2z_orbit(gp, default_lambda(gp), cfg.orbit_cap);
            for (size_t k = 0; k < orbit.covers.size(); ++k) {
                if (horizontal_cylinders(orbit.covers[k]).base.size() != 1) continue;
                auto e = extract_permutation(orbit.covers[k]);
                int j = rep.index_of(e.gp);
                if (j < 0) continue;
                reached[j] = true;
                link(i, j, "orbit", orbit.words[k].empty() ? "identity" : orbit.words[k]);
            }
        }
    }

    if (cfg.excise) {
        // Classes excising to the same (lower component, angle) are bubblings
        // of one component with one angle, hence lie in one component.
        std::map<std::tuple<std::vector<int>, int, int>, std::pair<int, std::string>> seen;
        for (int i = 0; i < n; ++i) {
            for (const auto& ex : excisions(rep.classes[i])) {
                auto lower_orders = ex.collapsed ? singularity_pattern(*ex.collapsed).orders : seam_merged_orders(ex.hat);
                if (lower_orders.empty()) continue;
                const ComponentReport* lower = nullptr;
                try {
                    lower = &cache.get(lower_orders);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::SizeLimit) continue;
                    throw;
                }
                int lower_group = -1;
                if (ex.collapsed) {
                    int idx = lower->index_of(*ex.collapsed);
                    if (idx >= 0) lower_group = lower->group[idx];
                } else if (lower->groups == 1) {
                    lower_group = 0;
                }
                if (lower_group < 0) continue;
                std::string detail = render(ex.hat) + " s=" + std::to_string(ex.angle.s);
                auto label = std::make_tuple(lower_orders, lower_group, ex.angle.s);
                auto [it, fresh] = seen.emplace(label, std::make_pair(i, detail));
                if (!fresh) link(it->second.first, i, "excise", it->second.second + " | " + detail);
            }
        }
    }

    std::map<int, int> group_id;
    for (int i = 0; i < n; ++i) {
        int root = ds.find(i);
        auto [it, fresh] = group_id.emplace(root, static_cast<int>(group_id.size()));
        rep.group.push_back(it->second);
    }
    rep.groups = static_cast<int>(group_id.size());
    rep.upper_bound = rep.groups;
    rep.lower_bound = n > 0 ? 1 : 0;
    rep.cited_lower_bound = rep.lower_bound;
    if (rep.stratum.orders == std::vector<int>{12}) {
        rep.citations.push_back(
            "Zorich: extended Rauzy classes separate Q^irr,I(12) and Q^irr,II(12), so Q(12) has two components");
        rep.cited_lower_bound = 2;
    }
    return rep;
}

}  // namespace gperm
