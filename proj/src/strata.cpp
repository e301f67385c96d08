#include "gperm/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gperm {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Glues endpoint classes: a letter on both rows is a translation (left ends
// meet, right ends meet); a letter twice on one row is a half-turn (left end
// meets right end).
template <typename At>
void glue_endpoints(int r, int l, At at, UnionFind& uf) {
    int n = r + l;
    auto right_end = [&](int pos) { return pos < r ? (pos + 1) % r : r + (pos - r + 1) % l; };
    std::vector<int> first(n + 1, -1);
    for (int pos = 0; pos < n; ++pos) {
        int a = at(pos);
        if (first[a] < 0) {
            first[a] = pos;
            continue;
        }
        int p = first[a], q = pos;
        bool cross = (p < r) != (q < r);
        if (cross) {
            uf.unite(p, q);
            uf.unite(right_end(p), right_end(q));
        } else {
            uf.unite(p, right_end(q));
            uf.unite(right_end(p), q);
        }
    }
}

}  // namespace

EndpointClasses endpoint_classes(const GeneralizedPermutation& gp) {
    UnionFind uf(gp.size());
    glue_endpoints(gp.r(), gp.l(), [&](int pos) { return gp.at(pos); }, uf);
    EndpointClasses ec;
    ec.of.assign(gp.size(), -1);
    std::map<int, int> ids;
    for (int pos = 0; pos < gp.size(); ++pos) {
        auto [it, fresh] = ids.emplace(uf.find(pos), static_cast<int>(ids.size()));
        if (fresh) ec.size.push_back(0);
        ec.of[pos] = it->second;
        ++ec.size[it->second];
    }
    return ec;
}

std::vector<int> pattern_orders(const std::vector<int>& top, const std::vector<int>& bottom) {
    int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
    UnionFind uf(r + l);
    glue_endpoints(r, l, [&](int pos) { return pos < r ? top[pos] : bottom[pos - r]; }, uf);
    std::vector<int> count(r + l, 0);
    for (int pos = 0; pos < r + l; ++pos) ++count[uf.find(pos)];
    std::vector<int> orders;
    for (int c : count)
        if (c) orders.push_back(c - 2);
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

SingularityPattern singularity_pattern(const GeneralizedPermutation& gp) {
    return make_pattern(pattern_orders(gp.top, gp.bottom));
}

StratumInfo stratum_info(const std::vector<int>& orders) {
    int sum = 0;
    for (int k : orders) {
        if (k < -1) throw Error(ErrorKind::BadPattern, "order below -1");
        sum += k;
    }
    if (((sum % 4) + 4) % 4 != 0) throw Error(ErrorKind::BadPattern, "orders do not sum to 4g-4");
    int genus = sum / 4 + 1;
    if (genus < 0) throw Error(ErrorKind::BadPattern, "negative genus");
    return {genus, 2 * genus + static_cast<int>(orders.size()) - 2};
}

SingularityPattern make_pattern(std::vector<int> orders) {
    std::sort(orders.rbegin(), orders.rend());
    auto info = stratum_info(orders);
    return {std::move(orders), info.genus, info.dimension};
}

std::vector<int> without_marked_points(std::vector<int> orders) {
    orders.erase(std::remove(orders.begin(), orders.end(), 0), orders.end());
    return orders;
}

std::string SingularityPattern::to_string() const {
    std::string s = "Q(";
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
        if (it != orders.rbegin()) s += ',';
        s += std::to_string(*it);
    }
    return s + ")";
}

std::vector<int> parse_orders(const std::string& text) {
    std::string cleaned;
    for (char c : text) cleaned += (c == ',' || c == '(' || c == ')' || c == '{' || c == '}' || c == 'Q') ? ' ' : c;
    std::istringstream in(cleaned);
    std::vector<int> orders;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            orders.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadPattern, "cannot read order '" + tok + "'");
        }
    }
    if (orders.empty()) throw Error(ErrorKind::BadPattern, "empty pattern");
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

GeneralizedPermutation hyperelliptic_rep(Family kind, int r, int l, int a) {
    if (r < 1 || l < 1) throw Error(ErrorKind::BadParameters, "r and l must be positive");
    auto num = [](int i) { return std::to_string(i); };
    std::vector<std::string> top, bottom;
    switch (kind) {
        case Family::Pi1:
        case Family::Pi1a: {
            if (kind == Family::Pi1a && (a < 2 || a > r + 1))
                throw Error(ErrorKind::BadParameters, "a must lie in 2..r+1");
            top.push_back("0_1");
            if (kind == Family::Pi1a) top.push_back("0_3");
            for (int i = 1; i <= r; ++i) top.push_back(num(i));
            top.push_back("0_1");
            for (int i = r + 1; i <= r + l; ++i) top.push_back(num(i));
            for (int i = r + l; i > r; --i) bottom.push_back(num(i));
            bottom.push_back("0_2");
            for (int i = r; i >= 1; --i) {
                bottom.push_back(num(i));
                if (kind == Family::Pi1a && i == a) bottom.push_back("0_3");
            }
            if (kind == Family::Pi1a && a == r + 1) {
                auto zero2 = std::find(bottom.begin(), bottom.end(), "0_2");
                bottom.insert(zero2 + 1, "0_3");
            }
            bottom.push_back("0_2");
            break;
        }
        case Family::Pi2:
            for (int rep = 0; rep < 2; ++rep)
                for (int i = 1; i <= r; ++i) top.push_back(num(i));
            for (int rep = 0; rep < 2; ++rep)
                for (int i = r + 1; i <= r + l; ++i) bottom.push_back(num(i));
            break;
    }
    return from_tokens(top, bottom);
}

const std::vector<std::string> kIrreducibleNames = {
    "Q^irr(-1,9)", "Q^irr(-1,3,6)", "Q^irr(-1,3,3,3)", "Q^irr,I(12)", "Q^irr,II(12)",
};

GeneralizedPermutation irreducible_rep(const std::string& name) {
    static const std::map<std::string, std::string> table = {
        {"Q^irr(-1,9)", "0 1 2 3 4 0 / 4 3 2 5 1 5"},
        {"Q^irr(-1,3,6)", "0 1 2 3 4 5 0 / 5 4 3 2 6 1 6"},
        {"Q^irr(-1,3,3,3)", "0 1 2 3 4 5 6 0 / 6 5 3 2 7 4 1 7"},
        {"Q^irr,I(12)", "1 2 3 4 2 5 6 / 1 4 5 7 6 7 3"},
        {"Q^irr,II(12)", "1 2 3 4 3 5 6 / 1 5 7 4 2 6 7"},
    };
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::UnknownName, "no representative named '" + name + "'");
    return parse(it->second);
}

std::string ComponentTag::to_string() const {
    switch (kind) {
        case Kind::Hyperelliptic:
            return std::string("Hyperelliptic(") + (family == Family::Pi2 ? "Pi2" : "Pi1") + "," +
                   std::to_string(r) + "," + std::to_string(l) + ")";
        case Kind::IrreducibleRep: return "IrreducibleRep(" + name + ")";
        case Kind::Unknown: break;
    }
    return "Unknown";
}

ComponentTag match_component(const GeneralizedPermutation& gp, const SymmetryGroup& sym) {
    auto key = canonical_key(gp, sym);
    std::vector<std::pair<int, int>> types = {{gp.r(), gp.l()}};
    if (sym.swap && gp.r() != gp.l()) types.emplace_back(gp.l(), gp.r());
    for (auto [R, L] : types) {
        if (R == L)
            for (int r = 1; r + 1 <= R - 2; ++r)
                if (canonical_key(hyperelliptic_rep(Family::Pi1, r, R - 2 - r), sym) == key)
                    return {ComponentTag::Kind::Hyperelliptic, Family::Pi1, r, R - 2 - r, {}};
        if (R % 2 == 0 && L % 2 == 0 &&
            canonical_key(hyperelliptic_rep(Family::Pi2, R / 2, L / 2), sym) == key)
            return {ComponentTag::Kind::Hyperelliptic, Family::Pi2, R / 2, L / 2, {}};
    }
    for (const auto& name : kIrreducibleNames)
        if (canonical_key(irreducible_rep(name), sym) == key)
            return {ComponentTag::Kind::IrreducibleRep, Family::Pi1, 0, 0, name};
    return {};
}

}  // namespace gperm
