#include "gperm/genperm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace gperm {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedText: return "MalformedText";
        case ErrorKind::LetterCountError: return "LetterCountError";
        case ErrorKind::EmptyRow: return "EmptyRow";
        case ErrorKind::NotRestrictable: return "NotRestrictable";
        case ErrorKind::BadPattern: return "BadPattern";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::BoundTooSmall: return "BoundTooSmall";
        case ErrorKind::TraceBudgetExceeded: return "TraceBudgetExceeded";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NotSingleCylinder: return "NotSingleCylinder";
        case ErrorKind::NoSimpleCylinderForm: return "NoSimpleCylinderForm";
        case ErrorKind::NotFoundWithinBudget: return "NotFoundWithinBudget";
        case ErrorKind::SizeLimit: return "SizeLimit";
    }
    return "Error";
}

std::vector<int> GeneralizedPermutation::involution() const {
    std::vector<int> first(letters() + 1, -1);
    std::vector<int> partner(size(), -1);
    for (int pos = 0; pos < size(); ++pos) {
        int a = at(pos);
        if (first[a] < 0) {
            first[a] = pos;
        } else {
            partner[pos] = first[a];
            partner[first[a]] = pos;
        }
    }
    return partner;
}

int GeneralizedPermutation::top_count(int a) const {
    return static_cast<int>(std::count(top.begin(), top.end(), a));
}

SymmetryGroup SymmetryGroup::parse(std::string_view flags) {
    SymmetryGroup sym{false, false, false};
    std::string item;
    std::istringstream in{std::string(flags)};
    while (std::getline(in, item, ',')) {
        if (item == "relabel") continue;
        if (item == "rotate") sym.rotate = true;
        else if (item == "swap") sym.swap = true;
        else if (item == "reverse") sym.reverse = true;
        else throw Error(ErrorKind::BadParameters, "unknown symmetry flag '" + item + "'");
    }
    return sym;
}

std::string SymmetryGroup::to_string() const {
    std::string s = "relabel";
    if (rotate) s += ",rotate";
    if (swap) s += ",swap";
    if (reverse) s += ",reverse";
    return s;
}

namespace {

std::vector<std::string> split_tokens(std::string_view row) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(row)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

GeneralizedPermutation parse(std::string_view text) {
    std::vector<std::string_view> rows;
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw Error(ErrorKind::MalformedText, "more than two rows");
        rows = {text.substr(0, slash), text.substr(slash + 1)};
    } else {
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            auto line = text.substr(start, end - start);
            if (!blank(line)) rows.push_back(line);
            start = end + 1;
        }
    }
    if (rows.size() != 2) throw Error(ErrorKind::MalformedText, "expected two rows");
    return from_tokens(split_tokens(rows[0]), split_tokens(rows[1]));
}

GeneralizedPermutation from_tokens(const std::vector<std::string>& top,
                                   const std::vector<std::string>& bottom) {
    if (top.empty() || bottom.empty()) throw Error(ErrorKind::EmptyRow, "a row has no letters");
    GeneralizedPermutation gp;
    std::map<std::string, int> ids;
    std::vector<int> count;
    auto add = [&](const std::string& tok, std::vector<int>& row) {
        auto [it, fresh] = ids.emplace(tok, static_cast<int>(ids.size()) + 1);
        if (fresh) {
            gp.names.push_back(tok);
            count.push_back(0);
        }
        ++count[it->second - 1];
        row.push_back(it->second);
    };
    for (const auto& t : top) add(t, gp.top);
    for (const auto& t : bottom) add(t, gp.bottom);
    for (size_t i = 0; i < count.size(); ++i) {
        if (count[i] != 2)
            throw Error(ErrorKind::LetterCountError, "letter '" + gp.names[i] + "' occurs " +
                                                         std::to_string(count[i]) + " times");
    }
    return gp;
}

GeneralizedPermutation from_letters(const std::vector<int>& top, const std::vector<int>& bottom) {
    std::vector<std::string> t, b;
    for (int a : top) t.push_back(std::to_string(a));
    for (int a : bottom) b.push_back(std::to_string(a));
    return relabeled(from_tokens(t, b));
}

std::string render(const GeneralizedPermutation& gp) {
    std::string out;
    auto emit = [&](const std::vector<int>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += gp.names[row[i] - 1];
        }
    };
    emit(gp.top);
    out += " / ";
    emit(gp.bottom);
    return out;
}

GeneralizedPermutation relabeled(const GeneralizedPermutation& gp) {
    GeneralizedPermutation out = gp;
    for (int a = 1; a <= gp.letters(); ++a) out.names[a - 1] = std::to_string(a);
    return out;
}

bool is_abelian(const GeneralizedPermutation& gp) {
    for (int a = 1; a <= gp.letters(); ++a)
        if (gp.top_count(a) != 1) return false;
    return true;
}

bool has_same_row_pairs(const GeneralizedPermutation& gp) {
    bool top_pair = false, bottom_pair = false;
    for (int a = 1; a <= gp.letters(); ++a) {
        int c = gp.top_count(a);
        top_pair = top_pair || c == 2;
        bottom_pair = bottom_pair || c == 0;
    }
    return top_pair && bottom_pair;
}

namespace {

GeneralizedPermutation with_rows(const GeneralizedPermutation& gp, std::vector<int> top,
                                 std::vector<int> bottom) {
    std::vector<std::string> t, b;
    for (int a : top) t.push_back(gp.names[a - 1]);
    for (int a : bottom) b.push_back(gp.names[a - 1]);
    return from_tokens(t, b);
}

}  // namespace

GeneralizedPermutation rotate(const GeneralizedPermutation& gp, int top_shift, int bottom_shift) {
    auto top = gp.top;
    auto bottom = gp.bottom;
    std::rotate(top.begin(), top.begin() + top_shift, top.end());
    std::rotate(bottom.begin(), bottom.begin() + bottom_shift, bottom.end());
    return with_rows(gp, top, bottom);
}

std::vector<GeneralizedPermutation> rotations(const GeneralizedPermutation& gp) {
    std::vector<GeneralizedPermutation> out;
    out.reserve(gp.r() * gp.l());
    for (int i = 0; i < gp.r(); ++i)
        for (int j = 0; j < gp.l(); ++j) out.push_back(rotate(gp, i, j));
    return out;
}

GeneralizedPermutation swap_rows(const GeneralizedPermutation& gp) {
    return with_rows(gp, gp.bottom, gp.top);
}

GeneralizedPermutation reverse_rows(const GeneralizedPermutation& gp) {
    return with_rows(gp, {gp.top.rbegin(), gp.top.rend()}, {gp.bottom.rbegin(), gp.bottom.rend()});
}

namespace {

// Writes the relabelled rotation of (top, bottom) into key and compares it
// against best on the fly; returns true when it is strictly smaller.
struct KeyBuilder {
    std::array<std::uint8_t, 256> map{};
    CanonicalKey scratch;

    void build(const std::vector<int>& top, const std::vector<int>& bottom, int i, int j) {
        map.fill(0);
        std::uint8_t next = 1;
        int r = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
        scratch.clear();
        scratch.push_back(static_cast<std::uint8_t>(255 - r));
        auto put = [&](int a) {
            if (!map[a]) map[a] = next++;
            scratch.push_back(map[a]);
        };
        for (int k = 0; k < r; ++k) put(top[(i + k) % r]);
        scratch.push_back(0);
        for (int k = 0; k < l; ++k) put(bottom[(j + k) % l]);
    }
};

}  // namespace

CanonicalKey canonical_key(const std::vector<int>& top, const std::vector<int>& bottom,
                           const SymmetryGroup& sym) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> variants;
    variants.emplace_back(top, bottom);
    if (sym.swap) variants.emplace_back(bottom, top);
    if (sym.reverse) {
        size_t n = variants.size();
        for (size_t v = 0; v < n; ++v) {
            auto [t, b] = variants[v];
            std::reverse(t.begin(), t.end());
            std::reverse(b.begin(), b.end());
            variants.emplace_back(t, b);
        }
    }
    KeyBuilder kb;
    CanonicalKey best;
    for (const auto& [t, b] : variants) {
        int ri = sym.rotate ? static_cast<int>(t.size()) : 1;
        int rj = sym.rotate ? static_cast<int>(b.size()) : 1;
        for (int i = 0; i < ri; ++i)
            for (int j = 0; j < rj; ++j) {
                kb.build(t, b, i, j);
                if (best.empty() || kb.scratch < best) best = kb.scratch;
            }
    }
    return best;
}

CanonicalKey canonical_key(const GeneralizedPermutation& gp, const SymmetryGroup& sym) {
    return canonical_key(gp.top, gp.bottom, sym);
}

GeneralizedPermutation from_key(const CanonicalKey& key) {
    std::vector<int> top, bottom;
    size_t k = 1;
    for (; key[k] != 0; ++k) top.push_back(key[k]);
    for (++k; k < key.size(); ++k) bottom.push_back(key[k]);
    return from_letters(top, bottom);
}

GeneralizedPermutation canonical_form(const GeneralizedPermutation& gp, const SymmetryGroup& sym) {
    return from_key(canonical_key(gp, sym));
}

bool equivalent(const GeneralizedPermutation& a, const GeneralizedPermutation& b,
                const SymmetryGroup& sym) {
    return canonical_key(a, sym) == canonical_key(b, sym);
}

GeneralizedPermutation restrict_head(const GeneralizedPermutation& gp) {
    int a = gp.top.front();
    if (gp.bottom.front() != a || gp.top_count(a) != 1)
        throw Error(ErrorKind::NotRestrictable, "rows do not share a head letter");
    if (gp.r() == 1 || gp.l() == 1)
        throw Error(ErrorKind::NotRestrictable, "restriction would empty a row");
    return with_rows(gp, {gp.top.begin() + 1, gp.top.end()}, {gp.bottom.begin() + 1, gp.bottom.end()});
}

GeneralizedPermutation prepend_shared_head(const GeneralizedPermutation& gp) {
    std::vector<std::string> t, b;
    std::string fresh = "h";
    auto taken = [&](const std::string& s) {
        return std::find(gp.names.begin(), gp.names.end(), s) != gp.names.end();
    };
    for (int k = gp.letters() + 1; taken(fresh); ++k) fresh = std::to_string(k);
    t.push_back(fresh);
    b.push_back(fresh);
    for (int a : gp.top) t.push_back(gp.names[a - 1]);
    for (int a : gp.bottom) b.push_back(gp.names[a - 1]);
    return from_tokens(t, b);
}

GeneralizedPermutation delete_letter(const GeneralizedPermutation& gp, int a) {
    std::vector<int> top, bottom;
    for (int x : gp.top)
        if (x != a) top.push_back(x);
    for (int x : gp.bottom)
        if (x != a) bottom.push_back(x);
    return with_rows(gp, top, bottom);
}

}  // namespace gperm
