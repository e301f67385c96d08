#include <doctest.h>

#include <map>
#include <set>

#include "gperm/appendix.hpp"
#include "gperm/classify.hpp"
#include "gperm/suspension.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

std::set<std::string> keys_of(const std::vector<GeneralizedPermutation>& v, const SymmetryGroup& sym) {
    std::set<std::string> out;
    for (const auto& gp : v) out.insert(oracle::canonical(gp, sym.rotate, sym.swap, sym.reverse));
    return out;
}

// Every permutation of type (r, l) with the same-row pair condition and a
// positive solution, up to the symmetries, by brute force over all words.
std::set<std::string> brute_force(int r, int l, const SymmetryGroup& sym) {
    int k = (r + l) / 2;
    std::set<std::string> out;
    std::vector<int> cells(r + l, 0);
    std::function<void(int)> place = [&](int next) {
        int first = static_cast<int>(std::find(cells.begin(), cells.end(), 0) - cells.begin());
        if (first == r + l) {
            std::vector<int> top(cells.begin(), cells.begin() + r), bottom(cells.begin() + r, cells.end());
            auto gp = from_letters(top, bottom);
            if (has_same_row_pairs(gp) && oracle::feasible_small(gp, 2 * k))
                out.insert(oracle::canonical(gp, sym.rotate, sym.swap, sym.reverse));
            return;
        }
        cells[first] = next;
        for (int j = first + 1; j < r + l; ++j) {
            if (cells[j]) continue;
            cells[j] = next;
            place(next + 1);
            cells[j] = 0;
        }
        cells[first] = 0;
    };
    place(1);
    return out;
}

}  // namespace

TEST_CASE("enumerate_type matches brute force on small types") {
    auto sym = SymmetryGroup::calibrated();
    EnumOptions opts;
    for (auto [r, l] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 3}, std::pair{4, 2}, std::pair{4, 4},
                        std::pair{5, 3}}) {
        CAPTURE(r);
        CAPTURE(l);
        CHECK(keys_of(enumerate_type(r, l, opts), sym) == brute_force(r, l, sym));
    }
    auto two = enumerate_type(2, 2, opts);
    CHECK(two.size() == 1u);
    CHECK(render(two[0]) == "1 1 / 2 2");
}

TEST_CASE("Q(8) tables") {
    EnumOptions opts;
    const std::vector<int> eight = {8};
    auto a1 = enumerate_type(5, 5, opts, &eight);
    auto a2 = enumerate_type(6, 4, opts, &eight);
    CHECK(a1.size() == 4u);
    CHECK(a2.size() == 3u);
    CHECK(enumerate_stratum({8}, opts).size() == 7u);
    auto sym = opts.sym;
    std::set<std::string> want1, want2;
    for (const char* t : {"5 3 5 2 4 / 1 2 1 3 4", "5 4 5 2 3 / 1 2 1 3 4", "5 4 5 3 2 / 1 2 1 3 4",
                          "5 3 5 3 4 / 1 2 1 2 4"})
        want1.insert(oracle::canonical(parse(t), true, true, false));
    for (const char* t : {"5 2 5 3 4 2 / 1 3 1 4", "3 5 4 2 5 2 / 1 3 1 4", "5 3 2 5 4 2 / 1 3 1 4"})
        want2.insert(oracle::canonical(parse(t), true, true, false));
    CHECK(keys_of(a1, sym) == want1);
    CHECK(keys_of(a2, sym) == want2);
}

TEST_CASE("enumerate_stratum") {
    EnumOptions opts;
    CHECK(enumerate_stratum({5, -1}, opts).size() == 2u);
    for (auto p : {std::vector<int>{4}, std::vector<int>{3, 1}, std::vector<int>{1, -1}, std::vector<int>{0}})
        CHECK(enumerate_stratum(p, opts).empty());
    for (auto p : {std::vector<int>{2, -1, -1}, std::vector<int>{2, 2}, std::vector<int>{9, -1}})
        CHECK_FALSE(enumerate_stratum(p, opts).empty());

    EnumOptions tight;
    tight.limit = 8;
    try {
        enumerate_stratum({8}, tight);
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
}

TEST_CASE("symmetry calibration is visible in the Q(8) counts") {
    EnumOptions no_swap;
    no_swap.sym = SymmetryGroup::parse("relabel,rotate");
    CHECK(enumerate_stratum({8}, no_swap).size() != 7u);

    AppendixOptions opts;
    opts.sym = no_swap.sym;
    opts.only = "q8.classes";
    auto results = reproduce_appendix(opts);
    REQUIRE(results.size() == 1u);
    CHECK(results[0].status == CheckResult::Status::Fail);
}

TEST_CASE("excise") {
    EnumOptions opts;
    auto eight = enumerate_stratum({8}, opts);
    auto in = [&](const std::optional<GeneralizedPermutation>& gp, const std::vector<GeneralizedPermutation>& v) {
        if (!gp) return false;
        for (const auto& x : v)
            if (equivalent(*gp, x, opts.sym)) return true;
        return false;
    };
    auto e1 = excise_simple_cylinder(irreducible_rep("Q^irr,I(12)"));
    CHECK(e1.angle.s == 2);
    CHECK(in(e1.collapsed, eight));

    bool six = false;
    for (const auto& e : excisions(irreducible_rep("Q^irr,II(12)")))
        six = six || (e.angle.s == 6 && in(e.collapsed, eight));
    CHECK(six);

    auto e3 = excise_simple_cylinder(irreducible_rep("Q^irr(-1,9)"));
    CHECK(e3.angle.s == 3);
    CHECK(in(e3.collapsed, enumerate_stratum({5, -1}, opts)));

    try {
        excise_simple_cylinder(parse("1 2 / 2 1"));
        FAIL("expected NoSimpleCylinderForm");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoSimpleCylinderForm);
    }
}

TEST_CASE("bubble") {
    EnumOptions opts;
    auto sym = opts.sym;
    auto c0 = enumerate_stratum({8}, opts).front();
    auto x = bubble(c0, 2, 200000);
    CHECK(singularity_pattern(x).to_string() == "Q(12)");
    bool round_trip = false;
    for (const auto& e : excisions(x))
        round_trip = round_trip || (e.angle.s == 2 && e.collapsed && equivalent(*e.collapsed, c0, sym));
    CHECK(round_trip);

    auto p = enumerate_stratum({5, -1}, opts).front();
    auto y = bubble(p, 3, 200000);
    CHECK(singularity_pattern(y).to_string() == "Q(-1,9)");

    try {
        bubble(c0, 2, 1);
        FAIL("expected NotFoundWithinBudget");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFoundWithinBudget);
    }
}

TEST_CASE("component reports") {
    MoveConfig cfg;
    auto q8 = component_report({8}, cfg);
    CHECK(q8.classes.size() == 7u);
    CHECK(q8.upper_bound == 1);
    CHECK(q8.lower_bound <= q8.upper_bound);
    for (const auto& e : q8.edges) {
        CHECK_FALSE(e.detail.empty());
        CHECK((e.kind == "vperm" || e.kind == "orbit" || e.kind == "excise"));
    }

    auto q22 = component_report({2, 2}, cfg);
    CHECK(q22.upper_bound == 1);
    for (const auto& t : q22.tags) CHECK(t.kind == ComponentTag::Kind::Hyperelliptic);

    auto q15 = component_report({5, -1}, cfg);
    CHECK(q15.classes.size() == 2u);
    CHECK(q15.upper_bound == 1);

    // Reports do not depend on the cache they were built with.
    ReportCache cache(cfg);
    auto again = component_report({8}, cache);
    CHECK(again.group == q8.group);
    CHECK(again.edges.size() == q8.edges.size());
}
