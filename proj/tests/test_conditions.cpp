#include <doctest.h>

#include <random>

#include "gperm/classify.hpp"
#include "gperm/conditions.hpp"
#include "gperm/strata.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

// Literal scan of both bullets over every (i0, j0), written over letters.
bool weakly_reducible_oracle(const GeneralizedPermutation& gp) {
    int r = gp.r(), p = gp.size();
    auto partner = gp.involution();
    auto pi = [&](int pos) { return partner[pos - 1] + 1; };
    for (int i0 = 1; i0 < r; ++i0)
        for (int j0 = r + 1; j0 < p; ++j0) {
            std::set<int> head, tail, lo, hi;
            for (int i = 1; i <= i0; ++i) head.insert(pi(i));
            for (int j = r + 1; j <= j0; ++j) lo.insert(j);
            for (int i = i0 + 1; i <= r; ++i) tail.insert(pi(i));
            for (int j = j0 + 1; j <= p; ++j) hi.insert(j);
            if (head == lo || tail == hi) return true;

            bool ok = true;
            for (int i = 1; i <= r && ok; ++i) {
                int q = pi(i);
                if (q <= r) ok = std::min(i, q) <= i0 && std::max(i, q) > i0;
                else if (i <= i0) ok = q <= j0;
            }
            for (int j = r + 1; j <= p && ok; ++j) {
                int q = pi(j);
                if (q > r) ok = std::min(j, q) <= j0 && std::max(j, q) > j0;
                else if (j <= j0) ok = q <= i0;
            }
            if (ok) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("weak reducibility examples") {
    auto w = weak_reducibility(parse("1 2 3 4 3 5 / 6 1 2 6 5 4"));
    REQUIRE(w);
    CHECK(w->i0 == 3);
    CHECK(w->j0 == 9);
    CHECK(w->bullet == 2);
    CHECK(check_weak_split(parse("1 2 3 4 3 5 / 6 1 2 6 5 4"), WeakSplit{3, 9, 2}));

    CHECK_FALSE(weak_reducibility(parse("0 1 2 3 4 0 / 1 4 5 3 5 2")));

    auto pillow = parse("1 1 / 2 2");
    CHECK(weakly_reducible_oracle(pillow));
    CHECK(weak_reducibility(pillow).has_value());
}

TEST_CASE("condition Red examples") {
    auto violated = parse("1 2 2 3 3 1 / 0 0");
    auto d = red_condition(violated);
    REQUIRE(d);
    auto l = d->lists(violated);
    auto names = [&](const std::vector<int>& v) {
        std::string s;
        for (int a : v) s += violated.names[a - 1];
        return s;
    };
    CHECK(names(l.y1a) == "1");
    CHECK(names(l.y1b) == "2233");
    CHECK(names(l.y1c) == "1");
    CHECK(l.y2a.empty());
    CHECK(l.y2b.empty());
    CHECK(l.y2c.empty());
    CHECK(violated.names[l.zero - 1] == "0");
    CHECK(check_red_decomposition(violated, *d));
    CHECK(oracle::red_violated(violated));

    auto example = parse("1 2 3 4 3 5 4 / 6 6 1 5 2");
    CHECK_FALSE(red_condition(example));
    CHECK_FALSE(oracle::red_violated(example));

    // True permutations have no same-row pair, so no decomposition exists.
    for (const char* t : {"1 2 / 2 1", "1 2 3 / 3 2 1", "1 2 3 4 / 4 3 2 1"}) {
        auto gp = parse(t);
        CHECK_FALSE(red_condition(gp));
        CHECK_FALSE(oracle::red_violated(gp));
    }
}

TEST_CASE("condition (*)") {
    CHECK(condition_star(hyperelliptic_rep(Family::Pi1, 1, 1)));
    CHECK(condition_star(parse("5 3 5 2 4 / 1 2 1 3 4")));
    CHECK_FALSE(condition_star(parse("5 2 5 3 4 2 / 1 3 1 4")));
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(parse("0 1 2 3 4 0 / 1 4 5 3 5 2")).irreducible());
    auto v = is_irreducible(parse("1 2 2 3 3 1 / 0 0"));
    CHECK(v.kind == IrreducibilityVerdict::Kind::FailsRed);
    CHECK(v.red.has_value());
}

TEST_CASE("verdicts agree with the literal oracles and witnesses re-check") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 500; ++n) {
        auto gp = oracle::random_perm(rng, 2 + n % 6);
        auto w = weak_reducibility(gp);
        CHECK(w.has_value() == weakly_reducible_oracle(gp));
        if (w) CHECK(check_weak_split(gp, *w));
        auto d = red_condition(gp);
        CAPTURE(render(gp));
        CHECK(d.has_value() == oracle::red_violated(gp));
        if (d) CHECK(check_red_decomposition(gp, *d));
    }
}

TEST_CASE("weak irreducibility implies irreducibility under (*)") {
    EnumOptions opts;
    int checked = 0;
    for (int r = 1; r <= 7; ++r)
        for (int l = 1; l <= r; ++l) {
            if ((r + l) % 2) continue;
            for (const auto& gp : enumerate_type(r, l, opts)) {
                if (!condition_star(gp) || weak_reducibility(gp)) continue;
                ++checked;
                CHECK(is_irreducible(gp).irreducible());
            }
        }
    CHECK(checked > 0);
}
