#include <doctest.h>

#include <algorithm>
#include <random>

#include "gperm/conditions.hpp"
#include "gperm/suspension.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

const char* kExample = "1 2 3 4 3 5 4 / 6 6 1 5 2";

AdmissibleVector by_token(const GeneralizedPermutation& gp, const std::string& text) { return parse_lambda(gp, text); }

void check_cover_relations(const SquareTiledCover& c) {
    int n = c.squares();
    std::vector<int> right_inv(n), up_inv(n);
    for (int s = 0; s < n; ++s) {
        right_inv[c.right[s]] = s;
        up_inv[c.up[s]] = s;
    }
    for (int s = 0; s < n; ++s) {
        CHECK(c.deck[c.deck[s]] == s);
        CHECK(c.deck[s] != s);
        CHECK(c.deck[c.right[c.deck[s]]] == right_inv[s]);
        CHECK(c.deck[c.up[c.deck[s]]] == up_inv[s]);
    }
}

}  // namespace

TEST_CASE("admissible_feasible") {
    for (const char* t : {"1 2 / 2 1", "1 2 3 / 3 1 2", "1 2 3 4 / 2 4 1 3"}) {
        auto gp = parse(t);
        CHECK(admissible_feasible(gp));
        CHECK(is_admissible(gp, AdmissibleVector(gp.letters(), 1)));
    }
    auto bad = parse("1 1 2 3 / 2 3");
    CHECK_FALSE(admissible_feasible(bad));
    CHECK_FALSE(oracle::feasible_small(bad, 6));

    auto a2 = parse("5 2 5 3 4 2 / 1 3 1 4");
    auto lambda = by_token(a2, "1=2 2=1 3=1 4=1 5=1");
    CHECK(is_admissible(a2, lambda));
    CHECK(width(a2, lambda) == 6);

    std::mt19937_64 rng(41);
    for (int n = 0; n < 300; ++n) {
        auto gp = oracle::random_perm(rng, 1 + n % 5);
        CHECK(admissible_feasible(gp) == oracle::feasible_small(gp, 2 * gp.letters()));
    }
}

TEST_CASE("sample_admissible") {
    auto gp = parse(kExample);
    for (std::uint64_t seed : {0u, 1u, 7u}) {
        auto lambda = sample_admissible(gp, seed, 100);
        CHECK(is_admissible(gp, lambda));
        for (long x : lambda) {
            CHECK(x >= 1);
            CHECK(x <= 100);
        }
        CHECK(sample_admissible(gp, seed, 100) == lambda);
    }
    auto torus = parse("1 2 3 / 3 2 1");
    CHECK(sample_admissible(torus, 0, 1) == AdmissibleVector{1, 1, 1});
    try {
        sample_admissible(parse("1 1 2 3 / 2 3"), 0, 10);
        FAIL("expected Infeasible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Infeasible);
    }
}

TEST_CASE("build_cover") {
    auto pillow = parse("1 1 / 2 2");
    auto c = build_cover(pillow, {1, 1});
    CHECK(c.squares() == 4);
    CHECK(is_connected(c));
    check_cover_relations(c);

    auto torus = build_cover(parse("1 2 / 2 1"), {1, 1});
    CHECK_FALSE(is_connected(torus));

    auto fig = parse("1 1 2 / 3 2 3");
    auto f = build_cover(fig, {1, 1, 1});
    CHECK(f.squares() == 6);
    CHECK(is_connected(f));
    check_cover_relations(f);
    // Riemann-Hurwitz with g = 1 and two odd orders gives genus 2 upstairs.
    CHECK(cover_euler_characteristic(f) == -2);
    CHECK(base_orders(f) == std::vector<int>{2, -1, -1});
}

TEST_CASE("separatrix spectrum") {
    auto fig = parse("1 1 2 / 3 2 3");
    auto s = separatrix_spectrum(fig, {1, 1, 1});
    int gammas = 0;
    for (const auto& seg : s.segments) {
        if (seg.is_gamma) {
            ++gammas;
            CHECK(seg.crossings == 1);
        } else {
            // Regression value: every other segment also has length one.
            CHECK(seg.crossings == 1);
        }
    }
    CHECK(gammas == 1);

    auto irr = parse("0 1 2 3 4 0 / 1 4 5 3 5 2");
    bool found = false;
    for (std::uint64_t seed = 0; seed < 20 && !found; ++seed)
        found = gamma_mult_one_evidence(irr, sample_admissible(irr, seed, 20));
    CHECK(found);

    auto pi11 = hyperelliptic_rep(Family::Pi1, 1, 1);
    CHECK_FALSE(gamma_mult_one_evidence(pi11, AdmissibleVector(4, 1)));
    // Hand-traced: the non-gamma segments have lengths 3, 3 and 6.
    auto traced = separatrix_spectrum(pi11, {5, 1, 2, 5});
    std::vector<long> lengths;
    for (const auto& seg : traced.segments)
        if (!seg.is_gamma) lengths.push_back(seg.crossings);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<long>{3, 3, 6});
    // Balanced vectors have equal lengths on 0_1 and 0_2.
    int evidence = 0;
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b)
            for (long z = 1; z <= 5; ++z) {
                AdmissibleVector lambda(4);
                lambda[pi11.top[0] - 1] = z;
                lambda[pi11.bottom[1] - 1] = z;
                lambda[pi11.top[1] - 1] = a;
                lambda[pi11.top[3] - 1] = b;
                REQUIRE(is_admissible(pi11, lambda));
                evidence += gamma_mult_one_evidence(pi11, lambda);
            }
    CHECK(evidence == 32);
}

TEST_CASE("multiplicity-one evidence on Pi1(3,5)") {
    auto gp = hyperelliptic_rep(Family::Pi1, 3, 5);
    int z1 = gp.top[0], z2 = 0;
    for (int a = 1; a <= gp.letters(); ++a)
        if (gp.names[a - 1] == "0_2") z2 = a;
    REQUIRE(z2 > 0);
    CHECK_FALSE(gamma_mult_one_evidence(gp, AdmissibleVector(gp.letters(), 1)));
    CHECK(gamma_mult_one_evidence(gp, {5, 3, 5, 3, 3, 3, 1, 1, 1, 5}));

    // Every letter except 0_2 is free; 0_2 copies the length of 0_1.
    std::vector<int> free;
    for (int a = 1; a <= gp.letters(); ++a)
        if (a != z2) free.push_back(a);
    AdmissibleVector lambda(gp.letters(), 1);
    long count = 0, evidence = 0;
    bool admissible = true;
    while (true) {
        lambda[z2 - 1] = lambda[z1 - 1];
        admissible = admissible && is_admissible(gp, lambda);
        evidence += gamma_mult_one_evidence(gp, lambda);
        ++count;
        size_t i = 0;
        while (i < free.size() && lambda[free[i] - 1] == 5) lambda[free[i++] - 1] = 1;
        if (i == free.size()) break;
        ++lambda[free[i] - 1];
    }
    CHECK(admissible);
    CHECK(count == 1953125);
    CHECK(evidence == 10655);
}

TEST_CASE("cylinder decomposition") {
    auto irr1 = irreducible_rep("Q^irr,I(12)");
    auto d = cylinder_decomposition(irr1, default_lambda(irr1));
    CHECK(d.cylinders.size() == 2u);
    int simple = 0;
    for (const auto& c : d.cylinders) simple += c.simple;
    CHECK(simple == 1);

    auto a2 = parse("5 2 5 3 4 2 / 1 3 1 4");
    CHECK(cylinder_decomposition(a2, parse_lambda(a2, "1=2 2=1 3=1 4=1 5=1")).cylinders.size() == 1u);

    for (int l = 5; l <= 9; l += 2) {
        std::string run;
        for (int i = 3; i <= l; ++i) run += std::to_string(i) + " ";
        auto gp = parse("0 1 0 / " + run + "2 " + run + "1 2");
        std::vector<long> positions = {l - 1, 1, l - 1};
        positions.resize(3 + 2 * l - 1, 1);
        auto lambda = lambda_from_positions(gp, positions);
        auto p = singularity_pattern(gp);
        CHECK(p.orders == std::vector<int>{4 * p.genus - 3, -1});
        auto dec = cylinder_decomposition(gp, lambda);
        CHECK(static_cast<int>(dec.cylinders.size()) == p.genus - 1);
        int simples = 0;
        for (const auto& c : dec.cylinders) simples += c.simple;
        CHECK(simples >= 1);
    }
}

TEST_CASE("cylinder circumferences agree with the column oracle") {
    std::mt19937_64 rng(51);
    int tested = 0;
    while (tested < 200) {
        auto gp = oracle::random_perm(rng, 2 + tested % 6);
        if (gp.r() != gp.l()) continue;
        ++tested;
        auto d = cylinder_decomposition(gp, AdmissibleVector(gp.letters(), 1));
        std::vector<int> circ;
        long area = 0;
        for (const auto& c : d.cylinders) {
            area += c.width * c.circumference;
            for (long k = 0; k < c.width; ++k) circ.push_back(static_cast<int>(c.circumference));
        }
        CHECK(area == gp.r());
        std::sort(circ.begin(), circ.end());
        CHECK(circ == oracle::column_cylinders(gp));
    }
}

TEST_CASE("simple cylinder angles") {
    auto angle = [](const char* t) {
        auto gp = parse(t);
        auto lambda = default_lambda(gp);
        auto d = cylinder_decomposition(gp, lambda);
        return simple_cylinder_angle(gp, lambda, head_cylinder(d)).s;
    };
    CHECK(angle("1 2 3 4 2 5 6 / 1 4 5 7 6 7 3") == 2);
    CHECK(angle("3 4 0 0 1 2 / 3 5 2 1 4 5") == 1);
    CHECK(angle("2 3 4 0 0 1 / 2 4 5 1 3 5") == 2);
    CHECK(angle("1 2 3 4 5 6 5 / 1 4 7 3 7 2 6") == 4);

    auto gp = irreducible_rep("Q^irr,I(12)");
    auto lambda = default_lambda(gp);
    auto d = cylinder_decomposition(gp, lambda);
    for (size_t i = 0; i < d.cylinders.size(); ++i) {
        if (d.cylinders[i].simple) continue;
        try {
            simple_cylinder_angle(gp, lambda, static_cast<int>(i));
            FAIL("expected NotSimple");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotSimple);
        }
    }
}

TEST_CASE("vertical permutation") {
    auto q8 = parse("5 2 5 3 4 2 / 1 3 1 4");
    auto e = vertical_permutation(q8, lambda_from_positions(q8, {1, 1, 1, 1, 1, 1, 2, 1, 2, 1}));
    CHECK(e.gp.r() == 5);
    CHECK(e.gp.l() == 5);
    CHECK(singularity_pattern(e.gp) == singularity_pattern(q8));

    auto sym = SymmetryGroup::calibrated();
    auto pi2 = parse("0 1 0 / 2 3 2 1 3");
    auto f = vertical_permutation(pi2, lambda_from_positions(pi2, {2, 1, 2, 1, 1, 1, 1, 1}));
    CHECK(equivalent(f.gp, parse("0 0 1 2 / 1 3 2 3"), sym));

    auto torus = parse("1 2 / 2 1");
    auto g = vertical_permutation(torus, {1, 1});
    CHECK(equivalent(g.gp, torus, sym));

    auto marked = parse("1 1 2 3 3 2 / 4 4");
    auto m = vertical_permutation(marked, {1, 1, 1, 3});
    CHECK(singularity_pattern(m.gp) == singularity_pattern(marked));
    CHECK(singularity_pattern(m.gp).to_string() == "Q(-1,-1,-1,-1,0,0)");
    try {
        vertical_permutation(parse("1 1 / 2 3 3 2"), {2, 1, 1});
        FAIL("expected NotSingleCylinder");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotSingleCylinder);
    }

    auto fig = parse("1 1 2 / 3 2 3");
    auto d = cylinder_decomposition(fig, {1, 1, 1});
    if (d.cylinders.size() != 1) {
        try {
            vertical_permutation(fig, {1, 1, 1});
            FAIL("expected NotSingleCylinder");
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::NotSingleCylinder);
        }
    }
}

TEST_CASE("SL(2,Z) orbits") {
    auto pillow = build_cover(parse("1 1 / 2 2"), {1, 1});
    auto orbit = sl2z_orbit(pillow, 1000);
    CHECK(orbit.forms.size() == 1u);
    CHECK_FALSE(orbit.truncated);

    auto irr = irreducible_rep("Q^irr,I(12)");
    auto c = build_cover(irr, default_lambda(irr));
    CHECK(canonical_cover_form(apply_s(apply_s(c))) == canonical_cover_form(c));
    auto st = [](const SquareTiledCover& x) { return apply_t(apply_s(x)); };
    CHECK(canonical_cover_form(st(st(st(c)))) == canonical_cover_form(apply_s(apply_s(c))));

    auto small = sl2z_orbit(c, 3);
    CHECK(small.truncated);
    CHECK(small.forms.size() <= 3u);
}
