#include <doctest.h>

#include <random>

#include "gperm/suspension.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

// Random permutation with a positive admissible vector and same-row pairs
// on both rows, so that the suspension is a genuine half-translation surface.
std::pair<GeneralizedPermutation, AdmissibleVector> random_surface(std::mt19937_64& rng) {
    while (true) {
        auto gp = oracle::random_perm(rng, std::uniform_int_distribution<int>(2, 8)(rng));
        if (!has_same_row_pairs(gp) || !admissible_feasible(gp)) continue;
        try {
            return {gp, sample_admissible(gp, rng(), 6)};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BoundTooSmall) throw;
        }
    }
}

int odd_count(const std::vector<int>& orders) {
    int n = 0;
    for (int k : orders) n += k % 2 != 0;
    return n;
}

}  // namespace

TEST_CASE("structural invariants over 500 random surfaces") {
    std::mt19937_64 rng(20240601);
    auto sym = SymmetryGroup::calibrated();
    for (int n = 0; n < 500; ++n) {
        auto [gp, lambda] = random_surface(rng);
        CAPTURE(render(gp));
        auto pattern = singularity_pattern(gp);
        long w = width(gp, lambda);

        auto d = cylinder_decomposition(gp, lambda);
        long area = 0;
        for (const auto& c : d.cylinders) area += c.width * c.circumference;
        CHECK(area == w);

        auto spectrum = separatrix_spectrum(gp, lambda);
        int gammas = 0;
        for (const auto& seg : spectrum.segments) {
            auto back = trace_separatrix(gp, lambda, seg.end);
            CHECK(back.end == seg.start);
            CHECK(back.crossings == seg.crossings);
            if (seg.is_gamma) {
                ++gammas;
                CHECK(seg.crossings == 1);
            }
        }
        CHECK(gammas <= 1);

        auto cover = build_cover(gp, lambda);
        CHECK(cover.squares() == 2 * w);
        int sq = cover.squares();
        std::vector<int> right_inv(sq), up_inv(sq);
        for (int s = 0; s < sq; ++s) {
            right_inv[cover.right[s]] = s;
            up_inv[cover.up[s]] = s;
        }
        for (int s = 0; s < sq; ++s) {
            CHECK(cover.deck[cover.deck[s]] == s);
            CHECK(cover.deck[s] != s);
            CHECK(cover.deck[cover.right[cover.deck[s]]] == right_inv[s]);
            CHECK(cover.deck[cover.up[cover.deck[s]]] == up_inv[s]);
        }
        REQUIRE(is_connected(cover));
        CHECK(cover_euler_characteristic(cover) == 2 * (2 - 2 * pattern.genus) - odd_count(pattern.orders));
        CHECK(base_orders(cover) == without_marked_points(pattern.orders));

        auto canon = canonical_form(gp, sym);
        CHECK(canonical_form(canon, sym) == canon);
        CHECK(equivalent(canon, gp, sym));

        auto form = canonical_cover_form(cover);
        CHECK(canonical_cover_form(apply_s(apply_s(cover))) == form);
        for (const auto& moved : {apply_s(cover), apply_t(cover)}) {
            CHECK(is_connected(moved));
            CHECK(base_orders(moved) == base_orders(cover));
        }

        if (d.cylinders.size() == 1) {
            auto v = vertical_permutation(gp, lambda);
            CHECK(singularity_pattern(v.gp) == pattern);
            CHECK(is_admissible(v.gp, v.lambda));
        }
    }
}
