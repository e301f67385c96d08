#pragma once

// Integer-length suspensions: the single horizontal cylinder of height one
// with its boundary intervals glued, its orientation double cover as a
// square-tiled surface, vertical separatrices and vertical cylinders.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"
#include "gperm/strata.hpp"

namespace gperm {

// Length per letter: lambda[a - 1] for letter a.
using AdmissibleVector = std::vector<long>;

bool admissible_feasible(const GeneralizedPermutation& gp);
bool is_admissible(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);
long width(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

AdmissibleVector sample_admissible(const GeneralizedPermutation& gp, std::uint64_t seed, long bound);

// The all-ones vector when it balances, otherwise the seeded sample.
AdmissibleVector default_lambda(const GeneralizedPermutation& gp);

// Reads "a=2 b=1" (per letter, by token) or a plain list of lengths in
// position order (top then bottom), converting to per-letter form.
AdmissibleVector parse_lambda(const GeneralizedPermutation& gp, const std::string& text);
AdmissibleVector lambda_from_positions(const GeneralizedPermutation& gp, const std::vector<long>& lengths);

// Squares are numbered sheet * w + x. Sheet 0 is the cylinder, sheet 1 its
// image under the deck involution.
struct SquareTiledCover {
    std::vector<int> right;
    std::vector<int> up;
    std::vector<int> deck;
    std::vector<char> marked;  // bottom-left corner is a marked regular point

    int squares() const { return static_cast<int>(right.size()); }
    bool operator==(const SquareTiledCover&) const = default;
};

SquareTiledCover build_cover(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

// Quarter turn and horizontal shear of the base surface, acting on the cover.
SquareTiledCover apply_s(const SquareTiledCover& c);
SquareTiledCover apply_t(const SquareTiledCover& c);

bool is_connected(const SquareTiledCover& c);

// Relabelling-invariant form: equal forms mean isomorphic covers.
using CoverForm = std::vector<int>;
CoverForm canonical_cover_form(const SquareTiledCover& c);

struct CoverVertex {
    std::vector<int> corners;  // squares whose bottom-left corner is this vertex
    int deck_image = 0;
    int base_order = 0;  // order of the image point in the base surface
    bool marked = false;

    bool singular() const { return base_order != 0 || marked; }
};
std::vector<CoverVertex> cover_vertices(const SquareTiledCover& c);

// Vertex of the bottom-left corner of every square.
std::vector<int> corner_vertex(const SquareTiledCover& c, const std::vector<CoverVertex>& vs);

// Orders of the base surface (zeros dropped) and the cover Euler characteristic.
std::vector<int> base_orders(const SquareTiledCover& c);
int cover_euler_characteristic(const SquareTiledCover& c);

struct HorizontalCylinder {
    std::vector<std::vector<int>> rows;  // bottom to top, each row in right-order
    int lift = 0;                        // index of the deck-paired cover cylinder
    int singular_top = 0;                // singular corners on the top boundary
    int singular_bottom = 0;
};

struct CoverCylinders {
    std::vector<HorizontalCylinder> cylinders;  // cover cylinders
    std::vector<int> cylinder_of;               // per square
    std::vector<std::pair<int, int>> base;      // deck-paired cover cylinders, one per base cylinder
};
CoverCylinders horizontal_cylinders(const SquareTiledCover& c);

// One-cylinder permutation read from a cover with a single base horizontal cylinder.
struct ExtractedPermutation {
    GeneralizedPermutation gp;
    AdmissibleVector lambda;
};
ExtractedPermutation extract_permutation(const SquareTiledCover& c);

struct Germ {
    bool top = true;  // endpoint on the top boundary, ray going down; else bottom going up
    long x = 0;
    bool operator==(const Germ&) const = default;
    auto operator<=>(const Germ&) const = default;
};

struct Segment {
    Germ start;
    Germ end;
    long crossings = 0;
    bool is_gamma = false;
};

struct SeparatrixSpectrum {
    std::vector<Segment> segments;  // one per endpoint germ
};

// Follows the vertical ray leaving an endpoint germ until it meets another.
Segment trace_separatrix(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, Germ from);

SeparatrixSpectrum separatrix_spectrum(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

// Shortest vertical separatrix other than gamma, in crossings.
long shortest_non_gamma(const SeparatrixSpectrum& s);

bool gamma_mult_one_evidence(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

struct SimpleAngle {
    int s = 0;
    int complement = 0;
};

struct VerticalCylinder {
    long width = 0;
    long circumference = 0;
    bool simple = false;
    int boundary_top = 0;  // separatrix segments on each boundary side
    int boundary_bottom = 0;
    std::vector<long> columns;  // x-columns [x, x+1) of the cylinder
    std::optional<SimpleAngle> angle;
};

struct CylinderDecomposition {
    std::vector<VerticalCylinder> cylinders;  // ordered by first column
};

CylinderDecomposition cylinder_decomposition(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

SimpleAngle simple_cylinder_angle(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, int cylinder);

// Index of the vertical cylinder containing the column [0, 1).
int head_cylinder(const CylinderDecomposition& d);

ExtractedPermutation vertical_permutation(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);

struct Orbit {
    std::vector<CoverForm> forms;  // discovery order
    std::vector<std::string> words;  // generator word reaching each form
    std::vector<SquareTiledCover> covers;
    bool truncated = false;
};

Orbit sl2z_orbit(const SquareTiledCover& start, std::size_t cap);
Orbit sl2z_orbit(const GeneralizedPermutation& gp, const AdmissibleVector& lambda, std::size_t cap);

}  // namespace gperm
