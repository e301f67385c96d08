#pragma once

// Enumeration of one-cylinder permutation classes of a stratum, the excision
// and bubbling of simple cylinders, and component bounds from merge moves.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"
#include "gperm/strata.hpp"
#include "gperm/suspension.hpp"

namespace gperm {

struct EnumOptions {
    SymmetryGroup sym = SymmetryGroup::calibrated();
    int limit = 16;  // largest r + l accepted
};

// Canonical classes of type (r, l) satisfying the same-row pair condition
// and admissibility; when orders is given only that pattern is kept.
std::vector<GeneralizedPermutation> enumerate_type(int r, int l, const EnumOptions& opts,
                                                   const std::vector<int>* orders = nullptr);
std::vector<GeneralizedPermutation> enumerate_stratum(const std::vector<int>& orders, const EnumOptions& opts);

// Collapses the seam of a permutation whose seam joins two distinct
// singularities, by deleting a letter on both rows joining them.
std::optional<GeneralizedPermutation> collapse_seam(const GeneralizedPermutation& hat);

struct Excision {
    int top_shift = 0;
    int bottom_shift = 0;
    GeneralizedPermutation rotated;
    GeneralizedPermutation hat;
    SimpleAngle angle;
    std::optional<GeneralizedPermutation> collapsed;
};

// Every rotation with a shared head letter whose restriction is irreducible
// and whose head vertical cylinder is simple, in rotation order.
std::vector<Excision> excisions(const GeneralizedPermutation& gp);
Excision excise_simple_cylinder(const GeneralizedPermutation& gp);

GeneralizedPermutation bubble(const GeneralizedPermutation& gp_hat, int s, long budget);

// Searches the SL(2,Z) orbits of the all-ones suspensions of a and b for a
// common one-cylinder class, which places both in one component.
struct OrbitLink {
    bool found = false;
    GeneralizedPermutation witness;
    std::size_t explored_a = 0;
    std::size_t explored_b = 0;
};
OrbitLink link_by_orbits(const GeneralizedPermutation& a, const GeneralizedPermutation& b, std::size_t cap);

struct MoveConfig {
    EnumOptions enumeration;
    int samples = 8;
    long sample_bound = 4;
    std::uint64_t seed = 0;
    std::size_t orbit_cap = 20000;
    bool vperm = true;
    bool orbit = true;
    bool excise = true;
};

struct MergeEdge {
    int from = 0;
    int to = 0;
    std::string kind;    // "vperm", "orbit" or "excise"
    std::string detail;  // lengths, generator word, or restriction and angle
};

struct ComponentReport {
    SingularityPattern stratum;
    std::string symmetry;
    std::vector<GeneralizedPermutation> classes;
    std::vector<ComponentTag> tags;
    std::vector<int> group;  // merge group of every class, numbered from 0
    int groups = 0;
    std::vector<MergeEdge> edges;
    int lower_bound = 0;
    int upper_bound = 0;
    int cited_lower_bound = 0;
    std::vector<std::string> citations;

    SymmetryGroup sym;
    std::map<CanonicalKey, int> key_index;

    int index_of(const GeneralizedPermutation& gp) const;  // -1 when absent
};

// Reports for lower strata are cached per pattern inside one cache object.
class ReportCache {
public:
    explicit ReportCache(MoveConfig cfg = {}) : cfg_(std::move(cfg)) {}
    const ComponentReport& get(const std::vector<int>& orders);
    const MoveConfig& config() const { return cfg_; }

private:
    MoveConfig cfg_;
    std::map<std::vector<int>, std::unique_ptr<ComponentReport>> cache_;
};

ComponentReport component_report(const std::vector<int>& orders, const MoveConfig& cfg);
ComponentReport component_report(const std::vector<int>& orders, ReportCache& cache);

}  // namespace gperm
