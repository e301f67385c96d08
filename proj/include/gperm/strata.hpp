#pragma once

// Singularity patterns of suspensions and the named representative families.

#include <optional>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"

namespace gperm {

struct SingularityPattern {
    std::vector<int> orders;  // descending
    int genus = 0;
    int dimension = 0;

    std::string to_string() const;  // "Q(k1,...,kn)" in increasing order
    bool operator==(const SingularityPattern&) const = default;
};

struct StratumInfo {
    int genus;
    int dimension;
};

// Endpoint classes of the boundary identifications. Endpoint i < r is the
// left end of top interval i; endpoint r + j is the left end of bottom
// interval j. Returns the class id of every endpoint and the class count.
struct EndpointClasses {
    std::vector<int> of;
    std::vector<int> size;  // number of corners in each class
};
EndpointClasses endpoint_classes(const GeneralizedPermutation& gp);

SingularityPattern singularity_pattern(const GeneralizedPermutation& gp);
std::vector<int> pattern_orders(const std::vector<int>& top, const std::vector<int>& bottom);

StratumInfo stratum_info(const std::vector<int>& orders);
SingularityPattern make_pattern(std::vector<int> orders);

// Orders with all zero entries removed.
std::vector<int> without_marked_points(std::vector<int> orders);

// Parses "8", "-1,5", "Q(-1,5)" or "{-1,5}".
std::vector<int> parse_orders(const std::string& text);

enum class Family { Pi1, Pi2, Pi1a };

GeneralizedPermutation hyperelliptic_rep(Family kind, int r, int l, int a = 0);

extern const std::vector<std::string> kIrreducibleNames;
GeneralizedPermutation irreducible_rep(const std::string& name);

struct ComponentTag {
    enum class Kind { Hyperelliptic, IrreducibleRep, Unknown } kind = Kind::Unknown;
    Family family = Family::Pi1;
    int r = 0;
    int l = 0;
    std::string name;

    std::string to_string() const;
    bool operator==(const ComponentTag&) const = default;
};

ComponentTag match_component(const GeneralizedPermutation& gp, const SymmetryGroup& sym);

}  // namespace gperm
