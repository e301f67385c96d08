#pragma once

// JSON and TSV views of computed objects. Every JSON document carries
// "schema": "1".

#include <string>

#include <json.hpp>

#include "gperm/classify.hpp"
#include "gperm/conditions.hpp"
#include "gperm/genperm.hpp"
#include "gperm/strata.hpp"
#include "gperm/suspension.hpp"

namespace gperm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const GeneralizedPermutation& gp);
Json to_json(const SingularityPattern& p);
Json to_json(const GeneralizedPermutation& gp, const AdmissibleVector& lambda);
Json to_json(const SeparatrixSpectrum& s);
Json to_json(const CylinderDecomposition& d);
Json to_json(const WeakSplit& w);
Json to_json(const GeneralizedPermutation& gp, const RedDecomposition& d);
Json to_json(const ComponentReport& rep);

// One line per class: index, permutation, tag, group, number of edges.
std::string to_tsv(const ComponentReport& rep);

}  // namespace gperm
