#pragma once

// Reproduction checks of the small-genus computations: singularity tables,
// the Q(8), Q(-1,5), Q(12) and Q(-1,9) case studies, emptiness, the
// irreducibility bridge, structural invariants and the handle calculus.

#include <cstdint>
#include <string>
#include <vector>

#include "gperm/genperm.hpp"
#include "gperm/report.hpp"

namespace gperm {

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };

    std::string id;
    int criterion = 0;
    std::string source;  // where the expected value comes from
    std::string expected;
    std::string actual;
    Status status = Status::Skipped;
    double seconds = 0;
    double limit_seconds = 0;
};

const char* status_name(CheckResult::Status s);
Json to_json(const CheckResult& c);

struct AppendixOptions {
    SymmetryGroup sym = SymmetryGroup::calibrated();
    std::uint64_t seed = 0;
    std::string only;  // id prefix filter; empty runs everything
    int random_cases = 500;
};

// All check ids in run order.
std::vector<std::string> appendix_check_ids();

std::vector<CheckResult> reproduce_appendix(const AppendixOptions& opts);

}  // namespace gperm
