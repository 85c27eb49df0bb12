#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace slicegap {

using json = nlohmann::json;

struct AcceptanceOptions {
    bool quick = false;         // halve cutoffs and dimensions
    bool corrupt_cells = false; // double the top differential of every Cell Lemma complex
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool exact = false;     // every check held
    long elapsed_ms = 0;
    long budget_ms = 0;
    json detail;

    bool pass() const { return exact && elapsed_ms < budget_ms; }
    json to_json(bool timing = true) const;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
// criteria 1..9 in order
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace slicegap
