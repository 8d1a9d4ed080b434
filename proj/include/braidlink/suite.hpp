#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace braidlink {

// A named verification of one identity or closure claim from the built-in
// examples.  Row ids are stable and hierarchical (e.g. "prop16/braids") so
// substring filters select related groups.
struct SuiteCheck {
    bool ok = true;
    int checks = 0;
    std::string failures;
    std::string notes;  // shown even when the row passes

    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            if (!failures.empty()) failures += "; ";
            failures += what;
        }
    }

    void note(const std::string& text) {
        if (!notes.empty()) notes += "; ";
        notes += text;
    }
};

struct SuiteRow {
    std::string id;
    std::string description;
    std::function<void(SuiteCheck&)> run;
};

struct SuiteResult {
    std::string id;
    std::string description;
    bool pass = false;
    int checks = 0;
    std::string detail;
};

const std::vector<SuiteRow>& suite_rows();
// Rows whose id contains `filter` (empty matches all), executed with up to
// `jobs` rows in flight; results keep the table order.
std::vector<SuiteResult> run_suite(const std::string& filter, int jobs = 1);
nlohmann::ordered_json suite_report_json(const std::vector<SuiteResult>& results);

// Relabel-insensitive linking matrix comparison (components permuted).
bool matrix_matches_up_to_relabeling(const std::vector<std::vector<int>>& got,
                                     const std::vector<std::vector<int>>& want);

}  // namespace braidlink
