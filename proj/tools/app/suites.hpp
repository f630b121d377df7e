#pragma once

#include <functional>
#include <string>
#include <vector>

#include "itg/exact.hpp"

namespace itg::app {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool ok() const;
};

using Check = std::function<CheckResult()>;

// Runs independent checks on a small thread pool; results keep input order.
// A check that throws is reported as a failure carrying the message.
std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, Check>>& checks);

SuiteResult verify_lemmas();
SuiteResult verify_table1();
SuiteResult verify_families();
SuiteResult verify_census();

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

// Census group name -> expected label, in table order.
const std::vector<std::pair<std::string, std::string>>& census_expectations();
// Sample parameters used by the families suite.
std::vector<Rational> family_samples(const std::string& family);

}  // namespace itg::app
