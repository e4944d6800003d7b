#pragma once

#include <memory>
#include <string>
#include <vector>

#include "betajack/ensemble.hpp"

namespace betajack {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
    // theorem suites attach the order-by-order comparison for the JSON report
    std::shared_ptr<const ExpansionReport> expansion;
};

struct SuiteResult {
    std::string name;
    std::vector<CaseResult> cases;

    bool pass() const;
    int failures() const;
    std::string summary() const;
};

struct SuiteOptions {
    int order = 6;      // Laurent order for the theorem suites
    int max_size = -1;  // overrides the suite's default |lambda| bound when >= 0
    int threads = 1;
};

SuiteResult suite_jack(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_jacobi(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_laguerre(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_cross_pipeline(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_b0_oracle(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_appendix(const SuiteOptions& opt = {});
SuiteResult suite_inverse_lemma(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_moments(JackCache& cache, const SuiteOptions& opt = {});
SuiteResult suite_f_forms(const SuiteOptions& opt = {});

const std::vector<std::string>& suite_names();

// selector: "all" or one of suite_names().
std::vector<SuiteResult> run_suites(const std::string& selector, JackCache& cache,
                                    const SuiteOptions& opt = {});

}  // namespace betajack
