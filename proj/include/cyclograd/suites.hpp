#pragma once

#include "cyclograd/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclograd {

struct CheckResult {
    std::string name;
    std::string anchor; // source pointer shown in reports
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;
    void print_human(std::ostream& os) const;
};

// Defaults match the CLI flags.  Degree-like knobs are additionally capped by
// the CYCLOGRAD_MAX_DEGREE environment variable when it is set.
struct SuiteOptions {
    unsigned n = 2;
    int degree = 3;
    int m = 3;
    Rat R = Rat(1);
    Rat Rp = Rat(2);
    std::string trace = "semicircular"; // or "pure"
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

// One homogeneous degree of the kernel/image bookkeeping for the cyclic
// gradient: dimensions of ker(gradient) and ker(symmetrization) among
// degree-k polynomials, the span of commutators [X_j, u] in that degree,
// and ker(theta) vs image(gradient) among degree-(k-1) fields.
struct ExactSequenceRow {
    int degree = 0;
    int ker_gradient = 0;
    int ker_symmetrize = 0;
    int commutant_dim = 0;
    int ker_theta = 0;
    int image_gradient = 0;

    bool consistent() const {
        return ker_gradient == ker_symmetrize && ker_symmetrize == commutant_dim &&
               ker_theta == image_gradient;
    }
};

std::vector<ExactSequenceRow> exact_sequence_table(unsigned n, int max_degree);

// {"exactness", "seminorms", "thm27", "lie", "prop64", "semicircular", "all"}
const std::vector<std::string>& suite_names();

// Runs every check of the named suite; deterministic under a fixed seed
// (each check owns a generator derived from seed and check name, so --jobs
// cannot reorder randomness).  Throws std::invalid_argument on an unknown
// suite name or out-of-range options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace cyclograd
