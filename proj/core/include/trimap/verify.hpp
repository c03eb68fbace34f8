#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimap/automorphic_map.hpp"

namespace trimap {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerifyReport {
    Signature sig;
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Suites: gamma, hyp, geometry, derivative, automorphy, all. tol_override
// replaces every default tolerance when set. Unknown suite names throw
// std::invalid_argument.
VerifyReport run_verify(const Signature& sig, const std::string& suite,
                        std::optional<double> tol_override = {});

}  // namespace trimap
