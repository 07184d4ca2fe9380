#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bv {

/// Outcome of one identity check. Values are rendered exactly (rational or
/// polynomial strings); the verdict is computed on the exact values before
/// rendering. FAIL reports always carry a witness naming the first
/// discrepancy.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    std::optional<std::string> direct;
    bool pass = false;
    std::optional<std::string> witness;
};

}  // namespace bv
