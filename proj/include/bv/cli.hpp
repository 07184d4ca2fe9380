#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bv::cli {

/// Dispatches the CLI. Exit code 0: success / all checks PASS;
/// 1: at least one identity FAIL; 2: usage or parse error.
/// Data goes to out, diagnostics to err; output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bv::cli
