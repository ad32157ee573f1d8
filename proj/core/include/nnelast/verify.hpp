#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nnelast {

/// unisolvence, transform, commuting, patch, quadrature
const std::vector<std::string>& verify_suites();

/// Runs one named self-check, reporting to `out`. Returns true on PASS.
/// Throws std::invalid_argument for an unknown suite.
bool verify(const std::string& suite, std::ostream& out);

}  // namespace nnelast
