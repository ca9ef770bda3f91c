// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "sqir/linalg.hpp"
#include "sqir/semantics.hpp"

namespace sqir {

// {"rows": R, "cols": C, "data": [[re, im], ...]} in row-major order.
// Doubles serialize with shortest round-trip precision (up to 17 significant
// digits), so values survive re-parsing exactly.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

// {"record": [[q, bit], ...], "weight": w, "state": <vector json>}
nlohmann::ordered_json branch_to_json(const OutcomeBranch& branch);

} // namespace sqir
