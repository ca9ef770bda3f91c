// SPDX-License-Identifier: Apache-2.0
//
// Semantics-preserving transformations on unitary programs: skip removal,
// NOT propagation, and mapping onto a linear-nearest-neighbor architecture.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "sqir/ir.hpp"

namespace sqir {

// Recursively drops skips from sequences. The output is either a single
// skip or entirely skip-free, has the same denotation, and never has more
// leaves than the input.
UnitaryProgram rm_uskips(const UnitaryProgram& c);

// Slides each X gate as far right as it commutes (through CNOT targets and
// anything on other qubits); a matching X on the same qubit cancels both,
// anything else returns the X to its original position. The scan restarts
// after each cancellation so newly adjacent pairs cancel too. If everything
// cancels the result is skip. Output is right-nested.
UnitaryProgram not_propagation(const UnitaryProgram& c);

// True iff every CNOT acts on register-adjacent qubits (|control-target|=1).
// Skips and single-qubit applications always satisfy the constraint.
bool respects_lnn(const UnitaryProgram& c);

// Rewrites each non-adjacent CNOT as a chain of adjacent SWAP macros moving
// the control next to the target, the adjacent CNOT, and the reversed chain
// restoring positions. Single-qubit gates and adjacent CNOTs pass through;
// so do ill-typed CNOTs (duplicate arguments), which stay ill-typed. The
// output satisfies respects_lnn and preserves the denotation.
UnitaryProgram map_to_lnn(const UnitaryProgram& c);

struct PassReport {
    std::string pass;
    std::size_t input_ops = 0;
    std::size_t output_ops = 0;
    std::size_t removed = 0;
    std::size_t inserted = 0;
};

// CLI-facing pass names.
inline constexpr std::string_view kPassRmSkip = "rm-skip";
inline constexpr std::string_view kPassNotProp = "not-prop";
inline constexpr std::string_view kPassLnn = "lnn";

// Runs one pass by name; throws std::invalid_argument for unknown names.
std::pair<UnitaryProgram, PassReport> run_pass(std::string_view name,
                                               const UnitaryProgram& c);

} // namespace sqir
