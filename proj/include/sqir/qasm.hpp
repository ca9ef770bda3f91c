// SPDX-License-Identifier: Apache-2.0
//
// OpenQASM 2.0 subset: one quantum register, the gates that map directly
// onto the fixed gate set (h/x/y/z, u1 -> R, cx -> CNOT), measure and reset.
// Anything else is rejected with its location. Measurement targets are kept
// as metadata only; there is no classical state.

#pragma once

#include <string>

#include "sqir/source_file.hpp"

namespace sqir {

// Throws ParseError (with the offending line) for any construct outside the
// subset: multiple qregs, custom gates, if, barrier, opaque, ...
SourceFile import_qasm(const std::string& text);

// Header, one statement per line, skips dropped (OpenQASM has no skip).
// Measurements target creg c[dim] at the recorded index (defaulting to the
// measured qubit's index). import_qasm(export_qasm(f)) equals f with skips
// removed.
std::string export_qasm(const SourceFile& f);

} // namespace sqir
