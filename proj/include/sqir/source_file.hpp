// SPDX-License-Identifier: Apache-2.0
//
// The native text format: a two-line header (`sqir 1`, `qubits N`) followed
// by one instruction per line. The format is flat; sequencing associativity
// is semantically irrelevant, and the AST nests right.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqir/ir.hpp"

namespace sqir {

// One parsed statement plus its source location. creg_target is carried
// only for measurements imported from OpenQASM (round-trip metadata; it is
// not part of the native syntax and never affects semantics).
struct Statement {
    enum class Kind { Skip, Gate, Meas, Reset };

    Kind kind = Kind::Skip;
    GateKind gate;                  // Kind::Gate only
    std::vector<std::size_t> args;  // gate args, or the single meas/reset qubit
    int line = 0;
    std::optional<std::size_t> creg_target;

    std::size_t qubit() const { return args.at(0); }
};

// Equality is structural (declared size and instruction content); source
// locations and classical-target metadata are ignored.
struct SourceFile {
    std::size_t dim = 0;
    std::vector<Statement> statements;

    friend bool operator==(const SourceFile& a, const SourceFile& b);
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Grammar: one statement per line, '#' starts a comment, tokens separated by
// whitespace. Header lines `sqir 1` and `qubits N` must come first, once.
// Statements: skip | h Q | x Q | y Q | z Q | r PHI Q | cnot Q Q | meas Q |
// reset Q. Throws ParseError with a line number.
SourceFile parse_native(const std::string& text);

// Canonical form: header, then one statement per line, phases printed with
// 17 significant digits, no trailing whitespace. parse_native(print_native(f))
// reproduces f.
std::string print_native(const SourceFile& f);

// Statement list as a right-nested program; the empty list is skip.
Program to_program(const SourceFile& f);

// Unitary view; throws std::invalid_argument if the file contains meas/reset.
UnitaryProgram to_unitary(const SourceFile& f);

bool has_nonunitary(const SourceFile& f);

// Flattened statement views of ASTs (skip leaves become skip statements).
SourceFile source_from(const UnitaryProgram& c, std::size_t dim);
SourceFile source_from(const Program& p, std::size_t dim);

// Renders one statement the way print_native does (no trailing newline).
std::string statement_text(const Statement& s);

} // namespace sqir
