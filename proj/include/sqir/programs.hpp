// SPDX-License-Identifier: Apache-2.0
//
// The example-program generators and their correctness machinery: superdense
// coding, GHZ state preparation, teleportation, and the Deutsch-Jozsa
// algorithm over inductively built Boolean oracles.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "sqir/ir.hpp"
#include "sqir/linalg.hpp"

namespace sqir {

// The unitary portion of superdense coding on qubits 0 (sender) and 1:
// bell pair, encode the two classical bits, decode. Applied to |00> it
// produces |b1 b2>. The untaken encode branches are skips.
UnitaryProgram superdense(int b1, int b2);

// H on qubit 0, then a CNOT onto each next qubit: n = 0 gives skip,
// n = 1 gives H 0, n >= 2 appends CNOT (n-2) (n-1).
UnitaryProgram ghz_circuit(std::size_t n);

// (|0...0> + |1...1>)/sqrt(2) as a 2^n x 1 column; n = 0 gives the 1x1 [1].
ComplexMatrix ghz_state(std::size_t n);

// Teleportation of qubit 0 through the entangled pair (1,2), with the
// measured qubits reset to |0>. CZ is expanded through its H-CNOT-H macro.
// Under the density semantics, rho (x) |0><0| (x) |0><0| maps to
// |0><0| (x) |0><0| (x) rho; under the non-deterministic semantics every
// outcome is proportional to |0,0> (x) psi.
Program teleport_program();

// g(0); g(1); ...; g(n-1), the same constructor applied across the register;
// n = 0 gives skip.
UnitaryProgram cpar(std::size_t n,
                    const std::function<UnitaryProgram(std::size_t)>& g);

// Inductive description of a Boolean-function oracle. A leaf is the 0-bit
// constant-0 oracle (identity) or constant-1 oracle (X); a node splits on
// the last input bit, with both subtrees of equal depth (enforced at
// construction). An oracle of depth d denotes a 2^(1+d) unitary mapping
// |y,x> to |y xor f(x), x>.
class OracleTree {
public:
    static OracleTree leaf_i();
    static OracleTree leaf_x();
    // Throws std::invalid_argument if the subtrees' depths differ.
    static OracleTree node(OracleTree f0, OracleTree f1);

    std::size_t depth() const;
    bool is_leaf() const;
    bool leaf_is_x() const; // only meaningful for leaves
    OracleTree branch0() const;
    OracleTree branch1() const;

private:
    struct Impl;
    explicit OracleTree(std::shared_ptr<const Impl> impl)
        : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Leaves denote I and X; a node denotes M(f0) (x) |0><0| + M(f1) (x) |1><1|.
// Always unitary, of size 2^(1+depth).
ComplexMatrix oracle_matrix(const OracleTree& t);

// Number of inputs on which the Boolean function evaluates to 1:
// 0 for the identity leaf, 1 for the X leaf, sum over children for nodes.
std::size_t oracle_count(const OracleTree& t);

enum class OracleClass { Balanced, Constant, Neither };

// Constant iff count is 0 or 2^dim; balanced iff dim >= 1 and
// count = 2^(dim-1); neither otherwise.
OracleClass classify_oracle(const OracleTree& t);

const char* oracle_class_name(OracleClass c);

// The Deutsch-Jozsa unitary on 1+depth qubits: X on the answer qubit 0,
// Hadamards everywhere, the oracle matrix spliced in, Hadamards again.
// The oracle enters at matrix level (the language has no composite gate
// for it), so the result is a matrix rather than a program.
ComplexMatrix deutsch_jozsa_matrix(const OracleTree& t);

struct DJReport {
    std::size_t dim = 0;   // oracle depth = number of input bits
    std::size_t count = 0; // inputs evaluating to 1
    OracleClass classification = OracleClass::Neither;
    double amplitude = 0.0;          // <1,0^dim| DJ |0^(1+dim)>
    double accept_probability = 0.0; // weight on the all-zero input register
};

// Runs the algorithm on the all-zero state and reports the accept amplitude
// and probability. The simulated amplitude must match 1 - 2*count/2^dim
// within 1e-9; a mismatch means an implementation bug and throws
// std::logic_error.
DJReport dj_report(const OracleTree& t);

// Text form used by the CLI: "I" | "X" | "(" tree "," tree ")",
// whitespace-insensitive. parse_oracle throws std::invalid_argument on
// malformed input (including unequal subtree depths).
OracleTree parse_oracle(const std::string& text);
std::string oracle_to_string(const OracleTree& t);

} // namespace sqir
