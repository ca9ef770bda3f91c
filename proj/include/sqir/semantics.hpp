// SPDX-License-Identifier: Apache-2.0
//
// The three executable semantics of SQIR programs over a dim-qubit register:
//
//   denote_unitary    the 2^dim x 2^dim matrix a unitary program computes,
//                     with the zero matrix standing in for ill-typed terms
//   eval_density      superoperator action on density matrices; measurement
//                     acts by projector conjugation, reset forces |0>
//   enumerate_outcomes  branch-per-measurement-outcome evaluation carrying
//                     unnormalized state vectors
//
// plus a statevector fast path (apply_unitary) that applies gates without
// materializing the full matrix, and the fixed-dimension equivalence check.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqir/ir.hpp"
#include "sqir/linalg.hpp"

namespace sqir {

// Branches of norm at most this are semantically nonexistent, as opposed to
// floating-point dust; distinct from the comparison tolerance on purpose.
inline constexpr double kPruneThreshold = 1e-12;

// The fixed gate set as matrices: H, X, Y, Z are the usual 2x2 gates,
// R(phi) = diag(1, e^{i phi}) (so R(0) = I and R(pi) = Z), and CNOT is the
// 4x4 matrix |1><1| (x) X + |0><0| (x) I with the control as the left
// (more significant) factor. Throws std::invalid_argument for a non-finite
// R phase.
ComplexMatrix gate_matrix(const GateKind& gate);

// The dim-qubit unitary of one gate application. Well-typed single-qubit
// applications pad the gate matrix at its qubit; CNOT c t is the projector
// sum P0 + P1 * X_t with P0 = pad(|0><0|, c, dim), P1 = pad(|1><1|, c, dim),
// X_t = pad(X, t, dim), valid for any distinct c, t in either order.
// Ill-typed applications denote the all-zero matrix.
ComplexMatrix ueval(const GateKind& gate, const std::vector<std::size_t>& args,
                    std::size_t dim);

// skip denotes I_{2^dim}; P1; P2 denotes [[P2]] x [[P1]] (right operand
// applied second); applications denote ueval. Any ill-typed subterm
// collapses the whole denotation to the exact zero matrix.
ComplexMatrix denote_unitary(const UnitaryProgram& c, std::size_t dim);

// denote_unitary(c, dim) * psi computed gate-by-gate on the state vector,
// so it scales to registers far beyond what the dense matrix allows.
// psi must be 2^dim x 1. Ill-typed programs yield the zero vector, matching
// the matrix route exactly.
ComplexMatrix apply_unitary(const UnitaryProgram& c, std::size_t dim,
                            const ComplexMatrix& psi);

// Density-matrix semantics. rho must be 2^dim x 2^dim.
//   skip:    rho
//   P1; P2:  composition, left operand first
//   app:     U rho U^dagger (zero matrix if ill-typed)
//   meas q:  |0>_q<0| rho |0>_q<0| + |1>_q<1| rho |1>_q<1|
//   reset q: |0>_q<0| rho |0>_q<0| + |0>_q<1| rho |1>_q<0|
ComplexMatrix eval_density(const Program& p, std::size_t dim,
                           const ComplexMatrix& rho);

// One leaf of the non-deterministic semantics: the measurement record in
// execution order and the unnormalized state that survives it. Outcomes are
// never rescaled, so weights carry the path probability (for a normalized
// input the weights over all branches sum to 1).
struct OutcomeBranch {
    std::vector<std::pair<std::size_t, int>> record;
    ComplexMatrix state;
    double weight = 0.0; // squared norm of state
};

// Raised where the executable surface refuses to run an ill-typed program
// (the zero-matrix convention would silently kill every branch).
class TypeCheckError : public std::runtime_error {
public:
    TypeCheckError(std::string message, std::vector<TypeError> errors)
        : std::runtime_error(std::move(message)), errors_(std::move(errors)) {}
    const std::vector<TypeError>& errors() const { return errors_; }

private:
    std::vector<TypeError> errors_;
};

// Depth-first enumeration of measurement outcomes starting from psi
// (2^dim x 1). meas q spawns the bit-0 projection before the bit-1
// projection; reset q spawns the same two projections but routes the bit-1
// branch through |0>_q<1|, forcing the qubit to |0>. Branches of norm at
// most prune_threshold are dropped. Throws TypeCheckError if the program is
// ill-typed at dim.
std::vector<OutcomeBranch> enumerate_outcomes(const Program& p, std::size_t dim,
                                              const ComplexMatrix& psi,
                                              double prune_threshold = kPruneThreshold);

// Semantic equivalence at one fixed register size:
// approx_equal(denote_unitary(c1, dim), denote_unitary(c2, dim), tol).
bool uc_equiv_at(const UnitaryProgram& c1, const UnitaryProgram& c2,
                 std::size_t dim, double tol = kDefaultTolerance);

// Same, at the smallest register both programs fit in.
bool uc_equiv(const UnitaryProgram& c1, const UnitaryProgram& c2,
              double tol = kDefaultTolerance);

} // namespace sqir
