// SPDX-License-Identifier: Apache-2.0
//
// Shared test support: independent reference implementations (bit-level
// permutation simulation, truth-table oracles, dense projector-based outcome
// enumeration) and random generators for programs, states and densities.
// Everything here stays independent of the code paths it is used to check:
// reference results come from basis-state bookkeeping or the textbook
// formulas, not from the library's evaluators.

#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "sqir/ir.hpp"
#include "sqir/linalg.hpp"
#include "sqir/programs.hpp"
#include "sqir/semantics.hpp"

namespace sqir::testing {

inline ComplexMatrix kron_power(const ComplexMatrix& m, std::size_t n) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t i = 0; i < n; ++i) {
        out = kron(out, m);
    }
    return out;
}

// --- Bit-level permutation oracle ------------------------------------------
//
// X and CNOT permute basis states; running them as classical bit flips gives
// an expected output state with no linear algebra involved.

inline std::vector<int> apply_xcnot_to_bits(const UnitaryProgram& p,
                                            std::vector<int> bits) {
    for (const UnitaryProgram& leaf : flatten(p)) {
        const auto* app = leaf.as_app();
        if (app == nullptr) {
            continue;
        }
        if (app->gate.id == GateId::X) {
            bits.at(app->args.at(0)) ^= 1;
        } else if (app->gate.id == GateId::Cnot) {
            if (bits.at(app->args.at(0)) == 1) {
                bits.at(app->args.at(1)) ^= 1;
            }
        } else {
            throw std::logic_error("apply_xcnot_to_bits: non-permutation gate");
        }
    }
    return bits;
}

// --- Truth-table oracles -----------------------------------------------------
//
// An oracle tree of depth n encodes f : {0,1}^n -> {0,1}; an internal node
// dispatches on the last input bit. U_f maps |y,x> to |y xor f(x), x>, which
// is a permutation matrix we can build directly from the truth table.

inline int eval_oracle_tree(const OracleTree& t, const std::vector<int>& bits) {
    if (t.is_leaf()) {
        return t.leaf_is_x() ? 1 : 0;
    }
    std::vector<int> rest(bits.begin(), bits.end() - 1);
    return bits.back() == 0 ? eval_oracle_tree(t.branch0(), rest)
                            : eval_oracle_tree(t.branch1(), rest);
}

inline std::vector<int> oracle_truth_table(const OracleTree& t) {
    const std::size_t n = t.depth();
    std::vector<int> table(std::size_t{1} << n);
    for (std::size_t x = 0; x < table.size(); ++x) {
        std::vector<int> bits(n);
        for (std::size_t k = 0; k < n; ++k) {
            bits[k] = static_cast<int>((x >> (n - 1 - k)) & 1);
        }
        table[x] = eval_oracle_tree(t, bits);
    }
    return table;
}

// The 2^(1+n) permutation matrix of U_f built straight from the table:
// basis index y*2^n + x maps to (y xor f(x))*2^n + x.
inline ComplexMatrix oracle_matrix_from_table(const std::vector<int>& table) {
    const std::size_t half = table.size();
    ComplexMatrix u(2 * half, 2 * half);
    for (std::size_t y = 0; y <= 1; ++y) {
        for (std::size_t x = 0; x < half; ++x) {
            const std::size_t j = y * half + x;
            const std::size_t i =
                (y ^ static_cast<std::size_t>(table[x])) * half + x;
            u(i, j) = Complex(1.0, 0.0);
        }
    }
    return u;
}

// --- Qubit-relabeling permutation matrix -------------------------------------

// P |b_0 ... b_{dim-1}> = |b'> with b'_{perm[q]} = b_q (qubit 0 is the most
// significant index bit).
inline ComplexMatrix qubit_permutation_matrix(const std::vector<std::size_t>& perm,
                                              std::size_t dim) {
    const std::size_t n = std::size_t{1} << dim;
    ComplexMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = 0;
        for (std::size_t q = 0; q < dim; ++q) {
            const std::size_t bit = (j >> (dim - 1 - q)) & 1;
            i |= bit << (dim - 1 - perm[q]);
        }
        p(i, j) = Complex(1.0, 0.0);
    }
    return p;
}

// --- Dense reference enumeration ---------------------------------------------
//
// The textbook route: projectors padded to the full register, applied as
// dense matrices. Used to cross-check the statevector implementation.

struct RefBranch {
    std::vector<std::pair<std::size_t, int>> record;
    ComplexMatrix state;
};

inline ComplexMatrix projector_at(int bra, int ket, std::size_t q,
                                  std::size_t dim) {
    ComplexMatrix m(2, 2);
    m(static_cast<std::size_t>(bra), static_cast<std::size_t>(ket)) =
        Complex(1.0, 0.0);
    return pad(m, q, dim);
}

inline void ref_enumerate_rec(const std::vector<Program>& leaves, std::size_t i,
                              std::size_t dim, ComplexMatrix psi,
                              std::vector<std::pair<std::size_t, int>>& record,
                              std::vector<RefBranch>& out) {
    for (; i < leaves.size(); ++i) {
        const Program& leaf = leaves[i];
        if (const auto* app = leaf.as_app()) {
            psi = ueval(app->gate, app->args, dim) * psi;
        } else if (const auto* meas = std::get_if<Program::Meas>(&leaf.node())) {
            for (int bit = 0; bit <= 1; ++bit) {
                ComplexMatrix branch = projector_at(bit, bit, meas->q, dim) * psi;
                if (norm(branch) <= 1e-12) {
                    continue;
                }
                record.emplace_back(meas->q, bit);
                ref_enumerate_rec(leaves, i + 1, dim, std::move(branch), record, out);
                record.pop_back();
            }
            return;
        } else if (const auto* reset = std::get_if<Program::Reset>(&leaf.node())) {
            for (int bit = 0; bit <= 1; ++bit) {
                ComplexMatrix branch = projector_at(0, bit, reset->q, dim) * psi;
                if (norm(branch) <= 1e-12) {
                    continue;
                }
                record.emplace_back(reset->q, bit);
                ref_enumerate_rec(leaves, i + 1, dim, std::move(branch), record, out);
                record.pop_back();
            }
            return;
        }
    }
    out.push_back({record, std::move(psi)});
}

inline std::vector<RefBranch> ref_enumerate(const Program& p, std::size_t dim,
                                            const ComplexMatrix& psi) {
    std::vector<RefBranch> out;
    std::vector<std::pair<std::size_t, int>> record;
    ref_enumerate_rec(flatten(p), 0, dim, psi, record, out);
    return out;
}

// --- Random generators -------------------------------------------------------

using Rng = std::mt19937_64;

inline double random_phase(Rng& rng) {
    return std::uniform_real_distribution<double>(-3.2, 3.2)(rng);
}

inline UnitaryProgram random_gate_leaf(Rng& rng, std::size_t dim) {
    std::uniform_int_distribution<int> pick(0, dim >= 2 ? 5 : 4);
    std::uniform_int_distribution<std::size_t> qubit(0, dim - 1);
    switch (pick(rng)) {
    case 0:
        return UnitaryProgram::h(qubit(rng));
    case 1:
        return UnitaryProgram::x(qubit(rng));
    case 2:
        return UnitaryProgram::y(qubit(rng));
    case 3:
        return UnitaryProgram::z(qubit(rng));
    case 4:
        return UnitaryProgram::r(random_phase(rng), qubit(rng));
    default: {
        const std::size_t c = qubit(rng);
        std::size_t t = qubit(rng);
        while (t == c) {
            t = qubit(rng);
        }
        return UnitaryProgram::cnot(c, t);
    }
    }
}

// Random binary nesting over a leaf list, to exercise associativity.
inline UnitaryProgram nest_randomly(Rng& rng,
                                    const std::vector<UnitaryProgram>& leaves,
                                    std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        return leaves[lo];
    }
    std::uniform_int_distribution<std::size_t> split(lo + 1, hi - 1);
    const std::size_t mid = split(rng);
    return UnitaryProgram::seq(nest_randomly(rng, leaves, lo, mid),
                               nest_randomly(rng, leaves, mid, hi));
}

inline UnitaryProgram random_unitary_program(Rng& rng, std::size_t dim,
                                             std::size_t max_gates,
                                             bool allow_skip = true) {
    if (dim == 0 || max_gates == 0) {
        return UnitaryProgram::skip();
    }
    std::uniform_int_distribution<std::size_t> count(1, max_gates);
    std::uniform_int_distribution<int> skip_roll(0, 7);
    std::vector<UnitaryProgram> leaves;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (allow_skip && skip_roll(rng) == 0) {
            leaves.push_back(UnitaryProgram::skip());
        } else {
            leaves.push_back(random_gate_leaf(rng, dim));
        }
    }
    return nest_randomly(rng, leaves, 0, leaves.size());
}

// General programs add meas/reset leaves.
inline Program random_general_program(Rng& rng, std::size_t dim,
                                      std::size_t max_ops) {
    std::uniform_int_distribution<std::size_t> count(1, max_ops);
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<std::size_t> qubit(0, dim - 1);
    std::vector<Program> leaves;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = kind(rng);
        if (k == 0) {
            leaves.push_back(Program::skip());
        } else if (k == 1) {
            leaves.push_back(Program::meas(qubit(rng)));
        } else if (k == 2) {
            leaves.push_back(Program::reset(qubit(rng)));
        } else {
            const UnitaryProgram g = random_gate_leaf(rng, dim);
            const auto* app = g.as_app();
            leaves.push_back(Program::app(app->gate, app->args));
        }
    }
    return sequence(leaves);
}

// Injects one deliberate violation into an otherwise well-typed program.
inline UnitaryProgram make_ill_typed(Rng& rng, std::size_t dim,
                                     std::size_t max_gates) {
    std::vector<UnitaryProgram> leaves =
        flatten(random_unitary_program(rng, dim, max_gates));
    std::uniform_int_distribution<int> which(0, 3);
    std::uniform_int_distribution<std::size_t> qubit(0, dim - 1);
    UnitaryProgram bad = UnitaryProgram::skip();
    switch (which(rng)) {
    case 0: // out of bounds
        bad = UnitaryProgram::h(dim + qubit(rng));
        break;
    case 1: { // duplicate argument
        const std::size_t q = qubit(rng);
        bad = UnitaryProgram::app(GateKind::cnot(), {q, q});
        break;
    }
    case 2: // arity: CNOT with one argument
        bad = UnitaryProgram::app(GateKind::cnot(), {qubit(rng)});
        break;
    default: // arity: H with two arguments
        bad = UnitaryProgram::app(GateKind::h(), {qubit(rng), qubit(rng)});
        break;
    }
    std::uniform_int_distribution<std::size_t> where(0, leaves.size());
    leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(where(rng)), bad);
    return sequence(leaves);
}

inline ComplexMatrix random_state(Rng& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix psi(std::size_t{1} << dim, 1);
    for (Complex& a : psi.entries()) {
        a = Complex(gauss(rng), gauss(rng));
    }
    return Complex(1.0 / norm(psi), 0.0) * psi;
}

// A A^dagger normalized to unit trace: positive semidefinite, trace 1.
inline ComplexMatrix random_density(Rng& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = std::size_t{1} << dim;
    ComplexMatrix a(n, n);
    for (Complex& e : a.entries()) {
        e = Complex(gauss(rng), gauss(rng));
    }
    ComplexMatrix rho = a * adjoint(a);
    return Complex(1.0 / trace(rho).real(), 0.0) * rho;
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Complex& e : m.entries()) {
        e = Complex(coef(rng), coef(rng));
    }
    return m;
}

// Exhaustive oracle-tree space at a fixed depth (2^(2^depth) trees).
inline std::vector<OracleTree> all_oracle_trees(std::size_t depth) {
    if (depth == 0) {
        return {OracleTree::leaf_i(), OracleTree::leaf_x()};
    }
    const std::vector<OracleTree> sub = all_oracle_trees(depth - 1);
    std::vector<OracleTree> out;
    out.reserve(sub.size() * sub.size());
    for (const OracleTree& f0 : sub) {
        for (const OracleTree& f1 : sub) {
            out.push_back(OracleTree::node(f0, f1));
        }
    }
    return out;
}

inline OracleTree random_oracle_tree(Rng& rng, std::size_t depth) {
    if (depth == 0) {
        return std::uniform_int_distribution<int>(0, 1)(rng) == 0
                   ? OracleTree::leaf_i()
                   : OracleTree::leaf_x();
    }
    OracleTree f0 = random_oracle_tree(rng, depth - 1);
    OracleTree f1 = random_oracle_tree(rng, depth - 1);
    return OracleTree::node(std::move(f0), std::move(f1));
}

} // namespace sqir::testing
