// SPDX-License-Identifier: Apache-2.0

#include "sqir/semantics.hpp"

#include <cmath>
#include <utility>

namespace sqir {

namespace {

ComplexMatrix ket_bra(int i, int j) {
    ComplexMatrix m(2, 2);
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Complex(1.0, 0.0);
    return m;
}

std::size_t space_dim(std::size_t dim) {
    return std::size_t{1} << dim;
}

void require_state_shape(const ComplexMatrix& psi, std::size_t dim,
                         const char* who) {
    if (psi.rows() != space_dim(dim) || psi.cols() != 1) {
        throw std::invalid_argument(std::string(who) +
                                    ": state must be a 2^dim x 1 column vector");
    }
}

} // namespace

ComplexMatrix gate_matrix(const GateKind& gate) {
    switch (gate.id) {
    case GateId::H: {
        const double s = 1.0 / std::sqrt(2.0);
        ComplexMatrix m(2, 2);
        m(0, 0) = s;
        m(0, 1) = s;
        m(1, 0) = s;
        m(1, 1) = -s;
        return m;
    }
    case GateId::X:
        return ket_bra(0, 1) + ket_bra(1, 0);
    case GateId::Y: {
        ComplexMatrix m(2, 2);
        m(0, 1) = Complex(0.0, -1.0);
        m(1, 0) = Complex(0.0, 1.0);
        return m;
    }
    case GateId::Z: {
        ComplexMatrix m(2, 2);
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        return m;
    }
    case GateId::R: {
        if (!std::isfinite(gate.phase)) {
            throw std::invalid_argument("gate_matrix: non-finite phase");
        }
        ComplexMatrix m(2, 2);
        m(0, 0) = 1.0;
        m(1, 1) = std::polar(1.0, gate.phase);
        return m;
    }
    case GateId::Cnot:
        return kron(ket_bra(1, 1), gate_matrix(GateKind::x())) +
               kron(ket_bra(0, 0), ComplexMatrix::identity(2));
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

ComplexMatrix ueval(const GateKind& gate, const std::vector<std::size_t>& args,
                    std::size_t dim) {
    if (!app_is_well_typed(gate, args, dim)) {
        return ComplexMatrix::zero(space_dim(dim), space_dim(dim));
    }
    if (gate.id == GateId::Cnot) {
        const std::size_t c = args[0];
        const std::size_t t = args[1];
        const ComplexMatrix p0 = pad(ket_bra(0, 0), c, dim);
        const ComplexMatrix p1 = pad(ket_bra(1, 1), c, dim);
        const ComplexMatrix xt = pad(gate_matrix(GateKind::x()), t, dim);
        return p0 + p1 * xt;
    }
    return pad(gate_matrix(gate), args[0], dim);
}

ComplexMatrix denote_unitary(const UnitaryProgram& c, std::size_t dim) {
    if (const auto* seq = c.as_seq()) {
        return denote_unitary(*seq->right, dim) * denote_unitary(*seq->left, dim);
    }
    if (const auto* app = c.as_app()) {
        return ueval(app->gate, app->args, dim);
    }
    return ComplexMatrix::identity(space_dim(dim));
}

// --- Statevector kernels ----------------------------------------------------
//
// Qubit 0 is the most significant bit of the basis index, so qubit q maps to
// bit position dim-1-q.

namespace {

std::size_t qubit_mask(std::size_t q, std::size_t dim) {
    return std::size_t{1} << (dim - 1 - q);
}

void apply_single_qubit(std::vector<Complex>& amps, const ComplexMatrix& m,
                        std::size_t q, std::size_t dim) {
    const std::size_t mask = qubit_mask(q, dim);
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            const std::size_t j = i | mask;
            const Complex a = amps[i];
            const Complex b = amps[j];
            amps[i] = m00 * a + m01 * b;
            amps[j] = m10 * a + m11 * b;
        }
    }
}

void apply_cnot(std::vector<Complex>& amps, std::size_t c, std::size_t t,
                std::size_t dim) {
    const std::size_t cmask = qubit_mask(c, dim);
    const std::size_t tmask = qubit_mask(t, dim);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

// Applies one well-typed gate application in place.
void apply_app(std::vector<Complex>& amps, const GateKind& gate,
               const std::vector<std::size_t>& args, std::size_t dim) {
    if (gate.id == GateId::Cnot) {
        apply_cnot(amps, args[0], args[1], dim);
    } else {
        apply_single_qubit(amps, gate_matrix(gate), args[0], dim);
    }
}

// Projector |b>_q<b| applied to the amplitudes.
void project_qubit(std::vector<Complex>& amps, std::size_t q, int bit,
                   std::size_t dim) {
    const std::size_t mask = qubit_mask(q, dim);
    const std::size_t want = bit == 1 ? mask : 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) != want) {
            amps[i] = Complex(0.0, 0.0);
        }
    }
}

// |0>_q<1|: moves the qubit-1 component onto qubit 0 and kills the rest.
void reset_from_one(std::vector<Complex>& amps, std::size_t q, std::size_t dim) {
    const std::size_t mask = qubit_mask(q, dim);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            amps[i] = amps[i | mask];
            amps[i | mask] = Complex(0.0, 0.0);
        }
    }
}

double squared_norm(const std::vector<Complex>& amps) {
    double sum = 0.0;
    for (const Complex& a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

ComplexMatrix column_from(std::vector<Complex> amps) {
    ComplexMatrix out(amps.size(), 1);
    out.entries() = std::move(amps);
    return out;
}

} // namespace

ComplexMatrix apply_unitary(const UnitaryProgram& c, std::size_t dim,
                            const ComplexMatrix& psi) {
    require_state_shape(psi, dim, "apply_unitary");
    std::vector<Complex> amps = psi.entries();
    for (const UnitaryProgram& leaf : flatten(c)) {
        if (const auto* app = leaf.as_app()) {
            if (!app_is_well_typed(app->gate, app->args, dim)) {
                return ComplexMatrix::zero(space_dim(dim), 1);
            }
            apply_app(amps, app->gate, app->args, dim);
        }
    }
    return column_from(std::move(amps));
}

ComplexMatrix eval_density(const Program& p, std::size_t dim,
                           const ComplexMatrix& rho) {
    const std::size_t n = space_dim(dim);
    if (rho.rows() != n || rho.cols() != n) {
        throw std::invalid_argument("eval_density: rho must be 2^dim x 2^dim");
    }
    if (const auto* seq = p.as_seq()) {
        return eval_density(*seq->right, dim, eval_density(*seq->left, dim, rho));
    }
    if (const auto* app = p.as_app()) {
        const ComplexMatrix u = ueval(app->gate, app->args, dim);
        return u * rho * adjoint(u);
    }
    if (const auto* meas = std::get_if<Program::Meas>(&p.node())) {
        if (meas->q >= dim) {
            return ComplexMatrix::zero(n, n);
        }
        const ComplexMatrix p0 = pad(ket_bra(0, 0), meas->q, dim);
        const ComplexMatrix p1 = pad(ket_bra(1, 1), meas->q, dim);
        return p0 * rho * p0 + p1 * rho * p1;
    }
    if (const auto* reset = std::get_if<Program::Reset>(&p.node())) {
        if (reset->q >= dim) {
            return ComplexMatrix::zero(n, n);
        }
        const ComplexMatrix p0 = pad(ket_bra(0, 0), reset->q, dim);
        const ComplexMatrix m01 = pad(ket_bra(0, 1), reset->q, dim);
        return p0 * rho * adjoint(p0) + m01 * rho * adjoint(m01);
    }
    return rho; // skip
}

namespace {

struct Enumerator {
    std::vector<Program> instructions;
    std::size_t dim;
    double prune_threshold;
    std::vector<OutcomeBranch> out;
    std::vector<std::pair<std::size_t, int>> record;

    void run(std::size_t index, std::vector<Complex> amps) {
        for (std::size_t i = index; i < instructions.size(); ++i) {
            const Program& leaf = instructions[i];
            if (const auto* app = leaf.as_app()) {
                apply_app(amps, app->gate, app->args, dim);
            } else if (const auto* meas = std::get_if<Program::Meas>(&leaf.node())) {
                branch(i, meas->q, false, std::move(amps));
                return;
            } else if (const auto* reset = std::get_if<Program::Reset>(&leaf.node())) {
                branch(i, reset->q, true, std::move(amps));
                return;
            }
            // skip falls through
        }
        const double weight = squared_norm(amps);
        out.push_back({record, column_from(std::move(amps)), weight});
    }

    // Spawns the bit-0 branch before the bit-1 branch; prunes zero-norm ones.
    void branch(std::size_t i, std::size_t q, bool is_reset,
                std::vector<Complex> amps) {
        for (int bit = 0; bit <= 1; ++bit) {
            std::vector<Complex> projected = amps;
            project_qubit(projected, q, bit, dim);
            if (is_reset && bit == 1) {
                reset_from_one(projected, q, dim);
            }
            if (std::sqrt(squared_norm(projected)) <= prune_threshold) {
                continue;
            }
            record.emplace_back(q, bit);
            run(i + 1, std::move(projected));
            record.pop_back();
        }
    }
};

} // namespace

std::vector<OutcomeBranch> enumerate_outcomes(const Program& p, std::size_t dim,
                                              const ComplexMatrix& psi,
                                              double prune_threshold) {
    require_state_shape(psi, dim, "enumerate_outcomes");
    std::vector<TypeError> errors = well_typed(p, dim);
    if (!errors.empty()) {
        std::string msg = "enumerate_outcomes: program is ill-typed at dim " +
                          std::to_string(dim);
        for (const TypeError& e : errors) {
            msg += "\n  " + e.to_string();
        }
        throw TypeCheckError(std::move(msg), std::move(errors));
    }
    Enumerator enumerator{flatten(p), dim, prune_threshold, {}, {}};
    enumerator.run(0, psi.entries());
    return std::move(enumerator.out);
}

bool uc_equiv_at(const UnitaryProgram& c1, const UnitaryProgram& c2,
                 std::size_t dim, double tol) {
    return approx_equal(denote_unitary(c1, dim), denote_unitary(c2, dim), tol);
}

bool uc_equiv(const UnitaryProgram& c1, const UnitaryProgram& c2, double tol) {
    const std::size_t dim =
        std::max(min_register_size(c1), min_register_size(c2));
    return uc_equiv_at(c1, c2, dim, tol);
}

} // namespace sqir
