// SPDX-License-Identifier: Apache-2.0

#include "sqir/programs.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "sqir/semantics.hpp"

namespace sqir {

UnitaryProgram superdense(int b1, int b2) {
    UnitaryProgram bell =
        UnitaryProgram::seq(UnitaryProgram::h(0), UnitaryProgram::cnot(0, 1));
    UnitaryProgram encode = UnitaryProgram::seq(
        b2 != 0 ? UnitaryProgram::x(0) : UnitaryProgram::skip(),
        b1 != 0 ? UnitaryProgram::z(0) : UnitaryProgram::skip());
    UnitaryProgram decode =
        UnitaryProgram::seq(UnitaryProgram::cnot(0, 1), UnitaryProgram::h(0));
    return UnitaryProgram::seq(
        UnitaryProgram::seq(std::move(bell), std::move(encode)),
        std::move(decode));
}

UnitaryProgram ghz_circuit(std::size_t n) {
    if (n == 0) {
        return UnitaryProgram::skip();
    }
    if (n == 1) {
        return UnitaryProgram::h(0);
    }
    return UnitaryProgram::seq(ghz_circuit(n - 1),
                               UnitaryProgram::cnot(n - 2, n - 1));
}

ComplexMatrix ghz_state(std::size_t n) {
    if (n == 0) {
        return ComplexMatrix::identity(1);
    }
    const Complex half(1.0 / std::sqrt(2.0), 0.0);
    return half * basis_ket(std::vector<int>(n, 0)) +
           half * basis_ket(std::vector<int>(n, 1));
}

Program teleport_program() {
    Program bell = sequence(
        {Program::app(GateKind::h(), {1}), Program::app(GateKind::cnot(), {1, 2})});
    Program alice = sequence({Program::app(GateKind::cnot(), {0, 1}),
                              Program::app(GateKind::h(), {0}), Program::meas(0),
                              Program::meas(1)});
    Program bob = sequence({Program::app(GateKind::cnot(), {1, 2}),
                            to_program(cz_macro(0, 2)), Program::reset(0),
                            Program::reset(1)});
    return Program::seq(Program::seq(std::move(bell), std::move(alice)),
                        std::move(bob));
}

UnitaryProgram cpar(std::size_t n,
                    const std::function<UnitaryProgram(std::size_t)>& g) {
    if (n == 0) {
        return UnitaryProgram::skip();
    }
    return UnitaryProgram::seq(cpar(n - 1, g), g(n - 1));
}

// --- Oracles ----------------------------------------------------------------

struct OracleTree::Impl {
    // depth 0: leaf (x_leaf tells which); otherwise an internal node.
    std::size_t depth = 0;
    bool x_leaf = false;
    std::shared_ptr<const Impl> b0;
    std::shared_ptr<const Impl> b1;
};

OracleTree OracleTree::leaf_i() {
    return OracleTree(std::make_shared<const Impl>());
}

OracleTree OracleTree::leaf_x() {
    auto impl = std::make_shared<Impl>();
    impl->x_leaf = true;
    return OracleTree(std::move(impl));
}

OracleTree OracleTree::node(OracleTree f0, OracleTree f1) {
    if (f0.depth() != f1.depth()) {
        throw std::invalid_argument("OracleTree: subtrees must have equal depth");
    }
    auto impl = std::make_shared<Impl>();
    impl->depth = f0.depth() + 1;
    impl->b0 = f0.impl_;
    impl->b1 = f1.impl_;
    return OracleTree(std::move(impl));
}

std::size_t OracleTree::depth() const { return impl_->depth; }
bool OracleTree::is_leaf() const { return impl_->depth == 0; }
bool OracleTree::leaf_is_x() const { return impl_->x_leaf; }
OracleTree OracleTree::branch0() const { return OracleTree(impl_->b0); }
OracleTree OracleTree::branch1() const { return OracleTree(impl_->b1); }

ComplexMatrix oracle_matrix(const OracleTree& t) {
    if (t.is_leaf()) {
        return t.leaf_is_x() ? gate_matrix(GateKind::x())
                             : ComplexMatrix::identity(2);
    }
    ComplexMatrix p0(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1(2, 2);
    p1(1, 1) = 1.0;
    return kron(oracle_matrix(t.branch0()), p0) +
           kron(oracle_matrix(t.branch1()), p1);
}

std::size_t oracle_count(const OracleTree& t) {
    if (t.is_leaf()) {
        return t.leaf_is_x() ? 1 : 0;
    }
    return oracle_count(t.branch0()) + oracle_count(t.branch1());
}

OracleClass classify_oracle(const OracleTree& t) {
    const std::size_t dim = t.depth();
    const std::size_t count = oracle_count(t);
    if (count == 0 || count == (std::size_t{1} << dim)) {
        return OracleClass::Constant;
    }
    if (dim >= 1 && count == (std::size_t{1} << (dim - 1))) {
        return OracleClass::Balanced;
    }
    return OracleClass::Neither;
}

const char* oracle_class_name(OracleClass c) {
    switch (c) {
    case OracleClass::Balanced:
        return "balanced";
    case OracleClass::Constant:
        return "constant";
    case OracleClass::Neither:
        return "neither";
    }
    return "?";
}

ComplexMatrix deutsch_jozsa_matrix(const OracleTree& t) {
    const std::size_t n = 1 + t.depth();
    const ComplexMatrix hadamards = denote_unitary(
        cpar(n, [](std::size_t q) { return UnitaryProgram::h(q); }), n);
    const ComplexMatrix x0 = ueval(GateKind::x(), {0}, n);
    // [[X 0; H*; U; H*]] composes right-to-left.
    return hadamards * oracle_matrix(t) * hadamards * x0;
}

DJReport dj_report(const OracleTree& t) {
    DJReport report;
    report.dim = t.depth();
    report.count = oracle_count(t);
    report.classification = classify_oracle(t);

    const ComplexMatrix dj = deutsch_jozsa_matrix(t);
    const std::size_t half = std::size_t{1} << report.dim;

    // Column 0 is DJ |0^(1+dim)>; row 2^dim is <1,0^dim|.
    const Complex simulated = dj(half, 0);
    const double closed_form =
        1.0 - 2.0 * static_cast<double>(report.count) / static_cast<double>(half);
    if (std::abs(simulated - Complex(closed_form, 0.0)) > 1e-9) {
        throw std::logic_error(
            "dj_report: simulated amplitude disagrees with 1 - 2*count/2^dim");
    }
    report.amplitude = simulated.real();

    // Project the output onto I (x) |0><0|^(x)dim: only the components with
    // an all-zero input register survive, i.e. indices 0 and 2^dim.
    report.accept_probability =
        std::norm(dj(0, 0)) + std::norm(dj(half, 0));
    return report;
}

// --- Oracle text form -------------------------------------------------------

namespace {

struct OracleParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("oracle syntax error at offset " +
                                    std::to_string(pos) + ": " + what);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos;
    }

    OracleTree parse_tree() {
        skip_ws();
        if (pos >= text.size()) {
            fail("unexpected end of input");
        }
        const char c = text[pos];
        if (c == 'I') {
            ++pos;
            return OracleTree::leaf_i();
        }
        if (c == 'X') {
            ++pos;
            return OracleTree::leaf_x();
        }
        if (c == '(') {
            ++pos;
            OracleTree f0 = parse_tree();
            expect(',');
            OracleTree f1 = parse_tree();
            expect(')');
            return OracleTree::node(std::move(f0), std::move(f1));
        }
        fail("expected 'I', 'X' or '('");
    }
};

} // namespace

OracleTree parse_oracle(const std::string& text) {
    OracleParser parser{text};
    OracleTree t = parser.parse_tree();
    parser.skip_ws();
    if (parser.pos != text.size()) {
        parser.fail("trailing input");
    }
    return t;
}

std::string oracle_to_string(const OracleTree& t) {
    if (t.is_leaf()) {
        return t.leaf_is_x() ? "X" : "I";
    }
    return "(" + oracle_to_string(t.branch0()) + "," +
           oracle_to_string(t.branch1()) + ")";
}

} // namespace sqir
