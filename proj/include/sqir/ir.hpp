// SPDX-License-Identifier: Apache-2.0
//
// The SQIR abstract syntax: the unitary fragment (skip, sequence, gate
// application), the full language (plus measure and reset), the
// well-typedness check, and structural operations over program trees.
//
// Programs address qubits by index into a global register of size dim.
// Qubit 0 is the leftmost (most significant) tensor factor throughout.
// Trees are immutable values; sequencing is a binary node, and children are
// shared, so copies are cheap.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace sqir {

enum class GateId { H, X, Y, Z, R, Cnot };

// A gate together with its static metadata: arity is fixed by the gate
// (1 for H/X/Y/Z/R, 2 for CNOT); R carries its phase in radians.
struct GateKind {
    GateId id = GateId::H;
    double phase = 0.0; // meaningful for R only

    static GateKind h() { return {GateId::H, 0.0}; }
    static GateKind x() { return {GateId::X, 0.0}; }
    static GateKind y() { return {GateId::Y, 0.0}; }
    static GateKind z() { return {GateId::Z, 0.0}; }
    static GateKind r(double phi) { return {GateId::R, phi}; }
    static GateKind cnot() { return {GateId::Cnot, 0.0}; }

    std::size_t arity() const { return id == GateId::Cnot ? 2 : 1; }
    const char* name() const;

    friend bool operator==(const GateKind& a, const GateKind& b) {
        return a.id == b.id && (a.id != GateId::R || a.phase == b.phase);
    }
};

// Unitary fragment: skip | seq | gate application. Argument lists are stored
// as written; validity (arity, bounds, no duplicates) is checked separately
// by well_typed.
class UnitaryProgram {
public:
    struct Skip {};
    struct Seq {
        std::shared_ptr<const UnitaryProgram> left;
        std::shared_ptr<const UnitaryProgram> right;
    };
    struct App {
        GateKind gate;
        std::vector<std::size_t> args;
    };
    using Node = std::variant<Skip, Seq, App>;

    UnitaryProgram() : node_(Skip{}) {}

    static UnitaryProgram skip() { return UnitaryProgram(); }
    static UnitaryProgram seq(UnitaryProgram left, UnitaryProgram right);
    static UnitaryProgram app(GateKind gate, std::vector<std::size_t> args);

    static UnitaryProgram h(std::size_t q) { return app(GateKind::h(), {q}); }
    static UnitaryProgram x(std::size_t q) { return app(GateKind::x(), {q}); }
    static UnitaryProgram y(std::size_t q) { return app(GateKind::y(), {q}); }
    static UnitaryProgram z(std::size_t q) { return app(GateKind::z(), {q}); }
    static UnitaryProgram r(double phi, std::size_t q) {
        return app(GateKind::r(phi), {q});
    }
    static UnitaryProgram cnot(std::size_t control, std::size_t target) {
        return app(GateKind::cnot(), {control, target});
    }

    const Node& node() const { return node_; }
    bool is_skip() const { return std::holds_alternative<Skip>(node_); }
    bool is_seq() const { return std::holds_alternative<Seq>(node_); }
    bool is_app() const { return std::holds_alternative<App>(node_); }
    const App* as_app() const { return std::get_if<App>(&node_); }
    const Seq* as_seq() const { return std::get_if<Seq>(&node_); }

    friend bool operator==(const UnitaryProgram& a, const UnitaryProgram& b);

private:
    Node node_;
};

// Full language: the unitary fragment plus meas and reset, which take
// exactly one qubit. meas q measures a qubit; reset q measures a qubit and
// restores it to |0>.
class Program {
public:
    struct Skip {};
    struct Seq {
        std::shared_ptr<const Program> left;
        std::shared_ptr<const Program> right;
    };
    struct App {
        GateKind gate;
        std::vector<std::size_t> args;
    };
    struct Meas {
        std::size_t q;
    };
    struct Reset {
        std::size_t q;
    };
    using Node = std::variant<Skip, Seq, App, Meas, Reset>;

    Program() : node_(Skip{}) {}

    static Program skip() { return Program(); }
    static Program seq(Program left, Program right);
    static Program app(GateKind gate, std::vector<std::size_t> args);
    static Program meas(std::size_t q);
    static Program reset(std::size_t q);

    const Node& node() const { return node_; }
    bool is_skip() const { return std::holds_alternative<Skip>(node_); }
    bool is_seq() const { return std::holds_alternative<Seq>(node_); }
    bool is_app() const { return std::holds_alternative<App>(node_); }
    const App* as_app() const { return std::get_if<App>(&node_); }
    const Seq* as_seq() const { return std::get_if<Seq>(&node_); }

    friend bool operator==(const Program& a, const Program& b);

private:
    Node node_;
};

// Embed the unitary fragment into the full language.
Program to_program(const UnitaryProgram& c);

// --- Well-typedness -------------------------------------------------------

enum class TypeErrorCause { ArityMismatch, IndexOutOfBounds, DuplicateArgument };

// Location of an offending node: the sequence of left/right descents from
// the root. One TypeError names exactly one violated clause, so a single
// application can produce several.
struct TypeError {
    enum class Step { Left, Right };
    std::vector<Step> path;
    TypeErrorCause cause;

    std::string to_string() const;
};

// Empty result means well-typed: every gate application has matching arity,
// in-bounds indices, and pairwise-distinct arguments (no-cloning); meas and
// reset need their index in bounds. Errors come back in left-to-right
// program order.
std::vector<TypeError> well_typed(const UnitaryProgram& c, std::size_t dim);
std::vector<TypeError> well_typed(const Program& p, std::size_t dim);

// The single-application check used by the semantics (arity, bounds,
// distinctness); matches well_typed on an App leaf.
bool app_is_well_typed(const GateKind& gate, const std::vector<std::size_t>& args,
                       std::size_t dim);

// --- Structural operations ------------------------------------------------

// Number of leaves; skip and app both count 1.
std::size_t count_ops(const UnitaryProgram& c);

// True iff no skip node occurs anywhere in the tree.
bool is_skip_free(const UnitaryProgram& c);

// Left-to-right leaf list (each element is a skip or app leaf). Re-nesting
// the list with sequence() yields a program with the same denotation.
std::vector<UnitaryProgram> flatten(const UnitaryProgram& c);
std::vector<Program> flatten(const Program& p);

// Right-nested sequence of the given leaves; empty list gives skip.
UnitaryProgram sequence(const std::vector<UnitaryProgram>& instructions);
Program sequence(const std::vector<Program>& instructions);

// Replace every argument index q by f(q), keeping structure. Injectivity of
// f on the used indices is required only to preserve well-typedness; any
// f is accepted and ill-typed outputs are caught by well_typed.
UnitaryProgram map_qubits(const std::function<std::size_t(std::size_t)>& f,
                          const UnitaryProgram& c);
Program map_qubits(const std::function<std::size_t(std::size_t)>& f,
                   const Program& p);

// c1 in parallel with c2: c1 ; (c2 shifted up by d1). When c1 is well-typed
// at d1, the denotation at d1+d2 is the Kronecker product of the parts.
UnitaryProgram in_par(const UnitaryProgram& c1, const UnitaryProgram& c2,
                      std::size_t d1);

// SWAP as the three-CNOT macro: CNOT a b; CNOT b a; CNOT a b.
// Ill-typed when a == b.
UnitaryProgram swap_macro(std::size_t a, std::size_t b);

// Controlled-Z from the fixed gate set: H t; CNOT c t; H t. Denotes
// diag(1,1,1,-1) on the (c,t) subspace; symmetric in its arguments.
UnitaryProgram cz_macro(std::size_t c, std::size_t t);

// 1 + the largest qubit index used anywhere (0 if no qubits are used);
// the smallest register a program fits in.
std::size_t min_register_size(const UnitaryProgram& c);
std::size_t min_register_size(const Program& p);

} // namespace sqir
