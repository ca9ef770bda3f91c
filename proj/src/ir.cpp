// SPDX-License-Identifier: Apache-2.0

#include "sqir/ir.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace sqir {

const char* GateKind::name() const {
    switch (id) {
    case GateId::H:
        return "h";
    case GateId::X:
        return "x";
    case GateId::Y:
        return "y";
    case GateId::Z:
        return "z";
    case GateId::R:
        return "r";
    case GateId::Cnot:
        return "cnot";
    }
    return "?";
}

UnitaryProgram UnitaryProgram::seq(UnitaryProgram left, UnitaryProgram right) {
    UnitaryProgram p;
    p.node_ = Seq{std::make_shared<const UnitaryProgram>(std::move(left)),
                  std::make_shared<const UnitaryProgram>(std::move(right))};
    return p;
}

UnitaryProgram UnitaryProgram::app(GateKind gate, std::vector<std::size_t> args) {
    UnitaryProgram p;
    p.node_ = App{gate, std::move(args)};
    return p;
}

Program Program::seq(Program left, Program right) {
    Program p;
    p.node_ = Seq{std::make_shared<const Program>(std::move(left)),
                  std::make_shared<const Program>(std::move(right))};
    return p;
}

Program Program::app(GateKind gate, std::vector<std::size_t> args) {
    Program p;
    p.node_ = App{gate, std::move(args)};
    return p;
}

Program Program::meas(std::size_t q) {
    Program p;
    p.node_ = Meas{q};
    return p;
}

Program Program::reset(std::size_t q) {
    Program p;
    p.node_ = Reset{q};
    return p;
}

bool operator==(const UnitaryProgram& a, const UnitaryProgram& b) {
    if (a.node_.index() != b.node_.index()) {
        return false;
    }
    if (const auto* app = std::get_if<UnitaryProgram::App>(&a.node_)) {
        const auto& other = std::get<UnitaryProgram::App>(b.node_);
        return app->gate == other.gate && app->args == other.args;
    }
    if (const auto* seq = std::get_if<UnitaryProgram::Seq>(&a.node_)) {
        const auto& other = std::get<UnitaryProgram::Seq>(b.node_);
        return *seq->left == *other.left && *seq->right == *other.right;
    }
    return true; // both skip
}

bool operator==(const Program& a, const Program& b) {
    if (a.node_.index() != b.node_.index()) {
        return false;
    }
    if (const auto* app = std::get_if<Program::App>(&a.node_)) {
        const auto& other = std::get<Program::App>(b.node_);
        return app->gate == other.gate && app->args == other.args;
    }
    if (const auto* seq = std::get_if<Program::Seq>(&a.node_)) {
        const auto& other = std::get<Program::Seq>(b.node_);
        return *seq->left == *other.left && *seq->right == *other.right;
    }
    if (const auto* meas = std::get_if<Program::Meas>(&a.node_)) {
        return meas->q == std::get<Program::Meas>(b.node_).q;
    }
    if (const auto* reset = std::get_if<Program::Reset>(&a.node_)) {
        return reset->q == std::get<Program::Reset>(b.node_).q;
    }
    return true; // both skip
}

Program to_program(const UnitaryProgram& c) {
    if (c.is_skip()) {
        return Program::skip();
    }
    if (const auto* seq = c.as_seq()) {
        return Program::seq(to_program(*seq->left), to_program(*seq->right));
    }
    const auto& app = *c.as_app();
    return Program::app(app.gate, app.args);
}

// --- Well-typedness -------------------------------------------------------

std::string TypeError::to_string() const {
    std::string loc = "root";
    for (Step s : path) {
        loc += s == Step::Left ? ".L" : ".R";
    }
    switch (cause) {
    case TypeErrorCause::ArityMismatch:
        return loc + ": argument count does not match gate arity";
    case TypeErrorCause::IndexOutOfBounds:
        return loc + ": qubit index out of bounds";
    case TypeErrorCause::DuplicateArgument:
        return loc + ": duplicate qubit argument (no-cloning)";
    }
    return loc;
}

namespace {

// The three clauses of the application rule, reported in a fixed order:
// arity, bounds, distinctness.
void check_app(const GateKind& gate, const std::vector<std::size_t>& args,
               std::size_t dim, const std::vector<TypeError::Step>& path,
               std::vector<TypeError>& out) {
    if (args.size() != gate.arity()) {
        out.push_back({path, TypeErrorCause::ArityMismatch});
    }
    if (std::any_of(args.begin(), args.end(),
                    [dim](std::size_t q) { return q >= dim; })) {
        out.push_back({path, TypeErrorCause::IndexOutOfBounds});
    }
    std::unordered_set<std::size_t> seen(args.begin(), args.end());
    if (seen.size() != args.size()) {
        out.push_back({path, TypeErrorCause::DuplicateArgument});
    }
}

void check_index(std::size_t q, std::size_t dim,
                 const std::vector<TypeError::Step>& path,
                 std::vector<TypeError>& out) {
    if (q >= dim) {
        out.push_back({path, TypeErrorCause::IndexOutOfBounds});
    }
}

void well_typed_rec(const UnitaryProgram& c, std::size_t dim,
                    std::vector<TypeError::Step>& path,
                    std::vector<TypeError>& out) {
    if (const auto* seq = c.as_seq()) {
        path.push_back(TypeError::Step::Left);
        well_typed_rec(*seq->left, dim, path, out);
        path.back() = TypeError::Step::Right;
        well_typed_rec(*seq->right, dim, path, out);
        path.pop_back();
    } else if (const auto* app = c.as_app()) {
        check_app(app->gate, app->args, dim, path, out);
    }
}

void well_typed_rec(const Program& p, std::size_t dim,
                    std::vector<TypeError::Step>& path,
                    std::vector<TypeError>& out) {
    if (const auto* seq = p.as_seq()) {
        path.push_back(TypeError::Step::Left);
        well_typed_rec(*seq->left, dim, path, out);
        path.back() = TypeError::Step::Right;
        well_typed_rec(*seq->right, dim, path, out);
        path.pop_back();
    } else if (const auto* app = p.as_app()) {
        check_app(app->gate, app->args, dim, path, out);
    } else if (const auto* meas = std::get_if<Program::Meas>(&p.node())) {
        check_index(meas->q, dim, path, out);
    } else if (const auto* reset = std::get_if<Program::Reset>(&p.node())) {
        check_index(reset->q, dim, path, out);
    }
}

} // namespace

std::vector<TypeError> well_typed(const UnitaryProgram& c, std::size_t dim) {
    std::vector<TypeError> out;
    std::vector<TypeError::Step> path;
    well_typed_rec(c, dim, path, out);
    return out;
}

std::vector<TypeError> well_typed(const Program& p, std::size_t dim) {
    std::vector<TypeError> out;
    std::vector<TypeError::Step> path;
    well_typed_rec(p, dim, path, out);
    return out;
}

bool app_is_well_typed(const GateKind& gate, const std::vector<std::size_t>& args,
                       std::size_t dim) {
    std::vector<TypeError> out;
    check_app(gate, args, dim, {}, out);
    return out.empty();
}

// --- Structural operations ------------------------------------------------

std::size_t count_ops(const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        return count_ops(*seq->left) + count_ops(*seq->right);
    }
    return 1;
}

bool is_skip_free(const UnitaryProgram& c) {
    if (c.is_skip()) {
        return false;
    }
    if (const auto* seq = c.as_seq()) {
        return is_skip_free(*seq->left) && is_skip_free(*seq->right);
    }
    return true;
}

namespace {

void flatten_rec(const UnitaryProgram& c, std::vector<UnitaryProgram>& out) {
    if (const auto* seq = c.as_seq()) {
        flatten_rec(*seq->left, out);
        flatten_rec(*seq->right, out);
    } else {
        out.push_back(c);
    }
}

void flatten_rec(const Program& p, std::vector<Program>& out) {
    if (const auto* seq = p.as_seq()) {
        flatten_rec(*seq->left, out);
        flatten_rec(*seq->right, out);
    } else {
        out.push_back(p);
    }
}

} // namespace

std::vector<UnitaryProgram> flatten(const UnitaryProgram& c) {
    std::vector<UnitaryProgram> out;
    flatten_rec(c, out);
    return out;
}

std::vector<Program> flatten(const Program& p) {
    std::vector<Program> out;
    flatten_rec(p, out);
    return out;
}

UnitaryProgram sequence(const std::vector<UnitaryProgram>& instructions) {
    if (instructions.empty()) {
        return UnitaryProgram::skip();
    }
    UnitaryProgram out = instructions.back();
    for (std::size_t i = instructions.size() - 1; i-- > 0;) {
        out = UnitaryProgram::seq(instructions[i], std::move(out));
    }
    return out;
}

Program sequence(const std::vector<Program>& instructions) {
    if (instructions.empty()) {
        return Program::skip();
    }
    Program out = instructions.back();
    for (std::size_t i = instructions.size() - 1; i-- > 0;) {
        out = Program::seq(instructions[i], std::move(out));
    }
    return out;
}

UnitaryProgram map_qubits(const std::function<std::size_t(std::size_t)>& f,
                          const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        return UnitaryProgram::seq(map_qubits(f, *seq->left),
                                   map_qubits(f, *seq->right));
    }
    if (const auto* app = c.as_app()) {
        std::vector<std::size_t> args;
        args.reserve(app->args.size());
        for (std::size_t q : app->args) {
            args.push_back(f(q));
        }
        return UnitaryProgram::app(app->gate, std::move(args));
    }
    return c;
}

Program map_qubits(const std::function<std::size_t(std::size_t)>& f,
                   const Program& p) {
    if (const auto* seq = p.as_seq()) {
        return Program::seq(map_qubits(f, *seq->left), map_qubits(f, *seq->right));
    }
    if (const auto* app = p.as_app()) {
        std::vector<std::size_t> args;
        args.reserve(app->args.size());
        for (std::size_t q : app->args) {
            args.push_back(f(q));
        }
        return Program::app(app->gate, std::move(args));
    }
    if (const auto* meas = std::get_if<Program::Meas>(&p.node())) {
        return Program::meas(f(meas->q));
    }
    if (const auto* reset = std::get_if<Program::Reset>(&p.node())) {
        return Program::reset(f(reset->q));
    }
    return p;
}

UnitaryProgram in_par(const UnitaryProgram& c1, const UnitaryProgram& c2,
                      std::size_t d1) {
    return UnitaryProgram::seq(
        c1, map_qubits([d1](std::size_t q) { return q + d1; }, c2));
}

UnitaryProgram swap_macro(std::size_t a, std::size_t b) {
    return sequence({UnitaryProgram::cnot(a, b), UnitaryProgram::cnot(b, a),
                     UnitaryProgram::cnot(a, b)});
}

UnitaryProgram cz_macro(std::size_t c, std::size_t t) {
    return sequence({UnitaryProgram::h(t), UnitaryProgram::cnot(c, t),
                     UnitaryProgram::h(t)});
}

namespace {

std::size_t max_index_plus_one(const std::vector<std::size_t>& args) {
    std::size_t out = 0;
    for (std::size_t q : args) {
        out = std::max(out, q + 1);
    }
    return out;
}

} // namespace

std::size_t min_register_size(const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        return std::max(min_register_size(*seq->left),
                        min_register_size(*seq->right));
    }
    if (const auto* app = c.as_app()) {
        return max_index_plus_one(app->args);
    }
    return 0;
}

std::size_t min_register_size(const Program& p) {
    if (const auto* seq = p.as_seq()) {
        return std::max(min_register_size(*seq->left),
                        min_register_size(*seq->right));
    }
    if (const auto* app = p.as_app()) {
        return max_index_plus_one(app->args);
    }
    if (const auto* meas = std::get_if<Program::Meas>(&p.node())) {
        return meas->q + 1;
    }
    if (const auto* reset = std::get_if<Program::Reset>(&p.node())) {
        return reset->q + 1;
    }
    return 0;
}

} // namespace sqir
