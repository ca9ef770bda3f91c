// SPDX-License-Identifier: Apache-2.0

#include "sqir/transforms.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sqir {

UnitaryProgram rm_uskips(const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        UnitaryProgram left = rm_uskips(*seq->left);
        UnitaryProgram right = rm_uskips(*seq->right);
        if (left.is_skip()) {
            return right;
        }
        if (right.is_skip()) {
            return left;
        }
        return UnitaryProgram::seq(std::move(left), std::move(right));
    }
    return c;
}

namespace {

bool is_x_on(const UnitaryProgram& leaf, std::size_t& q) {
    const auto* app = leaf.as_app();
    if (app != nullptr && app->gate.id == GateId::X && app->args.size() == 1) {
        q = app->args[0];
        return true;
    }
    return false;
}

// Whether an X on qubit q commutes past this instruction: any instruction
// not touching q, and a CNOT whose target (not control) is q. Malformed
// applications conservatively block.
bool x_commutes_past(std::size_t q, const UnitaryProgram& leaf) {
    if (leaf.is_skip()) {
        return true;
    }
    const auto& app = *leaf.as_app();
    if (app.gate.id == GateId::Cnot) {
        if (app.args.size() != 2 || app.args[0] == app.args[1]) {
            return false;
        }
        return app.args[0] != q;
    }
    return app.args.size() == 1 && app.args[0] != q;
}

// One left-to-right sweep; returns true if a pair of X gates cancelled.
bool cancel_one_pair(std::vector<UnitaryProgram>& instrs) {
    for (std::size_t i = 0; i < instrs.size(); ++i) {
        std::size_t q = 0;
        if (!is_x_on(instrs[i], q)) {
            continue;
        }
        for (std::size_t j = i + 1; j < instrs.size(); ++j) {
            std::size_t q2 = 0;
            if (is_x_on(instrs[j], q2) && q2 == q) {
                instrs.erase(instrs.begin() + static_cast<std::ptrdiff_t>(j));
                instrs.erase(instrs.begin() + static_cast<std::ptrdiff_t>(i));
                return true;
            }
            if (!x_commutes_past(q, instrs[j])) {
                break; // the X stays in its original position
            }
        }
    }
    return false;
}

} // namespace

UnitaryProgram not_propagation(const UnitaryProgram& c) {
    std::vector<UnitaryProgram> instrs = flatten(c);
    while (cancel_one_pair(instrs)) {
    }
    return sequence(instrs);
}

bool respects_lnn(const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        return respects_lnn(*seq->left) && respects_lnn(*seq->right);
    }
    if (const auto* app = c.as_app()) {
        if (app->gate.id != GateId::Cnot) {
            return true;
        }
        if (app->args.size() != 2) {
            return false;
        }
        const std::size_t a = app->args[0];
        const std::size_t b = app->args[1];
        return (a > b ? a - b : b - a) == 1;
    }
    return true;
}

namespace {

// SWAPs walking the control adjacent to the target (to t-1 when c < t, to
// t+1 when c > t), the adjacent CNOT, then the same SWAPs undone.
UnitaryProgram route_cnot(std::size_t c, std::size_t t) {
    std::vector<UnitaryProgram> chain;
    std::vector<UnitaryProgram> program;
    if (c < t) {
        for (std::size_t p = c; p + 1 < t; ++p) {
            chain.push_back(swap_macro(p, p + 1));
        }
        program = chain;
        program.push_back(UnitaryProgram::cnot(t - 1, t));
    } else {
        for (std::size_t p = c; p > t + 1; --p) {
            chain.push_back(swap_macro(p, p - 1));
        }
        program = chain;
        program.push_back(UnitaryProgram::cnot(t + 1, t));
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        program.push_back(*it);
    }
    return sequence(program);
}

} // namespace

UnitaryProgram map_to_lnn(const UnitaryProgram& c) {
    if (const auto* seq = c.as_seq()) {
        return UnitaryProgram::seq(map_to_lnn(*seq->left), map_to_lnn(*seq->right));
    }
    if (const auto* app = c.as_app()) {
        if (app->gate.id == GateId::Cnot && app->args.size() == 2) {
            const std::size_t control = app->args[0];
            const std::size_t target = app->args[1];
            const std::size_t dist =
                control > target ? control - target : target - control;
            if (dist > 1) {
                return route_cnot(control, target);
            }
        }
    }
    return c;
}

std::pair<UnitaryProgram, PassReport> run_pass(std::string_view name,
                                               const UnitaryProgram& c) {
    UnitaryProgram out;
    if (name == kPassRmSkip) {
        out = rm_uskips(c);
    } else if (name == kPassNotProp) {
        out = not_propagation(c);
    } else if (name == kPassLnn) {
        out = map_to_lnn(c);
    } else {
        throw std::invalid_argument("unknown pass: " + std::string(name));
    }
    PassReport report;
    report.pass = std::string(name);
    report.input_ops = count_ops(c);
    report.output_ops = count_ops(out);
    if (report.output_ops < report.input_ops) {
        report.removed = report.input_ops - report.output_ops;
    } else {
        report.inserted = report.output_ops - report.input_ops;
    }
    return {std::move(out), std::move(report)};
}

} // namespace sqir
