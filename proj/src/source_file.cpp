// SPDX-License-Identifier: Apache-2.0

#include "sqir/source_file.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sqir {

namespace {

bool statement_equal(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.args != b.args) {
        return false;
    }
    return a.kind != Statement::Kind::Gate || a.gate == b.gate;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

std::size_t parse_natural(const std::string& token, int line) {
    if (token.empty() ||
        token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, "expected a decimal natural, got '" + token + "'");
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(token.c_str(), &end, 10);
    if (errno == ERANGE || *end != '\0') {
        throw ParseError(line, "natural out of range: '" + token + "'");
    }
    return static_cast<std::size_t>(value);
}

double parse_real(const std::string& token, int line) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
        throw ParseError(line, "expected a real number, got '" + token + "'");
    }
    if (errno == ERANGE || !std::isfinite(value)) {
        throw ParseError(line, "real out of range: '" + token + "'");
    }
    return value;
}

std::string format_phase(double phi) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", phi);
    return buffer;
}

} // namespace

bool operator==(const SourceFile& a, const SourceFile& b) {
    if (a.dim != b.dim || a.statements.size() != b.statements.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        if (!statement_equal(a.statements[i], b.statements[i])) {
            return false;
        }
    }
    return true;
}

SourceFile parse_native(const std::string& text) {
    SourceFile file;
    bool saw_version = false;
    bool saw_qubits = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::vector<std::string> tokens = split_tokens(raw);
        if (tokens.empty()) {
            continue;
        }
        const std::string& head = tokens[0];

        auto expect_operands = [&](std::size_t n) {
            if (tokens.size() != n + 1) {
                throw ParseError(line_no, "'" + head + "' expects " +
                                              std::to_string(n) + " operand(s)");
            }
        };

        if (head == "sqir") {
            if (saw_version) {
                throw ParseError(line_no, "duplicate header line 'sqir'");
            }
            expect_operands(1);
            if (tokens[1] != "1") {
                throw ParseError(line_no, "unsupported format version '" +
                                              tokens[1] + "' (expected 1)");
            }
            saw_version = true;
            continue;
        }
        if (head == "qubits") {
            if (!saw_version) {
                throw ParseError(line_no, "'qubits' before 'sqir 1' header");
            }
            if (saw_qubits) {
                throw ParseError(line_no, "duplicate header line 'qubits'");
            }
            expect_operands(1);
            file.dim = parse_natural(tokens[1], line_no);
            saw_qubits = true;
            continue;
        }
        if (!saw_version || !saw_qubits) {
            throw ParseError(line_no,
                             "missing header: expected 'sqir 1' then 'qubits N'");
        }

        Statement s;
        s.line = line_no;
        if (head == "skip") {
            expect_operands(0);
            s.kind = Statement::Kind::Skip;
        } else if (head == "h" || head == "x" || head == "y" || head == "z") {
            expect_operands(1);
            s.kind = Statement::Kind::Gate;
            s.gate = head == "h"   ? GateKind::h()
                     : head == "x" ? GateKind::x()
                     : head == "y" ? GateKind::y()
                                   : GateKind::z();
            s.args = {parse_natural(tokens[1], line_no)};
        } else if (head == "r") {
            expect_operands(2);
            s.kind = Statement::Kind::Gate;
            s.gate = GateKind::r(parse_real(tokens[1], line_no));
            s.args = {parse_natural(tokens[2], line_no)};
        } else if (head == "cnot") {
            expect_operands(2);
            s.kind = Statement::Kind::Gate;
            s.gate = GateKind::cnot();
            s.args = {parse_natural(tokens[1], line_no),
                      parse_natural(tokens[2], line_no)};
        } else if (head == "meas") {
            expect_operands(1);
            s.kind = Statement::Kind::Meas;
            s.args = {parse_natural(tokens[1], line_no)};
        } else if (head == "reset") {
            expect_operands(1);
            s.kind = Statement::Kind::Reset;
            s.args = {parse_natural(tokens[1], line_no)};
        } else {
            throw ParseError(line_no, "unknown statement '" + head + "'");
        }
        file.statements.push_back(std::move(s));
    }

    if (!saw_version || !saw_qubits) {
        throw ParseError(line_no + 1,
                         "missing header: expected 'sqir 1' then 'qubits N'");
    }
    return file;
}

std::string statement_text(const Statement& s) {
    switch (s.kind) {
    case Statement::Kind::Skip:
        return "skip";
    case Statement::Kind::Meas:
        return "meas " + std::to_string(s.args.at(0));
    case Statement::Kind::Reset:
        return "reset " + std::to_string(s.args.at(0));
    case Statement::Kind::Gate:
        break;
    }
    std::string out = s.gate.name();
    if (s.gate.id == GateId::R) {
        out += " " + format_phase(s.gate.phase);
    }
    for (std::size_t q : s.args) {
        out += " " + std::to_string(q);
    }
    return out;
}

std::string print_native(const SourceFile& f) {
    std::string out = "sqir 1\nqubits " + std::to_string(f.dim) + "\n";
    for (const Statement& s : f.statements) {
        out += statement_text(s);
        out += '\n';
    }
    return out;
}

Program to_program(const SourceFile& f) {
    std::vector<Program> instructions;
    instructions.reserve(f.statements.size());
    for (const Statement& s : f.statements) {
        switch (s.kind) {
        case Statement::Kind::Skip:
            instructions.push_back(Program::skip());
            break;
        case Statement::Kind::Gate:
            instructions.push_back(Program::app(s.gate, s.args));
            break;
        case Statement::Kind::Meas:
            instructions.push_back(Program::meas(s.qubit()));
            break;
        case Statement::Kind::Reset:
            instructions.push_back(Program::reset(s.qubit()));
            break;
        }
    }
    return sequence(instructions);
}

UnitaryProgram to_unitary(const SourceFile& f) {
    std::vector<UnitaryProgram> instructions;
    instructions.reserve(f.statements.size());
    for (const Statement& s : f.statements) {
        switch (s.kind) {
        case Statement::Kind::Skip:
            instructions.push_back(UnitaryProgram::skip());
            break;
        case Statement::Kind::Gate:
            instructions.push_back(UnitaryProgram::app(s.gate, s.args));
            break;
        case Statement::Kind::Meas:
        case Statement::Kind::Reset:
            throw std::invalid_argument(
                "program contains meas/reset; only the unitary fragment is "
                "accepted here");
        }
    }
    return sequence(instructions);
}

bool has_nonunitary(const SourceFile& f) {
    for (const Statement& s : f.statements) {
        if (s.kind == Statement::Kind::Meas || s.kind == Statement::Kind::Reset) {
            return true;
        }
    }
    return false;
}

SourceFile source_from(const UnitaryProgram& c, std::size_t dim) {
    SourceFile file;
    file.dim = dim;
    for (const UnitaryProgram& leaf : flatten(c)) {
        Statement s;
        if (const auto* app = leaf.as_app()) {
            s.kind = Statement::Kind::Gate;
            s.gate = app->gate;
            s.args = app->args;
        }
        file.statements.push_back(std::move(s));
    }
    return file;
}

SourceFile source_from(const Program& p, std::size_t dim) {
    SourceFile file;
    file.dim = dim;
    for (const Program& leaf : flatten(p)) {
        Statement s;
        if (const auto* app = leaf.as_app()) {
            s.kind = Statement::Kind::Gate;
            s.gate = app->gate;
            s.args = app->args;
        } else if (const auto* meas = std::get_if<Program::Meas>(&leaf.node())) {
            s.kind = Statement::Kind::Meas;
            s.args = {meas->q};
        } else if (const auto* reset = std::get_if<Program::Reset>(&leaf.node())) {
            s.kind = Statement::Kind::Reset;
            s.args = {reset->q};
        }
        file.statements.push_back(std::move(s));
    }
    return file;
}

} // namespace sqir
