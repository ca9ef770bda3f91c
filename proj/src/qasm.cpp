// SPDX-License-Identifier: Apache-2.0

#include "sqir/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>

namespace sqir {

namespace {

struct Token {
    enum class Kind { Identifier, Number, Symbol, String, End };
    Kind kind = Kind::End;
    std::string text;
    double number = 0.0;
    int line = 1;
};

// Hand-rolled lexer; '//' comments run to end of line.
class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws_and_comments();
        current_ = Token{};
        current_.line = line_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                    text_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::Identifier;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 ||
                    text_[pos_] == '.' || text_[pos_] == 'e' ||
                    text_[pos_] == 'E' ||
                    ((text_[pos_] == '+' || text_[pos_] == '-') &&
                     (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
                ++pos_;
            }
            const std::string lexeme = text_.substr(start, pos_ - start);
            char* end = nullptr;
            current_.number = std::strtod(lexeme.c_str(), &end);
            if (end != lexeme.c_str() + lexeme.size() ||
                !std::isfinite(current_.number)) {
                throw ParseError(line_, "malformed number '" + lexeme + "'");
            }
            current_.kind = Token::Kind::Number;
            current_.text = lexeme;
            return;
        }
        if (c == '"') {
            std::size_t start = ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                ++pos_;
            }
            if (pos_ >= text_.size()) {
                throw ParseError(line_, "unterminated string");
            }
            current_.kind = Token::Kind::String;
            current_.text = text_.substr(start, pos_ - start);
            ++pos_;
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            current_.kind = Token::Kind::Symbol;
            current_.text = "->";
            pos_ += 2;
            return;
        }
        current_.kind = Token::Kind::Symbol;
        current_.text = std::string(1, c);
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    Token current_;
};

class QasmParser {
public:
    explicit QasmParser(const std::string& text) : lex_(text) {}

    SourceFile parse() {
        expect_identifier("OPENQASM");
        const Token version = lex_.next();
        if (version.kind != Token::Kind::Number || version.text != "2.0") {
            throw ParseError(version.line, "expected OPENQASM version 2.0");
        }
        expect_symbol(";");

        while (lex_.peek().kind != Token::Kind::End) {
            statement();
        }
        if (!qreg_) {
            throw ParseError(lex_.peek().line, "missing qreg declaration");
        }
        return std::move(file_);
    }

private:
    struct Register {
        std::string name;
        std::size_t size = 0;
    };

    void statement() {
        const Token head = lex_.next();
        if (head.kind != Token::Kind::Identifier) {
            throw ParseError(head.line, "expected a statement, got '" +
                                            head.text + "'");
        }
        if (head.text == "include") {
            const Token path = lex_.next();
            if (path.kind != Token::Kind::String || path.text != "qelib1.inc") {
                throw ParseError(path.line,
                                 "only include \"qelib1.inc\" is supported");
            }
            expect_symbol(";");
        } else if (head.text == "qreg") {
            if (qreg_) {
                throw ParseError(head.line, "multiple quantum registers");
            }
            qreg_ = declared_register();
            file_.dim = qreg_->size;
        } else if (head.text == "creg") {
            if (creg_) {
                throw ParseError(head.line, "multiple classical registers");
            }
            creg_ = declared_register();
        } else if (head.text == "h" || head.text == "x" || head.text == "y" ||
                   head.text == "z") {
            Statement s;
            s.line = head.line;
            s.kind = Statement::Kind::Gate;
            s.gate = head.text == "h"   ? GateKind::h()
                     : head.text == "x" ? GateKind::x()
                     : head.text == "y" ? GateKind::y()
                                        : GateKind::z();
            s.args = {quantum_index(head.line)};
            expect_symbol(";");
            file_.statements.push_back(std::move(s));
        } else if (head.text == "u1") {
            expect_symbol("(");
            const double phi = parse_expression();
            expect_symbol(")");
            Statement s;
            s.line = head.line;
            s.kind = Statement::Kind::Gate;
            s.gate = GateKind::r(phi);
            s.args = {quantum_index(head.line)};
            expect_symbol(";");
            file_.statements.push_back(std::move(s));
        } else if (head.text == "cx") {
            Statement s;
            s.line = head.line;
            s.kind = Statement::Kind::Gate;
            s.gate = GateKind::cnot();
            const std::size_t control = quantum_index(head.line);
            expect_symbol(",");
            const std::size_t target = quantum_index(head.line);
            s.args = {control, target};
            expect_symbol(";");
            file_.statements.push_back(std::move(s));
        } else if (head.text == "measure") {
            Statement s;
            s.line = head.line;
            s.kind = Statement::Kind::Meas;
            s.args = {quantum_index(head.line)};
            expect_symbol("->");
            s.creg_target = classical_index(head.line);
            expect_symbol(";");
            file_.statements.push_back(std::move(s));
        } else if (head.text == "reset") {
            Statement s;
            s.line = head.line;
            s.kind = Statement::Kind::Reset;
            s.args = {quantum_index(head.line)};
            expect_symbol(";");
            file_.statements.push_back(std::move(s));
        } else {
            throw ParseError(head.line,
                             "unsupported construct '" + head.text + "'");
        }
    }

    Register declared_register() {
        const Token name = lex_.next();
        if (name.kind != Token::Kind::Identifier) {
            throw ParseError(name.line, "expected a register name");
        }
        expect_symbol("[");
        const Token size = lex_.next();
        if (size.kind != Token::Kind::Number) {
            throw ParseError(size.line, "expected a register size");
        }
        const double value = size.number;
        if (value < 0 || value != std::floor(value)) {
            throw ParseError(size.line, "register size must be a natural");
        }
        expect_symbol("]");
        expect_symbol(";");
        return {name.text, static_cast<std::size_t>(value)};
    }

    std::size_t quantum_index(int line) {
        if (!qreg_) {
            throw ParseError(line, "gate before qreg declaration");
        }
        return register_index(*qreg_);
    }

    std::size_t classical_index(int line) {
        if (!creg_) {
            throw ParseError(line, "measure target before creg declaration");
        }
        return register_index(*creg_);
    }

    std::size_t register_index(const Register& reg) {
        const Token name = lex_.next();
        if (name.kind != Token::Kind::Identifier || name.text != reg.name) {
            throw ParseError(name.line, "unknown register '" + name.text + "'");
        }
        expect_symbol("[");
        const Token index = lex_.next();
        if (index.kind != Token::Kind::Number ||
            index.number != std::floor(index.number) || index.number < 0) {
            throw ParseError(index.line, "expected a register index");
        }
        expect_symbol("]");
        const auto i = static_cast<std::size_t>(index.number);
        if (i >= reg.size) {
            throw ParseError(index.line, "index " + std::to_string(i) +
                                             " out of range for " + reg.name +
                                             "[" + std::to_string(reg.size) + "]");
        }
        return i;
    }

    // expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
    // factor := number | pi | '-' factor | '(' expr ')'. Folded to a constant.
    double parse_expression() {
        double value = parse_term();
        while (peek_symbol("+") || peek_symbol("-")) {
            const std::string op = lex_.next().text;
            const double rhs = parse_term();
            value = op == "+" ? value + rhs : value - rhs;
        }
        return value;
    }

    double parse_term() {
        double value = parse_factor();
        while (peek_symbol("*") || peek_symbol("/")) {
            const Token op = lex_.next();
            const double rhs = parse_factor();
            if (op.text == "/") {
                if (rhs == 0.0) {
                    throw ParseError(op.line, "division by zero in phase");
                }
                value /= rhs;
            } else {
                value *= rhs;
            }
        }
        return value;
    }

    double parse_factor() {
        const Token t = lex_.next();
        if (t.kind == Token::Kind::Number) {
            return t.number;
        }
        if (t.kind == Token::Kind::Identifier && t.text == "pi") {
            return std::numbers::pi;
        }
        if (t.kind == Token::Kind::Symbol && t.text == "-") {
            return -parse_factor();
        }
        if (t.kind == Token::Kind::Symbol && t.text == "(") {
            const double value = parse_expression();
            expect_symbol(")");
            return value;
        }
        throw ParseError(t.line, "malformed phase expression at '" + t.text + "'");
    }

    bool peek_symbol(const std::string& s) {
        return lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == s;
    }

    void expect_symbol(const std::string& s) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Symbol || t.text != s) {
            throw ParseError(t.line, "expected '" + s + "', got '" + t.text + "'");
        }
    }

    void expect_identifier(const std::string& s) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Identifier || t.text != s) {
            throw ParseError(t.line, "expected '" + s + "'");
        }
    }

    Lexer lex_;
    SourceFile file_;
    std::optional<Register> qreg_;
    std::optional<Register> creg_;
};

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

} // namespace

SourceFile import_qasm(const std::string& text) {
    return QasmParser(text).parse();
}

std::string export_qasm(const SourceFile& f) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(f.dim) + "];\n";
    if (has_nonunitary(f)) {
        out += "creg c[" + std::to_string(f.dim) + "];\n";
    }
    for (const Statement& s : f.statements) {
        switch (s.kind) {
        case Statement::Kind::Skip:
            break; // OpenQASM has no skip
        case Statement::Kind::Gate:
            if (s.gate.id == GateId::Cnot) {
                out += "cx q[" + std::to_string(s.args.at(0)) + "],q[" +
                       std::to_string(s.args.at(1)) + "];\n";
            } else if (s.gate.id == GateId::R) {
                out += "u1(" + format_real(s.gate.phase) + ") q[" +
                       std::to_string(s.args.at(0)) + "];\n";
            } else {
                out += std::string(s.gate.name()) + " q[" +
                       std::to_string(s.args.at(0)) + "];\n";
            }
            break;
        case Statement::Kind::Meas:
            out += "measure q[" + std::to_string(s.qubit()) + "] -> c[" +
                   std::to_string(s.creg_target.value_or(s.qubit())) + "];\n";
            break;
        case Statement::Kind::Reset:
            out += "reset q[" + std::to_string(s.qubit()) + "];\n";
            break;
        }
    }
    return out;
}

} // namespace sqir
