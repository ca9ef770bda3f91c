// SPDX-License-Identifier: Apache-2.0
//
// The sqir command-line driver: parsing, type checking, the three semantics,
// optimization passes, LNN mapping, equivalence checking, OpenQASM
// conversion, and the built-in demo programs.
//
// Exit codes: 0 success (or equivalent), 1 not equivalent / verification
// failure, 2 usage error, 3 parse or type error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqir/ir.hpp"
#include "sqir/linalg.hpp"
#include "sqir/matrix_json.hpp"
#include "sqir/programs.hpp"
#include "sqir/qasm.hpp"
#include "sqir/semantics.hpp"
#include "sqir/source_file.hpp"
#include "sqir/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParseOrType = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Content-level rejection (exit 3), e.g. meas/reset where only the unitary
// fragment is accepted.
struct ProgramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write file: " + *path);
    }
    out << text;
}

sqir::SourceFile load_native(const std::string& path) {
    return sqir::parse_native(read_file(path));
}

const char* cause_text(sqir::TypeErrorCause cause) {
    switch (cause) {
    case sqir::TypeErrorCause::ArityMismatch:
        return "argument count does not match gate arity";
    case sqir::TypeErrorCause::IndexOutOfBounds:
        return "qubit index out of bounds";
    case sqir::TypeErrorCause::DuplicateArgument:
        return "duplicate qubit argument (no-cloning)";
    }
    return "type error";
}

// Checks statement by statement so diagnostics carry line numbers.
std::size_t report_type_errors(const sqir::SourceFile& file, std::size_t dim) {
    std::size_t count = 0;
    for (const sqir::Statement& s : file.statements) {
        sqir::SourceFile one;
        one.dim = dim;
        one.statements = {s};
        for (const sqir::TypeError& e : well_typed(to_program(one), dim)) {
            std::cerr << "line " << s.line << ": " << cause_text(e.cause)
                      << " in '" << statement_text(s) << "'\n";
            ++count;
        }
    }
    return count;
}

std::vector<int> parse_bitstring(const std::string& bits, std::size_t dim) {
    if (bits.size() != dim) {
        throw UsageError("--input must be a bitstring of length " +
                         std::to_string(dim));
    }
    std::vector<int> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("--input must contain only 0 and 1");
        }
        out.push_back(c - '0');
    }
    return out;
}

void require_unitary_file(const sqir::SourceFile& file, const std::string& what) {
    if (sqir::has_nonunitary(file)) {
        throw ProgramError(what +
                           " accepts only the unitary fragment (no meas/reset)");
    }
}

void print_json(const nlohmann::ordered_json& j) {
    std::cout << j.dump() << "\n";
}

// --- subcommand bodies ------------------------------------------------------

int cmd_check(const std::string& path, std::optional<std::size_t> dim_flag) {
    const sqir::SourceFile file = load_native(path);
    const std::size_t dim = dim_flag.value_or(file.dim);
    const std::size_t errors = report_type_errors(file, dim);
    if (errors != 0) {
        std::cerr << errors << " type error(s) at dim " << dim << "\n";
        return kExitParseOrType;
    }
    std::cout << "well-typed at dim " << dim << "\n";
    return kExitOk;
}

int cmd_denote(const std::string& path, std::optional<std::size_t> dim_flag) {
    const sqir::SourceFile file = load_native(path);
    require_unitary_file(file, "denote");
    const std::size_t dim = dim_flag.value_or(file.dim);
    if (report_type_errors(file, dim) != 0) {
        std::cerr << "note: program is ill-typed at dim " << dim
                  << "; denotation is the zero matrix\n";
    }
    print_json(sqir::matrix_to_json(denote_unitary(to_unitary(file), dim)));
    return kExitOk;
}

int cmd_run(const std::string& path, const std::optional<std::string>& input,
            bool density) {
    const sqir::SourceFile file = load_native(path);
    const std::size_t dim = file.dim;
    const std::vector<int> bits =
        input ? parse_bitstring(*input, dim) : std::vector<int>(dim, 0);
    const sqir::ComplexMatrix ket = sqir::basis_ket(bits);

    const std::size_t errors = report_type_errors(file, dim);
    int status = kExitOk;
    if (errors != 0) {
        std::cerr << "note: program is ill-typed at dim " << dim
                  << "; the result collapses to zero\n";
        status = kExitParseOrType;
    }

    if (density) {
        const sqir::ComplexMatrix rho = ket * sqir::adjoint(ket);
        print_json(sqir::matrix_to_json(eval_density(to_program(file), dim, rho)));
        return status;
    }
    require_unitary_file(file,
                         "run (statevector mode; use --density or branches)");
    print_json(sqir::matrix_to_json(apply_unitary(to_unitary(file), dim, ket)));
    return status;
}

int cmd_branches(const std::string& path, const std::optional<std::string>& input) {
    const sqir::SourceFile file = load_native(path);
    const std::size_t dim = file.dim;
    const std::vector<int> bits =
        input ? parse_bitstring(*input, dim) : std::vector<int>(dim, 0);

    if (report_type_errors(file, dim) != 0) {
        std::cerr << "branches: program is ill-typed at dim " << dim << "\n";
        return kExitParseOrType;
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const sqir::OutcomeBranch& branch :
         enumerate_outcomes(to_program(file), dim, sqir::basis_ket(bits))) {
        out.push_back(sqir::branch_to_json(branch));
    }
    print_json(out);
    return kExitOk;
}

int run_pass_pipeline(const std::string& path, const std::vector<std::string>& passes,
                      const std::optional<std::string>& out_path, bool verify,
                      double tol) {
    const sqir::SourceFile file = load_native(path);
    require_unitary_file(file, "optimization passes");
    const sqir::UnitaryProgram input = to_unitary(file);

    sqir::UnitaryProgram program = input;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const std::string& name : passes) {
        auto [next, report] = sqir::run_pass(name, program);
        program = std::move(next);
        reports.push_back({{"pass", report.pass},
                           {"input_ops", report.input_ops},
                           {"output_ops", report.output_ops},
                           {"removed", report.removed},
                           {"inserted", report.inserted}});
    }
    std::cerr << reports.dump() << "\n";

    write_output(out_path, print_native(source_from(program, file.dim)));
    if (verify && !uc_equiv_at(input, program, file.dim, tol)) {
        std::cerr << "verification failed: output is not equivalent to input "
                     "at dim "
                  << file.dim << "\n";
        return kExitNotEquivalent;
    }
    return kExitOk;
}

int cmd_equiv(const std::string& path1, const std::string& path2,
              std::optional<std::size_t> dim_flag, double tol, bool prop) {
    const sqir::SourceFile f1 = load_native(path1);
    const sqir::SourceFile f2 = load_native(path2);
    require_unitary_file(f1, "equiv");
    require_unitary_file(f2, "equiv");
    const std::size_t dim = dim_flag.value_or(std::max(f1.dim, f2.dim));

    const sqir::ComplexMatrix u1 = denote_unitary(to_unitary(f1), dim);
    const sqir::ComplexMatrix u2 = denote_unitary(to_unitary(f2), dim);
    const bool equal =
        prop ? proportional(u1, u2, tol) : approx_equal(u1, u2, tol);
    std::cout << (equal ? (prop ? "equivalent (up to a scalar)" : "equivalent")
                        : "not equivalent")
              << " at dim " << dim << "\n";
    return equal ? kExitOk : kExitNotEquivalent;
}

int cmd_qasm_import(const std::string& path, const std::optional<std::string>& out) {
    write_output(out, print_native(sqir::import_qasm(read_file(path))));
    return kExitOk;
}

int cmd_qasm_export(const std::string& path, const std::optional<std::string>& out) {
    write_output(out, sqir::export_qasm(load_native(path)));
    return kExitOk;
}

int cmd_demo_dj(const std::string& oracle_text) {
    sqir::OracleTree oracle = [&] {
        try {
            return sqir::parse_oracle(oracle_text);
        } catch (const std::invalid_argument& e) {
            throw sqir::ParseError(1, e.what());
        }
    }();
    const sqir::DJReport report = sqir::dj_report(oracle);
    const std::size_t n = 1 + report.dim;

    // The oracle exists only at matrix level, so the emitted program marks
    // where its matrix is spliced between the Hadamard stages.
    std::ostringstream out;
    out << "sqir 1\nqubits " << n << "\n";
    out << "x 0\n";
    for (std::size_t q = 0; q < n; ++q) {
        out << "h " << q << "\n";
    }
    out << "# oracle " << oracle_to_string(oracle)
        << " applied at matrix level here\n";
    for (std::size_t q = 0; q < n; ++q) {
        out << "h " << q << "\n";
    }
    std::cout << out.str();

    const nlohmann::ordered_json j = {
        {"dim", report.dim},
        {"count", report.count},
        {"classification", sqir::oracle_class_name(report.classification)},
        {"amplitude", report.amplitude},
        {"accept_probability", report.accept_probability}};
    std::cerr << j.dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SQIR quantum intermediate representation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = sqir::kDefaultTolerance;
    app.add_option("--tol", tol, "comparison tolerance (absolute, entrywise)")
        ->check(CLI::PositiveNumber);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed,
                   "PRNG seed for randomized subcommands (reserved; the "
                   "current commands are deterministic)");

    std::string file1;
    std::string file2;
    std::optional<std::size_t> dim_flag;
    std::optional<std::string> input_bits;
    std::optional<std::string> out_path;
    bool density = false;
    bool verify = false;
    bool prop = false;
    std::string passes_list;
    std::string arch;

    CLI::App* check = app.add_subcommand("check", "type-check a program");
    check->add_option("file", file1, "native program file")->required();
    check->add_option("--dim", dim_flag, "register size (defaults to header)");

    CLI::App* denote = app.add_subcommand("denote", "print the denoted unitary as JSON");
    denote->add_option("file", file1)->required();
    denote->add_option("--dim", dim_flag);

    CLI::App* run = app.add_subcommand("run", "evaluate on a basis-state input");
    run->add_option("file", file1)->required();
    run->add_option("--input", input_bits, "input bitstring (default all zeros)");
    run->add_flag("--density", density, "density-matrix semantics");

    CLI::App* branches =
        app.add_subcommand("branches", "enumerate measurement outcomes as JSON");
    branches->add_option("file", file1)->required();
    branches->add_option("--input", input_bits);

    CLI::App* opt = app.add_subcommand("opt", "run optimization passes");
    opt->add_option("file", file1)->required();
    opt->add_option("--passes", passes_list,
                    "comma-separated list: rm-skip,not-prop,lnn")
        ->required();
    opt->add_option("-o,--output", out_path, "write the result here");
    opt->add_flag("--verify", verify, "check equivalence of input and output");

    CLI::App* map = app.add_subcommand("map", "map to an architecture");
    map->add_option("file", file1)->required();
    map->add_option("--arch", arch, "target architecture (lnn)")->required();
    map->add_option("-o,--output", out_path);
    map->add_flag("--verify", verify);

    CLI::App* equiv = app.add_subcommand("equiv", "check semantic equivalence");
    equiv->add_option("file1", file1)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_option("--dim", dim_flag);
    equiv->add_flag("--proportional", prop, "equality up to a global scalar");

    CLI::App* qasm = app.add_subcommand("qasm", "OpenQASM 2.0 conversion");
    qasm->require_subcommand(1);
    CLI::App* qasm_import = qasm->add_subcommand("import", "OpenQASM to native");
    qasm_import->add_option("file", file1)->required();
    qasm_import->add_option("-o,--output", out_path);
    CLI::App* qasm_export = qasm->add_subcommand("export", "native to OpenQASM");
    qasm_export->add_option("file", file1)->required();
    qasm_export->add_option("-o,--output", out_path);

    CLI::App* demo = app.add_subcommand("demo", "emit a built-in program");
    demo->require_subcommand(1);
    std::size_t ghz_n = 0;
    int b1 = 0;
    int b2 = 0;
    std::string oracle_text;
    CLI::App* demo_ghz = demo->add_subcommand("ghz", "GHZ state preparation");
    demo_ghz->add_option("n", ghz_n, "number of qubits")->required();
    CLI::App* demo_super = demo->add_subcommand("superdense", "superdense coding");
    demo_super->add_option("b1", b1)->required()->check(CLI::Range(0, 1));
    demo_super->add_option("b2", b2)->required()->check(CLI::Range(0, 1));
    CLI::App* demo_teleport = demo->add_subcommand("teleport", "teleportation");
    CLI::App* demo_dj = demo->add_subcommand("dj", "Deutsch-Jozsa with an oracle");
    demo_dj->add_option("oracle", oracle_text,
                        "oracle tree, e.g. (I,X)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) {
            return cmd_check(file1, dim_flag);
        }
        if (*denote) {
            return cmd_denote(file1, dim_flag);
        }
        if (*run) {
            return cmd_run(file1, input_bits, density);
        }
        if (*branches) {
            return cmd_branches(file1, input_bits);
        }
        if (*opt) {
            std::vector<std::string> passes;
            std::istringstream in(passes_list);
            std::string name;
            while (std::getline(in, name, ',')) {
                if (!name.empty()) {
                    passes.push_back(name);
                }
            }
            if (passes.empty()) {
                throw UsageError("--passes must name at least one pass");
            }
            return run_pass_pipeline(file1, passes, out_path, verify, tol);
        }
        if (*map) {
            if (arch != "lnn") {
                throw UsageError("unsupported --arch '" + arch +
                                 "' (only lnn is available)");
            }
            return run_pass_pipeline(file1, {std::string(sqir::kPassLnn)},
                                     out_path, verify, tol);
        }
        if (*equiv) {
            return cmd_equiv(file1, file2, dim_flag, tol, prop);
        }
        if (*qasm_import) {
            return cmd_qasm_import(file1, out_path);
        }
        if (*qasm_export) {
            return cmd_qasm_export(file1, out_path);
        }
        if (*demo_ghz) {
            write_output(std::nullopt,
                         print_native(source_from(sqir::ghz_circuit(ghz_n), ghz_n)));
            return kExitOk;
        }
        if (*demo_super) {
            write_output(std::nullopt,
                         print_native(source_from(sqir::superdense(b1, b2), 2)));
            return kExitOk;
        }
        if (*demo_teleport) {
            write_output(std::nullopt,
                         print_native(source_from(sqir::teleport_program(), 3)));
            return kExitOk;
        }
        if (*demo_dj) {
            return cmd_demo_dj(oracle_text);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ProgramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrType;
    } catch (const sqir::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrType;
    } catch (const sqir::TypeCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrType;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseOrType;
    }
    return kExitUsage;
}
