// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "sqir/programs.hpp"
#include "sqir/semantics.hpp"
#include "support/test_helpers.hpp"

using namespace sqir;
using namespace sqir::testing;

TEST_CASE("superdense coding recovers both bits") {
    for (int b1 = 0; b1 <= 1; ++b1) {
        for (int b2 = 0; b2 <= 1; ++b2) {
            const ComplexMatrix out =
                denote_unitary(superdense(b1, b2), 2) * basis_ket({0, 0});
            CHECK(approx_equal(out, basis_ket({b1, b2}), 1e-10));
        }
    }

    // the untaken encode branches stay in the tree as skips
    std::size_t skips = 0;
    for (const UnitaryProgram& leaf : flatten(superdense(0, 0))) {
        if (leaf.is_skip()) {
            ++skips;
        }
    }
    CHECK(skips == 2);
    CHECK(count_ops(superdense(1, 1)) == 6);
}

TEST_CASE("ghz circuit structure") {
    CHECK(ghz_circuit(0) == UnitaryProgram::skip());
    CHECK(ghz_circuit(1) == UnitaryProgram::h(0));
    CHECK(ghz_circuit(3) ==
          UnitaryProgram::seq(
              UnitaryProgram::seq(UnitaryProgram::h(0), UnitaryProgram::cnot(0, 1)),
              UnitaryProgram::cnot(1, 2)));
}

TEST_CASE("ghz_state") {
    CHECK(approx_equal(ghz_state(0), ComplexMatrix::identity(1)));

    const ComplexMatrix plus = ghz_state(1);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(plus(0, 0).real() == doctest::Approx(s));
    CHECK(plus(1, 0).real() == doctest::Approx(s));

    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(norm(ghz_state(n)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ghz circuit prepares ghz_state") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const ComplexMatrix out = apply_unitary(
            ghz_circuit(n), n, basis_ket(std::vector<int>(n, 0)));
        CHECK(approx_equal(out, ghz_state(n), 1e-9));
    }
    // dense route for the small cases
    for (std::size_t n = 1; n <= 8; ++n) {
        const ComplexMatrix out = denote_unitary(ghz_circuit(n), n) *
                                  basis_ket(std::vector<int>(n, 0));
        CHECK(approx_equal(out, ghz_state(n), 1e-9));
    }
}

TEST_CASE("teleport under the density semantics") {
    Rng rng(4242);
    const Program teleport = teleport_program();
    const ComplexMatrix zero = basis_ket({0});
    const ComplexMatrix p00 = zero * adjoint(zero);

    for (int iter = 0; iter < 20; ++iter) {
        const ComplexMatrix rho = random_density(rng, 1);
        const ComplexMatrix in = kron(kron(rho, p00), p00);
        const ComplexMatrix out = eval_density(teleport, 3, in);
        CHECK(approx_equal(out, kron(kron(p00, p00), rho), 1e-9));
    }
}

TEST_CASE("teleport under the non-deterministic semantics") {
    Rng rng(51413);
    const Program teleport = teleport_program();

    for (int iter = 0; iter < 20; ++iter) {
        const ComplexMatrix psi = random_state(rng, 1);
        const ComplexMatrix in = kron(psi, basis_ket({0, 0}));
        const auto branches = enumerate_outcomes(teleport, 3, in);

        REQUIRE(branches.size() == 4);
        const ComplexMatrix expected = kron(basis_ket({0, 0}), psi);
        double total = 0.0;
        for (const OutcomeBranch& branch : branches) {
            CHECK(proportional(branch.state, expected, 1e-9));
            total += branch.weight;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }

    // teleporting |0> still takes four paths, all landing on |000>
    const auto branches =
        enumerate_outcomes(teleport, 3, kron(basis_ket({0}), basis_ket({0, 0})));
    REQUIRE(branches.size() == 4);
    for (const OutcomeBranch& branch : branches) {
        CHECK(proportional(branch.state, basis_ket({0, 0, 0}), 1e-9));
    }
}

TEST_CASE("cpar unrolls left-to-right") {
    auto h = [](std::size_t q) { return UnitaryProgram::h(q); };
    CHECK(cpar(0, h) == UnitaryProgram::skip());
    CHECK(cpar(2, h) ==
          UnitaryProgram::seq(
              UnitaryProgram::seq(UnitaryProgram::skip(), UnitaryProgram::h(0)),
              UnitaryProgram::h(1)));

    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(approx_equal(denote_unitary(cpar(n, h), n),
                           kron_power(gate_matrix(GateKind::h()), n), 1e-9));
    }
}

TEST_CASE("oracle trees enforce equal depth") {
    CHECK(OracleTree::leaf_i().depth() == 0);
    CHECK(OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_x()).depth() ==
          1);
    const OracleTree d1 = OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_i());
    CHECK_THROWS_AS(OracleTree::node(d1, OracleTree::leaf_x()),
                    std::invalid_argument);
}

TEST_CASE("oracle_matrix on the four 1-bit functions") {
    ComplexMatrix p0(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1(2, 2);
    p1(1, 1) = 1.0;
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexMatrix x = gate_matrix(GateKind::x());

    CHECK(approx_equal(oracle_matrix(OracleTree::leaf_i()), id, 1e-15));
    CHECK(approx_equal(oracle_matrix(OracleTree::leaf_x()), x, 1e-15));

    // f(x) = x: I (x) |0><0| + X (x) |1><1|
    CHECK(approx_equal(
        oracle_matrix(OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_x())),
        kron(id, p0) + kron(x, p1), 1e-15));
    // f(x) = 1: X (x) I
    CHECK(approx_equal(
        oracle_matrix(OracleTree::node(OracleTree::leaf_x(), OracleTree::leaf_x())),
        kron(x, id), 1e-15));
}

TEST_CASE("oracle_matrix matches the truth-table construction") {
    Rng rng(977);
    for (std::size_t depth = 0; depth <= 2; ++depth) {
        for (const OracleTree& t : all_oracle_trees(depth)) {
            const std::vector<int> table = oracle_truth_table(t);
            CHECK(approx_equal(oracle_matrix(t), oracle_matrix_from_table(table),
                               1e-12));
            std::size_t ones = 0;
            for (int v : table) {
                ones += static_cast<std::size_t>(v);
            }
            CHECK(oracle_count(t) == ones);
        }
    }
    for (int iter = 0; iter < 20; ++iter) {
        const OracleTree t = random_oracle_tree(rng, 4);
        CHECK(approx_equal(oracle_matrix(t),
                           oracle_matrix_from_table(oracle_truth_table(t)),
                           1e-12));
    }
}

TEST_CASE("oracle matrices are unitary") {
    Rng rng(1009);
    for (int iter = 0; iter < 30; ++iter) {
        const OracleTree t = random_oracle_tree(rng, 1 + iter % 4);
        const ComplexMatrix u = oracle_matrix(t);
        CHECK(approx_equal(adjoint(u) * u, ComplexMatrix::identity(u.rows()),
                           1e-10));
    }
}

TEST_CASE("oracle_count and classification") {
    CHECK(oracle_count(OracleTree::leaf_x()) == 1);
    CHECK(oracle_count(OracleTree::node(OracleTree::leaf_i(),
                                        OracleTree::leaf_x())) == 1);
    const OracleTree two = OracleTree::node(
        OracleTree::node(OracleTree::leaf_x(), OracleTree::leaf_x()),
        OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_i()));
    CHECK(oracle_count(two) == 2);

    CHECK(classify_oracle(OracleTree::leaf_i()) == OracleClass::Constant);
    CHECK(classify_oracle(OracleTree::leaf_x()) == OracleClass::Constant);
    CHECK(classify_oracle(OracleTree::node(OracleTree::leaf_i(),
                                           OracleTree::leaf_x())) ==
          OracleClass::Balanced);

    const OracleTree lopsided = OracleTree::node(
        OracleTree::node(OracleTree::leaf_x(), OracleTree::leaf_i()),
        OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_i()));
    CHECK(classify_oracle(lopsided) == OracleClass::Neither);
}

TEST_CASE("deutsch-jozsa amplitudes") {
    SUBCASE("base cases") {
        CHECK(dj_report(OracleTree::leaf_i()).amplitude ==
              doctest::Approx(1.0).epsilon(1e-9));
        CHECK(dj_report(OracleTree::leaf_x()).amplitude ==
              doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(dj_report(OracleTree::node(OracleTree::leaf_i(),
                                         OracleTree::leaf_x()))
                  .amplitude == doctest::Approx(0.0).epsilon(1e-9));
    }

    SUBCASE("worked dim-2 example") {
        const OracleTree t = OracleTree::node(
            OracleTree::node(OracleTree::leaf_x(), OracleTree::leaf_i()),
            OracleTree::node(OracleTree::leaf_i(), OracleTree::leaf_i()));
        const DJReport report = dj_report(t);
        CHECK(report.count == 1);
        CHECK(report.amplitude == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(report.accept_probability == doctest::Approx(0.25).epsilon(1e-9));

        // independent route: H^(x)n U_f H^(x)n X_0 built from the truth table
        const std::size_t n = 1 + t.depth();
        const ComplexMatrix h_n = kron_power(gate_matrix(GateKind::h()), n);
        const ComplexMatrix dj =
            h_n * oracle_matrix_from_table(oracle_truth_table(t)) * h_n *
            pad(gate_matrix(GateKind::x()), 0, n);
        CHECK(dj(std::size_t{1} << t.depth(), 0).real() ==
              doctest::Approx(report.amplitude).epsilon(1e-9));
    }

    SUBCASE("amplitude lemma over all small trees") {
        for (std::size_t depth = 0; depth <= 3; ++depth) {
            for (const OracleTree& t : all_oracle_trees(depth)) {
                const DJReport report = dj_report(t);
                const double closed =
                    1.0 - 2.0 * static_cast<double>(report.count) /
                              static_cast<double>(std::size_t{1} << depth);
                CHECK(report.amplitude == doctest::Approx(closed).epsilon(1e-9));
            }
        }
    }

    SUBCASE("constant accepts, balanced rejects") {
        Rng rng(775);
        for (int iter = 0; iter < 40; ++iter) {
            const OracleTree t = random_oracle_tree(rng, 1 + iter % 4);
            const DJReport report = dj_report(t);
            if (report.classification == OracleClass::Constant) {
                CHECK(report.accept_probability ==
                      doctest::Approx(1.0).epsilon(1e-9));
            } else if (report.classification == OracleClass::Balanced) {
                CHECK(report.accept_probability ==
                      doctest::Approx(0.0).epsilon(1e-9));
            } else {
                CHECK(report.accept_probability ==
                      doctest::Approx(report.amplitude * report.amplitude)
                          .epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("oracle text round-trip") {
    const char* samples[] = {"I", "X", "(I,X)", "((X,I),(I,I))",
                             "( ( I , X ) , ( X , I ) )"};
    for (const char* text : samples) {
        const OracleTree t = parse_oracle(text);
        CHECK(parse_oracle(oracle_to_string(t)).depth() == t.depth());
        CHECK(oracle_to_string(parse_oracle(oracle_to_string(t))) ==
              oracle_to_string(t));
    }
    CHECK(oracle_to_string(parse_oracle("( ( I , X ) , ( X , I ) )")) ==
          "((I,X),(X,I))");

    CHECK_THROWS_AS(parse_oracle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle("(I,X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle("(I,(X,I))"), std::invalid_argument); // depths
    CHECK_THROWS_AS(parse_oracle("IX"), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle("Y"), std::invalid_argument);
}
