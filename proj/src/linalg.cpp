// SPDX-License-Identifier: Apache-2.0

#include "sqir/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqir {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument(
            std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) +
            "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
            "x" + std::to_string(b.cols()) + ")");
    }
}

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.entries()[i] = a.entries()[i] + b.entries()[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.entries()[i] = a.entries()[i] - b.entries()[i];
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "operator*: inner dimensions disagree (" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous over both b and out.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(const Complex& scalar, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out.entries()[i] = scalar * m.entries()[i];
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        sum += m(i, i);
    }
    return sum;
}

double norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const Complex& e : m.entries()) {
        sum += std::norm(e);
    }
    return std::sqrt(sum);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex aij = a(i1, j1);
            if (aij == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
                }
            }
        }
    }
    return out;
}

ComplexMatrix basis_ket(const std::vector<int>& bits) {
    std::size_t index = 0;
    for (int bit : bits) {
        if (bit != 0 && bit != 1) {
            throw std::invalid_argument("basis_ket: bits must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::size_t>(bit);
    }
    ComplexMatrix ket(std::size_t{1} << bits.size(), 1);
    ket(index, 0) = Complex(1.0, 0.0);
    return ket;
}

ComplexMatrix pad(const ComplexMatrix& op, std::size_t q, std::size_t dim) {
    if (op.rows() != op.cols() || !is_power_of_two(op.rows())) {
        throw std::invalid_argument("pad: operator must be square 2^k x 2^k");
    }
    const std::size_t k = log2_exact(op.rows());
    if (q + k > dim) {
        throw std::invalid_argument(
            "pad: placement out of bounds (qubit " + std::to_string(q) +
            ", operator on " + std::to_string(k) + " qubit(s), register of " +
            std::to_string(dim) + ")");
    }
    const std::size_t left = std::size_t{1} << q;
    const std::size_t right = std::size_t{1} << (dim - q - k);
    return kron(kron(ComplexMatrix::identity(left), op),
                ComplexMatrix::identity(right));
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (!a.same_shape(b)) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.entries()[i] - b.entries()[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool proportional(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
    if (!u.same_shape(v)) {
        return false;
    }
    const auto& ue = u.entries();
    const auto& ve = v.entries();

    double umax = 0.0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < ue.size(); ++i) {
        umax = std::max(umax, std::abs(ue[i]));
        vmax = std::max(vmax, std::abs(ve[i]));
    }
    const bool u_zero = umax <= tol;
    const bool v_zero = vmax <= tol;
    if (u_zero || v_zero) {
        // The all-zero vector is proportional only to the all-zero vector.
        return u_zero == v_zero;
    }
    for (std::size_t i = 0; i < ue.size(); ++i) {
        for (std::size_t j = i + 1; j < ue.size(); ++j) {
            if (std::abs(ue[i] * ve[j] - ue[j] * ve[i]) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace sqir
