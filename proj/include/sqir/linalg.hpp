// SPDX-License-Identifier: Apache-2.0
//
// Dense complex matrices and the handful of linear-algebra operations the
// simulator semantics are built on: Kronecker products, qubit padding, basis
// kets, adjoints, and approximate/proportional comparison.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sqir {

using Complex = std::complex<double>;

// Default absolute, entrywise comparison tolerance. Gate matrices involve
// 1/sqrt(2) and e^{i*phi}; accumulated error over a few hundred gates stays
// far below this.
inline constexpr double kDefaultTolerance = 1e-9;

// Row-major dense complex matrix. Semantic objects carry power-of-two
// dimensions (unitaries and density matrices are 2^dim x 2^dim, state
// vectors 2^dim x 1), but the type itself allows arbitrary shapes.
// Values are immutable by convention after construction; every free
// operation below is a pure function of its inputs.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool is_vector() const { return cols_ == 1; }
    bool same_shape(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    // Row-major flat access; index = i*cols + j.
    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& scalar, const ComplexMatrix& m);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);

// sqrt(sum |a_ij|^2); for a column vector this is sqrt(re(v^dagger v)).
double norm(const ComplexMatrix& m);

// Kronecker product: entry ((i1*b.rows+i2),(j1*b.cols+j2)) = a(i1,j1)*b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// |b1 b2 ... bn> as a 2^n x 1 column, big-endian in qubit order: bits[0] is
// the leftmost (most significant) qubit, so the single 1 sits at index
// sum bits[k] * 2^(n-1-k). The empty list gives the 1x1 matrix [1].
// Throws std::invalid_argument if any bit is not 0 or 1.
ComplexMatrix basis_ket(const std::vector<int>& bits);

// I_{2^q} (x) op (x) I_{2^(dim-q-k)} for a 2^k x 2^k operator placed at qubit
// q of a dim-qubit register. Throws std::invalid_argument if op is not a
// square power-of-two matrix or the placement is out of bounds (q+k > dim).
ComplexMatrix pad(const ComplexMatrix& op, std::size_t q, std::size_t dim);

// True iff same shape and max entrywise absolute difference <= tol.
// Shape mismatch yields false, not an error.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTolerance);

// True iff u = c*v for some nonzero complex scalar c, within tol: all 2x2
// cross-determinants u_i*v_j - u_j*v_i vanish and u, v are both zero or
// both nonzero. The all-zero vector is proportional only to itself.
// Defined entrywise, so it applies to any pair of same-shaped matrices
// (equality up to a global scalar); shape mismatch yields false.
bool proportional(const ComplexMatrix& u, const ComplexMatrix& v,
                  double tol = kDefaultTolerance);

} // namespace sqir
