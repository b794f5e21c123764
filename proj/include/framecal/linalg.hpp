#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framecal/errors.hpp"

namespace framecal {

using Complex = std::complex<double>;

// Dense vector in a finite-dimensional complex Hilbert space.
class HilbertVector {
public:
    explicit HilbertVector(std::size_t n) : entries_(n) {}
    HilbertVector(std::initializer_list<Complex> init) : entries_(init) {}
    explicit HilbertVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

    static HilbertVector zero(std::size_t n) { return HilbertVector(n); }
    static HilbertVector basis(std::size_t n, std::size_t i);

    std::size_t dim() const { return entries_.size(); }
    Complex& operator[](std::size_t i) { return entries_[i]; }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Complex>& entries() const { return entries_; }

    double norm() const;

    HilbertVector& operator+=(const HilbertVector& other);
    HilbertVector& operator-=(const HilbertVector& other);
    HilbertVector& operator*=(Complex s);

private:
    std::vector<Complex> entries_;
};

HilbertVector operator+(HilbertVector a, const HilbertVector& b);
HilbertVector operator-(HilbertVector a, const HilbertVector& b);
HilbertVector operator*(Complex s, HilbertVector v);

// Inner product, linear in the first slot and conjugate-linear in the second:
// inner(f, g) = sum_i f_i * conj(g_i).
Complex inner(const HilbertVector& f, const HilbertVector& g);

// Dense square complex matrix, row-major storage.
class LinearOperator {
public:
    explicit LinearOperator(std::size_t n) : n_(n), a_(n * n) {}

    static LinearOperator identity(std::size_t n);
    static LinearOperator zero(std::size_t n) { return LinearOperator(n); }

    std::size_t dim() const { return n_; }
    Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    LinearOperator adjoint() const;
    HilbertVector apply(const HilbertVector& v) const;

    // a += s * u * v^adj, i.e. a_ij += s * u_i * conj(v_j).
    void add_scaled_outer(Complex s, const HilbertVector& u, const HilbertVector& v);

    LinearOperator& operator+=(const LinearOperator& other);
    LinearOperator& operator-=(const LinearOperator& other);
    LinearOperator& operator*=(Complex s);

    double frobenius_norm() const;
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<Complex> a_;
};

LinearOperator operator+(LinearOperator a, const LinearOperator& b);
LinearOperator operator-(LinearOperator a, const LinearOperator& b);
LinearOperator operator*(Complex s, LinearOperator a);
LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;   // ascending
    LinearOperator eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Requires max_ij |a_ij - conj(a_ji)| <= 1e-12 (throws NotHermitian); the
// symmetric part (A + A^adj)/2 is what gets diagonalized. Sweeps run until the
// off-diagonal Frobenius mass drops below 1e-13 * ||A||_F.
EigenDecomposition hermitian_eig(const LinearOperator& a);

// Spectral norm ||A||, computed as sqrt(lambda_max(A^adj A)).
double operator_norm(const LinearOperator& a);

// Hermitian positive-semidefinite square root. Eigenvalues below
// -1e-10 * (1 + ||A||) raise NotPSD; tiny negatives above that are clamped
// to zero before taking square roots.
LinearOperator psd_sqrt(const LinearOperator& a);

// Matrix inverse via LU with partial pivoting. Requires
// sigma_min > 1e-12 * sigma_max (throws Singular otherwise).
LinearOperator inverse(const LinearOperator& a);

}  // namespace framecal
