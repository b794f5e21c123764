#include "framecal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace framecal {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimensions " +
                                std::to_string(a) + " and " + std::to_string(b));
    }
}

}  // namespace

HilbertVector HilbertVector::basis(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexOutOfRange("basis index " + std::to_string(i) +
                                      " out of range for dimension " + std::to_string(n));
    HilbertVector v(n);
    v[i] = Complex(1.0, 0.0);
    return v;
}

double HilbertVector::norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

HilbertVector& HilbertVector::operator+=(const HilbertVector& other) {
    require_same_dim(dim(), other.dim(), "vector addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

HilbertVector& HilbertVector::operator-=(const HilbertVector& other) {
    require_same_dim(dim(), other.dim(), "vector subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

HilbertVector& HilbertVector::operator*=(Complex s) {
    for (Complex& z : entries_) z *= s;
    return *this;
}

HilbertVector operator+(HilbertVector a, const HilbertVector& b) { a += b; return a; }
HilbertVector operator-(HilbertVector a, const HilbertVector& b) { a -= b; return a; }
HilbertVector operator*(Complex s, HilbertVector v) { v *= s; return v; }

Complex inner(const HilbertVector& f, const HilbertVector& g) {
    require_same_dim(f.dim(), g.dim(), "inner product");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < f.dim(); ++i) acc += f[i] * std::conj(g[i]);
    return acc;
}

LinearOperator LinearOperator::identity(std::size_t n) {
    LinearOperator a(n);
    for (std::size_t i = 0; i < n; ++i) a.at(i, i) = Complex(1.0, 0.0);
    return a;
}

LinearOperator LinearOperator::adjoint() const {
    LinearOperator b(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            b.at(j, i) = std::conj(at(i, j));
    return b;
}

HilbertVector LinearOperator::apply(const HilbertVector& v) const {
    require_same_dim(n_, v.dim(), "operator application");
    HilbertVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc(0.0, 0.0);
        const Complex* row = a_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

void LinearOperator::add_scaled_outer(Complex s, const HilbertVector& u, const HilbertVector& v) {
    require_same_dim(n_, u.dim(), "outer product");
    require_same_dim(n_, v.dim(), "outer product");
    for (std::size_t i = 0; i < n_; ++i) {
        const Complex su = s * u[i];
        Complex* row = a_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) row[j] += su * std::conj(v[j]);
    }
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& other) {
    require_same_dim(n_, other.n_, "operator addition");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

LinearOperator& LinearOperator::operator-=(const LinearOperator& other) {
    require_same_dim(n_, other.n_, "operator subtraction");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

LinearOperator& LinearOperator::operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
}

double LinearOperator::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double LinearOperator::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

LinearOperator operator+(LinearOperator a, const LinearOperator& b) { a += b; return a; }
LinearOperator operator-(LinearOperator a, const LinearOperator& b) { a -= b; return a; }
LinearOperator operator*(Complex s, LinearOperator a) { a *= s; return a; }

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    require_same_dim(a.dim(), b.dim(), "operator composition");
    const std::size_t n = a.dim();
    LinearOperator c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

namespace {

// A^adj * A, assembled from the upper triangle so the result is exactly
// Hermitian in floating point.
LinearOperator gram_of(const LinearOperator& a) {
    const std::size_t n = a.dim();
    LinearOperator g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(a.at(k, i)) * a.at(k, j);
            g.at(i, j) = acc;
            if (j != i) g.at(j, i) = std::conj(acc);
        }
    }
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = Complex(g.at(i, i).real(), 0.0);
    return g;
}

double off_diagonal_norm(const LinearOperator& w) {
    const std::size_t n = w.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(w.at(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eig(const LinearOperator& a) {
    const std::size_t n = a.dim();

    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            asym = std::max(asym, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
    if (asym > 1e-12) {
        throw NotHermitian("matrix asymmetry " + std::to_string(asym) + " exceeds 1e-12");
    }

    LinearOperator w(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            w.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
        w.at(i, i) = Complex(w.at(i, i).real(), 0.0);
    }

    LinearOperator q = LinearOperator::identity(n);
    const double fro = w.frobenius_norm();
    const double target = 1e-13 * fro;

    if (fro > 0.0 && n > 1) {
        const double skip = target / (2.0 * static_cast<double>(n));
        bool converged = false;
        for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t r = p + 1; r < n; ++r) {
                    const Complex beta = w.at(p, r);
                    const double ab = std::abs(beta);
                    if (ab <= skip) continue;

                    const Complex phase = beta / ab;         // e^{i phi}
                    const Complex phase_c = std::conj(phase);
                    const double alpha = w.at(p, p).real();
                    const double gamma = w.at(r, r).real();
                    const double tau = (gamma - alpha) / (2.0 * ab);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    for (std::size_t i = 0; i < n; ++i) {
                        const Complex wip = w.at(i, p);
                        const Complex wir = w.at(i, r);
                        w.at(i, p) = c * wip - s * phase_c * wir;
                        w.at(i, r) = s * wip + c * phase_c * wir;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        const Complex wpj = w.at(p, j);
                        const Complex wrj = w.at(r, j);
                        w.at(p, j) = c * wpj - s * phase * wrj;
                        w.at(r, j) = s * wpj + c * phase * wrj;
                    }
                    w.at(p, r) = Complex(0.0, 0.0);
                    w.at(r, p) = Complex(0.0, 0.0);
                    w.at(p, p) = Complex(alpha - t * ab, 0.0);
                    w.at(r, r) = Complex(gamma + t * ab, 0.0);

                    for (std::size_t i = 0; i < n; ++i) {
                        const Complex qip = q.at(i, p);
                        const Complex qir = q.at(i, r);
                        q.at(i, p) = c * qip - s * phase_c * qir;
                        q.at(i, r) = s * qip + c * phase_c * qir;
                    }
                }
            }
            converged = off_diagonal_norm(w) <= target;
        }
        if (!converged) {
            throw ConsistencyError("jacobi eigensolver failed to converge in 60 sweeps");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w.at(i, i).real() < w.at(j, j).real();
    });

    EigenDecomposition dec{std::vector<double>(n), LinearOperator(n)};
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = w.at(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) dec.eigenvectors.at(i, k) = q.at(i, order[k]);
    }
    return dec;
}

double operator_norm(const LinearOperator& a) {
    if (a.max_abs() == 0.0) return 0.0;
    EigenDecomposition dec = hermitian_eig(gram_of(a));
    const double lam = dec.eigenvalues.back();
    return std::sqrt(std::max(0.0, lam));
}

LinearOperator psd_sqrt(const LinearOperator& a) {
    const std::size_t n = a.dim();
    EigenDecomposition dec = hermitian_eig(a);
    const double scale = std::max(std::abs(dec.eigenvalues.front()),
                                  std::abs(dec.eigenvalues.back()));
    if (dec.eigenvalues.front() < -1e-10 * (1.0 + scale)) {
        throw NotPSD("minimum eigenvalue " + std::to_string(dec.eigenvalues.front()) +
                     " is negative beyond tolerance");
    }
    LinearOperator r(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(0.0, dec.eigenvalues[k]);
        const double root = std::sqrt(lam);
        HilbertVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = dec.eigenvectors.at(i, k);
        r.add_scaled_outer(Complex(root, 0.0), col, col);
    }
    return r;
}

LinearOperator inverse(const LinearOperator& a) {
    const std::size_t n = a.dim();

    EigenDecomposition gram = hermitian_eig(gram_of(a));
    const double smax = std::sqrt(std::max(0.0, gram.eigenvalues.back()));
    const double smin = std::sqrt(std::max(0.0, gram.eigenvalues.front()));
    if (smax == 0.0 || smin <= 1e-12 * smax) {
        throw Singular("singular value ratio below 1e-12");
    }

    LinearOperator lu(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lu.at(i, j) = a.at(i, j);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu.at(i, k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (best == 0.0) throw Singular("zero pivot in LU factorization");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu.at(k, j), lu.at(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        const Complex inv_piv = Complex(1.0, 0.0) / lu.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = lu.at(i, k) * inv_piv;
            lu.at(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) lu.at(i, j) -= m * lu.at(k, j);
        }
    }

    LinearOperator inv(n);
    std::vector<Complex> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (perm[i] == col) ? Complex(1.0, 0.0)
                                                                    : Complex(0.0, 0.0);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu.at(i, j) * x[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu.at(i, j) * x[j];
            x[i] /= lu.at(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) inv.at(i, col) = x[i];
    }
    return inv;
}

}  // namespace framecal
