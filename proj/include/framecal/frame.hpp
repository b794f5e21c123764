#pragma once

#include <string>
#include <vector>

#include "framecal/errors.hpp"
#include "framecal/linalg.hpp"
#include "framecal/measure.hpp"

namespace framecal {

enum class FrameClass { BesselOnly, Frame, Tight, Parseval };

const char* to_string(FrameClass c);

struct FrameBounds {
    double lower;       // largest valid lower frame bound (min eigenvalue of S)
    double upper;       // smallest valid upper bound (max eigenvalue of S)
    FrameClass classification;
};

// A sampled family over a finitely-atomic measure space: one Hilbert-space
// vector per atom. The family need not be a frame; classification happens
// in frame_bounds.
class SampledFrame {
public:
    SampledFrame(MeasureSpace space, std::vector<HilbertVector> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t atom_count() const { return vectors_.size(); }
    const MeasureSpace& space() const { return space_; }
    const HilbertVector& vector(std::size_t i) const;
    double weight(std::size_t i) const { return space_.weight(i); }

    // Copy with one atom dropped (both the weight and the vector).
    SampledFrame without_atom(std::size_t index) const;

private:
    MeasureSpace space_;
    std::vector<HilbertVector> vectors_;
    std::size_t dim_;
};

// Atomwise algebra; operands must share the same measure space.
SampledFrame frame_add(const SampledFrame& f, const SampledFrame& g);
SampledFrame frame_sub(const SampledFrame& f, const SampledFrame& g);
SampledFrame frame_scale(Complex s, const SampledFrame& f);
// Atomwise image { u F_i } over the same space.
SampledFrame frame_map(const LinearOperator& u, const SampledFrame& f);
SampledFrame zero_frame(const MeasureSpace& space, std::size_t dim);

void require_same_space(const SampledFrame& f, const SampledFrame& g);

// Analysis: phi_i = <x, F_i>.
CoefficientVector analysis(const SampledFrame& f, const HilbertVector& x);

// Synthesis: sum_i w_i phi_i F_i. phi must live over f's measure space.
HilbertVector synthesis(const SampledFrame& f, const CoefficientVector& phi);

// Frame operator S = sum_i w_i F_i F_i^adj (composition of synthesis after
// analysis). Always Hermitian and positive semidefinite.
LinearOperator frame_operator(const SampledFrame& f);

// Weighted Gram matrix over atoms: G_ij = sqrt(w_i w_j) <F_j, F_i>. Shares
// its nonzero spectrum with the frame operator.
LinearOperator weighted_gram(const SampledFrame& f);

// Tight spectral frame bounds and classification at relative tolerance tol:
// BesselOnly when lower <= tol * upper, Tight when the spectrum collapses to
// a point, Parseval when that point is 1.
FrameBounds frame_bounds(const SampledFrame& f, double tol = 1e-8);

// Canonical dual { S^{-1} F_i } over the same space. Throws NotAFrame when
// the family has no positive lower bound.
SampledFrame standard_dual(const SampledFrame& f);

struct MinimalNormCheck {
    double lhs;       // ||phi||_mu^2
    double rhs;       // ||canonical||_mu^2 + ||phi - canonical||_mu^2
    double residual;  // |lhs - rhs|
};

// Verifies the Pythagorean decomposition of any synthesis representation of x
// against the canonical coefficients from the standard dual. phi must
// reproduce x up to 1e-8 * ||x|| (plus a 1e-13 floor); NotARepresentation
// otherwise.
MinimalNormCheck minimal_norm_check(const SampledFrame& f, const HilbertVector& x,
                                    const CoefficientVector& phi);

// Rank checks use singular values above tol * sigma_max.
bool is_mu_complete(const SampledFrame& f, double tol = 1e-10);
bool is_l2_independent(const SampledFrame& f, double tol = 1e-10);

// Riesz basis = complete + independent. Computed through two routes (frame
// operator spectrum and weighted Gram spectrum) that must agree; a
// disagreement raises ConsistencyError.
bool is_riesz_basis(const SampledFrame& f, double tol = 1e-10);

// True iff the weighted Gram equals the identity within tol (entrywise) and
// the family is Parseval at the same tolerance.
bool is_orthonormal_basis(const SampledFrame& f, double tol = 1e-8);

}  // namespace framecal
