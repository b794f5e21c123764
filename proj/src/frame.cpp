#include "framecal/frame.hpp"

#include <cmath>
#include <utility>

namespace framecal {

const char* to_string(FrameClass c) {
    switch (c) {
        case FrameClass::BesselOnly: return "bessel-only";
        case FrameClass::Frame: return "frame";
        case FrameClass::Tight: return "tight";
        case FrameClass::Parseval: return "parseval";
    }
    return "unknown";
}

SampledFrame::SampledFrame(MeasureSpace space, std::vector<HilbertVector> vectors)
    : space_(std::move(space)), vectors_(std::move(vectors)) {
    if (space_.size() != vectors_.size()) {
        throw DimensionMismatch("frame has " + std::to_string(vectors_.size()) +
                                " vectors for " + std::to_string(space_.size()) + " atoms");
    }
    dim_ = vectors_.front().dim();
    if (dim_ == 0) throw DimensionMismatch("frame vectors must have dimension >= 1");
    for (const HilbertVector& v : vectors_) {
        if (v.dim() != dim_) {
            throw DimensionMismatch("frame vectors have mixed dimensions");
        }
    }
}

const HilbertVector& SampledFrame::vector(std::size_t i) const {
    if (i >= vectors_.size()) {
        throw IndexOutOfRange("frame atom index " + std::to_string(i) +
                              " out of range for " + std::to_string(vectors_.size()) + " atoms");
    }
    return vectors_[i];
}

SampledFrame SampledFrame::without_atom(std::size_t index) const {
    MeasureSpace reduced = space_.remove_atom(index);  // validates the index
    std::vector<HilbertVector> rest;
    rest.reserve(vectors_.size() - 1);
    for (std::size_t i = 0; i < vectors_.size(); ++i)
        if (i != index) rest.push_back(vectors_[i]);
    return SampledFrame(std::move(reduced), std::move(rest));
}

void require_same_space(const SampledFrame& f, const SampledFrame& g) {
    if (f.space() != g.space()) {
        throw SpaceMismatch("frames live over different measure spaces");
    }
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("frames map into Hilbert spaces of different dimension");
    }
}

SampledFrame frame_add(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    std::vector<HilbertVector> vs;
    vs.reserve(f.atom_count());
    for (std::size_t i = 0; i < f.atom_count(); ++i) vs.push_back(f.vector(i) + g.vector(i));
    return SampledFrame(f.space(), std::move(vs));
}

SampledFrame frame_sub(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    std::vector<HilbertVector> vs;
    vs.reserve(f.atom_count());
    for (std::size_t i = 0; i < f.atom_count(); ++i) vs.push_back(f.vector(i) - g.vector(i));
    return SampledFrame(f.space(), std::move(vs));
}

SampledFrame frame_scale(Complex s, const SampledFrame& f) {
    std::vector<HilbertVector> vs;
    vs.reserve(f.atom_count());
    for (std::size_t i = 0; i < f.atom_count(); ++i) vs.push_back(s * f.vector(i));
    return SampledFrame(f.space(), std::move(vs));
}

SampledFrame frame_map(const LinearOperator& u, const SampledFrame& f) {
    if (u.dim() != f.dim()) {
        throw DimensionMismatch("operator dimension does not match the frame's Hilbert space");
    }
    std::vector<HilbertVector> vs;
    vs.reserve(f.atom_count());
    for (std::size_t i = 0; i < f.atom_count(); ++i) vs.push_back(u.apply(f.vector(i)));
    return SampledFrame(f.space(), std::move(vs));
}

SampledFrame zero_frame(const MeasureSpace& space, std::size_t dim) {
    std::vector<HilbertVector> vs(space.size(), HilbertVector::zero(dim));
    return SampledFrame(space, std::move(vs));
}

CoefficientVector analysis(const SampledFrame& f, const HilbertVector& x) {
    if (x.dim() != f.dim()) {
        throw DimensionMismatch("analysis input dimension does not match the frame");
    }
    std::vector<Complex> values(f.atom_count());
    for (std::size_t i = 0; i < f.atom_count(); ++i) values[i] = inner(x, f.vector(i));
    return CoefficientVector(f.space(), std::move(values));
}

HilbertVector synthesis(const SampledFrame& f, const CoefficientVector& phi) {
    if (phi.space() != f.space()) {
        throw SpaceMismatch("coefficient vector lives over a different measure space");
    }
    HilbertVector out(f.dim());
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        const Complex c = f.weight(i) * phi[i];
        const HilbertVector& v = f.vector(i);
        for (std::size_t k = 0; k < f.dim(); ++k) out[k] += c * v[k];
    }
    return out;
}

LinearOperator frame_operator(const SampledFrame& f) {
    LinearOperator s(f.dim());
    for (std::size_t i = 0; i < f.atom_count(); ++i)
        s.add_scaled_outer(Complex(f.weight(i), 0.0), f.vector(i), f.vector(i));
    return s;
}

LinearOperator weighted_gram(const SampledFrame& f) {
    const std::size_t m = f.atom_count();
    LinearOperator g(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double w = std::sqrt(f.weight(i) * f.weight(j));
            const Complex val = w * inner(f.vector(j), f.vector(i));
            g.at(i, j) = val;
            if (j != i) g.at(j, i) = std::conj(val);
        }
        g.at(i, i) = Complex(g.at(i, i).real(), 0.0);
    }
    return g;
}

FrameBounds frame_bounds(const SampledFrame& f, double tol) {
    EigenDecomposition dec = hermitian_eig(frame_operator(f));
    const double lower = std::max(0.0, dec.eigenvalues.front());
    const double upper = std::max(0.0, dec.eigenvalues.back());

    FrameClass cls;
    if (lower <= tol * upper || upper == 0.0) {
        cls = FrameClass::BesselOnly;
    } else if (upper - lower <= tol * (1.0 + upper)) {
        const bool unit = std::abs(lower - 1.0) <= tol && std::abs(upper - 1.0) <= tol;
        cls = unit ? FrameClass::Parseval : FrameClass::Tight;
    } else {
        cls = FrameClass::Frame;
    }
    return FrameBounds{lower, upper, cls};
}

SampledFrame standard_dual(const SampledFrame& f) {
    FrameBounds bounds = frame_bounds(f);
    if (bounds.classification == FrameClass::BesselOnly) {
        throw NotAFrame("family has no positive lower frame bound (lower=" +
                        std::to_string(bounds.lower) + ", upper=" +
                        std::to_string(bounds.upper) + ")");
    }
    return frame_map(inverse(frame_operator(f)), f);
}

MinimalNormCheck minimal_norm_check(const SampledFrame& f, const HilbertVector& x,
                                    const CoefficientVector& phi) {
    if (x.dim() != f.dim()) {
        throw DimensionMismatch("vector dimension does not match the frame");
    }
    const HilbertVector rebuilt = synthesis(f, phi);
    const double rep_err = (rebuilt - x).norm();
    if (rep_err > 1e-8 * x.norm() + 1e-13) {
        throw NotARepresentation("coefficients reproduce the target only up to " +
                                 std::to_string(rep_err));
    }
    SampledFrame dual = standard_dual(f);
    const CoefficientVector canonical = analysis(dual, x);
    const CoefficientVector diff = phi - canonical;

    const double lhs = std::pow(phi.weighted_norm(), 2);
    const double rhs = std::pow(canonical.weighted_norm(), 2) +
                       std::pow(diff.weighted_norm(), 2);
    return MinimalNormCheck{lhs, rhs, std::abs(lhs - rhs)};
}

namespace {

// Rank of the weighted synthesis matrix via a Hermitian spectrum: full_rank
// over `take` rows/columns iff the take-th largest singular value exceeds
// tol * sigma_max.
bool full_rank(const std::vector<double>& eig, std::size_t take, double tol) {
    const double lam_max = std::max(0.0, eig.back());
    if (lam_max == 0.0) return false;
    const double smax = std::sqrt(lam_max);
    // eig is ascending with eig.size() >= take; the take-th largest is at
    // index size - take.
    const double lam = std::max(0.0, eig[eig.size() - take]);
    return std::sqrt(lam) > tol * smax;
}

}  // namespace

bool is_mu_complete(const SampledFrame& f, double tol) {
    EigenDecomposition dec = hermitian_eig(frame_operator(f));
    return full_rank(dec.eigenvalues, f.dim(), tol);
}

bool is_l2_independent(const SampledFrame& f, double tol) {
    if (f.atom_count() > f.dim()) return false;
    EigenDecomposition dec = hermitian_eig(weighted_gram(f));
    return full_rank(dec.eigenvalues, f.atom_count(), tol);
}

bool is_riesz_basis(const SampledFrame& f, double tol) {
    const bool via_rank = is_mu_complete(f, tol) && is_l2_independent(f, tol);

    bool via_spectrum = false;
    if (f.atom_count() == f.dim()) {
        EigenDecomposition dec = hermitian_eig(frame_operator(f));
        via_spectrum = full_rank(dec.eigenvalues, f.dim(), tol);
    }

    if (via_rank != via_spectrum) {
        throw ConsistencyError("riesz-basis routes disagree (rank route " +
                               std::to_string(via_rank) + ", spectrum route " +
                               std::to_string(via_spectrum) + ")");
    }
    return via_rank;
}

bool is_orthonormal_basis(const SampledFrame& f, double tol) {
    const LinearOperator gram = weighted_gram(f);
    const double gram_defect =
        (gram - LinearOperator::identity(f.atom_count())).max_abs();
    if (gram_defect > tol) return false;
    return frame_bounds(f, tol).classification == FrameClass::Parseval;
}

}  // namespace framecal
