#include "framecal/approx.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace framecal {

namespace {

double top_eig(const LinearOperator& a) { return hermitian_eig(a).eigenvalues.back(); }

double bottom_eig(const LinearOperator& a) { return hermitian_eig(a).eigenvalues.front(); }

// ||T_F - T_G|| = ||T_F^adj - T_G^adj|| = sqrt(lambda_max(S_{F-G})).
double synthesis_gap(const SampledFrame& f, const SampledFrame& g) {
    const double lam = top_eig(frame_operator(frame_sub(f, g)));
    return std::sqrt(std::max(0.0, lam));
}

// Scalar c with G_i = c F_i for all atoms, when one exists.
std::optional<Complex> scalar_multiple(const SampledFrame& f, const SampledFrame& g) {
    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        const double nn = f.vector(i).norm();
        if (nn > best) {
            best = nn;
            anchor = i;
        }
    }
    if (best <= 0.0) return std::nullopt;
    const Complex c = inner(g.vector(anchor), f.vector(anchor)) / (best * best);
    double scale = 0.0;
    for (std::size_t i = 0; i < f.atom_count(); ++i)
        scale = std::max({scale, f.vector(i).norm(), g.vector(i).norm()});
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        const HilbertVector diff = g.vector(i) - c * f.vector(i);
        if (diff.norm() > 1e-12 * (1.0 + std::abs(c)) * (1.0 + scale)) return std::nullopt;
    }
    return c;
}

CoefficientVector random_coefficients(const MeasureSpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Complex> values(space.size());
    for (auto& v : values) v = Complex(dist(rng), dist(rng));
    return CoefficientVector(space, std::move(values));
}

bool probe_satisfies(const SampledFrame& f, const SampledFrame& k, const CoefficientVector& phi,
                     double lambda, double gamma) {
    const double lhs = (synthesis(f, phi) - synthesis(k, phi)).norm();
    const double rhs = lambda * synthesis(f, phi).norm() + gamma * phi.weighted_norm();
    return lhs <= rhs + 1e-12 * (1.0 + rhs);
}

// Randomized hunt for a violation of
// ||T_F phi - T_K phi|| <= lambda ||T_F phi|| + gamma ||phi||_mu.
// On top of `trials` random sphere probes, the coefficient images of random
// Hilbert vectors and of the worst-case vector of I - cross are checked
// through `chain_base`; those are the probes the defect bound actually runs
// through, so a bound violation cannot hide from the search.
bool hypothesis_search(const SampledFrame& f, const SampledFrame& k,
                       const SampledFrame& chain_base, double lambda, double gamma, int trials,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        if (!probe_satisfies(f, k, random_coefficients(f.space(), rng), lambda, gamma))
            return false;
    }
    std::normal_distribution<double> dist(0.0, 1.0);
    const std::size_t n = f.dim();
    for (int t = 0; t < 32; ++t) {
        HilbertVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Complex(dist(rng), dist(rng));
        if (!probe_satisfies(f, k, analysis(chain_base, x), lambda, gamma)) return false;
    }
    const LinearOperator gap =
        LinearOperator::identity(n) - cross_operator(chain_base, k);
    const EigenDecomposition eig = hermitian_eig(gap.adjoint() * gap);
    HilbertVector worst(n);
    for (std::size_t i = 0; i < n; ++i) worst[i] = eig.eigenvectors.at(i, n - 1);
    return probe_satisfies(f, k, analysis(chain_base, worst), lambda, gamma);
}

void require_nonnegative(double lambda, double gamma, const char* who) {
    if (lambda < 0.0 || gamma < 0.0)
        throw HypothesisViolated(std::string(who) + ": perturbation parameters must be >= 0");
}

}  // namespace

DefectReport defect(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    const LinearOperator id = LinearOperator::identity(f.dim());
    const double direct = operator_norm(id - cross_operator(f, g));
    const double adjoint_route = operator_norm(id - cross_operator(g, f));
    if (std::abs(direct - adjoint_route) > 1e-10)
        throw ConsistencyError("defect: norm variants disagree");

    DefectReport rep;
    rep.defect = direct;
    rep.is_approx_dual = direct < 1.0;
    rep.at_boundary = std::abs(direct - 1.0) <= 1e-12;
    rep.guaranteed_lower_f = 0.0;
    rep.guaranteed_lower_g = 0.0;
    if (rep.is_approx_dual) {
        const EigenDecomposition eig_f = hermitian_eig(frame_operator(f));
        const EigenDecomposition eig_g = hermitian_eig(frame_operator(g));
        const double hold = (1.0 - direct) * (1.0 - direct);
        rep.guaranteed_lower_f = hold / eig_g.eigenvalues.back();
        rep.guaranteed_lower_g = hold / eig_f.eigenvalues.back();
        const double slack =
            1e-9 * (1.0 + std::max(eig_f.eigenvalues.back(), eig_g.eigenvalues.back()));
        if (eig_f.eigenvalues.front() < rep.guaranteed_lower_f - slack ||
            eig_g.eigenvalues.front() < rep.guaranteed_lower_g - slack)
            throw ConsistencyError("defect: guaranteed lower bound beats the computed bound");
    }
    return rep;
}

BoundCheck guaranteed_bound_check(const SampledFrame& f, const SampledFrame& g) {
    const DefectReport rep = defect(f, g);
    if (!rep.is_approx_dual)
        throw NotApproxDual("guaranteed_bound_check: defect is not below 1");
    BoundCheck chk;
    chk.guaranteed = rep.guaranteed_lower_f;
    chk.actual = bottom_eig(frame_operator(f));
    if (chk.actual < chk.guaranteed - 1e-9)
        throw ConsistencyError("guaranteed_bound_check: guarantee beats the computed bound");
    return chk;
}

SumFrameCheck sum_frame_check(const SampledFrame& f, const SampledFrame& g) {
    const DefectReport rep = defect(f, g);
    if (!rep.is_approx_dual) throw NotApproxDual("sum_frame_check: defect is not below 1");
    SumFrameCheck chk;
    chk.lower_sum = bottom_eig(frame_operator(f)) + bottom_eig(frame_operator(g));
    chk.actual = bottom_eig(frame_operator(frame_add(f, g)));
    if (chk.actual < chk.lower_sum - 1e-9)
        throw ConsistencyError("sum_frame_check: sum bound beats the computed bound");
    return chk;
}

SampledFrame exactify(const SampledFrame& f, const SampledFrame& g) {
    const DefectReport rep = defect(f, g);
    if (!rep.is_approx_dual) throw NotApproxDual("exactify: defect is not below 1");
    const LinearOperator theta = inverse(cross_operator(f, g));
    SampledFrame out = frame_map(theta.adjoint(), f);
    const double tol = 1e-9 * (1.0 + 1.0 / (1.0 - rep.defect));
    if (!is_dual_pair(out, g, tol).is_dual)
        throw ConsistencyError("exactify: result failed dual verification");
    return out;
}

DefectReport transport_approx(const SampledFrame& f, const SampledFrame& g,
                              const LinearOperator& u, const LinearOperator& v) {
    const DualPairReport pre = is_dual_pair(f, g);
    if (!pre.is_dual) throw NotDualPair("transport_approx: (f, g) is not a dual pair");
    if (u.dim() != f.dim() || v.dim() != f.dim())
        throw DimensionMismatch("transport_approx: operator dimension mismatch");
    DefectReport rep = defect(frame_map(u, f), frame_map(v, g));
    const double predicted =
        operator_norm(LinearOperator::identity(f.dim()) - v * u.adjoint());
    const double slack = 1e-10 + operator_norm(u) * operator_norm(v) * pre.residual;
    if (std::abs(rep.defect - predicted) > slack)
        throw ConsistencyError("transport_approx: defect does not match ||I - V U^adj||");
    return rep;
}

DouglasFactor douglas_factor(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    if (frame_bounds(f).classification == FrameClass::BesselOnly)
        throw NotAFrame("douglas_factor: first family is not a frame");
    const LinearOperator s = frame_operator(f);
    const LinearOperator root = psd_sqrt(s);
    const LinearOperator x = cross_operator(g, f);  // T_F T_G^adj

    DouglasFactor out{LinearOperator::zero(f.dim()), false, 0.0, 0.0, 0.0};
    out.d = inverse(root) * x;
    out.factor_residual = operator_norm(x - root * out.d);
    if (out.factor_residual > 1e-10 * (1.0 + operator_norm(x)))
        throw ConsistencyError("douglas_factor: factorization residual too large");

    const double dnorm = operator_norm(out.d);
    out.dd_star_max = dnorm * dnorm;
    out.dd_star_ok = out.dd_star_max <= top_eig(frame_operator(g)) + 1e-9;

    const LinearOperator id = LinearOperator::identity(f.dim());
    out.defect_via_d = operator_norm(id - root * out.d);
    const double direct = operator_norm(id - x);
    if (std::abs(out.defect_via_d - direct) > 1e-10)
        throw ConsistencyError("douglas_factor: defect through D disagrees with direct route");
    return out;
}

SampledFrame build_approx_dual_kernel(const SampledFrame& f, const LinearOperator& d,
                                      const SampledFrame& k) {
    require_same_space(f, k);
    if (d.dim() != f.dim())
        throw DimensionMismatch("build_approx_dual_kernel: operator dimension mismatch");
    if (frame_bounds(f).classification == FrameClass::BesselOnly)
        throw NotAFrame("build_approx_dual_kernel: family is not a frame");
    const LinearOperator root = psd_sqrt(frame_operator(f));
    const double contraction =
        operator_norm(LinearOperator::identity(f.dim()) - root * d);
    if (contraction >= 1.0)
        throw HypothesisViolated("build_approx_dual_kernel: ||I - S^{1/2} D|| must be below 1");
    const double kres = operator_norm(cross_operator(f, k));
    if (kres > 1e-10)
        throw KernelConditionViolated("build_approx_dual_kernel: k is not in the kernel");

    SampledFrame out = frame_add(frame_map(d.adjoint() * inverse(root), f), k);
    const DefectReport rep = defect(f, out);
    if (std::abs(rep.defect - contraction) > 1e-9 + kres)
        throw ConsistencyError("build_approx_dual_kernel: defect does not match the contraction");
    return out;
}

SampledFrame build_approx_dual_dualpair(const SampledFrame& f, const LinearOperator& d,
                                        const SampledFrame& k) {
    require_same_space(f, k);
    if (d.dim() != f.dim())
        throw DimensionMismatch("build_approx_dual_dualpair: operator dimension mismatch");
    const DualPairReport pre = is_dual_pair(f, k);
    if (!pre.is_dual)
        throw NotDualPair("build_approx_dual_dualpair: (f, k) is not a dual pair");
    const LinearOperator s = frame_operator(f);
    const LinearOperator root = psd_sqrt(s);
    const double contraction =
        operator_norm(LinearOperator::identity(f.dim()) - root * d);
    if (contraction >= 1.0)
        throw HypothesisViolated(
            "build_approx_dual_dualpair: ||I - S^{1/2} D|| must be below 1");

    SampledFrame out =
        frame_add(frame_sub(frame_map(d.adjoint() * inverse(root), f), f), frame_map(s, k));
    // proof identity: T_F T_G^adj = S^{1/2} D, up to the dual-pair residual
    const double slack = 1e-9 + pre.residual * top_eig(s);
    if (operator_norm(cross_operator(out, f) - root * d) > slack)
        throw ConsistencyError(
            "build_approx_dual_dualpair: synthesis product does not factor through D");
    return out;
}

const char* to_string(PerturbationKind k) {
    switch (k) {
        case PerturbationKind::ParsevalPerturb: return "parseval";
        case PerturbationKind::AnalysisPerturb: return "analysis";
        case PerturbationKind::DualPairPerturb: return "dual-pair";
    }
    return "unknown";
}

const char* to_string(CertificateMode m) {
    return m == CertificateMode::ExactCertificate ? "exact" : "randomized";
}

PerturbationCertificate perturb_parseval(const SampledFrame& f, const SampledFrame& g,
                                         double lambda, double gamma, int trials,
                                         std::uint64_t seed) {
    require_nonnegative(lambda, gamma, "perturb_parseval");
    require_same_space(f, g);
    const FrameBounds fb = frame_bounds(f);
    if (fb.classification != FrameClass::Parseval)
        throw NotParseval("perturb_parseval: family is not Parseval");
    const double parseval_defect =
        operator_norm(frame_operator(f) - LinearOperator::identity(f.dim()));

    PerturbationCertificate cert;
    cert.kind = PerturbationKind::ParsevalPerturb;
    cert.lambda = lambda;
    cert.gamma = gamma;
    cert.lambda_min_valid = 0.0;
    cert.trials = 0;

    if (lambda == 0.0) {
        cert.mode = CertificateMode::ExactCertificate;
        cert.hypothesis_ok = synthesis_gap(f, g) <= gamma + 1e-12 * (1.0 + gamma);
    } else if (const auto c = scalar_multiple(f, g)) {
        cert.mode = CertificateMode::ExactCertificate;
        const double excess = std::max(0.0, std::abs(1.0 - *c) - lambda);
        cert.hypothesis_ok = excess * std::sqrt(fb.upper) <= gamma + 1e-12 * (1.0 + gamma);
    } else {
        cert.mode = CertificateMode::RandomizedSearch;
        cert.trials = trials;
        cert.hypothesis_ok = hypothesis_search(f, g, f, lambda, gamma, trials, seed);
    }

    cert.smallness_ok = lambda + gamma < 1.0;
    cert.predicted_defect_bound = lambda + gamma;
    cert.observed_defect = defect(f, g).defect;
    if (cert.hypothesis_ok && cert.smallness_ok) {
        const double slack = 1e-9 + parseval_defect * (1.0 + lambda + gamma);
        if (cert.observed_defect > cert.predicted_defect_bound + slack)
            throw ConsistencyError("perturb_parseval: observed defect exceeds the certified bound");
    }
    return cert;
}

PerturbationCertificate perturb_analysis(const SampledFrame& f, const SampledFrame& g,
                                         const SampledFrame& k, double lambda) {
    require_nonnegative(lambda, 0.0, "perturb_analysis");
    require_same_space(f, k);
    const DualPairReport pre = is_dual_pair(f, g);
    if (!pre.is_dual) throw NotDualPair("perturb_analysis: (f, g) is not a dual pair");

    PerturbationCertificate cert;
    cert.kind = PerturbationKind::AnalysisPerturb;
    cert.lambda = lambda;
    cert.gamma = 0.0;
    cert.mode = CertificateMode::ExactCertificate;
    cert.trials = 0;

    const double gap = synthesis_gap(f, k);
    cert.lambda_min_valid = gap * gap;
    cert.hypothesis_ok = lambda >= cert.lambda_min_valid - 1e-10;

    const double bg = top_eig(frame_operator(g));
    cert.smallness_ok = lambda * bg < 1.0;
    cert.predicted_defect_bound = std::sqrt(lambda * bg);
    cert.observed_defect = defect(g, k).defect;
    if (cert.hypothesis_ok && cert.smallness_ok) {
        const double slack = 1e-9 + pre.residual;
        if (cert.observed_defect > cert.predicted_defect_bound + slack)
            throw ConsistencyError("perturb_analysis: observed defect exceeds the certified bound");
    }
    return cert;
}

PerturbationCertificate perturb_dualpair(const SampledFrame& f, const SampledFrame& g,
                                         const SampledFrame& k, double lambda, double gamma,
                                         int trials, std::uint64_t seed) {
    require_nonnegative(lambda, gamma, "perturb_dualpair");
    require_same_space(f, k);
    const DualPairReport pre = is_dual_pair(f, g);
    if (!pre.is_dual) throw NotDualPair("perturb_dualpair: (f, g) is not a dual pair");

    PerturbationCertificate cert;
    cert.kind = PerturbationKind::DualPairPerturb;
    cert.lambda = lambda;
    cert.gamma = gamma;
    cert.lambda_min_valid = 0.0;
    cert.trials = 0;

    if (lambda == 0.0) {
        cert.mode = CertificateMode::ExactCertificate;
        cert.hypothesis_ok = synthesis_gap(f, k) <= gamma + 1e-12 * (1.0 + gamma);
    } else if (const auto c = scalar_multiple(f, k)) {
        cert.mode = CertificateMode::ExactCertificate;
        const double excess = std::max(0.0, std::abs(1.0 - *c) - lambda);
        const double bf_root = std::sqrt(top_eig(frame_operator(f)));
        cert.hypothesis_ok = excess * bf_root <= gamma + 1e-12 * (1.0 + gamma);
    } else {
        cert.mode = CertificateMode::RandomizedSearch;
        cert.trials = trials;
        cert.hypothesis_ok = hypothesis_search(f, k, g, lambda, gamma, trials, seed);
    }

    const double bg_root = std::sqrt(top_eig(frame_operator(g)));
    cert.smallness_ok = lambda + gamma * bg_root < 1.0;
    cert.predicted_defect_bound = lambda + gamma * bg_root;
    cert.observed_defect = defect(g, k).defect;
    if (cert.hypothesis_ok && cert.smallness_ok) {
        const double slack = 1e-9 + pre.residual * (1.0 + lambda);
        if (cert.observed_defect > cert.predicted_defect_bound + slack)
            throw ConsistencyError("perturb_dualpair: observed defect exceeds the certified bound");
    }
    return cert;
}

}  // namespace framecal
