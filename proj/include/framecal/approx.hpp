#pragma once

#include <cstdint>

#include "framecal/duality.hpp"
#include "framecal/frame.hpp"

namespace framecal {

struct DefectReport {
    double defect;              // ||I - T_G T_F^adj||
    bool is_approx_dual;        // defect < 1, strictly
    bool at_boundary;           // |defect - 1| <= 1e-12
    double guaranteed_lower_f;  // (1-defect)^2 / B_G when approx dual, else 0
    double guaranteed_lower_g;  // (1-defect)^2 / B_F when approx dual, else 0
};

// Duality defect of the pair. Both norm variants ||I - T_G T_F^adj|| and
// ||I - T_F T_G^adj|| are computed and must agree to 1e-10
// (ConsistencyError). Approximate duality demands a strictly smaller defect
// than 1; a defect of exactly 1 (within 1e-12) sets at_boundary so callers
// can flag the knife-edge case.
DefectReport defect(const SampledFrame& f, const SampledFrame& g);

struct BoundCheck {
    double guaranteed;
    double actual;
};

// Lower frame bound guarantee for f from an approximate dual g:
// A_F >= (1-defect)^2 / B_G with the tight Bessel bound of g. The computed
// bound must beat the guarantee (ConsistencyError otherwise).
BoundCheck guaranteed_bound_check(const SampledFrame& f, const SampledFrame& g);

struct SumFrameCheck {
    double lower_sum;  // A_F + A_G
    double actual;     // lower bound of the atomwise sum family
};

// The atomwise sum of an approximately dual pair is a frame with lower bound
// at least A_F + A_G.
SumFrameCheck sum_frame_check(const SampledFrame& f, const SampledFrame& g);

// Turns an approximate dual into an exact one: returns Theta^adj F with
// Theta = cross_operator(f, g)^{-1}, which forms a dual pair with g.
SampledFrame exactify(const SampledFrame& f, const SampledFrame& g);

// Transport of a dual pair by arbitrary operators: the defect of (UF, VG)
// equals ||I - V U^adj|| exactly; the report's approx-dual verdict follows.
DefectReport transport_approx(const SampledFrame& f, const SampledFrame& g,
                              const LinearOperator& u, const LinearOperator& v);

struct DouglasFactor {
    LinearOperator d;      // minimal-norm solution of T_F T_G^adj = S^{1/2} D
    bool dd_star_ok;       // max eigenvalue of D D^adj <= B_G + 1e-9
    double defect_via_d;   // ||I - S^{1/2} D||
    double dd_star_max;    // max eigenvalue of D D^adj
    double factor_residual;
};

// Factorization T_F T_G^adj = S_F^{1/2} D with D = S^{-1/2} T_F T_G^adj.
// defect_via_d must match the adjoint-route defect of (g, f) to 1e-10.
DouglasFactor douglas_factor(const SampledFrame& f, const SampledFrame& g);

// Approximate dual from a contraction D (||I - S^{1/2} D|| < 1) and a kernel
// family K (cross_operator(f, k) = 0 within 1e-10):
// G_i = D^adj S^{-1/2} F_i + K_i, with defect(f, G) = ||I - S^{1/2} D||.
SampledFrame build_approx_dual_kernel(const SampledFrame& f, const LinearOperator& d,
                                      const SampledFrame& k);

// Approximate dual from a contraction D and a dual partner K of f:
// G_i = D^adj S^{-1/2} F_i - F_i + S K_i, so that T_F T_G^adj = S^{1/2} D.
SampledFrame build_approx_dual_dualpair(const SampledFrame& f, const LinearOperator& d,
                                        const SampledFrame& k);

enum class PerturbationKind { ParsevalPerturb, AnalysisPerturb, DualPairPerturb };
enum class CertificateMode { ExactCertificate, RandomizedSearch };

const char* to_string(PerturbationKind k);
const char* to_string(CertificateMode m);

struct PerturbationCertificate {
    PerturbationKind kind;
    double lambda;
    double gamma;
    bool hypothesis_ok;
    CertificateMode mode;
    int trials;               // probes searched; 0 for exact certificates
    double lambda_min_valid;  // smallest valid lambda (AnalysisPerturb only)
    bool smallness_ok;        // kind-specific smallness condition
    double predicted_defect_bound;
    double observed_defect;
};

// Perturbation of a Parseval frame f by g under the two-parameter hypothesis
// ||T_F phi - T_G phi|| <= lambda ||T_F phi|| + gamma ||phi||_mu. The
// hypothesis is decided exactly when lambda = 0 (operator norm) or when g is
// a scalar multiple of f; otherwise a randomized search over `trials`
// unit-sphere coefficient vectors plus directed probes looks for violations.
// Predicted defect bound: lambda + gamma (valid when lambda + gamma < 1).
PerturbationCertificate perturb_parseval(const SampledFrame& f, const SampledFrame& g,
                                         double lambda, double gamma, int trials = 10000,
                                         std::uint64_t seed = 42);

// Perturbation of the analysis map of a dual pair (f, g) by k. The
// hypothesis integral is a squared operator norm, so it is decided exactly:
// lambda_min_valid = ||T_F^adj - T_K^adj||^2. Predicted defect bound:
// sqrt(lambda * B_G) (valid when lambda * B_G < 1).
PerturbationCertificate perturb_analysis(const SampledFrame& f, const SampledFrame& g,
                                         const SampledFrame& k, double lambda);

// Perturbation of the synthesis map of a dual pair (f, g) by k under
// ||T_F phi - T_K phi|| <= lambda ||T_F phi|| + gamma ||phi||_mu. Exact when
// lambda = 0 or k is a scalar multiple of f, randomized otherwise. Predicted
// defect bound: lambda + gamma sqrt(B_G) (valid when < 1).
PerturbationCertificate perturb_dualpair(const SampledFrame& f, const SampledFrame& g,
                                         const SampledFrame& k, double lambda, double gamma,
                                         int trials = 10000, std::uint64_t seed = 42);

}  // namespace framecal
