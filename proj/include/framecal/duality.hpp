#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "framecal/frame.hpp"

namespace framecal {

// Mixed frame operator T_G T_F^adj = sum_i w_i G_i F_i^adj. Both families
// must share the same measure space and Hilbert space.
LinearOperator cross_operator(const SampledFrame& f, const SampledFrame& g);

struct DualPairReport {
    double residual;  // ||I - cross_operator(f, g)||
    bool is_dual;     // residual <= tol
    double tol;
};

// Checks T_G T_F^adj = I. The residual is also computed through the adjoint
// route ||I - T_F T_G^adj||; the two must agree to 1e-10 (ConsistencyError).
DualPairReport is_dual_pair(const SampledFrame& f, const SampledFrame& g, double tol = 1e-8);

// Standard dual of f plus a kernel family h with cross_operator(f, h) = 0
// (within 1e-10; KernelConditionViolated otherwise). Every dual of f arises
// this way.
SampledFrame dual_from_kernel(const SampledFrame& f, const SampledFrame& h);

// alpha*g + (1-alpha)*k for two duals g, k of f; dual for every complex
// alpha.
SampledFrame affine_dual(const SampledFrame& f, const SampledFrame& g, const SampledFrame& k,
                         Complex alpha, double tol = 1e-8);

// (u f, v g) stays a dual pair when v u^adj = I (within 1e-10;
// TransportConditionViolated otherwise).
std::pair<SampledFrame, SampledFrame> transport_dual(const SampledFrame& f,
                                                     const SampledFrame& g,
                                                     const LinearOperator& u,
                                                     const LinearOperator& v,
                                                     double tol = 1e-8);

// Returns whether (f, u g) is a dual pair at tol. When it is, u must equal
// the identity up to tol + ||u|| * residual(f, g); a violation of that
// implication raises ConsistencyError.
bool dual_modifier_identity_check(const SampledFrame& f, const SampledFrame& g,
                                  const LinearOperator& u, double tol = 1e-8);

struct RemovalReport {
    Complex product;              // mu0 * <F0, G0>
    bool removable;               // |product - 1| > tol
    double constant;              // C = B_G ||F0||^2 / |1 - product|^2
    double guaranteed_lower;      // (1/B_G) / (1 + C mu0)
    double guaranteed_lower_alt;  // A_F / (1 + C mu0), never worse in practice
    double actual_lower;          // lower bound of f with the atom removed
    double atom_weight;           // mu0
};

// Removal of one atom from a dual pair: when mu0 <F0, G0> stays away from 1
// the reduced family is still a frame, with an explicit guaranteed lower
// bound. |product - 1| <= tol raises DegenerateAtom (see degenerate_removal).
// The computed actual bound must beat both guarantees (ConsistencyError).
RemovalReport remove_atom_check(const SampledFrame& f, const SampledFrame& g,
                                std::size_t index, double tol = 1e-8);

struct DegenerateRemovalReport {
    double product;                     // mu0 <F0, S^{-1} F0>, real and positive
    std::vector<std::size_t> support;   // atoms i with |<S^{-1}F0, F_i>| > 1e-10
    bool reduced_incomplete;            // atoms outside the support fail to span
};

// The boundary case of removal: when mu0 <F0, S^{-1}F0> = 1 (within tol) the
// atoms outside the computed support leave a family that cannot span the
// space. |product - 1| > tol raises NotDegenerate. The support threshold
// 1e-10 is absolute, calibrated for O(1)-scaled vectors.
DegenerateRemovalReport degenerate_removal(const SampledFrame& f, std::size_t index,
                                           double tol = 1e-8);

struct RieszTransportReport {
    LinearOperator theta;  // inverse of cross_operator(f, g)
    double max_residual;   // max_i ||G_i - S_G Theta^adj F_i|| / (1 + ||G_i||)
};

// For two Riesz bases over the same space, g is recovered from f by
// g_i = S_G Theta^adj f_i with Theta = cross_operator(f, g)^{-1}. The
// residual is tiny for well-conditioned bases and is returned for
// inspection. Throws NotRieszBasis when either family fails the check.
RieszTransportReport riesz_transport(const SampledFrame& f, const SampledFrame& g);

}  // namespace framecal
