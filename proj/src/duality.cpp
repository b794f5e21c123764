#include "framecal/duality.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace framecal {

LinearOperator cross_operator(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    LinearOperator t(f.dim());
    for (std::size_t i = 0; i < f.atom_count(); ++i)
        t.add_scaled_outer(Complex(f.weight(i), 0.0), g.vector(i), f.vector(i));
    return t;
}

DualPairReport is_dual_pair(const SampledFrame& f, const SampledFrame& g, double tol) {
    const LinearOperator id = LinearOperator::identity(f.dim());
    const double residual = operator_norm(id - cross_operator(f, g));
    const double residual_adj = operator_norm(id - cross_operator(g, f));
    if (std::abs(residual - residual_adj) > 1e-10 * (1.0 + residual)) {
        throw ConsistencyError("dual-pair residual differs between adjoint routes: " +
                               std::to_string(residual) + " vs " +
                               std::to_string(residual_adj));
    }
    return DualPairReport{residual, residual <= tol, tol};
}

SampledFrame dual_from_kernel(const SampledFrame& f, const SampledFrame& h) {
    require_same_space(f, h);
    const double kappa = operator_norm(cross_operator(f, h));
    if (kappa > 1e-10) {
        throw KernelConditionViolated("cross operator of the kernel family has norm " +
                                      std::to_string(kappa));
    }
    SampledFrame g = frame_add(standard_dual(f), h);
    DualPairReport check = is_dual_pair(f, g, 1e-9 + kappa);
    if (!check.is_dual) {
        throw ConsistencyError("kernel-built dual failed verification with residual " +
                               std::to_string(check.residual));
    }
    return g;
}

SampledFrame affine_dual(const SampledFrame& f, const SampledFrame& g, const SampledFrame& k,
                         Complex alpha, double tol) {
    DualPairReport rg = is_dual_pair(f, g, tol);
    if (!rg.is_dual) {
        throw NotDualPair("first partner is not dual at tol (residual " +
                          std::to_string(rg.residual) + ")");
    }
    DualPairReport rk = is_dual_pair(f, k, tol);
    if (!rk.is_dual) {
        throw NotDualPair("second partner is not dual at tol (residual " +
                          std::to_string(rk.residual) + ")");
    }

    SampledFrame out = frame_add(frame_scale(alpha, g),
                                 frame_scale(Complex(1.0, 0.0) - alpha, k));
    const double slack = std::abs(alpha) * rg.residual +
                         std::abs(Complex(1.0, 0.0) - alpha) * rk.residual + 1e-12;
    DualPairReport check = is_dual_pair(f, out, slack);
    if (!check.is_dual) {
        throw ConsistencyError("affine combination failed duality with residual " +
                               std::to_string(check.residual));
    }
    return out;
}

std::pair<SampledFrame, SampledFrame> transport_dual(const SampledFrame& f,
                                                     const SampledFrame& g,
                                                     const LinearOperator& u,
                                                     const LinearOperator& v,
                                                     double tol) {
    DualPairReport base = is_dual_pair(f, g, tol);
    if (!base.is_dual) {
        throw NotDualPair("input pair is not dual at tol (residual " +
                          std::to_string(base.residual) + ")");
    }
    const LinearOperator id = LinearOperator::identity(f.dim());
    const double cond = operator_norm(v * u.adjoint() - id);
    if (cond > 1e-10) {
        throw TransportConditionViolated("||V U^adj - I|| = " + std::to_string(cond));
    }

    SampledFrame uf = frame_map(u, f);
    SampledFrame vg = frame_map(v, g);
    const double slack = operator_norm(u) * operator_norm(v) * base.residual + 1e-10 + 1e-12;
    DualPairReport check = is_dual_pair(uf, vg, slack);
    if (!check.is_dual) {
        throw ConsistencyError("transported pair failed duality with residual " +
                               std::to_string(check.residual));
    }
    return {std::move(uf), std::move(vg)};
}

bool dual_modifier_identity_check(const SampledFrame& f, const SampledFrame& g,
                                  const LinearOperator& u, double tol) {
    DualPairReport base = is_dual_pair(f, g, tol);
    if (!base.is_dual) {
        throw NotDualPair("input pair is not dual at tol (residual " +
                          std::to_string(base.residual) + ")");
    }
    DualPairReport modified = is_dual_pair(f, frame_map(u, g), tol);
    if (modified.is_dual) {
        const double derived_tol = tol + operator_norm(u) * base.residual + 1e-12;
        const double dist = operator_norm(u - LinearOperator::identity(u.dim()));
        if (dist > derived_tol) {
            throw ConsistencyError("modified pair is dual yet ||U - I|| = " +
                                   std::to_string(dist) + " exceeds " +
                                   std::to_string(derived_tol));
        }
    }
    return modified.is_dual;
}

RemovalReport remove_atom_check(const SampledFrame& f, const SampledFrame& g,
                                std::size_t index, double tol) {
    DualPairReport base = is_dual_pair(f, g);
    if (!base.is_dual) {
        throw NotDualPair("input pair is not dual (residual " +
                          std::to_string(base.residual) + ")");
    }
    if (index >= f.atom_count()) {
        throw IndexOutOfRange("atom index " + std::to_string(index) +
                              " out of range for " + std::to_string(f.atom_count()) + " atoms");
    }

    const double mu0 = f.weight(index);
    const Complex product = mu0 * inner(f.vector(index), g.vector(index));
    const double gap = std::abs(product - Complex(1.0, 0.0));
    if (gap <= tol) {
        throw DegenerateAtom("removal product " + std::to_string(product.real()) + "+" +
                             std::to_string(product.imag()) + "i is within tol of 1");
    }

    const double upper_g = frame_bounds(g).upper;
    const double lower_f = frame_bounds(f).lower;
    const double f0_norm = f.vector(index).norm();
    const double constant = upper_g * f0_norm * f0_norm / (gap * gap);

    const double guaranteed = (1.0 / upper_g) / (1.0 + constant * mu0);
    const double guaranteed_alt = lower_f / (1.0 + constant * mu0);

    const double actual = frame_bounds(f.without_atom(index)).lower;
    if (actual < std::max(guaranteed, guaranteed_alt) - 1e-9) {
        throw ConsistencyError("reduced frame bound " + std::to_string(actual) +
                               " fell below guaranteed " +
                               std::to_string(std::max(guaranteed, guaranteed_alt)));
    }

    return RemovalReport{product, true,         constant, guaranteed,
                         guaranteed_alt, actual, mu0};
}

DegenerateRemovalReport degenerate_removal(const SampledFrame& f, std::size_t index,
                                           double tol) {
    if (index >= f.atom_count()) {
        throw IndexOutOfRange("atom index " + std::to_string(index) +
                              " out of range for " + std::to_string(f.atom_count()) + " atoms");
    }
    FrameBounds bounds = frame_bounds(f);
    if (bounds.classification == FrameClass::BesselOnly) {
        throw NotAFrame("family has no positive lower frame bound");
    }

    const HilbertVector d = inverse(frame_operator(f)).apply(f.vector(index));
    const Complex p = f.weight(index) * inner(f.vector(index), d);
    if (std::abs(p - Complex(1.0, 0.0)) > tol) {
        throw NotDegenerate("product " + std::to_string(p.real()) +
                            " is not within tol of 1");
    }

    std::vector<std::size_t> support;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        if (std::abs(inner(d, f.vector(i))) > 1e-10) {
            support.push_back(i);
        } else {
            rest.push_back(i);
        }
    }

    bool incomplete = true;
    if (!rest.empty()) {
        LinearOperator s_rest(f.dim());
        for (std::size_t i : rest)
            s_rest.add_scaled_outer(Complex(f.weight(i), 0.0), f.vector(i), f.vector(i));
        EigenDecomposition dec = hermitian_eig(s_rest);
        const double lam_max = std::max(0.0, dec.eigenvalues.back());
        const double lam_min = std::max(0.0, dec.eigenvalues.front());
        incomplete = !(lam_max > 0.0 && std::sqrt(lam_min) > 1e-10 * std::sqrt(lam_max));
    }

    return DegenerateRemovalReport{p.real(), std::move(support), incomplete};
}

RieszTransportReport riesz_transport(const SampledFrame& f, const SampledFrame& g) {
    require_same_space(f, g);
    if (!is_riesz_basis(f)) throw NotRieszBasis("first family is not a Riesz basis");
    if (!is_riesz_basis(g)) throw NotRieszBasis("second family is not a Riesz basis");

    const LinearOperator theta = inverse(cross_operator(f, g));
    const LinearOperator recover = frame_operator(g) * theta.adjoint();

    double max_residual = 0.0;
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        const HilbertVector predicted = recover.apply(f.vector(i));
        const double res = (g.vector(i) - predicted).norm() / (1.0 + g.vector(i).norm());
        max_residual = std::max(max_residual, res);
    }
    return RieszTransportReport{theta, max_residual};
}

}  // namespace framecal
