// Acceptance gate: reproduces the frozen worked cases and runs the
// randomized property suites with fixed seeds. One PASS/FAIL line per
// criterion; the process exits nonzero if any criterion fails or runs over
// its time budget. Criterion 2 also shells out to the CLI (FRAMECAL_BIN) to
// confirm the boundary note lands in the user-facing report.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "framecal/approx.hpp"
#include "framecal/cwt.hpp"
#include "framecal/duality.hpp"
#include "framecal/errors.hpp"
#include "framecal/frame.hpp"
#include "framecal/frame_io.hpp"
#include "framecal/linalg.hpp"
#include "framecal/measure.hpp"
#include "test_support.hpp"

namespace {

using namespace framecal;
using testsupport::Rng;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw CheckFailure(msg);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

HilbertVector e2(std::size_t k) {
    HilbertVector v = HilbertVector::zero(2);
    v[k] = Complex(1.0, 0.0);
    return v;
}

// ---------------------------------------------------------------- fixtures

// Padded basis F = (e1, e2, 0) with unit weights: a Parseval frame.
SampledFrame padded_parseval() {
    return SampledFrame(MeasureSpace::uniform(3),
                        {e2(0), e2(1), HilbertVector::zero(2)});
}

// Its non-canonical dual G = (e1, e2, 2 e2) with bounds exactly (1, 5).
SampledFrame padded_dual() {
    return SampledFrame(MeasureSpace::uniform(3),
                        {e2(0), e2(1), Complex(2.0, 0.0) * e2(1)});
}

// Scaled partner G_eps = (eps e1, 0, e2): mixed synthesis eps e1 e1^adj.
SampledFrame scaled_partner(double eps) {
    return SampledFrame(MeasureSpace::uniform(3),
                        {Complex(eps, 0.0) * e2(0), HilbertVector::zero(2), e2(1)});
}

// Three unit-weight vectors at 120 degree spacing, scaled to Parseval.
SampledFrame mercedes_parseval() {
    const double r = std::sqrt(2.0 / 3.0);
    std::vector<HilbertVector> vs;
    for (int k = 0; k < 3; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 3.0;
        HilbertVector v(2);
        v[0] = Complex(r * std::cos(th), 0.0);
        v[1] = Complex(r * std::sin(th), 0.0);
        vs.push_back(std::move(v));
    }
    return SampledFrame(MeasureSpace::uniform(3), std::move(vs));
}

// ---------------------------------------------------------- CLI plumbing

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("FRAMECAL_BIN");
    require(bin != nullptr,
            "FRAMECAL_BIN is not set; run through ctest or export the CLI path");
    const std::string cmd = "'" + std::string(bin) + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "failed to launch the CLI");
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = std::move(out);
    return r;
}

// ------------------------------------------------------------- criteria

std::string criterion_dual_pair() {
    const SampledFrame f = padded_parseval();
    const SampledFrame g = padded_dual();

    const LinearOperator cross = cross_operator(f, g);
    const double residual =
        operator_norm(LinearOperator::identity(2) - cross);
    require(residual <= 1e-12,
            "cross operator differs from identity by " + fmt(residual));

    const FrameBounds bf = frame_bounds(f);
    require(bf.classification == FrameClass::Parseval,
            "padded basis not classified parseval");
    require(std::abs(bf.lower - 1.0) <= 1e-12 && std::abs(bf.upper - 1.0) <= 1e-12,
            "padded basis bounds are [" + fmt(bf.lower) + ", " + fmt(bf.upper) + "]");

    const FrameBounds bg = frame_bounds(g);
    require(std::abs(bg.lower - 1.0) <= 1e-12 && std::abs(bg.upper - 5.0) <= 1e-12,
            "partner bounds are [" + fmt(bg.lower) + ", " + fmt(bg.upper) + "]");

    return "cross residual " + fmt(residual) + ", F parseval [1,1], G bounds [1,5]";
}

std::string criterion_boundary_pin() {
    double worst = 0.0;
    for (const double eps : {0.1, 0.5, 0.9}) {
        const DefectReport rep = defect(padded_parseval(), scaled_partner(eps));
        require(std::abs(rep.defect - 1.0) <= 1e-12,
                "eps=" + fmt(eps) + ": defect " + fmt(rep.defect) + " is not 1");
        require(!rep.is_approx_dual,
                "eps=" + fmt(eps) + ": wrongly accepted as approximately dual");
        require(rep.at_boundary, "eps=" + fmt(eps) + ": boundary flag missing");
        worst = std::max(worst, std::abs(rep.defect - 1.0));
    }

    // The user-facing report must carry the note, not just the flag.
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "framecal_acceptance";
    fs::create_directories(dir);
    const std::string fp = (dir / "f.json").string();
    const std::string gp = (dir / "g.json").string();
    save_frame(padded_parseval(), fp);
    save_frame(scaled_partner(0.5), gp);
    const CliResult r = run_cli("defect '" + fp + "' '" + gp + "'");
    fs::remove_all(dir);
    require(r.code == 1, "CLI exit code " + std::to_string(r.code) + ", expected 1");
    require(r.out.find("\"at_boundary\": true") != std::string::npos,
            "CLI report lacks the boundary flag");
    require(r.out.find("boundary_note") != std::string::npos,
            "CLI report lacks the boundary note");

    return "defect pinned to 1 within " + fmt(worst) + " for eps in {0.1, 0.5, 0.9}";
}

std::string criterion_bound_sharpness() {
    double worst = 0.0;
    for (const SampledFrame& f : {padded_parseval(), mercedes_parseval()}) {
        for (const double c : {0.25, 0.5, 0.9}) {
            const SampledFrame g = frame_scale(Complex(c, 0.0), f);
            const DefectReport rep = defect(f, g);
            require(rep.is_approx_dual, "c=" + fmt(c) + ": not approximately dual");
            const double gap = std::abs(rep.guaranteed_lower_f - 1.0);
            require(gap <= 1e-10, "c=" + fmt(c) + ": guaranteed lower bound " +
                                      fmt(rep.guaranteed_lower_f) + " misses 1 by " +
                                      fmt(gap));
            worst = std::max(worst, gap);
        }
    }
    return "guaranteed lower bound equals the Parseval bound within " + fmt(worst);
}

std::string criterion_reconstruction() {
    Rng rng(20260401);
    std::uniform_int_distribution<std::size_t> ndist(1, 8);
    double worst_rec = 0.0;
    double worst_min = 0.0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = ndist(rng);
        std::uniform_int_distribution<std::size_t> mdist(n, 32);
        const std::size_t m = mdist(rng);
        const SampledFrame f = testsupport::random_frame(rng, n, m);
        const SampledFrame dual = standard_dual(f);

        for (std::size_t j = 0; j < n; ++j) {
            HilbertVector probe = HilbertVector::zero(n);
            probe[j] = Complex(1.0, 0.0);
            const double e1 = (synthesis(dual, analysis(f, probe)) - probe).norm();
            const double e2r = (synthesis(f, analysis(dual, probe)) - probe).norm();
            const double err = std::max(e1, e2r);
            require(err <= 1e-9,
                    "round " + std::to_string(round) + ": reconstruction error " +
                        fmt(err) + " on basis probe " + std::to_string(j));
            worst_rec = std::max(worst_rec, err);
        }

        CoefficientVector phi(f.space(),
                              std::vector<Complex>(m, Complex(0.0, 0.0)));
        for (std::size_t i = 0; i < m; ++i) phi[i] = testsupport::random_complex(rng);
        const HilbertVector x = synthesis(f, phi);
        const MinimalNormCheck mnc = minimal_norm_check(f, x, phi);
        require(mnc.residual <= 1e-9,
                "round " + std::to_string(round) + ": norm-splitting residual " +
                    fmt(mnc.residual));
        worst_min = std::max(worst_min, mnc.residual);
    }
    return "100 frames: worst reconstruction " + fmt(worst_rec) +
           ", worst norm-splitting residual " + fmt(worst_min);
}

std::string criterion_removal() {
    Rng rng(20260402);
    std::uniform_int_distribution<std::size_t> ndist(2, 5);
    std::uniform_int_distribution<std::size_t> extra(1, 5);
    double slimmest = 1e300;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = ndist(rng);
        const std::size_t m = n + extra(rng);
        const SampledFrame f = testsupport::random_frame(rng, n, m);
        const SampledFrame g = testsupport::random_dual_partner(rng, f, 0.5);

        // Pick the atom whose removal product is farthest from the
        // degenerate point, so the instance is a genuinely non-degenerate one.
        std::size_t pick = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double dist =
                std::abs(f.weight(i) * inner(f.vector(i), g.vector(i)) - Complex(1.0, 0.0));
            if (dist > best) {
                best = dist;
                pick = i;
            }
        }
        require(best > 1e-8, "round " + std::to_string(round) + ": all atoms degenerate");

        const RemovalReport rep = remove_atom_check(f, g, pick);
        require(rep.removable, "round " + std::to_string(round) + ": atom not removable");
        require(rep.actual_lower >= rep.guaranteed_lower,
                "round " + std::to_string(round) + ": actual lower bound " +
                    fmt(rep.actual_lower) + " below guarantee " +
                    fmt(rep.guaranteed_lower));
        slimmest = std::min(slimmest, rep.actual_lower - rep.guaranteed_lower);
    }

    // Degenerate atoms must be reported as destroying completeness.
    {
        SampledFrame basis(MeasureSpace::uniform(2), {e2(0), e2(1)});
        require(degenerate_removal(basis, 0).reduced_incomplete,
                "basis atom removal not flagged incomplete");
        SampledFrame stretched(MeasureSpace::uniform(2),
                               {Complex(std::sqrt(2.0), 0.0) * e2(0), e2(1)});
        require(degenerate_removal(stretched, 0).reduced_incomplete,
                "stretched atom removal not flagged incomplete");
        SampledFrame padded(MeasureSpace::uniform(3),
                            {e2(0), HilbertVector::zero(2), e2(1)});
        require(degenerate_removal(padded, 0).reduced_incomplete,
                "padded atom removal not flagged incomplete");
    }
    return "100 dual pairs: slack above the guarantee at least " + fmt(slimmest) +
           ", degenerate removals flagged incomplete";
}

std::string criterion_factorization() {
    Rng rng(20260403);
    std::uniform_int_distribution<std::size_t> ndist(2, 4);
    std::uniform_int_distribution<std::size_t> extra(0, 4);
    double worst_fact = 0.0;
    double worst_rec = 0.0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = ndist(rng);
        const std::size_t m = n + extra(rng);
        const SampledFrame f = testsupport::random_frame(rng, n, m);
        const SampledFrame g = testsupport::random_family_on(rng, f.space(), n);

        const DouglasFactor factor = douglas_factor(f, g);
        require(factor.factor_residual <= 1e-9,
                "round " + std::to_string(round) + ": factor residual " +
                    fmt(factor.factor_residual));
        const double bg = hermitian_eig(frame_operator(g)).eigenvalues.back();
        require(factor.dd_star_max <= bg + 1e-9,
                "round " + std::to_string(round) + ": ||DD^adj|| " +
                    fmt(factor.dd_star_max) + " above the Bessel bound " + fmt(bg));
        worst_fact = std::max(worst_fact, factor.factor_residual);

        // Build an approximate dual from a frozen factor and kernel family,
        // then recover both from the factorization.
        const SampledFrame rf = testsupport::random_frame(rng, 3, 5);
        const LinearOperator rinv = inverse(psd_sqrt(frame_operator(rf)));
        LinearOperator bump = testsupport::random_operator(rng, 3);
        bump *= Complex(0.5 / operator_norm(bump), 0.0);
        const LinearOperator d = rinv * (LinearOperator::identity(3) - bump);
        const SampledFrame k = testsupport::random_kernel_partner(rng, rf);
        const SampledFrame built = build_approx_dual_kernel(rf, d, k);

        const DouglasFactor out = douglas_factor(rf, built);
        const double drec = testsupport::max_abs_diff(out.d, d);
        require(drec <= 1e-8, "round " + std::to_string(round) +
                                  ": recovered factor off by " + fmt(drec));
        const SampledFrame k_rec =
            frame_sub(built, frame_map(out.d.adjoint() * rinv, rf));
        const double kres = operator_norm(cross_operator(rf, k_rec));
        require(kres <= 1e-9, "round " + std::to_string(round) +
                                  ": kernel cross residual " + fmt(kres));
        worst_rec = std::max(worst_rec, drec);
    }
    return "100 rounds: worst factor residual " + fmt(worst_fact) +
           ", worst factor recovery " + fmt(worst_rec);
}

std::string criterion_perturbation() {
    Rng rng(20260404);

    std::uniform_real_distribution<double> gdist(0.05, 0.6);
    for (int round = 0; round < 100; ++round) {
        const SampledFrame f = testsupport::random_parseval_frame(rng, 3, 5);
        const SampledFrame h = testsupport::random_family_on(rng, f.space(), 3);
        const double target = gdist(rng);
        const double hnorm =
            std::sqrt(hermitian_eig(frame_operator(h)).eigenvalues.back());
        const SampledFrame g =
            frame_add(f, frame_scale(Complex(target / hnorm, 0.0), h));
        const PerturbationCertificate cert =
            perturb_parseval(f, g, 0.0, target + 1e-9);
        require(cert.hypothesis_ok && cert.smallness_ok,
                "parseval round " + std::to_string(round) + ": certificate rejected");
        require(cert.observed_defect <= cert.predicted_defect_bound + 1e-9,
                "parseval round " + std::to_string(round) + ": observed " +
                    fmt(cert.observed_defect) + " above prediction " +
                    fmt(cert.predicted_defect_bound));
    }

    std::uniform_real_distribution<double> mdist(0.0, 0.05);
    for (int round = 0; round < 100; ++round) {
        const SampledFrame f = testsupport::random_frame(rng, 3, 5);
        const SampledFrame g = testsupport::random_dual_partner(rng, f, 0.3);
        const SampledFrame h = testsupport::random_family_on(rng, f.space(), 3);
        const double bg = hermitian_eig(frame_operator(g)).eigenvalues.back();
        const double hnorm =
            std::sqrt(hermitian_eig(frame_operator(h)).eigenvalues.back());
        const double scale = 0.5 / (hnorm * std::sqrt(bg));
        const SampledFrame k = frame_add(f, frame_scale(Complex(scale, 0.0), h));
        const double gap2 =
            hermitian_eig(frame_operator(frame_sub(f, k))).eigenvalues.back();
        const PerturbationCertificate cert =
            perturb_analysis(f, g, k, gap2 + mdist(rng) / bg);
        require(cert.hypothesis_ok && cert.smallness_ok,
                "analysis round " + std::to_string(round) + ": certificate rejected");
        require(cert.observed_defect <= cert.predicted_defect_bound + 1e-9,
                "analysis round " + std::to_string(round) + ": observed " +
                    fmt(cert.observed_defect) + " above prediction " +
                    fmt(cert.predicted_defect_bound));
    }

    std::uniform_real_distribution<double> sdist(0.05, 0.4);
    for (int round = 0; round < 100; ++round) {
        const SampledFrame f = testsupport::random_frame(rng, 3, 5);
        const SampledFrame g = testsupport::random_dual_partner(rng, f, 0.3);
        const SampledFrame h = testsupport::random_family_on(rng, f.space(), 3);
        const double bg = hermitian_eig(frame_operator(g)).eigenvalues.back();
        const double hnorm =
            std::sqrt(hermitian_eig(frame_operator(h)).eigenvalues.back());
        const double target = sdist(rng) / std::sqrt(bg);
        const SampledFrame k =
            frame_add(f, frame_scale(Complex(target / hnorm, 0.0), h));
        const PerturbationCertificate cert =
            perturb_dualpair(f, g, k, 0.0, target + 1e-9);
        require(cert.hypothesis_ok && cert.smallness_ok,
                "dual-pair round " + std::to_string(round) + ": certificate rejected");
        require(cert.observed_defect <= cert.predicted_defect_bound + 1e-9,
                "dual-pair round " + std::to_string(round) + ": observed " +
                    fmt(cert.observed_defect) + " above prediction " +
                    fmt(cert.predicted_defect_bound));
    }

    // Shrinking one coordinate of an orthonormal pair attains the
    // analysis-perturbation bound exactly.
    double worst_eq = 0.0;
    const SampledFrame basis(MeasureSpace::uniform(2), {e2(0), e2(1)});
    for (const double delta : {0.1, 0.3, 0.5}) {
        const SampledFrame k(MeasureSpace::uniform(2),
                             {Complex(1.0 - delta, 0.0) * e2(0), e2(1)});
        const PerturbationCertificate cert =
            perturb_analysis(basis, basis, k, delta * delta);
        require(cert.hypothesis_ok, "equality case rejected at delta " + fmt(delta));
        const double gap =
            std::abs(cert.observed_defect - cert.predicted_defect_bound);
        require(gap <= 1e-10, "equality case at delta " + fmt(delta) +
                                  ": observed and predicted differ by " + fmt(gap));
        worst_eq = std::max(worst_eq, gap);
    }

    return "3 x 100 certificates sound, equality case tight within " + fmt(worst_eq);
}

std::string criterion_riesz_transport() {
    Rng rng(20260405);
    std::uniform_int_distribution<std::size_t> ndist(2, 6);
    double worst = 0.0;
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = ndist(rng);
        const SampledFrame f = testsupport::random_riesz_basis(rng, n);
        SampledFrame g = f;
        for (;;) {
            SampledFrame cand = testsupport::random_family_on(rng, f.space(), n);
            const FrameBounds b = frame_bounds(cand);
            if (b.classification != FrameClass::BesselOnly &&
                b.lower > 2.5e-3 * b.upper && is_riesz_basis(cand)) {
                g = cand;
                break;
            }
        }
        const RieszTransportReport rep = riesz_transport(f, g);
        require(rep.max_residual <= 1e-8,
                "round " + std::to_string(round) + ": transport residual " +
                    fmt(rep.max_residual));
        worst = std::max(worst, rep.max_residual);
    }
    return "50 basis pairs: worst normalized transport residual " + fmt(worst);
}

std::string criterion_cwt() {
    const WaveletSpec spec = mexican_hat();
    const AffineGrid grid = make_affine_grid(2.0, 16.0, 32, 64, 256.0);
    const SampledFrame frame = build_cwt_frame(spec, grid, 256);
    const Band band = resolved_band(spec, grid, 256);

    const double c1 = admissibility_constant(spec, {1e-4, 12.0, 20000});
    const double c2 = admissibility_constant(spec, {1e-4, 12.0, 40000});
    require(std::abs(c1 - c2) <= 0.005 * std::abs(c1),
            "admissibility drifts by " + fmt(std::abs(c1 - c2) / std::abs(c1)) +
                " under grid doubling");

    const TightnessReport rep = tightness_report(frame, c1, band, 20, 42);
    require(rep.min_ratio >= 0.9 && rep.max_ratio <= 1.1,
            "ratios [" + fmt(rep.min_ratio) + ", " + fmt(rep.max_ratio) +
                "] leave [0.9, 1.1]");

    auto box_profile = [](double w) {
        return (w >= 1.0 && w <= std::numbers::e) ? 1.0 : 0.0;
    };
    auto hat_time = [](double t) {
        const double c = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
        return c * (1.0 - t * t) * std::exp(-0.5 * t * t);
    };
    const WaveletSpec box("box", hat_time, box_profile, 4.0);
    const double cbox = admissibility_constant(box, {0.5, 3.5, 20000});
    require(std::abs(cbox - 1.0) <= 1e-3,
            "box admissibility " + fmt(cbox) + " misses 1");

    return "ratios [" + fmt(rep.min_ratio) + ", " + fmt(rep.max_ratio) +
           "], admissibility " + fmt(c1) + " stable, box profile " + fmt(cbox);
}

struct Criterion {
    std::string name;
    double budget_seconds;  // 0 = no budget
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"canonical dual pair on the padded basis", 0.1, criterion_dual_pair},
        {"defect boundary pin for scaled partners", 0.1, criterion_boundary_pin},
        {"guaranteed lower bound sharpness", 0.0, criterion_bound_sharpness},
        {"reconstruction on random frames", 5.0, criterion_reconstruction},
        {"atom removal bounds on random dual pairs", 10.0, criterion_removal},
        {"factorization and kernel constructor round trip", 0.0, criterion_factorization},
        {"perturbation certificate soundness", 0.0, criterion_perturbation},
        {"dual transport across Riesz bases", 0.0, criterion_riesz_transport},
        {"wavelet system tightness and admissibility", 60.0, criterion_cwt},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && c.budget_seconds > 0.0 && elapsed > c.budget_seconds) {
            ok = false;
            detail = "over time budget: " + fmt(elapsed) + "s > " +
                     fmt(c.budget_seconds) + "s";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << "/" << criteria.size()
             << "  " << c.name << "  (" << fmt(elapsed) << "s)  " << detail;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }

    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
    return 1;
}
