#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "framecal/frame.hpp"

namespace framecal {

// A mother wavelet given by an analytic time-domain evaluator plus the
// squared modulus of its Fourier transform (convention
// psi_hat(w) = integral of psi(t) exp(-i w t) dt).
//
// On construction the evaluator is sampled on a dense internal grid covering
// [-3R, 3R], R = effective_radius, and rescaled so the quadrature L2 norm is
// exactly 1; the frequency profile is rescaled by the same factor squared.
// The zero-mean requirement |integral of psi| <= 1e-6 is enforced here, and
// the normalized samples are re-verified to hit ||psi||_2 = 1 within 1e-6.
// Violations throw NotAdmissible.
class WaveletSpec {
public:
    WaveletSpec(std::string name,
                std::function<double(double)> time_evaluator,
                std::function<double(double)> frequency_profile,
                double effective_radius);

    const std::string& name() const { return name_; }

    // psi(t) at unit scale, after normalization.
    double evaluate(double t) const { return scale_ * time_evaluator_(t); }

    // |psi_hat(w)|^2, after normalization.
    double profile(double w) const {
        return scale_ * scale_ * frequency_profile_(w);
    }

    // Nominal half-width of the support: |psi(t)| is negligible for
    // |t| > effective_radius. Used by the Nyquist gate on affine grids.
    double effective_radius() const { return effective_radius_; }

    // Normalized function values on the dense internal grid (midpoints of a
    // uniform partition of [-3R, 3R], spacing time_step()).
    const std::vector<double>& time_samples() const { return samples_; }
    double time_step() const { return step_; }

private:
    std::string name_;
    std::function<double(double)> time_evaluator_;
    std::function<double(double)> frequency_profile_;
    double effective_radius_ = 0.0;
    double scale_ = 1.0;
    std::vector<double> samples_;
    double step_ = 0.0;
};

// The mexican hat wavelet psi(t) = c (1 - t^2) exp(-t^2 / 2) with
// c = 2 / (sqrt(3) pi^{1/4}), which has ||psi||_2 = 1 and
// |psi_hat(w)|^2 = (8 sqrt(pi) / 3) w^4 exp(-w^2).
WaveletSpec mexican_hat();

// A uniform partition of [lo, hi] into `cells` cells, evaluated at cell
// midpoints. Requires 0 < lo < hi and cells >= 1.
struct FrequencyGrid {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t cells = 0;
};

// Midpoint-rule quadrature of |psi_hat(w)|^2 / w over the grid, the
// admissibility constant of the wavelet. Throws NonPositiveGrid for an
// invalid grid, and GridTooCoarse when doubling the cell count moves the
// result by more than 0.5% (the quadrature has not stabilized).
double admissibility_constant(const WaveletSpec& spec, const FrequencyGrid& grid);

// Finite sampling of the scale/translation half-plane. a_values holds the
// scales, b_values the translations, and weights the per-node masses in
// row-major (scale, translation) order: weights[j * nb + k] belongs to
// (a_values[j], b_values[k]) and equals cell_area / a_j^2 for the cell
// around that node.
struct AffineGrid {
    std::vector<double> a_values;
    std::vector<double> b_values;
    std::vector<double> weights;
};

// Geometric scale ladder with uniform translations. The scale axis is split
// into `scale_count` cells with geometric edges from a_min to a_max; each
// a_value is the geometric midpoint of its cell, so the node weight
// da_j * db / a_j^2 reproduces the cell integral of da db / a^2 exactly.
// Translations are k * (b_extent / translation_count) for k = 0 .. nb-1.
// Throws NonPositiveGrid on non-positive or non-increasing inputs.
AffineGrid make_affine_grid(double a_min, double a_max, std::size_t scale_count,
                            std::size_t translation_count, double b_extent);

// Sampled wavelet system on the cyclic time grid {0, 1, ..., signal_dim - 1}
// (unit time step). The atom at node (a, b) is
//   t -> a^{-1/2} * sum_m psi((t - b + m * signal_dim) / a)
// periodized over enough images m to exhaust the wavelet's support, and the
// atom order matches the grid's row-major (scale, translation) order.
// Throws NonPositiveGrid for malformed grids and GridTooCoarse when the
// smallest scale's support spans fewer than 4 time samples.
SampledFrame build_cwt_frame(const WaveletSpec& spec, const AffineGrid& grid,
                             std::size_t signal_dim);

// Closed angular-frequency interval, in radians per time sample.
struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

// Frequencies the grid can resolve: w is kept when the covered scale range
// maps it onto all but `tail_mass` of the admissibility mass per tail, i.e.
// [a_lo * w, a_hi * w] covers the central (1 - 2 tail_mass) mass of
// |psi_hat(u)|^2 / u, where [a_lo, a_hi] are the outer cell edges of the
// scale ladder (reconstructed geometrically from the nodes). The upper edge
// is additionally clamped to 80% of the translation-sampling Nyquist limit
// pi / db and to pi, the lower edge to the first nonzero frequency
// 2 pi / signal_dim. Throws GridTooCoarse when the band comes out empty
// (scale ladder narrower than the wavelet's bandwidth).
Band resolved_band(const WaveletSpec& spec, const AffineGrid& grid,
                   std::size_t signal_dim, double tail_mass = 0.025);

struct TightnessReport {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

// Probes the frame with unit vectors supported on the discrete Fourier
// modes whose frequencies fall inside `band` and returns the extreme values
// of <S f, f> / c_psi where S is the frame operator of f. The first probes
// sweep each in-band mode as a pure tone (so per-frequency extremes are
// always sampled); any remaining probes are random band-limited mixtures.
// Ratios near 1 mean the sampled system is nearly tight at the
// admissibility normalization. Deterministic for a fixed seed. Throws
// GridTooCoarse when no Fourier mode lies inside the band and
// NonPositiveGrid for probes < 1 or c_psi <= 0.
TightnessReport tightness_report(const SampledFrame& f, double c_psi,
                                 const Band& band, int probes,
                                 std::uint64_t seed = 42);

}  // namespace framecal
