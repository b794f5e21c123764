#include "framecal/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "framecal/errors.hpp"
#include "framecal/measure.hpp"

namespace framecal {

namespace {

constexpr std::size_t kDenseSamples = 8192;

double midpoint_admissibility(const WaveletSpec& spec, double lo, double hi,
                              std::size_t cells) {
    const double h = (hi - lo) / static_cast<double>(cells);
    double acc = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = lo + (static_cast<double>(i) + 0.5) * h;
        acc += spec.profile(x) / x;
    }
    return acc * h;
}

void validate_grid(const AffineGrid& grid) {
    const std::size_t na = grid.a_values.size();
    const std::size_t nb = grid.b_values.size();
    if (na == 0 || nb == 0)
        throw NonPositiveGrid("affine grid has no nodes");
    if (grid.weights.size() != na * nb)
        throw NonPositiveGrid("affine grid weight count does not match its nodes");
    for (double a : grid.a_values)
        if (!(a > 0.0))
            throw NonPositiveGrid("affine grid contains a non-positive scale");
    for (double w : grid.weights)
        if (!(w > 0.0))
            throw NonPositiveGrid("affine grid contains a non-positive weight");
}

}  // namespace

WaveletSpec::WaveletSpec(std::string name,
                         std::function<double(double)> time_evaluator,
                         std::function<double(double)> frequency_profile,
                         double effective_radius)
    : name_(std::move(name)),
      time_evaluator_(std::move(time_evaluator)),
      frequency_profile_(std::move(frequency_profile)),
      effective_radius_(effective_radius) {
    if (!time_evaluator_ || !frequency_profile_)
        throw NotAdmissible("wavelet needs both a time evaluator and a frequency profile");
    if (!(effective_radius_ > 0.0))
        throw NotAdmissible("wavelet effective radius must be positive");

    const double radius = 3.0 * effective_radius_;
    step_ = 2.0 * radius / static_cast<double>(kDenseSamples);
    samples_.resize(kDenseSamples);
    double energy = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < kDenseSamples; ++i) {
        const double t = -radius + (static_cast<double>(i) + 0.5) * step_;
        const double v = time_evaluator_(t);
        samples_[i] = v;
        energy += v * v;
        mean += v;
    }
    energy *= step_;
    mean *= step_;
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw NotAdmissible("wavelet has no usable L2 energy on its support");
    scale_ = 1.0 / std::sqrt(energy);
    for (double& s : samples_) s *= scale_;
    if (std::abs(mean * scale_) > 1e-6)
        throw NotAdmissible("wavelet mean is not zero");

    double check = 0.0;
    for (double s : samples_) check += s * s;
    check *= step_;
    if (std::abs(check - 1.0) > 1e-6)
        throw NotAdmissible("wavelet normalization did not converge");
}

WaveletSpec mexican_hat() {
    const double c = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
    const double amp = 8.0 * std::sqrt(std::numbers::pi) / 3.0;
    return WaveletSpec(
        "mexican-hat",
        [c](double t) { return c * (1.0 - t * t) * std::exp(-0.5 * t * t); },
        [amp](double w) {
            const double w2 = w * w;
            return amp * w2 * w2 * std::exp(-w2);
        },
        4.0);
}

double admissibility_constant(const WaveletSpec& spec, const FrequencyGrid& grid) {
    if (!(grid.lo > 0.0) || !(grid.hi > grid.lo) || grid.cells == 0)
        throw NonPositiveGrid("frequency grid must satisfy 0 < lo < hi with at least one cell");
    const double coarse = midpoint_admissibility(spec, grid.lo, grid.hi, grid.cells);
    const double fine = midpoint_admissibility(spec, grid.lo, grid.hi, 2 * grid.cells);
    const double ref = std::max({std::abs(coarse), std::abs(fine), 1e-12});
    if (std::abs(fine - coarse) > 0.005 * ref)
        throw GridTooCoarse("admissibility quadrature is not stable under grid doubling");
    return coarse;
}

AffineGrid make_affine_grid(double a_min, double a_max, std::size_t scale_count,
                            std::size_t translation_count, double b_extent) {
    if (!(a_min > 0.0) || !(a_max > a_min))
        throw NonPositiveGrid("scale range must satisfy 0 < a_min < a_max");
    if (scale_count == 0 || translation_count == 0)
        throw NonPositiveGrid("affine grid needs at least one scale and one translation");
    if (!(b_extent > 0.0))
        throw NonPositiveGrid("translation extent must be positive");

    AffineGrid grid;
    grid.a_values.reserve(scale_count);
    grid.b_values.reserve(translation_count);
    grid.weights.reserve(scale_count * translation_count);

    const double rho = std::pow(a_max / a_min, 1.0 / static_cast<double>(scale_count));
    const double db = b_extent / static_cast<double>(translation_count);
    for (std::size_t k = 0; k < translation_count; ++k)
        grid.b_values.push_back(static_cast<double>(k) * db);
    for (std::size_t j = 0; j < scale_count; ++j) {
        const double lo = a_min * std::pow(rho, static_cast<double>(j));
        const double hi = a_min * std::pow(rho, static_cast<double>(j) + 1.0);
        const double a = std::sqrt(lo * hi);
        grid.a_values.push_back(a);
        const double w = (hi - lo) * db / (a * a);
        for (std::size_t k = 0; k < translation_count; ++k)
            grid.weights.push_back(w);
    }
    return grid;
}

SampledFrame build_cwt_frame(const WaveletSpec& spec, const AffineGrid& grid,
                             std::size_t signal_dim) {
    if (signal_dim < 4)
        throw NonPositiveGrid("signal dimension must be at least 4");
    validate_grid(grid);

    const double a_min = *std::min_element(grid.a_values.begin(), grid.a_values.end());
    if (2.0 * spec.effective_radius() * a_min < 4.0)
        throw GridTooCoarse("smallest scale spans fewer than 4 time samples");

    const std::size_t na = grid.a_values.size();
    const std::size_t nb = grid.b_values.size();
    const double n = static_cast<double>(signal_dim);

    std::vector<Atom> atoms;
    std::vector<HilbertVector> vectors;
    atoms.reserve(na * nb);
    vectors.reserve(na * nb);
    for (std::size_t j = 0; j < na; ++j) {
        const double a = grid.a_values[j];
        const double root = 1.0 / std::sqrt(a);
        const int images =
            static_cast<int>(std::ceil(3.0 * spec.effective_radius() * a / n)) + 1;
        for (std::size_t k = 0; k < nb; ++k) {
            const double b = grid.b_values[k];
            HilbertVector v(signal_dim);
            for (std::size_t t = 0; t < signal_dim; ++t) {
                double acc = 0.0;
                for (int m = -images; m <= images; ++m)
                    acc += spec.evaluate((static_cast<double>(t) - b + m * n) / a);
                v[t] = Complex(root * acc, 0.0);
            }
            atoms.push_back({"a" + std::to_string(j) + "b" + std::to_string(k),
                             grid.weights[j * nb + k]});
            vectors.push_back(std::move(v));
        }
    }
    return SampledFrame(MeasureSpace(std::move(atoms)), std::move(vectors));
}

Band resolved_band(const WaveletSpec& spec, const AffineGrid& grid,
                   std::size_t signal_dim, double tail_mass) {
    if (signal_dim < 4)
        throw NonPositiveGrid("signal dimension must be at least 4");
    if (!(tail_mass > 0.0) || !(tail_mass < 0.5))
        throw NonPositiveGrid("tail mass must lie in (0, 0.5)");
    validate_grid(grid);

    // Find where the admissibility integrand |psi_hat(u)|^2 / u lives: scan
    // for its peak, extend until it has decayed, then take mass quantiles on
    // a dense midpoint grid.
    double peak = 0.0;
    double u_peak = 1e-4;
    for (double u = 1e-4; u <= 1e4; u *= 1.25) {
        const double g = spec.profile(u) / u;
        if (g > peak) {
            peak = g;
            u_peak = u;
        }
    }
    if (!(peak > 0.0))
        throw NotAdmissible("wavelet frequency profile carries no mass");
    double u_top = u_peak;
    while (u_top < 1e6 && spec.profile(u_top) / u_top > 1e-14 * peak) u_top *= 1.25;

    const std::size_t cells = 100000;
    const double lo_int = u_top * 1e-9;
    const double h = (u_top - lo_int) / static_cast<double>(cells);
    std::vector<double> partial(cells);
    double total = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double u = lo_int + (static_cast<double>(i) + 0.5) * h;
        total += spec.profile(u) / u * h;
        partial[i] = total;
    }
    if (!(total > 0.0))
        throw NotAdmissible("wavelet frequency profile carries no mass");

    double u_lo = lo_int;
    double u_hi = u_top;
    for (std::size_t i = 0; i < cells; ++i) {
        if (partial[i] >= tail_mass * total) {
            u_lo = lo_int + (static_cast<double>(i) + 0.5) * h;
            break;
        }
    }
    for (std::size_t i = cells; i-- > 0;) {
        if (partial[i] <= (1.0 - tail_mass) * total) {
            u_hi = lo_int + (static_cast<double>(i) + 0.5) * h;
            break;
        }
    }

    // The ladder covers scales out to its outer cell edges, not just the
    // nodes. For a geometric ladder the edge between neighbouring nodes is
    // their geometric mean, so the outer edges extrapolate by the same step;
    // a single-scale grid falls back to the node itself.
    std::vector<double> as = grid.a_values;
    std::sort(as.begin(), as.end());
    double edge_lo = as.front();
    double edge_hi = as.back();
    if (as.size() >= 2) {
        edge_lo = as.front() * std::sqrt(as.front() / as[1]);
        edge_hi = as.back() * std::sqrt(as.back() / as[as.size() - 2]);
    }
    Band band;
    band.lo = u_hi / edge_hi;
    band.hi = u_lo / edge_lo;
    if (grid.b_values.size() >= 2) {
        std::vector<double> bs = grid.b_values;
        std::sort(bs.begin(), bs.end());
        const double db = bs[1] - bs[0];
        if (db > 0.0)
            band.hi = std::min(band.hi, 0.8 * std::numbers::pi / db);
    }
    band.hi = std::min(band.hi, std::numbers::pi);
    band.lo = std::max(band.lo, 2.0 * std::numbers::pi / static_cast<double>(signal_dim));
    if (!(band.lo < band.hi))
        throw GridTooCoarse("scale ladder is narrower than the wavelet bandwidth");
    return band;
}

TightnessReport tightness_report(const SampledFrame& f, double c_psi,
                                 const Band& band, int probes,
                                 std::uint64_t seed) {
    if (probes < 1)
        throw NonPositiveGrid("tightness probe count must be at least 1");
    if (!(c_psi > 0.0))
        throw NonPositiveGrid("admissibility constant must be positive");
    if (!(band.lo >= 0.0) || !(band.hi > band.lo))
        throw NonPositiveGrid("frequency band must be non-empty with lo >= 0");

    const std::size_t n = f.dim();
    std::vector<std::size_t> modes;
    for (std::size_t q = 1; q < n; ++q) {
        const double w =
            2.0 * std::numbers::pi * static_cast<double>(std::min(q, n - q)) /
            static_cast<double>(n);
        if (w >= band.lo && w <= band.hi) modes.push_back(q);
    }
    if (modes.empty())
        throw GridTooCoarse("no discrete Fourier mode lies inside the band");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double lo_ratio = std::numeric_limits<double>::infinity();
    double hi_ratio = -std::numeric_limits<double>::infinity();
    for (int p = 0; p < probes; ++p) {
        // The first probes visit each in-band mode as a pure tone so the
        // per-frequency extremes are always sampled; the rest are random
        // band-limited mixtures.
        std::vector<Complex> coeff(modes.size(), Complex(0.0, 0.0));
        double norm2 = 0.0;
        if (static_cast<std::size_t>(p) < modes.size()) {
            coeff[static_cast<std::size_t>(p)] = Complex(1.0, 0.0);
            norm2 = 1.0;
        } else {
            for (auto& c : coeff) {
                c = Complex(gauss(rng), gauss(rng));
                norm2 += std::norm(c);
            }
        }
        const double inv = 1.0 / std::sqrt(norm2 * static_cast<double>(n));
        HilbertVector probe(n);
        for (std::size_t t = 0; t < n; ++t) {
            Complex acc(0.0, 0.0);
            for (std::size_t m = 0; m < modes.size(); ++m) {
                if (coeff[m] == Complex(0.0, 0.0)) continue;
                const double phase = 2.0 * std::numbers::pi *
                                     static_cast<double>(modes[m]) *
                                     static_cast<double>(t) /
                                     static_cast<double>(n);
                acc += coeff[m] * Complex(std::cos(phase), std::sin(phase));
            }
            probe[t] = acc * inv;
        }
        double quad = 0.0;
        for (std::size_t i = 0; i < f.atom_count(); ++i)
            quad += f.weight(i) * std::norm(inner(probe, f.vector(i)));
        const double ratio = quad / c_psi;
        lo_ratio = std::min(lo_ratio, ratio);
        hi_ratio = std::max(hi_ratio, ratio);
    }
    return {lo_ratio, hi_ratio};
}

}  // namespace framecal
