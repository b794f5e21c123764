// framecal: command-line front door for the sampled-frame library.
//
// Exit codes: 0 = the checked property holds, 1 = it fails or a mathematical
// hypothesis is violated, 2 = invalid input (bad files, bad flags, bad
// grids). Reports are JSON on stdout; diagnostics go to stderr. Identical
// inputs and seeds produce byte-identical reports.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "framecal/approx.hpp"
#include "framecal/cwt.hpp"
#include "framecal/duality.hpp"
#include "framecal/errors.hpp"
#include "framecal/frame.hpp"
#include "framecal/frame_io.hpp"
#include "framecal/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

// Input-shaped problems exit 2; mathematical failures exit 1.
int classify_error(const framecal::Error& e) {
    using namespace framecal;
    if (dynamic_cast<const ParseError*>(&e) != nullptr ||
        dynamic_cast<const SpaceMismatch*>(&e) != nullptr ||
        dynamic_cast<const DimensionMismatch*>(&e) != nullptr ||
        dynamic_cast<const IndexOutOfRange*>(&e) != nullptr ||
        dynamic_cast<const NonPositiveWeight*>(&e) != nullptr ||
        dynamic_cast<const DuplicateLabel*>(&e) != nullptr ||
        dynamic_cast<const WouldBeEmpty*>(&e) != nullptr ||
        dynamic_cast<const NonPositiveGrid*>(&e) != nullptr ||
        dynamic_cast<const GridTooCoarse*>(&e) != nullptr)
        return kBadInput;
    return kFail;
}

double env_default_tol() {
    if (const char* env = std::getenv("FRAMECAL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
            throw framecal::ParseError("FRAMECAL_TOL must be a positive number");
        return v;
    }
    return 1e-8;
}

double pick_tol(const std::optional<double>& flag) {
    if (flag) {
        if (!(*flag > 0.0) || !std::isfinite(*flag))
            throw framecal::ParseError("--tol must be a positive number");
        return *flag;
    }
    return env_default_tol();
}

struct FrameInput {
    framecal::SampledFrame frame;
    std::string digest;
};

FrameInput load_frame_input(const std::string& path) {
    const std::string text = framecal::read_text_file(path);
    return {framecal::parse_frame(text), framecal::fnv1a_digest(text)};
}

struct OperatorInput {
    framecal::LinearOperator op;
    std::string digest;
};

OperatorInput load_operator_input(const std::string& path) {
    const std::string text = framecal::read_text_file(path);
    return {framecal::parse_operator(text), framecal::fnv1a_digest(text)};
}

void emit_report(const std::string& command, ordered_json inputs,
                 ordered_json tolerances, ordered_json verdicts) {
    ordered_json report;
    report["command"] = command;
    report["library_version"] = framecal::library_version;
    report["inputs"] = std::move(inputs);
    report["tolerances"] = std::move(tolerances);
    report["verdicts"] = std::move(verdicts);
    std::cout << report.dump(2) << "\n";
}

ordered_json complex_json(framecal::Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

int run_inspect(const std::string& path, const std::optional<double>& tol_flag) {
    const FrameInput in = load_frame_input(path);
    const double tol = pick_tol(tol_flag);
    const double rank_tol = 1e-10;
    const framecal::FrameBounds b = framecal::frame_bounds(in.frame, tol);
    ordered_json verdicts;
    verdicts["lower_bound"] = b.lower;
    verdicts["upper_bound"] = b.upper;
    verdicts["classification"] = framecal::to_string(b.classification);
    verdicts["mu_complete"] = framecal::is_mu_complete(in.frame, rank_tol);
    verdicts["l2_independent"] = framecal::is_l2_independent(in.frame, rank_tol);
    verdicts["riesz_basis"] = framecal::is_riesz_basis(in.frame, rank_tol);
    verdicts["orthonormal_basis"] = framecal::is_orthonormal_basis(in.frame, tol);
    emit_report("inspect", {{"frame", in.digest}},
                {{"classification_tol", tol}, {"rank_tol", rank_tol}},
                std::move(verdicts));
    return kPass;
}

void fill_defect_verdicts(ordered_json& verdicts, const framecal::DefectReport& d) {
    verdicts["defect"] = d.defect;
    verdicts["is_approx_dual"] = d.is_approx_dual;
    verdicts["at_boundary"] = d.at_boundary;
    if (d.is_approx_dual) {
        verdicts["guaranteed_lower_f"] = d.guaranteed_lower_f;
        verdicts["guaranteed_lower_g"] = d.guaranteed_lower_g;
    }
    if (d.at_boundary)
        verdicts["boundary_note"] =
            "defect equals 1: the strict approximate-duality condition "
            "||I - T_G T_F^adj|| < 1 fails exactly at the boundary";
}

int run_check_dual(const std::string& f_path, const std::string& g_path,
                   const std::optional<double>& tol_flag) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const double tol = pick_tol(tol_flag);
    const framecal::DualPairReport rep = framecal::is_dual_pair(f.frame, g.frame, tol);
    const framecal::DefectReport d = framecal::defect(f.frame, g.frame);
    ordered_json verdicts;
    verdicts["is_dual"] = rep.is_dual;
    verdicts["residual"] = rep.residual;
    fill_defect_verdicts(verdicts, d);
    emit_report("check-dual", {{"f", f.digest}, {"g", g.digest}},
                {{"dual_tol", tol}}, std::move(verdicts));
    return rep.is_dual ? kPass : kFail;
}

int run_defect(const std::string& f_path, const std::string& g_path) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const framecal::DefectReport d = framecal::defect(f.frame, g.frame);
    ordered_json verdicts;
    fill_defect_verdicts(verdicts, d);
    emit_report("defect", {{"f", f.digest}, {"g", g.digest}},
                {{"norm_agreement_tol", 1e-10}, {"boundary_tol", 1e-12}},
                std::move(verdicts));
    return d.is_approx_dual ? kPass : kFail;
}

int run_construct(const std::string& kind, const std::string& frame_path,
                  const std::string& partner_path, const std::string& d_path,
                  const std::string& kernel_path, const std::string& out_path,
                  const std::optional<double>& tol_flag) {
    const double tol = pick_tol(tol_flag);
    const FrameInput f = load_frame_input(frame_path);
    ordered_json inputs{{"frame", f.digest}};

    std::optional<framecal::SampledFrame> out;
    if (kind == "standard-dual") {
        out = framecal::standard_dual(f.frame);
    } else if (kind == "exactify") {
        if (partner_path.empty())
            throw framecal::ParseError("construct exactify needs --partner");
        const FrameInput g = load_frame_input(partner_path);
        inputs["partner"] = g.digest;
        out = framecal::exactify(f.frame, g.frame);
    } else if (kind == "thm49" || kind == "thm410") {
        if (d_path.empty() || kernel_path.empty())
            throw framecal::ParseError("construct " + kind + " needs --d and --kernel");
        const OperatorInput d = load_operator_input(d_path);
        const FrameInput k = load_frame_input(kernel_path);
        inputs["d"] = d.digest;
        inputs["kernel"] = k.digest;
        out = kind == "thm49"
                  ? framecal::build_approx_dual_kernel(f.frame, d.op, k.frame)
                  : framecal::build_approx_dual_dualpair(f.frame, d.op, k.frame);
    } else {
        throw framecal::ParseError("unknown construct kind: " + kind);
    }

    framecal::save_frame(*out, out_path);
    const framecal::DefectReport d = framecal::defect(f.frame, *out);
    const framecal::DualPairReport rep = framecal::is_dual_pair(f.frame, *out, tol);
    ordered_json verdicts;
    verdicts["kind"] = kind;
    verdicts["output"] = out_path;
    verdicts["output_digest"] = framecal::fnv1a_digest(framecal::serialize_frame(*out));
    verdicts["is_dual"] = rep.is_dual;
    verdicts["residual"] = rep.residual;
    fill_defect_verdicts(verdicts, d);
    emit_report("construct", std::move(inputs), {{"dual_tol", tol}}, std::move(verdicts));
    return kPass;
}

int run_remove_atom(const std::string& f_path, const std::string& g_path,
                    std::size_t index, const std::optional<double>& tol_flag) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const double tol = pick_tol(tol_flag);
    const ordered_json inputs{{"f", f.digest}, {"g", g.digest}};
    const ordered_json tolerances{{"degeneracy_tol", tol}};
    try {
        const framecal::RemovalReport r =
            framecal::remove_atom_check(f.frame, g.frame, index, tol);
        ordered_json verdicts;
        verdicts["index"] = index;
        verdicts["removable"] = r.removable;
        verdicts["product"] = complex_json(r.product);
        verdicts["atom_weight"] = r.atom_weight;
        verdicts["constant"] = r.constant;
        verdicts["guaranteed_lower"] = r.guaranteed_lower;
        verdicts["guaranteed_lower_alt"] = r.guaranteed_lower_alt;
        verdicts["actual_lower"] = r.actual_lower;
        emit_report("remove-atom", inputs, tolerances, std::move(verdicts));
        return kPass;
    } catch (const framecal::DegenerateAtom&) {
        const framecal::DegenerateRemovalReport d =
            framecal::degenerate_removal(f.frame, index, tol);
        ordered_json verdicts;
        verdicts["index"] = index;
        verdicts["removable"] = false;
        verdicts["product"] = d.product;
        verdicts["omega0"] = d.support;
        verdicts["reduced_incomplete"] = d.reduced_incomplete;
        emit_report("remove-atom", inputs, tolerances, std::move(verdicts));
        return kFail;
    }
}

int run_affine_dual(const std::string& f_path, const std::string& g_path,
                    const std::string& k_path, double alpha_re, double alpha_im,
                    const std::string& out_path, const std::optional<double>& tol_flag) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const FrameInput k = load_frame_input(k_path);
    const double tol = pick_tol(tol_flag);
    const framecal::SampledFrame out = framecal::affine_dual(
        f.frame, g.frame, k.frame, framecal::Complex(alpha_re, alpha_im), tol);
    framecal::save_frame(out, out_path);
    const framecal::DualPairReport rep = framecal::is_dual_pair(f.frame, out, tol);
    ordered_json verdicts;
    verdicts["alpha"] = complex_json(framecal::Complex(alpha_re, alpha_im));
    verdicts["output"] = out_path;
    verdicts["output_digest"] = framecal::fnv1a_digest(framecal::serialize_frame(out));
    verdicts["is_dual"] = rep.is_dual;
    verdicts["residual"] = rep.residual;
    emit_report("affine-dual", {{"f", f.digest}, {"g", g.digest}, {"k", k.digest}},
                {{"dual_tol", tol}}, std::move(verdicts));
    return rep.is_dual ? kPass : kFail;
}

int run_transport(const std::string& f_path, const std::string& g_path,
                  const std::string& u_path, const std::string& v_path) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const OperatorInput u = load_operator_input(u_path);
    const OperatorInput v = load_operator_input(v_path);
    const framecal::DefectReport d =
        framecal::transport_approx(f.frame, g.frame, u.op, v.op);
    ordered_json verdicts;
    fill_defect_verdicts(verdicts, d);
    emit_report(
        "transport",
        {{"f", f.digest}, {"g", g.digest}, {"u", u.digest}, {"v", v.digest}},
        {{"boundary_tol", 1e-12}}, std::move(verdicts));
    return d.is_approx_dual ? kPass : kFail;
}

int run_douglas(const std::string& f_path, const std::string& g_path,
                const std::string& out_d_path) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    const framecal::DouglasFactor factor = framecal::douglas_factor(f.frame, g.frame);
    ordered_json verdicts;
    verdicts["dd_star_ok"] = factor.dd_star_ok;
    verdicts["dd_star_max"] = factor.dd_star_max;
    verdicts["bessel_bound_g"] = framecal::frame_bounds(g.frame).upper;
    verdicts["defect_via_d"] = factor.defect_via_d;
    verdicts["factor_residual"] = factor.factor_residual;
    if (!out_d_path.empty()) {
        framecal::save_operator(factor.d, out_d_path);
        verdicts["output_d"] = out_d_path;
    }
    emit_report("douglas", {{"f", f.digest}, {"g", g.digest}},
                {{"dd_star_slack", 1e-9}}, std::move(verdicts));
    return factor.dd_star_ok ? kPass : kFail;
}

int run_perturb(const std::string& mode, const std::string& f_path,
                const std::string& g_path, const std::string& kernel_path,
                double lambda, double gamma, int trials, std::uint64_t seed) {
    const FrameInput f = load_frame_input(f_path);
    const FrameInput g = load_frame_input(g_path);
    ordered_json inputs{{"f", f.digest}, {"g", g.digest}};

    framecal::PerturbationCertificate cert;
    if (mode == "parseval") {
        cert = framecal::perturb_parseval(f.frame, g.frame, lambda, gamma, trials, seed);
    } else if (mode == "analysis" || mode == "dual-pair") {
        if (kernel_path.empty())
            throw framecal::ParseError("perturb " + mode + " needs --kernel");
        const FrameInput k = load_frame_input(kernel_path);
        inputs["kernel"] = k.digest;
        cert = mode == "analysis"
                   ? framecal::perturb_analysis(f.frame, g.frame, k.frame, lambda)
                   : framecal::perturb_dualpair(f.frame, g.frame, k.frame, lambda,
                                                gamma, trials, seed);
    } else {
        throw framecal::ParseError("unknown perturb mode: " + mode);
    }

    ordered_json verdicts;
    verdicts["kind"] = framecal::to_string(cert.kind);
    verdicts["mode"] = framecal::to_string(cert.mode);
    verdicts["lambda"] = cert.lambda;
    verdicts["gamma"] = cert.gamma;
    verdicts["hypothesis_ok"] = cert.hypothesis_ok;
    verdicts["trials"] = cert.trials;
    if (cert.kind == framecal::PerturbationKind::AnalysisPerturb)
        verdicts["lambda_min_valid"] = cert.lambda_min_valid;
    verdicts["smallness_ok"] = cert.smallness_ok;
    verdicts["predicted_defect_bound"] = cert.predicted_defect_bound;
    verdicts["observed_defect"] = cert.observed_defect;
    emit_report("perturb", std::move(inputs),
                {{"seed", seed}, {"certificate_slack", 1e-9}}, std::move(verdicts));
    return cert.hypothesis_ok && cert.smallness_ok ? kPass : kFail;
}

int run_cwt(const std::string& wavelet, double amin, double amax, std::size_t na,
            std::size_t nb, std::size_t dim, int probes, std::uint64_t seed,
            double rmin, double rmax) {
    if (wavelet != "mexican-hat")
        throw framecal::ParseError("unsupported wavelet: " + wavelet);
    const framecal::WaveletSpec spec = framecal::mexican_hat();
    const framecal::AffineGrid grid =
        framecal::make_affine_grid(amin, amax, na, nb, static_cast<double>(dim));
    const framecal::SampledFrame frame = framecal::build_cwt_frame(spec, grid, dim);
    const framecal::Band band = framecal::resolved_band(spec, grid, dim);
    const double c_psi =
        framecal::admissibility_constant(spec, {1e-4, 12.0, 20000});
    const framecal::TightnessReport rep =
        framecal::tightness_report(frame, c_psi, band, probes, seed);
    const bool within = rep.min_ratio >= rmin && rep.max_ratio <= rmax;
    ordered_json verdicts;
    verdicts["wavelet"] = wavelet;
    verdicts["dim"] = dim;
    verdicts["a_min"] = amin;
    verdicts["a_max"] = amax;
    verdicts["scales"] = na;
    verdicts["translations"] = nb;
    verdicts["probes"] = probes;
    verdicts["c_psi"] = c_psi;
    verdicts["band"] = ordered_json::array({band.lo, band.hi});
    verdicts["min_ratio"] = rep.min_ratio;
    verdicts["max_ratio"] = rep.max_ratio;
    verdicts["ratio_band"] = ordered_json::array({rmin, rmax});
    verdicts["within_band"] = within;
    emit_report("cwt", ordered_json::object(),
                {{"ratio_band_lo", rmin},
                 {"ratio_band_hi", rmax},
                 {"quadrature_stability", 0.005},
                 {"seed", seed}},
                std::move(verdicts));
    return within ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framecal: weighted sampled frames, duality and wavelet tightness"};
    app.require_subcommand(1);
    int exit_code = kPass;

    // inspect
    std::string in_frame;
    std::optional<double> in_tol;
    auto* inspect = app.add_subcommand("inspect", "Frame bounds, classification and rank flags");
    inspect->add_option("frame", in_frame, "frame JSON file")->required();
    inspect->add_option("--tol", in_tol, "classification tolerance");
    inspect->callback([&] { exit_code = run_inspect(in_frame, in_tol); });

    // check-dual
    std::string cd_f, cd_g;
    std::optional<double> cd_tol;
    auto* check_dual = app.add_subcommand("check-dual", "Verify T_G T_F^adj = I");
    check_dual->add_option("f", cd_f, "frame JSON file")->required();
    check_dual->add_option("g", cd_g, "candidate dual JSON file")->required();
    check_dual->add_option("--tol", cd_tol, "duality tolerance");
    check_dual->callback([&] { exit_code = run_check_dual(cd_f, cd_g, cd_tol); });

    // defect
    std::string df_f, df_g;
    auto* defect_cmd = app.add_subcommand("defect", "Approximate-duality defect ||I - T_G T_F^adj||");
    defect_cmd->add_option("f", df_f, "frame JSON file")->required();
    defect_cmd->add_option("g", df_g, "candidate approximate dual JSON file")->required();
    defect_cmd->callback([&] { exit_code = run_defect(df_f, df_g); });

    // construct
    std::string co_kind, co_frame, co_partner, co_d, co_kernel, co_out;
    std::optional<double> co_tol;
    auto* construct = app.add_subcommand("construct", "Build dual and approximately dual frames");
    construct->add_option("kind", co_kind, "standard-dual | thm49 | thm410 | exactify")
        ->required()
        ->check(CLI::IsMember({"standard-dual", "thm49", "thm410", "exactify"}));
    construct->add_option("--frame", co_frame, "input frame JSON file")->required();
    construct->add_option("--partner", co_partner, "approximate dual (exactify)");
    construct->add_option("--d", co_d, "factor operator JSON file (thm49, thm410)");
    construct->add_option("--kernel", co_kernel, "kernel family JSON file (thm49, thm410)");
    construct->add_option("--out", co_out, "output frame JSON file")->required();
    construct->callback([&] {
        exit_code = run_construct(co_kind, co_frame, co_partner, co_d, co_kernel,
                                  co_out, co_tol);
    });
    construct->add_option("--tol", co_tol, "duality tolerance for the verdict");

    // remove-atom
    std::string ra_f, ra_g;
    std::size_t ra_index = 0;
    std::optional<double> ra_tol;
    auto* remove_atom = app.add_subcommand("remove-atom", "Can one atom be removed and leave a frame?");
    remove_atom->add_option("f", ra_f, "frame JSON file")->required();
    remove_atom->add_option("g", ra_g, "dual JSON file")->required();
    remove_atom->add_option("--index", ra_index, "atom index to remove")->required();
    remove_atom->add_option("--tol", ra_tol, "degeneracy tolerance");
    remove_atom->callback([&] { exit_code = run_remove_atom(ra_f, ra_g, ra_index, ra_tol); });

    // affine-dual
    std::string ad_f, ad_g, ad_k, ad_out;
    double ad_re = 0.5, ad_im = 0.0;
    std::optional<double> ad_tol;
    auto* affine = app.add_subcommand("affine-dual", "Affine combination of two duals");
    affine->add_option("f", ad_f, "frame JSON file")->required();
    affine->add_option("g", ad_g, "first dual JSON file")->required();
    affine->add_option("k", ad_k, "second dual JSON file")->required();
    affine->add_option("--alpha-re", ad_re, "real part of alpha (default 0.5)");
    affine->add_option("--alpha-im", ad_im, "imaginary part of alpha (default 0)");
    affine->add_option("--out", ad_out, "output frame JSON file")->required();
    affine->add_option("--tol", ad_tol, "duality tolerance");
    affine->callback([&] {
        exit_code = run_affine_dual(ad_f, ad_g, ad_k, ad_re, ad_im, ad_out, ad_tol);
    });

    // transport
    std::string tr_f, tr_g, tr_u, tr_v;
    auto* transport = app.add_subcommand("transport", "Defect of (U F, V G) from an approximate dual pair");
    transport->add_option("f", tr_f, "frame JSON file")->required();
    transport->add_option("g", tr_g, "approximate dual JSON file")->required();
    transport->add_option("--u", tr_u, "operator applied to f")->required();
    transport->add_option("--v", tr_v, "operator applied to g")->required();
    transport->callback([&] { exit_code = run_transport(tr_f, tr_g, tr_u, tr_v); });

    // douglas
    std::string dg_f, dg_g, dg_out;
    auto* douglas = app.add_subcommand("douglas", "Factor T_F T_G^adj = S^{1/2} D and bound D D^adj");
    douglas->add_option("f", dg_f, "frame JSON file")->required();
    douglas->add_option("g", dg_g, "Bessel family JSON file")->required();
    douglas->add_option("--out-d", dg_out, "write the factor D to this JSON file");
    douglas->callback([&] { exit_code = run_douglas(dg_f, dg_g, dg_out); });

    // perturb
    std::string pb_mode, pb_f, pb_g, pb_kernel;
    double pb_lambda = 0.0, pb_gamma = 0.0;
    int pb_trials = 10000;
    std::uint64_t pb_seed = 42;
    auto* perturb = app.add_subcommand("perturb", "Certify a perturbation smallness hypothesis");
    perturb->add_option("mode", pb_mode, "parseval | analysis | dual-pair")
        ->required()
        ->check(CLI::IsMember({"parseval", "analysis", "dual-pair"}));
    perturb->add_option("f", pb_f, "frame JSON file")->required();
    perturb->add_option("g", pb_g, "partner JSON file")->required();
    perturb->add_option("--kernel", pb_kernel, "perturbed family (analysis, dual-pair)");
    perturb->add_option("--lambda", pb_lambda, "relative perturbation size")->required();
    perturb->add_option("--gamma", pb_gamma, "additive perturbation size");
    perturb->add_option("--trials", pb_trials, "randomized search probes (default 10000)");
    perturb->add_option("--seed", pb_seed, "random seed (default 42)");
    perturb->callback([&] {
        exit_code = run_perturb(pb_mode, pb_f, pb_g, pb_kernel, pb_lambda, pb_gamma,
                                pb_trials, pb_seed);
    });

    // cwt
    std::string cw_wavelet = "mexican-hat";
    double cw_amin = 2.0, cw_amax = 16.0, cw_rmin = 0.9, cw_rmax = 1.1;
    std::size_t cw_na = 32, cw_nb = 64, cw_dim = 256;
    int cw_probes = 20;
    std::uint64_t cw_seed = 42;
    auto* cwt = app.add_subcommand("cwt", "Tightness of a sampled wavelet system");
    cwt->add_option("--wavelet", cw_wavelet, "mother wavelet (default mexican-hat)");
    cwt->add_option("--amin", cw_amin, "smallest scale edge (default 2)");
    cwt->add_option("--amax", cw_amax, "largest scale edge (default 16)");
    cwt->add_option("--na", cw_na, "number of log-spaced scales (default 32)");
    cwt->add_option("--nb", cw_nb, "number of translations (default 64)");
    cwt->add_option("--dim", cw_dim, "signal dimension (default 256)");
    cwt->add_option("--probes", cw_probes, "band-limited probes (default 20)");
    cwt->add_option("--seed", cw_seed, "random seed (default 42)");
    cwt->add_option("--rmin", cw_rmin, "lower edge of the accepted ratio band");
    cwt->add_option("--rmax", cw_rmax, "upper edge of the accepted ratio band");
    cwt->callback([&] {
        exit_code = run_cwt(cw_wavelet, cw_amin, cw_amax, cw_na, cw_nb, cw_dim,
                            cw_probes, cw_seed, cw_rmin, cw_rmax);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    } catch (const framecal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return exit_code;
}
