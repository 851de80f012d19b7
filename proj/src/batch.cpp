#include "qchan/batch.hpp"

#include <cmath>
#include <stdexcept>

#include "qchan/rng.hpp"

namespace qchan {

std::string to_string(EngineKind engine) {
    switch (engine) {
        case EngineKind::kraus: return "kraus";
        case EngineKind::circuit: return "circuit";
        case EngineKind::mbqc: return "mbqc";
    }
    return "?";
}

std::array<DensityState, 4> engine_outputs(const DampingParams& p, ChannelMode mode,
                                           EngineKind engine,
                                           std::optional<std::pair<int, int>> postselect,
                                           const ResourceDegrader& degrade) {
    const auto probes = probe_states();
    if (engine == EngineKind::mbqc)
        return realise_channel(p, mode, probes, postselect, degrade).outputs;

    const KrausChannel ch = engine == EngineKind::kraus
                                ? reference_channel(p, mode)
                                : circuit_channel(p, mode != ChannelMode::phase);
    std::array<DensityState, 4> outputs;
    for (int k = 0; k < 4; ++k) outputs[k] = apply_channel(ch, probes[k]);
    return outputs;
}

ProcessMatrix engine_chi(const DampingParams& p, ChannelMode mode, EngineKind engine,
                         std::optional<std::pair<int, int>> postselect,
                         const ResourceDegrader& degrade) {
    switch (engine) {
        case EngineKind::kraus: return kraus_to_chi(reference_channel(p, mode));
        case EngineKind::circuit:
            return kraus_to_chi(circuit_channel(p, mode != ChannelMode::phase));
        case EngineKind::mbqc:
            return realise_channel(p, mode, probe_states(), postselect, degrade).chi;
    }
    throw std::invalid_argument("engine_chi: unknown engine");
}

DampingParams grid_params(ChannelMode mode, double g) {
    if (mode == ChannelMode::beta) return DampingParams(0.3, 1.2 * g);
    return DampingParams::from_gamma(g);
}

std::vector<GridPointDeviation> equivalence_scan(int grid_n, Exec exec, bool apply_corrections) {
    if (grid_n < 2) throw std::invalid_argument("equivalence_scan: grid_n must be >= 2");
    const double half_pi = std::acos(0.0);
    const ChannelMode modes[3] = {ChannelMode::amplitude, ChannelMode::phase, ChannelMode::beta};
    const int total = grid_n * grid_n * 3;

    std::vector<GridPointDeviation> out(total);
    parallel_for(total, exec, [&](int item) {
        const int m = item % 3;
        const int j = (item / 3) % grid_n;
        const int i = item / (3 * grid_n);
        const DampingParams p(i * half_pi / (grid_n - 1), j * half_pi / (grid_n - 1));
        const ChannelMode mode = modes[m];

        const ComplexMatrix chi_kraus = engine_chi(p, mode, EngineKind::kraus).chi;
        const ComplexMatrix chi_circuit = engine_chi(p, mode, EngineKind::circuit).chi;
        const ComplexMatrix chi_mbqc =
            realise_channel(p, mode, probe_states(), std::nullopt, nullptr, apply_corrections).chi.chi;

        double dev = chi_kraus.max_abs_diff(chi_circuit);
        dev = std::max(dev, chi_kraus.max_abs_diff(chi_mbqc));
        dev = std::max(dev, chi_circuit.max_abs_diff(chi_mbqc));
        out[item] = {p.alpha, p.beta, mode, dev};
    });
    return out;
}

namespace {

template <class ApplyFn>
std::vector<BlochMapping> bloch_cloud_impl(int samples, Exec exec, const ApplyFn& apply) {
    if (samples < 1) throw std::invalid_argument("bloch_cloud: samples must be >= 1");
    const double golden_angle = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));

    std::vector<BlochMapping> out(samples);
    parallel_for(samples, exec, [&](int i) {
        const double z = samples == 1 ? 0.0 : 1.0 - 2.0 * (i + 0.5) / samples;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * i;
        const double x = r * std::cos(phi), y = r * std::sin(phi);

        const ComplexMatrix rho =
            0.5 * (ComplexMatrix::identity(2) + x * gates::x() + y * gates::y() + z * gates::z());
        const auto e = exact_expectations(apply(DensityState(1, rho)));
        out[i] = {x, y, z, e.x, e.y, e.z};
    });
    return out;
}

}  // namespace

std::vector<BlochMapping> bloch_cloud(const KrausChannel& ch, int samples, Exec exec) {
    return bloch_cloud_impl(samples, exec,
                            [&](const DensityState& rho) { return apply_channel(ch, rho); });
}

std::vector<BlochMapping> bloch_cloud(const ProcessMatrix& chi, int samples, Exec exec) {
    return bloch_cloud_impl(samples, exec,
                            [&](const DensityState& rho) { return apply_chi(chi, rho); });
}

std::vector<SweepPoint> sweep_process_fidelities(const SweepConfig& cfg, Exec exec) {
    if (cfg.gamma_grid.empty()) throw std::invalid_argument("sweep: empty grid");
    for (double g : cfg.gamma_grid)
        if (g < 0.0 || g > 1.0) throw std::invalid_argument("sweep: grid values must lie in [0, 1]");

    const std::pair<int, int> cases[2] = {{0, 0}, {0, 1}};
    const int total = static_cast<int>(cfg.gamma_grid.size()) * 2;
    const ResourceDegrader degrade =
        cfg.noise.is_ideal() ? ResourceDegrader{}
                             : [spec = cfg.noise](const DensityState& s) { return spec.apply(s); };

    std::vector<SweepPoint> out(total);
    parallel_for(total, exec, [&](int item) {
        const double g = cfg.gamma_grid[item / 2];
        const auto sel = cases[item % 2];
        const DampingParams p = grid_params(cfg.mode, g);
        const ProcessMatrix ideal = kraus_to_chi(reference_channel(p, cfg.mode));

        std::array<DensityState, 4> outputs;
        double kept_fraction = 1.0;
        if (cfg.engine == EngineKind::mbqc) {
            const auto real = realise_channel(p, cfg.mode, probe_states(), sel, degrade);
            outputs = real.outputs;
            kept_fraction = real.postselect_probability;
        } else {
            outputs = engine_outputs(p, cfg.mode, cfg.engine);
        }

        SweepPoint pt{g, sel.first, sel.second, 0.0, 0.0};
        if (cfg.shots > 0) {
            // a postselected column only keeps its share of the runs
            const long budget = std::max<long>(
                1, static_cast<long>(std::llround(cfg.shots * kept_fraction)));
            const auto data =
                sample_process_data(outputs, budget, derive_seed(cfg.seed, 2 * item));
            pt.fp = process_fidelity(chi_from_counts(data), ideal);
            pt.sigma = bootstrap_process_fidelity(data, ideal, cfg.resamples,
                                                  derive_seed(cfg.seed, 2 * item + 1), Exec::serial)
                           .sigma;
        } else {
            pt.fp = process_fidelity(process_tomography(probe_states(), outputs), ideal);
        }
        out[item] = pt;
    });
    return out;
}

}  // namespace qchan
