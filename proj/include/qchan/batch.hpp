#pragma once

#include <cstdint>
#include <string>

#include "qchan/mbqc.hpp"
#include "qchan/noise.hpp"
#include "qchan/parallel.hpp"

namespace qchan {

/// The three equivalent routes to a channel's process matrix.
enum class EngineKind { kraus, circuit, mbqc };

std::string to_string(EngineKind engine);

/// chi of the channel realised by the requested engine. Postselection
/// and resource degradation only affect the mbqc engine; the closed-form
/// engines ignore them.
ProcessMatrix engine_chi(const DampingParams& p, ChannelMode mode, EngineKind engine,
                         std::optional<std::pair<int, int>> postselect = std::nullopt,
                         const ResourceDegrader& degrade = nullptr);

/// Channel outputs for the standard probe set under the given engine.
std::array<DensityState, 4> engine_outputs(const DampingParams& p, ChannelMode mode,
                                           EngineKind engine,
                                           std::optional<std::pair<int, int>> postselect = std::nullopt,
                                           const ResourceDegrader& degrade = nullptr);

/// The (alpha, beta) working point the sweep grids use at value g:
/// amplitude and phase damp at Gamma = g; beta mode holds alpha = 0.3
/// and scales beta = 1.2 g, so g = 1 is the (0.3, 1.2) working point.
DampingParams grid_params(ChannelMode mode, double g);

// ---------------------------------------------------------------------
// Batch kernels. Work items are independent and write only their own
// output slot, so Exec::serial and Exec::parallel agree bit for bit;
// the serial path is the reference the tests compare against.
// ---------------------------------------------------------------------

struct GridPointDeviation {
    double alpha = 0.0;
    double beta = 0.0;
    ChannelMode mode = ChannelMode::amplitude;
    /// Largest entrywise distance among chi(kraus), chi(circuit), chi(mbqc).
    double max_abs_deviation = 0.0;
};

/// Three-way engine comparison on an n x n (alpha, beta) grid over
/// [0, pi/2]^2, for all three modes.
std::vector<GridPointDeviation> equivalence_scan(int grid_n, Exec exec = Exec::parallel,
                                                 bool apply_corrections = true);

struct BlochMapping {
    double x = 0, y = 0, z = 0;
    double xp = 0, yp = 0, zp = 0;
};

/// Fibonacci-lattice points on the Bloch sphere and their images under
/// the channel.
std::vector<BlochMapping> bloch_cloud(const KrausChannel& ch, int samples,
                                      Exec exec = Exec::parallel);
std::vector<BlochMapping> bloch_cloud(const ProcessMatrix& chi, int samples,
                                      Exec exec = Exec::parallel);

struct SweepPoint {
    double gamma = 0.0;
    int s1 = 0, s2 = 0;
    double fp = 0.0;
    double sigma = 0.0;
};

struct SweepConfig {
    ChannelMode mode = ChannelMode::phase;
    std::vector<double> gamma_grid;
    EngineKind engine = EngineKind::mbqc;
    NoiseSpec noise;  // degrades the cluster; only the mbqc engine sees it
    long shots = 0;   // 0 = exact expectations, no bootstrap
    int resamples = 200;
    std::uint64_t seed = 1;
};

/// Process fidelity vs the ideal channel for every grid value and both
/// reported postselection cases, no-FF (s1, s2) = (0, 0) and FF (0, 1).
/// Rows are ordered by grid index then case.
std::vector<SweepPoint> sweep_process_fidelities(const SweepConfig& cfg,
                                                 Exec exec = Exec::parallel);

}  // namespace qchan
