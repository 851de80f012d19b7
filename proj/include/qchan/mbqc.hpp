#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qchan/tomography.hpp"

namespace qchan {

// Measurement bases for one pattern step. Adaptive callbacks receive the
// outcomes of strictly earlier steps, in step order.
struct ComputationalBasis {};

struct AdaptiveEquatorial {
    std::function<double(const std::vector<int>&)> angle;
};

struct AdaptiveProjective {
    // Orthonormal direction pair; outcome 0 selects the first vector.
    std::function<std::pair<ComplexMatrix, ComplexMatrix>(const std::vector<int>&)> directions;
};

struct MeasurementStep {
    int qubit = 0;
    std::variant<ComputationalBasis, AdaptiveEquatorial, AdaptiveProjective> basis;
};

/// Pauli word applied to the output qubit after all measurements.
struct PauliCorrection {
    bool apply_z = false;
    bool apply_x = false;
};

struct MeasurementPattern {
    std::vector<MeasurementStep> steps;
    int output_qubit = 0;
    std::function<PauliCorrection(const std::vector<int>&)> correction_rule;

    /// Every non-output qubit measured exactly once, output never.
    void validate(int num_qubits) const;
};

/// One outcome assignment: joint probability and the corrected
/// conditional output, carried unnormalized (trace = probability).
struct Branch {
    std::vector<int> outcomes;
    double probability = 0.0;
    DensityState conditional_output;
};

struct ChannelRealisation {
    ChannelMode mode;
    DampingParams params;
    /// Normalized channel output per probe, in probe_states() order.
    std::array<DensityState, 4> outputs;
    /// Branch table for the naturally encoded |+> probe.
    std::vector<Branch> plus_probe_branches;
    ProcessMatrix chi;
    /// Probe-averaged probability of the kept (s1, s2) bin; 1 when no
    /// postselection. Shot-budget emulation scales by this, since a
    /// postselected column only sees its share of the total runs.
    double postselect_probability = 1.0;
};

/// The four-qubit pattern for one channel: qubit 0 in B(2 gamma1),
/// qubit 1 in B((-1)^{s1} pi/2), qubit 2 in the byproduct-adjusted
/// ancilla basis {Z^{s1} X^{s2} H R_y(2 gamma2)^dagger |0/1>}, output on
/// qubit 3 with correction Z^{s2} X^{s3} (the X is dropped for phase
/// damping).
MeasurementPattern build_pattern(const DampingParams& p, ChannelMode mode);

/// Executes the pattern for one fixed outcome tuple: sequential
/// projective updates with adaptive bases resolved against the supplied
/// outcomes, then the correction on the output qubit.
Branch run_branch(const DensityState& cluster, const MeasurementPattern& pattern,
                  const std::vector<int>& outcomes);

/// Attaches a probe at chain position 4: CZ between qubit 3 of the
/// three-qubit CZ chain of |+> states and the probe qubit. For probe
/// |+><+| this reproduces the four-qubit reference cluster state.
DensityState inject_probe(const DensityState& probe);

/// Optional transform applied to each injected four-qubit resource state
/// before measurement (noise emulation hooks in here).
using ResourceDegrader = std::function<DensityState(const DensityState&)>;

/// Realises the channel by exhaustive branch enumeration. Without
/// postselection all 8 corrected branches are summed (deterministic
/// channel); with postselect = (s1, s2) only matching branches are kept,
/// summed over s3 and renormalized. `apply_corrections = false` disables
/// the byproduct correction (mutation hook for tests).
ChannelRealisation realise_channel(const DampingParams& p, ChannelMode mode,
                                   const std::array<DensityState, 4>& probe_set,
                                   std::optional<std::pair<int, int>> postselect = std::nullopt,
                                   const ResourceDegrader& degrade = nullptr,
                                   bool apply_corrections = true);

}  // namespace qchan
