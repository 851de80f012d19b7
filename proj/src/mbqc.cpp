#include "qchan/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qchan {

void MeasurementPattern::validate(int num_qubits) const {
    std::vector<int> seen(num_qubits, 0);
    for (const auto& step : steps) {
        if (step.qubit < 0 || step.qubit >= num_qubits)
            throw std::invalid_argument("pattern: step qubit out of range");
        ++seen[step.qubit];
    }
    if (output_qubit < 0 || output_qubit >= num_qubits)
        throw std::invalid_argument("pattern: output qubit out of range");
    if (seen[output_qubit] != 0) throw std::invalid_argument("pattern: output qubit is measured");
    for (int q = 0; q < num_qubits; ++q)
        if (q != output_qubit && seen[q] != 1)
            throw std::invalid_argument("pattern: every non-output qubit must be measured once");
}

MeasurementPattern build_pattern(const DampingParams& p, ChannelMode mode) {
    const double g1 = p.gamma1();
    const double g2 = p.gamma2();
    const double half_pi = std::acos(0.0);

    MeasurementPattern pattern;
    pattern.steps.push_back(
        {0, AdaptiveEquatorial{[g1](const std::vector<int>&) { return 2.0 * g1; }}});
    pattern.steps.push_back({1, AdaptiveEquatorial{[half_pi](const std::vector<int>& prev) {
                                 return (prev[0] ? -1.0 : 1.0) * half_pi;
                             }}});
    pattern.steps.push_back({2, AdaptiveProjective{[g2](const std::vector<int>& prev) {
                                 ComplexMatrix mod = ComplexMatrix::identity(2);
                                 if (prev[0]) mod = gates::z() * mod;
                                 if (prev[1]) mod = gates::x() * mod;
                                 const ComplexMatrix base = mod * gates::h() *
                                                            gates::ry(2.0 * g2).dagger();
                                 return std::make_pair(base * gates::ket0(), base * gates::ket1());
                             }}});
    pattern.output_qubit = 3;

    const bool with_x = mode != ChannelMode::phase;
    pattern.correction_rule = [with_x](const std::vector<int>& s) {
        return PauliCorrection{s[1] != 0, with_x && s[2] != 0};
    };
    pattern.validate(4);
    return pattern;
}

Branch run_branch(const DensityState& cluster, const MeasurementPattern& pattern,
                  const std::vector<int>& outcomes) {
    if (outcomes.size() != pattern.steps.size())
        throw std::invalid_argument("run_branch: outcome tuple length mismatch");
    pattern.validate(cluster.num_qubits);

    // original labels of the qubits still present, in index order
    std::vector<int> labels(cluster.num_qubits);
    for (int q = 0; q < cluster.num_qubits; ++q) labels[q] = q;

    DensityState state = cluster;
    std::vector<int> prefix;
    for (std::size_t i = 0; i < pattern.steps.size(); ++i) {
        const auto& step = pattern.steps[i];
        const int s = outcomes[i];
        if (s != 0 && s != 1) throw std::invalid_argument("run_branch: outcomes must be bits");

        ComplexMatrix direction;
        if (const auto* eq = std::get_if<AdaptiveEquatorial>(&step.basis)) {
            direction = EquatorialBasis{eq->angle(prefix)}.direction(s);
        } else if (const auto* gp = std::get_if<AdaptiveProjective>(&step.basis)) {
            const auto pair = gp->directions(prefix);
            if (std::abs(inner(pair.first, pair.second)) > 1e-10)
                throw std::invalid_argument("run_branch: projective pair not orthogonal");
            direction = s == 0 ? pair.first : pair.second;
        } else {
            direction = gates::basis_ket(1, static_cast<std::size_t>(s));
        }

        const auto pos = std::find(labels.begin(), labels.end(), step.qubit);
        auto [prob, post] = project(state, static_cast<int>(pos - labels.begin()), direction);
        (void)prob;
        labels.erase(pos);
        state = std::move(post);
        prefix.push_back(s);
    }

    if (pattern.correction_rule) {
        const PauliCorrection corr = pattern.correction_rule(prefix);
        if (corr.apply_x) state = apply_to_qubits(state, gates::x(), 0);
        if (corr.apply_z) state = apply_to_qubits(state, gates::z(), 0);
    }

    Branch branch;
    branch.outcomes = prefix;
    branch.probability = state.matrix.trace().real();
    branch.conditional_output = std::move(state);
    return branch;
}

DensityState inject_probe(const DensityState& probe) {
    if (probe.num_qubits != 1) throw std::invalid_argument("inject_probe: probe must be 1 qubit");
    const DensityState chain = linear_cluster(3);
    DensityState joint(4, kron(chain.matrix, probe.matrix));
    return apply_to_qubits(joint, gates::cz(), 2);
}

ChannelRealisation realise_channel(const DampingParams& p, ChannelMode mode,
                                   const std::array<DensityState, 4>& probe_set,
                                   std::optional<std::pair<int, int>> postselect,
                                   const ResourceDegrader& degrade, bool apply_corrections) {
    MeasurementPattern pattern = build_pattern(p, mode);
    if (!apply_corrections) pattern.correction_rule = nullptr;

    ChannelRealisation real{mode, p, {}, {}, {}, 1.0};
    double kept_prob_sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        DensityState resource = inject_probe(probe_set[k]);
        if (degrade) resource = degrade(resource);

        std::vector<Branch> branches;
        branches.reserve(8);
        for (int code = 0; code < 8; ++code)
            branches.push_back(
                run_branch(resource, pattern, {(code >> 2) & 1, (code >> 1) & 1, code & 1}));

        ComplexMatrix sum(2, 2);
        double kept_prob = 0.0;
        for (const auto& b : branches) {
            if (postselect &&
                (b.outcomes[0] != postselect->first || b.outcomes[1] != postselect->second))
                continue;
            sum += b.conditional_output.matrix;
            kept_prob += b.probability;
        }
        if (kept_prob <= 1e-15)
            throw std::runtime_error("realise_channel: postselected probability is zero");
        kept_prob_sum += kept_prob;
        real.outputs[k] = DensityState(1, sum * cdouble(1.0 / kept_prob));

        // |+> is the probe the cluster encodes natively; keep its table
        if (probe_set[k].matrix.approx_equal(density_from_ket(gates::ket_plus()).matrix, 1e-12))
            real.plus_probe_branches = branches;
        else if (k == 0 && real.plus_probe_branches.empty())
            real.plus_probe_branches = branches;
    }

    real.chi = process_tomography(probe_set, real.outputs);
    real.postselect_probability = postselect ? kept_prob_sum / 4.0 : 1.0;
    return real;
}

}  // namespace qchan
