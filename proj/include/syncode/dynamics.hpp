#pragma once

#include "syncode/bounds.hpp"
#include "syncode/codes.hpp"
#include "syncode/corpus.hpp"
#include "syncode/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace syncode {

/// Assignment of one symbol per (language, feature) site. B-features hold
/// spins {-1,+1}, T-features hold {-1,0,+1}; the feature classes live in the
/// EntailmentSchema passed alongside.
struct SpinConfiguration {
    std::vector<std::string> languages;
    std::size_t feature_count = 0;
    std::vector<Symbol> values; ///< row-major [language][feature]

    Symbol at(std::size_t language, std::size_t feature) const {
        return values[language * feature_count + feature];
    }
    void set(std::size_t language, std::size_t feature, Symbol s) {
        values[language * feature_count + feature] = s;
    }

    bool operator==(const SpinConfiguration&) const = default;
};

/// Builds the initial configuration from observed corpus values over the
/// schema's features (in schema order). Binary cells must be defined; the
/// undefined-marker is only accepted on T-features, where it becomes 0.
SpinConfiguration initial_configuration(const FeatureMatrix& matrix,
                                        std::span<const std::string> languages,
                                        const EntailmentSchema& schema);

/// Throws unless every site symbol is valid for its feature's alphabet.
void validate_state(const SpinConfiguration& state, const EntailmentSchema& schema);

enum class Proposal : std::uint8_t { SingleSite = 0 };

struct DynamicsConfig {
    double temperature = 1.0; ///< T; beta = 1/T
    std::uint64_t sweeps = 1;
    std::uint64_t sample_interval = 1; ///< in sweeps
    std::uint64_t seed = 0;
    std::vector<std::vector<std::string>> tracked_subsets;
    PlotkinVariant plotkin_variant = PlotkinVariant::Standard;
    Proposal proposal = Proposal::SingleSite;
    bool magnetization_binary_only = false;
};

/// Penalty of one entailment at one language: |prod(x_i) - |x_j|| with
/// antecedent spins mapped back to x = (s+1)/2. Zero exactly when the
/// target is defined iff the antecedent conjunction holds.
double relation_penalty(std::span<const Symbol> antecedents, Symbol target);

/// H(x) = sum over unordered pairs of J * (coordinate mismatch count)
///      + sum over relations of E * (per-language penalties).
/// Nonnegative; zero iff all words are equal and every relation holds.
double energy(const SpinConfiguration& state, const InteractionGraph& graph,
              const EntailmentSchema& schema);

/// Mean numeric symbol value over all sites, in [-1,1].
double magnetization(const SpinConfiguration& state);

/// Mean over B-feature sites only.
double magnetization_binary(const SpinConfiguration& state,
                            const EntailmentSchema& schema);

struct StepResult {
    std::size_t language = 0;
    std::size_t feature = 0;
    Symbol previous = 0;
    Symbol proposed = 0;
    double delta_h = 0.0; ///< incremental energy change of the proposal
    bool accepted = false;
};

/// Single-site Metropolis-Hastings kernel over a fixed system.
///
/// Per step the RNG stream advances by: one site index draw, one symbol
/// draw on ternary sites only (binary sites flip deterministically), and one
/// acceptance uniform that is always consumed (ignored when dH <= 0). The
/// proposal is accepted with probability min(1, exp(-beta*dH)), with dH
/// computed incrementally from the terms touching the proposed site.
class MetropolisSampler {
public:
    MetropolisSampler(SpinConfiguration initial, const InteractionGraph& graph,
                      const EntailmentSchema& schema, double temperature);

    StepResult step(Rng& rng);
    const SpinConfiguration& state() const { return state_; }
    /// Running energy, maintained incrementally from accepted steps.
    double current_energy() const { return energy_; }
    /// Full recomputation; also resyncs the running value.
    double recompute_energy();

private:
    double site_delta(std::size_t language, std::size_t feature, Symbol proposed) const;
    double relation_term(std::size_t relation, std::size_t language,
                         std::size_t feature, Symbol value) const;

    SpinConfiguration state_;
    EntailmentSchema schema_;
    std::vector<double> weights_; ///< dense L x L, zero diagonal
    std::vector<std::vector<std::size_t>> relations_by_feature_;
    double beta_;
    double energy_;
};

/// One-shot convenience around MetropolisSampler; state is updated in place.
StepResult metropolis_step(SpinConfiguration& state, const InteractionGraph& graph,
                           const EntailmentSchema& schema, const DynamicsConfig& config,
                           Rng& rng);

/// Code of a language tuple in the current state: ternary when the schema
/// has T-features, binary (spins mapped back to {0,1}) otherwise.
Code tracked_code(const SpinConfiguration& state, const EntailmentSchema& schema,
                  std::span<const std::string> languages);

struct TraceSample {
    std::uint64_t step = 0; ///< sweep index
    double energy = 0.0;
    double magnetization = 0.0;
    double avg_distance = 0.0;
    std::size_t max_distance = 0;
    std::vector<CodeParams> tracked;
};

struct DynamicsTrace {
    std::vector<TraceSample> samples;
    SpinConfiguration final_state;
};

/// Runs sweeps x (languages x features) single-site steps, sampling every
/// sample_interval sweeps (plus the initial state at step 0). Sampled
/// energies are full recomputations; the chain's RNG stream is untouched by
/// recording. Tracked-subset rates are constant along a trace since n, N
/// and q never change.
DynamicsTrace run_dynamics(const SpinConfiguration& initial, const InteractionGraph& graph,
                           const EntailmentSchema& schema, const DynamicsConfig& config);

/// Exact Boltzmann distribution of a small system, by exhaustive
/// enumeration. The test oracle for the sampler.
struct BoltzmannTable {
    std::vector<double> probabilities; ///< e^{-beta H} / Z per state index
    std::vector<double> energies;
    double beta = 1.0;
    std::vector<std::string> languages;
    std::size_t feature_count = 0;
    std::vector<int> radices; ///< per site: 2 for B, 3 for T

    std::size_t state_count() const { return probabilities.size(); }
    std::size_t encode(const SpinConfiguration& state) const;
    SpinConfiguration decode(std::size_t index) const;
};

/// Throws TooLarge when the state space exceeds state_limit (default 2^20).
BoltzmannTable boltzmann_oracle(const InteractionGraph& graph,
                                const EntailmentSchema& schema,
                                const DynamicsConfig& config,
                                std::uint64_t state_limit = 1ull << 20);

} // namespace syncode
