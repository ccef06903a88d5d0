#include "syncode/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace syncode {

namespace {

int spin_to_bit(Symbol s) {
    return (s + 1) / 2;
}

void check_alphabet(bool ternary, Symbol s, const std::string& where) {
    if (ternary) {
        if (s < -1 || s > 1) throw BadSymbol("symbol out of ternary alphabet " + where);
    } else {
        if (s != -1 && s != 1) throw BadSymbol("symbol out of spin alphabet " + where);
    }
}

std::size_t word_mismatch(const SpinConfiguration& state, std::size_t a, std::size_t b) {
    std::size_t d = 0;
    const Symbol* wa = state.values.data() + a * state.feature_count;
    const Symbol* wb = state.values.data() + b * state.feature_count;
    for (std::size_t f = 0; f < state.feature_count; ++f) d += wa[f] != wb[f];
    return d;
}

} // namespace

SpinConfiguration initial_configuration(const FeatureMatrix& matrix,
                                        std::span<const std::string> languages,
                                        const EntailmentSchema& schema) {
    SpinConfiguration state;
    state.languages.assign(languages.begin(), languages.end());
    state.feature_count = schema.feature_count();
    state.values.reserve(languages.size() * schema.feature_count());

    std::vector<std::size_t> feature_idx;
    feature_idx.reserve(schema.feature_count());
    for (const auto& name : schema.features()) {
        auto f = matrix.feature_index(name);
        if (!f) throw UnknownFeature("schema feature not in corpus: " + name);
        feature_idx.push_back(*f);
    }

    for (const auto& lang : languages) {
        auto l = matrix.language_index(lang);
        if (!l) throw UnknownLanguage("unknown language: " + lang);
        for (std::size_t sf = 0; sf < feature_idx.size(); ++sf) {
            const CellValue v = matrix.cell(*l, feature_idx[sf]);
            if (schema.is_ternary(sf)) {
                state.values.push_back(v == CellValue::Missing ? 0
                                       : v == CellValue::One   ? 1
                                                               : -1);
            } else {
                if (v == CellValue::Missing) {
                    throw NotFullyMapped("binary feature " + schema.features()[sf] +
                                         " is not mapped for " + lang);
                }
                state.values.push_back(v == CellValue::One ? 1 : -1);
            }
        }
    }
    return state;
}

void validate_state(const SpinConfiguration& state, const EntailmentSchema& schema) {
    if (state.feature_count != schema.feature_count()) {
        throw LengthMismatch("state has " + std::to_string(state.feature_count) +
                             " features, schema has " +
                             std::to_string(schema.feature_count()));
    }
    if (state.values.size() != state.languages.size() * state.feature_count) {
        throw LengthMismatch("state value table does not match its dimensions");
    }
    for (std::size_t l = 0; l < state.languages.size(); ++l) {
        for (std::size_t f = 0; f < state.feature_count; ++f) {
            check_alphabet(schema.is_ternary(f), state.at(l, f),
                           "at (" + state.languages[l] + ", " + schema.features()[f] + ")");
        }
    }
}

double relation_penalty(std::span<const Symbol> antecedents, Symbol target) {
    if (antecedents.empty()) throw BadSymbol("relation needs at least one antecedent");
    int conjunction = 1;
    for (Symbol s : antecedents) {
        if (s != -1 && s != 1) {
            throw BadSymbol("antecedent symbol must be a spin, got " + std::to_string(int(s)));
        }
        conjunction *= spin_to_bit(s);
    }
    if (target < -1 || target > 1) {
        throw BadSymbol("target symbol must be ternary, got " + std::to_string(int(target)));
    }
    return std::abs(conjunction - std::abs(static_cast<int>(target)));
}

double energy(const SpinConfiguration& state, const InteractionGraph& graph,
              const EntailmentSchema& schema) {
    validate_state(state, schema);
    const std::size_t nl = state.languages.size();

    std::vector<std::size_t> graph_idx(nl);
    for (std::size_t l = 0; l < nl; ++l) {
        auto g = graph.language_index(state.languages[l]);
        if (!g) {
            throw LanguageMismatch("language " + state.languages[l] +
                                   " is missing from the interaction graph");
        }
        graph_idx[l] = *g;
    }

    double h = 0.0;
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = a + 1; b < nl; ++b) {
            h += graph.weight(graph_idx[a], graph_idx[b]) *
                 static_cast<double>(word_mismatch(state, a, b));
        }
    }
    std::vector<Symbol> ants;
    for (const EntailmentRelation& rel : schema.relations()) {
        for (std::size_t l = 0; l < nl; ++l) {
            ants.clear();
            for (std::size_t a : rel.antecedents) ants.push_back(state.at(l, a));
            h += rel.energy * relation_penalty(ants, state.at(l, rel.target));
        }
    }
    return h;
}

double magnetization(const SpinConfiguration& state) {
    double sum = 0.0;
    for (Symbol s : state.values) sum += s;
    return sum / static_cast<double>(state.values.size());
}

double magnetization_binary(const SpinConfiguration& state, const EntailmentSchema& schema) {
    double sum = 0.0;
    std::size_t sites = 0;
    for (std::size_t l = 0; l < state.languages.size(); ++l) {
        for (std::size_t f = 0; f < state.feature_count; ++f) {
            if (!schema.is_ternary(f)) {
                sum += state.at(l, f);
                ++sites;
            }
        }
    }
    if (sites == 0) return 0.0;
    return sum / static_cast<double>(sites);
}

MetropolisSampler::MetropolisSampler(SpinConfiguration initial, const InteractionGraph& graph,
                                     const EntailmentSchema& schema, double temperature)
    : state_(std::move(initial)), schema_(schema) {
    if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
    if (state_.languages.empty() || state_.feature_count == 0) {
        throw EmptyInput("dynamics needs at least one language and one feature");
    }
    validate_state(state_, schema_);
    beta_ = 1.0 / temperature;

    const std::size_t nl = state_.languages.size();
    weights_.assign(nl * nl, 0.0);
    for (std::size_t a = 0; a < nl; ++a) {
        auto ga = graph.language_index(state_.languages[a]);
        if (!ga) {
            throw LanguageMismatch("language " + state_.languages[a] +
                                   " is missing from the interaction graph");
        }
        for (std::size_t b = a + 1; b < nl; ++b) {
            auto gb = graph.language_index(state_.languages[b]);
            if (!gb) {
                throw LanguageMismatch("language " + state_.languages[b] +
                                       " is missing from the interaction graph");
            }
            const double w = graph.weight(*ga, *gb);
            weights_[a * nl + b] = w;
            weights_[b * nl + a] = w;
        }
    }

    relations_by_feature_.assign(state_.feature_count, {});
    for (std::size_t r = 0; r < schema_.relations().size(); ++r) {
        const EntailmentRelation& rel = schema_.relations()[r];
        relations_by_feature_[rel.target].push_back(r);
        for (std::size_t a : rel.antecedents) relations_by_feature_[a].push_back(r);
    }

    energy_ = energy(state_, graph, schema_);
}

double MetropolisSampler::relation_term(std::size_t relation, std::size_t language,
                                        std::size_t feature, Symbol value) const {
    const EntailmentRelation& rel = schema_.relations()[relation];
    int conjunction = 1;
    for (std::size_t a : rel.antecedents) {
        const Symbol s = a == feature ? value : state_.at(language, a);
        conjunction *= spin_to_bit(s);
    }
    const Symbol target = rel.target == feature ? value : state_.at(language, rel.target);
    return rel.energy *
           std::abs(conjunction - std::abs(static_cast<int>(target)));
}

double MetropolisSampler::site_delta(std::size_t language, std::size_t feature,
                                     Symbol proposed) const {
    const std::size_t nl = state_.languages.size();
    const Symbol old = state_.at(language, feature);
    double dh = 0.0;
    const double* wrow = weights_.data() + language * nl;
    for (std::size_t other = 0; other < nl; ++other) {
        if (other == language) continue;
        const Symbol theirs = state_.at(other, feature);
        dh += wrow[other] *
              static_cast<double>((proposed != theirs) - (old != theirs));
    }
    for (std::size_t r : relations_by_feature_[feature]) {
        dh += relation_term(r, language, feature, proposed) -
              relation_term(r, language, feature, old);
    }
    return dh;
}

StepResult MetropolisSampler::step(Rng& rng) {
    const std::size_t nl = state_.languages.size();
    const std::size_t site = rng.uniform_index(nl * state_.feature_count);
    const std::size_t language = site / state_.feature_count;
    const std::size_t feature = site % state_.feature_count;
    const Symbol old = state_.values[site];

    Symbol proposed;
    if (schema_.is_ternary(feature)) {
        static constexpr Symbol alphabet[3] = {-1, 0, 1};
        Symbol others[2];
        std::size_t count = 0;
        for (Symbol s : alphabet) {
            if (s != old) others[count++] = s;
        }
        proposed = others[rng.uniform_index(2)];
    } else {
        proposed = static_cast<Symbol>(-old);
    }

    const double dh = site_delta(language, feature, proposed);
    const double u = rng.uniform01();
    const bool accepted = dh <= 0.0 || u < std::exp(-beta_ * dh);
    if (accepted) {
        state_.values[site] = proposed;
        energy_ += dh;
    }
    return StepResult{language, feature, old, proposed, dh, accepted};
}

double MetropolisSampler::recompute_energy() {
    double h = 0.0;
    const std::size_t nl = state_.languages.size();
    for (std::size_t a = 0; a < nl; ++a) {
        const double* wrow = weights_.data() + a * nl;
        for (std::size_t b = a + 1; b < nl; ++b) {
            h += wrow[b] * static_cast<double>(word_mismatch(state_, a, b));
        }
    }
    std::vector<Symbol> ants;
    for (const EntailmentRelation& rel : schema_.relations()) {
        for (std::size_t l = 0; l < nl; ++l) {
            ants.clear();
            for (std::size_t a : rel.antecedents) ants.push_back(state_.at(l, a));
            h += rel.energy * relation_penalty(ants, state_.at(l, rel.target));
        }
    }
    energy_ = h;
    return h;
}

StepResult metropolis_step(SpinConfiguration& state, const InteractionGraph& graph,
                           const EntailmentSchema& schema, const DynamicsConfig& config,
                           Rng& rng) {
    MetropolisSampler sampler(std::move(state), graph, schema, config.temperature);
    const StepResult result = sampler.step(rng);
    state = sampler.state();
    return result;
}

Code tracked_code(const SpinConfiguration& state, const EntailmentSchema& schema,
                  std::span<const std::string> languages) {
    const int q = schema.has_ternary() ? 3 : 2;
    std::vector<Word> words;
    words.reserve(languages.size());
    for (const auto& name : languages) {
        auto it = std::find(state.languages.begin(), state.languages.end(), name);
        if (it == state.languages.end()) {
            throw UnknownLanguage("tracked language not in the run: " + name);
        }
        const auto l = static_cast<std::size_t>(it - state.languages.begin());
        Word w(state.feature_count);
        for (std::size_t f = 0; f < state.feature_count; ++f) {
            const Symbol s = state.at(l, f);
            w[f] = q == 3 ? s : static_cast<Symbol>(spin_to_bit(s));
        }
        words.push_back(std::move(w));
    }
    return make_code(q, std::move(words),
                     std::vector<std::string>(languages.begin(), languages.end()));
}

namespace {

TraceSample make_sample(std::uint64_t step, MetropolisSampler& sampler,
                        const EntailmentSchema& schema, const DynamicsConfig& config) {
    const SpinConfiguration& state = sampler.state();
    TraceSample sample;
    sample.step = step;
    sample.energy = sampler.recompute_energy();
    sample.magnetization = config.magnetization_binary_only
                               ? magnetization_binary(state, schema)
                               : magnetization(state);

    const std::size_t nl = state.languages.size();
    std::size_t pair_count = 0;
    std::size_t total = 0;
    std::size_t max_d = 0;
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = a + 1; b < nl; ++b) {
            const std::size_t d = word_mismatch(state, a, b);
            total += d;
            max_d = std::max(max_d, d);
            ++pair_count;
        }
    }
    sample.avg_distance =
        pair_count ? static_cast<double>(total) / static_cast<double>(pair_count) : 0.0;
    sample.max_distance = max_d;

    sample.tracked.reserve(config.tracked_subsets.size());
    for (const auto& subset : config.tracked_subsets) {
        sample.tracked.push_back(code_parameters(tracked_code(state, schema, subset)));
    }
    return sample;
}

} // namespace

DynamicsTrace run_dynamics(const SpinConfiguration& initial, const InteractionGraph& graph,
                           const EntailmentSchema& schema, const DynamicsConfig& config) {
    if (config.sweeps == 0) throw DomainError("sweeps must be at least 1");
    if (config.sample_interval == 0 || config.sample_interval > config.sweeps) {
        throw DomainError("sample_interval must lie in [1, sweeps]");
    }

    MetropolisSampler sampler(initial, graph, schema, config.temperature);
    Rng rng(config.seed);

    const std::uint64_t steps_per_sweep =
        static_cast<std::uint64_t>(initial.languages.size()) * initial.feature_count;

    DynamicsTrace trace;
    trace.samples.push_back(make_sample(0, sampler, schema, config));
    for (std::uint64_t sweep = 1; sweep <= config.sweeps; ++sweep) {
        for (std::uint64_t s = 0; s < steps_per_sweep; ++s) sampler.step(rng);
        if (sweep % config.sample_interval == 0) {
            trace.samples.push_back(make_sample(sweep, sampler, schema, config));
        }
    }
    trace.final_state = sampler.state();
    return trace;
}

std::size_t BoltzmannTable::encode(const SpinConfiguration& state) const {
    if (state.languages != languages || state.feature_count != feature_count) {
        throw LanguageMismatch("state does not match the oracle's system");
    }
    std::size_t index = 0;
    for (std::size_t site = 0; site < state.values.size(); ++site) {
        const int radix = radices[site];
        const Symbol s = state.values[site];
        const int digit = radix == 2 ? spin_to_bit(s) : s + 1;
        index = index * static_cast<std::size_t>(radix) + static_cast<std::size_t>(digit);
    }
    return index;
}

SpinConfiguration BoltzmannTable::decode(std::size_t index) const {
    SpinConfiguration state;
    state.languages = languages;
    state.feature_count = feature_count;
    state.values.assign(radices.size(), 0);
    for (std::size_t site = radices.size(); site-- > 0;) {
        const auto radix = static_cast<std::size_t>(radices[site]);
        const auto digit = static_cast<int>(index % radix);
        index /= radix;
        state.values[site] =
            radices[site] == 2 ? static_cast<Symbol>(2 * digit - 1)
                               : static_cast<Symbol>(digit - 1);
    }
    return state;
}

BoltzmannTable boltzmann_oracle(const InteractionGraph& graph, const EntailmentSchema& schema,
                                const DynamicsConfig& config, std::uint64_t state_limit) {
    if (!(config.temperature > 0.0)) throw DomainError("temperature must be positive");
    BoltzmannTable table;
    table.beta = 1.0 / config.temperature;
    table.languages = graph.languages();
    table.feature_count = schema.feature_count();

    const std::size_t sites = table.languages.size() * table.feature_count;
    table.radices.reserve(sites);
    std::uint64_t count = 1;
    for (std::size_t l = 0; l < table.languages.size(); ++l) {
        for (std::size_t f = 0; f < table.feature_count; ++f) {
            const int radix = schema.is_ternary(f) ? 3 : 2;
            table.radices.push_back(radix);
            if (count > state_limit / static_cast<std::uint64_t>(radix)) {
                throw TooLarge("state space exceeds the limit of " +
                               std::to_string(state_limit) + " states");
            }
            count *= static_cast<std::uint64_t>(radix);
        }
    }

    table.energies.resize(count);
    table.probabilities.resize(count);
    double z = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const SpinConfiguration state = table.decode(i);
        const double h = energy(state, graph, schema);
        table.energies[i] = h;
        const double w = std::exp(-table.beta * h);
        table.probabilities[i] = w;
        z += w;
    }
    for (double& p : table.probabilities) p /= z;
    return table;
}

} // namespace syncode
