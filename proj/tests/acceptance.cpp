// Acceptance suite: one pass/fail line per criterion, each with its
// tolerances pinned in code and a wall-clock budget.

#include "syncode/bounds.hpp"
#include "syncode/codes.hpp"
#include "syncode/commands.hpp"
#include "syncode/corpus.hpp"
#include "syncode/dynamics.hpp"
#include "syncode/survey.hpp"
#include "syncode/text.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace syncode;

namespace {

constexpr double kLog3Of2 = 0.6309297535714574;
constexpr double kGv3Half = 0.053605369642813816;

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

class Harness {
public:
    void criterion(int id, const std::string& title, double limit_seconds,
                   const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const Failure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && limit_seconds > 0.0 && elapsed > limit_seconds) {
            failure = "runtime " + format_double(elapsed, 2) + "s exceeds " +
                      format_double(limit_seconds, 0) + "s budget";
        }
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%7.2fs", elapsed);
        if (failure.empty()) {
            std::cout << "PASS " << timing << "  criterion " << id << ": " << title << "\n";
        } else {
            std::cout << "FAIL " << timing << "  criterion " << id << ": " << title << " -- "
                      << failure << "\n";
            ok_ = false;
        }
    }

    int exit_code() const { return ok_ ? 0 : 1; }

private:
    bool ok_ = true;
};

// ---------------------------------------------------------------------------

void worked_example() {
    const auto matrix =
        load_feature_matrix_file(testutil::config_path("example_4lang_matrix.csv"));
    const auto schema =
        load_entailment_schema_file(testutil::config_path("example_4lang_schema.json"));
    const std::vector<std::string> langs{"English", "Welsh", "Russian", "Bulgarian"};
    const std::vector<std::string> feats{"StrongDeixis", "StrongAnaphoricity"};

    const CodeParams initial = code_parameters(build_code(matrix, langs, feats, &schema));
    require(initial.delta == 0.0, "initial delta must be 0");
    require(std::abs(initial.rate - 0.630930) <= 1e-6,
            "initial rate " + format_double(initial.rate) + " != log3(2) within 1e-6");

    const CodeParams high_e = code_parameters(
        make_code(3, {{1, 0}, {1, -1}, {-1, 0}, {1, 1}}, langs));
    require(high_e.delta == 0.5, "high-energy equilibrium delta must be 1/2");
    require(std::abs(high_e.rate - 0.630930) <= 1e-6,
            "high-energy equilibrium rate must stay log3(2)");

    const CodeParams low_e = code_parameters(
        make_code(3, {{1, -1}, {-1, -1}, {-1, 1}, {-1, -1}}, langs));
    require(std::abs(low_e.rate - 0.630930) <= 1e-6,
            "low-energy equilibrium rate must stay log3(2)");
    require(low_e.delta == 0.5,
            "low-energy equilibrium delta is " + format_double(low_e.delta) +
                ", not 1/2: the reference state repeats the word (-1,-1) for the 2nd "
                "and 4th languages, so d=0 by the duplicate rule; the claimed d=1 is "
                "a misprint in the source data (known failure, see README)");

    const CodePoint equilibrium{0.5, kLog3Of2, 3, {}};
    require(classify_point(equilibrium) != Region::BelowGV,
            "equilibrium point must classify above the GV curve");
    const double margin = kLog3Of2 - gv_rate(3, 0.5);
    require(std::abs(margin - (0.630930 - 0.053605)) <= 1e-5,
            "GV margin " + format_double(margin) + " != 0.577325");
    require(std::abs(gv_rate(3, 0.5) - kGv3Half) <= 1e-9, "gv_rate(3, 0.5) drifted");
}

void analytic_bounds() {
    require(std::abs(gv_rate(2, 0.5)) <= 1e-12, "gv_rate(2, 1/2) must vanish");
    require(std::abs(gv_rate(3, 2.0 / 3.0)) <= 1e-12, "gv_rate(3, 2/3) must vanish");
    for (int q : {2, 3}) {
        for (int i = 0; i < 10000; ++i) {
            const double d = static_cast<double>(i) / 9999.0;
            if (plotkin_rate(q, d) < gv_rate(q, d) - 1e-12) {
                require(false, "Plotkin < GV at q=" + std::to_string(q) +
                                   ", delta=" + format_double(d));
            }
        }
    }
}

void thomae_structure() {
    const auto matrix = testutil::synthetic_matrix(50, 60, 0.3, 777);
    const auto reference = thomae_reference(1.0, matrix.feature_count());
    std::set<std::pair<double, double>> locus;
    for (const auto& p : reference) locus.emplace(p.delta, p.rate);

    std::uint64_t pairs = 0;
    auto pair_stats = enumerate_tuple_codes(matrix, 2, [&](const SurveyRecord& rec) {
        ++pairs;
        require(rec.rate == 1.0 / static_cast<double>(rec.n),
                "pair rate must equal 1/n exactly");
        require(locus.count({rec.delta, rec.rate}) == 1,
                "pair point off the k=1 Thomae locus");
    });
    require(pair_stats.emitted + pair_stats.skipped_unmapped == 1225,
            "expected C(50,2) pair subsets");
    require(pairs == pair_stats.emitted, "pair sink count mismatch");

    const double k3 = std::log2(3.0);
    std::uint64_t triples = 0;
    auto triple_stats = enumerate_tuple_codes(matrix, 3, [&](const SurveyRecord& rec) {
        ++triples;
        require(rec.rate == k3 / static_cast<double>(rec.n),
                "triple rate must equal log2(3)/n exactly");
    });
    require(triple_stats.emitted + triple_stats.skipped_unmapped == 19600,
            "expected C(50,3) triple subsets");
    require(triples == triple_stats.emitted, "triple sink count mismatch");
}

void alignment_convergence() {
    const std::vector<std::string> langs{"A", "B", "C", "D"};
    std::vector<std::string> features;
    for (int f = 0; f < 10; ++f) features.push_back("x" + std::to_string(f));
    const auto schema = EntailmentSchema::all_binary(features);
    const auto graph = InteractionGraph::uniform(langs, 1.0);

    DynamicsConfig config;
    config.temperature = 0.1;
    config.sweeps = 100000;
    config.sample_interval = 1000;
    config.tracked_subsets = {langs,
                              {"A", "B", "C"},
                              {"A", "B", "D"},
                              {"A", "C", "D"},
                              {"B", "C", "D"}};

    int aligned_runs = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng init_rng(seed * 7919 + 13);
        SpinConfiguration initial;
        initial.languages = langs;
        initial.feature_count = features.size();
        for (std::size_t i = 0; i < langs.size() * features.size(); ++i) {
            initial.values.push_back(init_rng.uniform_index(2) ? 1 : -1);
        }
        config.seed = seed;
        const DynamicsTrace trace = run_dynamics(initial, graph, schema, config);

        bool reached_zero = false;
        for (const TraceSample& s : trace.samples) {
            if (s.energy == 0.0) {
                reached_zero = true;
                break;
            }
        }
        bool deltas_zero = true;
        for (const CodeParams& p : trace.samples.back().tracked) {
            deltas_zero = deltas_zero && p.delta == 0.0;
        }
        if (reached_zero && deltas_zero) ++aligned_runs;
    }
    require(aligned_runs >= 19, "only " + std::to_string(aligned_runs) +
                                    "/20 seeds aligned within 1e5 sweeps");
}

void sampler_correctness() {
    std::vector<std::string> langs{"A", "B"};
    const auto schema = EntailmentSchema::all_binary({"x0", "x1"});
    const auto graph = InteractionGraph::uniform(langs, 1.0);

    DynamicsConfig config;
    config.temperature = 1.0 / 0.7; // beta = 0.7
    const auto table = boltzmann_oracle(graph, schema, config);
    require(table.state_count() == 16, "expected 16 states");

    // detailed balance, exactly, over every single-site move
    const double beta = 1.0 / config.temperature;
    for (std::size_t ia = 0; ia < 16; ++ia) {
        const auto a = table.decode(ia);
        for (std::size_t site = 0; site < 4; ++site) {
            auto b = a;
            b.values[site] = static_cast<Symbol>(-b.values[site]);
            const std::size_t ib = table.encode(b);
            const double dh = table.energies[ib] - table.energies[ia];
            const double p_ab = 0.25 * std::min(1.0, std::exp(-beta * dh));
            const double p_ba = 0.25 * std::min(1.0, std::exp(beta * dh));
            require(std::abs(table.probabilities[ia] * p_ab -
                             table.probabilities[ib] * p_ba) <= 1e-12,
                    "detailed balance violated at state " + std::to_string(ia));
        }
    }

    MetropolisSampler sampler(table.decode(0), graph, schema, config.temperature);
    Rng rng(20240);
    for (int i = 0; i < 100000; ++i) sampler.step(rng); // burn-in
    std::vector<std::uint64_t> counts(16, 0);
    const int samples = 1000000;
    for (int i = 0; i < samples; ++i) {
        sampler.step(rng);
        ++counts[table.encode(sampler.state())];
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        tv += std::abs(static_cast<double>(counts[i]) / samples - table.probabilities[i]);
    }
    tv *= 0.5;
    require(tv <= 0.02, "total variation distance " + format_double(tv, 4) + " > 0.02");
}

void rate_constancy() {
    testutil::TempDir tmp;
    const auto out = tmp.file("trace.csv").string();
    const int status = cli::run(
        {"simulate", "--config", testutil::config_path("sim_T10_E9000.json").string(),
         "--matrix", testutil::config_path("example_4lang_matrix.csv").string(), "--schema",
         testutil::config_path("example_4lang_schema.json").string(), "--out", out});
    require(status == 0, "simulate exited with " + std::to_string(status));

    const auto rows = parse_csv(std::string_view{read_file(out)});
    require(rows.size() >= 3, "trace too short");
    std::size_t rate_col = 0;
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
        if (rows[0][c] == "track0_rate") rate_col = c;
    }
    require(rate_col > 0, "missing track0_rate column");
    for (std::size_t r = 2; r < rows.size(); ++r) {
        require(rows[r][rate_col] == rows[1][rate_col],
                "rate string changed at sample row " + std::to_string(r));
    }
}

void incremental_energy_oracle() {
    std::vector<std::string> names;
    for (int f = 0; f < 8; ++f) names.push_back("x" + std::to_string(f));
    const EntailmentSchema schema(
        names, {false, false, false, false, false, true, true, true},
        {{{0}, 5, 40.0}, {{1, 2}, 6, 7.5}, {{3}, 7, 2.0}});
    const std::vector<std::string> langs{"A", "B", "C", "D", "E"};
    Rng setup(321);
    std::vector<double> weights;
    for (int i = 0; i < 10; ++i) weights.push_back((1.0 + setup.uniform_index(14)) / 4.0);
    const InteractionGraph graph(langs, weights);

    SpinConfiguration state;
    state.languages = langs;
    state.feature_count = 8;
    for (std::size_t l = 0; l < langs.size(); ++l) {
        for (std::size_t f = 0; f < 8; ++f) {
            if (schema.is_ternary(f)) {
                state.values.push_back(
                    static_cast<Symbol>(static_cast<int>(setup.uniform_index(3)) - 1));
            } else {
                state.values.push_back(setup.uniform_index(2) ? 1 : -1);
            }
        }
    }

    DynamicsConfig config;
    config.temperature = 1.7;
    Rng rng(654);
    for (int i = 0; i < 10000; ++i) {
        const double before = energy(state, graph, schema);
        SpinConfiguration proposed = state;
        const StepResult r = metropolis_step(state, graph, schema, config, rng);
        proposed.set(r.language, r.feature, r.proposed);
        const double after = energy(proposed, graph, schema);
        require(std::abs(r.delta_h - (after - before)) <= 1e-9,
                "incremental dH diverged at step " + std::to_string(i));
    }
}

void scale_check() {
    const auto matrix = testutil::synthetic_matrix(253, 115, 0.3, 99);
    std::uint64_t checksum = 0;

    auto pair_stats = enumerate_tuple_codes(matrix, 2, [&](const SurveyRecord& rec) {
        checksum += rec.d + rec.n;
    });
    require(pair_stats.emitted + pair_stats.skipped_unmapped == 31878,
            "expected C(253,2) pairs");

    auto triple_stats = enumerate_tuple_codes(matrix, 3, [&](const SurveyRecord& rec) {
        checksum += rec.d + rec.n;
    });
    require(triple_stats.emitted + triple_stats.skipped_unmapped == 2667126,
            "expected C(253,3) triples");
    require(checksum > 0, "checksum must accumulate");
}

void determinism() {
    testutil::TempDir tmp;
    const auto matrix = tmp.file("corpus.csv");
    {
        std::ostringstream text;
        serialize_feature_matrix(testutil::synthetic_matrix(15, 25, 0.25, 2025), text);
        write_file(matrix, text.str());
    }

    auto run_twice = [&](std::vector<std::string> args, const std::string& out_flag,
                         const std::string& name) {
        const auto out1 = tmp.file(name + "_1").string();
        const auto out2 = tmp.file(name + "_2").string();
        auto args1 = args;
        args1.insert(args1.end(), {out_flag, out1});
        auto args2 = args;
        args2.insert(args2.end(), {out_flag, out2});
        require(cli::run(args1) == 0, name + " run 1 failed");
        require(cli::run(args2) == 0, name + " run 2 failed");
        require(read_file(out1) == read_file(out2), name + " outputs differ between runs");
    };

    run_twice({"codepoints", "--matrix", matrix.string(), "--size", "2,3"}, "--out",
              "codepoints");
    run_twice({"random-subsets", "--matrix", matrix.string(), "--trials", "200", "--seed",
               "5", "--features-min", "3", "--features-max", "10", "--langs-min", "2",
               "--langs-max", "6"},
              "--out", "subsets");
    run_twice({"bounds", "--q", "3", "--curve", "gv", "--samples", "257"}, "--out", "gv");

    const auto config = tmp.file("sim.json");
    write_file(config,
               R"({"temperature": 10.0, "sweeps": 200, "sample_interval": 10, "seed": 11,
                   "tracked_subsets": [["English","Welsh","Russian","Bulgarian"]]})");
    run_twice({"simulate", "--config", config.string(), "--matrix",
               testutil::config_path("example_4lang_matrix.csv").string(), "--schema",
               testutil::config_path("example_4lang_schema.json").string()},
              "--out", "trace");
}

} // namespace

int main() {
    Harness h;
    h.criterion(1, "worked-example code points and GV margin", 1.0, worked_example);
    h.criterion(2, "analytic bound values and Plotkin/GV dominance", 1.0, analytic_bounds);
    h.criterion(3, "Thomae structure of pair and triple codes", 10.0, thomae_structure);
    h.criterion(4, "low-temperature alignment convergence (20 seeds)", 30.0,
                alignment_convergence);
    h.criterion(5, "sampler matches the Boltzmann oracle", 60.0, sampler_correctness);
    h.criterion(6, "tracked rates are string-constant over a run", 0.0, rate_constancy);
    h.criterion(7, "incremental energy matches full recomputation", 5.0,
                incremental_energy_oracle);
    h.criterion(8, "253x115 pair+triple enumeration at scale", 600.0, scale_check);
    h.criterion(9, "byte-identical reruns of every CLI command", 0.0, determinism);
    return h.exit_code();
}
