#include "syncode/commands.hpp"

#include "syncode/bounds.hpp"
#include "syncode/codes.hpp"
#include "syncode/corpus.hpp"
#include "syncode/dynamics.hpp"
#include "syncode/manifest.hpp"
#include "syncode/survey.hpp"
#include "syncode/svg_plot.hpp"
#include "syncode/text.hpp"
#include "syncode/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace syncode::cli {

namespace {

using nlohmann::json;

PlotkinVariant parse_variant(const std::string& name) {
    if (name == "standard") return PlotkinVariant::Standard;
    if (name == "paper-literal") return PlotkinVariant::PaperLiteral;
    throw DomainError("unknown Plotkin variant: " + name + " (use standard|paper-literal)");
}

std::string variant_name(PlotkinVariant v) {
    return v == PlotkinVariant::Standard ? "standard" : "paper-literal";
}

std::string survey_csv_header() {
    return "languages,n,k,d,delta,rate,region";
}

std::string survey_csv_row(const SurveyRecord& rec) {
    std::string joined;
    for (std::size_t i = 0; i < rec.languages.size(); ++i) {
        if (i) joined.push_back('|');
        joined += rec.languages[i];
    }
    return csv_line({joined, std::to_string(rec.n), format_double(rec.k),
                     std::to_string(rec.d), format_double(rec.delta),
                     format_double(rec.rate), std::string(to_string(rec.region))});
}

double parse_number(const std::string& token, const std::string& context) {
    double value = 0.0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw Error("cannot parse number '" + token + "' " + context);
    }
    return value;
}

/// Reads (delta, rate) pairs out of any CSV whose header names those columns.
std::vector<CodePoint> read_points_csv(const std::filesystem::path& path, int q) {
    const auto rows = parse_csv(std::string_view{read_file(path)});
    if (rows.empty()) throw EmptyInput("points file is empty: " + path.string());
    const CsvRow& header = rows.front();
    std::size_t delta_col = header.size();
    std::size_t rate_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "delta") delta_col = i;
        if (header[i] == "rate") rate_col = i;
    }
    if (delta_col == header.size() || rate_col == header.size()) {
        throw Error("points file " + path.string() + " needs 'delta' and 'rate' columns");
    }
    std::vector<CodePoint> points;
    points.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() <= std::max(delta_col, rate_col)) {
            throw Error("short row " + std::to_string(r + 1) + " in " + path.string());
        }
        const std::string where = "at row " + std::to_string(r + 1) + " of " + path.string();
        CodePoint p;
        p.delta = parse_number(rows[r][delta_col], where);
        p.rate = parse_number(rows[r][rate_col], where);
        p.q = q;
        points.push_back(std::move(p));
    }
    return points;
}

Curve read_curve_csv(const std::filesystem::path& path) {
    Curve curve;
    for (const CodePoint& p : read_points_csv(path, 2)) {
        curve.emplace_back(p.delta, p.rate);
    }
    return curve;
}

struct ValidateArgs {
    std::string matrix;
    std::string schema;
    std::string weights;
    double default_weight = 0.0;
    bool has_default_weight = false;
};

int cmd_validate(const ValidateArgs& a) {
    const FeatureMatrix matrix = load_feature_matrix_file(a.matrix);
    std::size_t missing = 0;
    for (std::size_t l = 0; l < matrix.language_count(); ++l) {
        for (std::size_t f = 0; f < matrix.feature_count(); ++f) {
            missing += matrix.cell(l, f) == CellValue::Missing;
        }
    }
    const std::size_t cells = matrix.language_count() * matrix.feature_count();
    std::vector<std::size_t> all(matrix.language_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto shared = fully_mapped_features(matrix, std::span<const std::size_t>(all));

    std::cout << "matrix: " << matrix.language_count() << " languages x "
              << matrix.feature_count() << " features, " << missing << "/" << cells
              << " cells missing (" << format_double(100.0 * missing / cells, 1)
              << "%), " << shared.size() << " features fully mapped for all languages\n";

    if (!a.schema.empty()) {
        const EntailmentSchema schema = load_entailment_schema_file(a.schema);
        for (const auto& name : schema.features()) {
            if (!matrix.feature_index(name)) {
                throw UnknownFeature("schema feature not in matrix: " + name);
            }
        }
        std::cout << "schema: " << schema.binary_set().size() << " binary + "
                  << schema.ternary_count() << " ternary features, "
                  << schema.relations().size() << " relations\n";
    }
    if (!a.weights.empty()) {
        std::optional<double> dw;
        if (a.has_default_weight) dw = a.default_weight;
        const auto loaded = load_interaction_weights_file(a.weights, matrix.languages(), dw);
        std::cout << "weights: complete graph on " << loaded.graph.language_count()
                  << " languages";
        if (loaded.skipped_rows) std::cout << ", " << loaded.skipped_rows << " rows skipped";
        std::cout << "\n";
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    }
    std::cout << "ok\n";
    return 0;
}

struct CodepointsArgs {
    std::string matrix;
    std::string sizes = "2,3";
    std::string out;
    std::string variant = "standard";
};

int cmd_codepoints(const CodepointsArgs& a) {
    const PlotkinVariant variant = parse_variant(a.variant);
    const FeatureMatrix matrix = load_feature_matrix_file(a.matrix);

    std::vector<int> sizes;
    std::stringstream ss(a.sizes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok != "2" && tok != "3") throw DomainError("--size accepts 2 and/or 3");
        sizes.push_back(std::stoi(tok));
    }
    if (sizes.empty()) throw DomainError("--size must name at least one tuple size");

    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw Error("cannot write " + a.out);
    out << survey_csv_header() << '\n';
    std::uint64_t emitted = 0;
    std::uint64_t skipped = 0;
    for (int size : sizes) {
        const auto stats = enumerate_tuple_codes(
            matrix, size, [&](const SurveyRecord& rec) { out << survey_csv_row(rec) << '\n'; },
            variant);
        emitted += stats.emitted;
        skipped += stats.skipped_unmapped;
    }
    out.close();
    std::cout << "wrote " << emitted << " records to " << a.out << " (" << skipped
              << " tuples skipped with no fully mapped feature)\n";

    RunManifest manifest;
    manifest.command = "codepoints";
    manifest.parameters = {{"matrix", a.matrix},
                           {"size", a.sizes},
                           {"variant", variant_name(variant)},
                           {"records", emitted},
                           {"skipped", skipped}};
    manifest.add_input(a.matrix);
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

struct RandomSubsetsArgs {
    std::string matrix;
    std::string out;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t features_min = 5;
    std::size_t features_max = 40;
    std::size_t langs_min = 2;
    std::size_t langs_max = 12;
    std::string variant = "standard";
};

int cmd_random_subsets(const RandomSubsetsArgs& a) {
    const PlotkinVariant variant = parse_variant(a.variant);
    const FeatureMatrix matrix = load_feature_matrix_file(a.matrix);
    if (a.features_min == 0 || a.features_min > a.features_max ||
        a.langs_min == 0 || a.langs_min > a.langs_max) {
        throw DomainError("subset size ranges must satisfy 1 <= min <= max");
    }

    Rng rng(a.seed);
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw Error("cannot write " + a.out);
    out << survey_csv_header() << '\n';

    std::uint64_t emitted = 0;
    std::uint64_t dropped = 0;
    for (std::uint64_t trial = 0; trial < a.trials; ++trial) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            const std::size_t fc =
                a.features_min + rng.uniform_index(a.features_max - a.features_min + 1);
            const std::size_t lc =
                a.langs_min + rng.uniform_index(a.langs_max - a.langs_min + 1);
            SubsetSample sample;
            try {
                sample = sample_random_subset(matrix, rng,
                                              std::min(fc, matrix.feature_count()), lc);
            } catch (const InsufficientLanguages&) {
                continue;
            }
            std::sort(sample.features.begin(), sample.features.end());
            std::sort(sample.languages.begin(), sample.languages.end());
            std::vector<std::string> lang_names;
            std::vector<std::string> feat_names;
            for (std::size_t l : sample.languages) lang_names.push_back(matrix.languages()[l]);
            for (std::size_t f : sample.features) feat_names.push_back(matrix.features()[f]);

            const Code code = build_code(matrix, lang_names, feat_names);
            const CodeParams params = code_parameters(code);
            SurveyRecord rec;
            rec.languages = std::move(lang_names);
            rec.n = params.n;
            rec.d = params.d;
            rec.k = params.k;
            rec.delta = params.delta;
            rec.rate = params.rate;
            rec.region = classify_point(CodePoint{rec.delta, rec.rate, 2, {}}, variant);
            out << survey_csv_row(rec) << '\n';
            ++emitted;
            done = true;
        }
        if (!done) ++dropped;
    }
    out.close();
    std::cout << "wrote " << emitted << " records to " << a.out << " (" << dropped
              << " trials dropped after 100 redraws)\n";

    RunManifest manifest;
    manifest.command = "random-subsets";
    manifest.parameters = {{"matrix", a.matrix},
                           {"trials", a.trials},
                           {"features_min", a.features_min},
                           {"features_max", a.features_max},
                           {"langs_min", a.langs_min},
                           {"langs_max", a.langs_max},
                           {"variant", variant_name(variant)},
                           {"records", emitted},
                           {"dropped_trials", dropped}};
    manifest.add_input(a.matrix);
    manifest.seed = a.seed;
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

struct DensityArgs {
    std::string points;
    std::string out;
    int q = 2;
    std::size_t bins_delta = 40;
    std::size_t bins_rate = 40;
    std::string variant = "standard";
};

int cmd_density(const DensityArgs& a) {
    const PlotkinVariant variant = parse_variant(a.variant);
    const auto points = read_points_csv(a.points, a.q);
    const DensityGrid grid = density_grid(points, a.bins_delta, a.bins_rate, variant);

    json doc;
    doc["delta_edges"] = grid.delta_edges;
    doc["rate_edges"] = grid.rate_edges;
    json counts = json::array();
    for (std::size_t bd = 0; bd < grid.delta_bins(); ++bd) {
        json row = json::array();
        for (std::size_t br = 0; br < grid.rate_bins(); ++br) row.push_back(grid.at(bd, br));
        counts.push_back(std::move(row));
    }
    doc["counts"] = std::move(counts);
    doc["region_totals"] = {
        {"below_gv", grid.region_totals[0]},
        {"between_gv_plotkin", grid.region_totals[1]},
        {"above_plotkin", grid.region_totals[2]}};
    doc["points"] = points.size();
    write_file(a.out, doc.dump(2) + "\n");
    std::cout << "binned " << points.size() << " points into " << a.bins_delta << "x"
              << a.bins_rate << " grid: " << a.out << "\n";

    RunManifest manifest;
    manifest.command = "density";
    manifest.parameters = {{"points", a.points},
                           {"q", a.q},
                           {"bins_delta", a.bins_delta},
                           {"bins_rate", a.bins_rate},
                           {"variant", variant_name(variant)}};
    manifest.add_input(a.points);
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

struct BoundsArgs {
    int q = 2;
    std::string curve = "gv";
    std::size_t samples = 512;
    std::string out;
    std::string variant = "standard";
};

int cmd_bounds(const BoundsArgs& a) {
    const PlotkinVariant variant = parse_variant(a.variant);
    if (a.samples < 2) throw DomainError("--samples must be at least 2");
    if (a.curve != "gv" && a.curve != "plotkin") {
        throw DomainError("--curve must be gv or plotkin");
    }

    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw Error("cannot write " + a.out);
    out << "delta,rate\n";
    for (std::size_t i = 0; i < a.samples; ++i) {
        const double d = static_cast<double>(i) / static_cast<double>(a.samples - 1);
        const double r = a.curve == "gv" ? gv_rate(a.q, d) : plotkin_rate(a.q, d, variant);
        out << format_double(d) << ',' << format_double(r) << '\n';
    }
    out.close();

    RunManifest manifest;
    manifest.command = "bounds";
    manifest.parameters = {{"q", a.q},
                           {"curve", a.curve},
                           {"samples", a.samples},
                           {"variant", variant_name(variant)}};
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

struct SimulateArgs {
    std::string config;
    std::string matrix;
    std::string schema;
    std::string weights;
    std::string out;
    double default_weight = 0.0;
    bool has_default_weight = false;
    std::uint64_t seed_override = 0;
    bool has_seed_override = false;
};

int cmd_simulate(const SimulateArgs& a) {
    const FeatureMatrix matrix = load_feature_matrix_file(a.matrix);

    EntailmentSchema schema = a.schema.empty()
                                  ? EntailmentSchema::all_binary(matrix.features())
                                  : load_entailment_schema_file(a.schema);

    json cfg;
    try {
        cfg = json::parse(read_file(a.config));
    } catch (const json::exception& e) {
        throw Error(std::string("cannot parse config JSON: ") + e.what());
    }

    DynamicsConfig config;
    try {
        config.temperature = cfg.at("temperature").get<double>();
        config.sweeps = cfg.at("sweeps").get<std::uint64_t>();
        config.sample_interval = cfg.value("sample_interval", std::uint64_t{1});
        config.seed = cfg.value("seed", std::uint64_t{0});
        if (cfg.contains("tracked_subsets")) {
            for (const auto& subset : cfg["tracked_subsets"]) {
                config.tracked_subsets.push_back(subset.get<std::vector<std::string>>());
            }
        }
        config.plotkin_variant = parse_variant(cfg.value("plotkin_variant", "standard"));
        config.magnetization_binary_only = cfg.value("magnetization", "all") == "binary";

        if (cfg.contains("entailment_energy")) {
            const double e = cfg["entailment_energy"].get<double>();
            if (e < 0.0) throw BadEnergy("entailment_energy override must be nonnegative");
            std::vector<EntailmentRelation> relations = schema.relations();
            for (auto& rel : relations) rel.energy = e;
            std::vector<bool> ternary;
            for (std::size_t f = 0; f < schema.feature_count(); ++f) {
                ternary.push_back(schema.is_ternary(f));
            }
            schema =
                EntailmentSchema(schema.features(), std::move(ternary), std::move(relations));
        }
    } catch (const json::exception& e) {
        throw Error("bad config value in " + a.config + ": " + e.what());
    }
    if (a.has_seed_override) config.seed = a.seed_override;

    // language set: matrix order, minus languages absent from the weights
    // data when no default weight is available to fill their edges
    std::vector<std::string> languages = matrix.languages();
    std::optional<InteractionGraph> graph;
    std::size_t dropped_languages = 0;
    if (a.weights.empty()) {
        graph = InteractionGraph::uniform(languages, 1.0);
    } else {
        std::optional<double> dw;
        if (a.has_default_weight) dw = a.default_weight;
        if (!dw) {
            std::vector<std::string> named;
            for (const auto& row : parse_csv(std::string_view{read_file(a.weights)})) {
                if (row.size() != 3) continue;
                for (int c = 0; c < 2; ++c) {
                    const std::string& lang = row[static_cast<std::size_t>(c)];
                    if (matrix.language_index(lang) &&
                        std::find(named.begin(), named.end(), lang) == named.end()) {
                        named.push_back(lang);
                    }
                }
            }
            std::vector<std::string> kept;
            for (const auto& lang : languages) {
                if (std::find(named.begin(), named.end(), lang) != named.end()) {
                    kept.push_back(lang);
                } else {
                    ++dropped_languages;
                    std::cerr << "warning: " << lang
                              << " has no interaction weights, dropped from the run\n";
                }
            }
            languages = std::move(kept);
            if (languages.size() < 2) {
                throw IncompleteGraph("fewer than 2 languages remain after dropping "
                                      "languages without interaction weights");
            }
        }
        auto loaded = load_interaction_weights_file(a.weights, languages, dw);
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
        graph = std::move(loaded.graph);
    }

    const SpinConfiguration initial = initial_configuration(matrix, languages, schema);
    const DynamicsTrace trace = run_dynamics(initial, *graph, schema, config);

    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw Error("cannot write " + a.out);
    out << "step,energy,magnetization,avg_dist,max_dist";
    for (std::size_t i = 0; i < config.tracked_subsets.size(); ++i) {
        out << ",track" << i << "_delta,track" << i << "_rate";
    }
    out << '\n';
    for (const TraceSample& s : trace.samples) {
        out << s.step << ',' << format_double(s.energy) << ','
            << format_double(s.magnetization) << ',' << format_double(s.avg_distance) << ','
            << s.max_distance;
        for (const CodeParams& p : s.tracked) {
            out << ',' << format_double(p.delta) << ',' << format_double(p.rate);
        }
        out << '\n';
    }
    out.close();
    std::cout << "wrote " << trace.samples.size() << " samples to " << a.out << "\n";

    RunManifest manifest;
    manifest.command = "simulate";
    manifest.parameters = {{"config", a.config},
                           {"matrix", a.matrix},
                           {"temperature", config.temperature},
                           {"sweeps", config.sweeps},
                           {"sample_interval", config.sample_interval},
                           {"languages", languages.size()},
                           {"dropped_languages", dropped_languages},
                           {"tracked_subsets", config.tracked_subsets},
                           {"variant", variant_name(config.plotkin_variant)}};
    if (!a.schema.empty()) manifest.parameters["schema"] = a.schema;
    if (!a.weights.empty()) manifest.parameters["weights"] = a.weights;
    manifest.add_input(a.config);
    manifest.add_input(a.matrix);
    if (!a.schema.empty()) manifest.add_input(a.schema);
    if (!a.weights.empty()) manifest.add_input(a.weights);
    manifest.seed = config.seed;
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

struct PlotArgs {
    std::string points;
    std::vector<std::string> curves;
    std::string out;
    int q = 2;
    std::string variant = "standard";
    bool no_bounds = false;
};

int cmd_plot(const PlotArgs& a) {
    PlotOptions options;
    options.q = a.q;
    options.variant = parse_variant(a.variant);
    options.draw_bounds = !a.no_bounds;

    const auto points = read_points_csv(a.points, a.q);
    std::vector<Curve> curves;
    for (const auto& path : a.curves) curves.push_back(read_curve_csv(path));

    std::ostringstream svg;
    render_scatter_svg(svg, points, curves, options);
    write_file(a.out, svg.str());
    std::cout << "plotted " << points.size() << " points to " << a.out << "\n";

    RunManifest manifest;
    manifest.command = "plot";
    manifest.parameters = {{"points", a.points},
                           {"curves", a.curves},
                           {"q", a.q},
                           {"variant", a.variant},
                           {"bounds_overlay", options.draw_bounds}};
    manifest.add_input(a.points);
    for (const auto& path : a.curves) manifest.add_input(path);
    manifest.tool_version = SYNCODE_VERSION;
    manifest.outputs = {a.out};
    write_manifest(manifest, a.out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"syntactic-code survey and spin dynamics toolkit"};
    app.set_version_flag("--version", SYNCODE_VERSION);
    app.require_subcommand(1);

    ValidateArgs va;
    auto* validate = app.add_subcommand("validate", "load and check input files");
    validate->add_option("--matrix", va.matrix, "feature matrix CSV")->required();
    validate->add_option("--schema", va.schema, "entailment schema JSON");
    validate->add_option("--weights", va.weights, "interaction weights CSV");
    validate->add_option("--default-weight", va.default_weight, "fill for missing pairs")
        ->check(CLI::PositiveNumber);

    CodepointsArgs ca;
    auto* codepoints =
        app.add_subcommand("codepoints", "enumerate pair/triple codes of a corpus");
    codepoints->add_option("--matrix", ca.matrix, "feature matrix CSV")->required();
    codepoints->add_option("--size", ca.sizes, "tuple sizes, e.g. 2 or 2,3");
    codepoints->add_option("--out", ca.out, "output CSV")->required();
    codepoints->add_option("--variant", ca.variant, "standard|paper-literal");

    RandomSubsetsArgs ra;
    auto* randomsub =
        app.add_subcommand("random-subsets", "sample random feature/language subsets");
    randomsub->add_option("--matrix", ra.matrix, "feature matrix CSV")->required();
    randomsub->add_option("--trials", ra.trials, "number of trials")->required();
    randomsub->add_option("--seed", ra.seed, "RNG seed")->required();
    randomsub->add_option("--out", ra.out, "output CSV")->required();
    randomsub->add_option("--features-min", ra.features_min, "min features per trial");
    randomsub->add_option("--features-max", ra.features_max, "max features per trial");
    randomsub->add_option("--langs-min", ra.langs_min, "min languages per trial");
    randomsub->add_option("--langs-max", ra.langs_max, "max languages per trial");
    randomsub->add_option("--variant", ra.variant, "standard|paper-literal");

    DensityArgs da;
    auto* density = app.add_subcommand("density", "bin code points into a density grid");
    density->add_option("--points", da.points, "points CSV with delta,rate columns")
        ->required();
    density->add_option("--q", da.q, "alphabet size")->check(CLI::Range(2, 3));
    density->add_option("--bins-delta", da.bins_delta, "delta bins");
    density->add_option("--bins-rate", da.bins_rate, "rate bins");
    density->add_option("--out", da.out, "output JSON")->required();
    density->add_option("--variant", da.variant, "standard|paper-literal");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "emit bound curves as CSV");
    bounds->add_option("--q", ba.q, "alphabet size")->check(CLI::Range(2, 16));
    bounds->add_option("--curve", ba.curve, "gv|plotkin");
    bounds->add_option("--samples", ba.samples, "sample count over [0,1]");
    bounds->add_option("--out", ba.out, "output CSV")->required();
    bounds->add_option("--variant", ba.variant, "standard|paper-literal");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "run spin dynamics and trace code points");
    simulate->add_option("--config", sa.config, "dynamics config JSON")->required();
    simulate->add_option("--matrix", sa.matrix, "feature matrix CSV")->required();
    simulate->add_option("--schema", sa.schema, "entailment schema JSON");
    simulate->add_option("--weights", sa.weights, "interaction weights CSV");
    auto* dw = simulate->add_option("--default-weight", sa.default_weight,
                                    "fill for missing pairs")
                   ->check(CLI::PositiveNumber);
    auto* seed_opt = simulate->add_option("--seed", sa.seed_override, "override config seed");
    simulate->add_option("--out", sa.out, "output trace CSV")->required();

    PlotArgs pa;
    auto* plot = app.add_subcommand("plot", "render an SVG scatter of the (delta,rate) plane");
    plot->add_option("--points", pa.points, "points CSV with delta,rate columns")->required();
    plot->add_option("--curve", pa.curves, "extra curve CSV (repeatable)");
    plot->add_option("--q", pa.q, "alphabet size")->check(CLI::Range(2, 3));
    plot->add_option("--variant", pa.variant, "standard|paper-literal");
    plot->add_flag("--no-bounds", pa.no_bounds, "omit the GV/Plotkin overlays");
    plot->add_option("--out", pa.out, "output SVG")->required();

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "syncode";
    argv.push_back(prog.data());
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        va.has_default_weight = validate->count("--default-weight") > 0;
        sa.has_default_weight = dw->count() > 0;
        sa.has_seed_override = seed_opt->count() > 0;
        if (*validate) return cmd_validate(va);
        if (*codepoints) return cmd_codepoints(ca);
        if (*randomsub) return cmd_random_subsets(ra);
        if (*density) return cmd_density(da);
        if (*bounds) return cmd_bounds(ba);
        if (*simulate) return cmd_simulate(sa);
        if (*plot) return cmd_plot(pa);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace syncode::cli
