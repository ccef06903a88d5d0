#include "syncode/commands.hpp"

#include "syncode/text.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <fstream>
#include <string>

using namespace syncode;
using testutil::TempDir;

namespace {

int run_cli(std::vector<std::string> args) {
    return cli::run(args);
}

std::string matrix_path() {
    return testutil::config_path("example_4lang_matrix.csv").string();
}

std::string schema_path() {
    return testutil::config_path("example_4lang_schema.json").string();
}

} // namespace

TEST_CASE("bounds emits the sampled curve rows") {
    TempDir tmp;
    const auto out = tmp.file("gv.csv").string();
    REQUIRE(run_cli({"bounds", "--q", "2", "--curve", "gv", "--samples", "3", "--out", out}) == 0);
    const auto rows = parse_csv(std::string_view{read_file(out)});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == CsvRow{"delta", "rate"});
    CHECK(rows[1] == CsvRow{"0", "1"});
    CHECK(rows[2] == CsvRow{"0.5", "0"});
    CHECK(rows[3] == CsvRow{"1", "0"});
    CHECK(std::filesystem::exists(out + ".manifest.json"));
}

TEST_CASE("codepoints enumerates a toy corpus") {
    TempDir tmp;
    const auto matrix = tmp.file("toy.csv");
    write_file(matrix, "language,f1,f2,f3\nA,1,0,1\nB,0,0,1\nC,1,1,?\n");
    const auto out = tmp.file("points.csv").string();
    REQUIRE(run_cli({"codepoints", "--matrix", matrix.string(), "--size", "2", "--out", out}) == 0);
    const auto rows = parse_csv(std::string_view{read_file(out)});
    REQUIRE(rows.size() == 4); // header + C(3,2)
    CHECK(rows[0] == CsvRow{"languages", "n", "k", "d", "delta", "rate", "region"});
    CHECK(rows[1][0] == "A|B");
    CHECK(rows[1][1] == "3");
    CHECK(rows[1][2] == "1");
}

TEST_CASE("simulate reproduces the worked initial code point in its first sample") {
    TempDir tmp;
    const auto config = tmp.file("config.json");
    write_file(config,
               R"({"temperature": 10.0, "sweeps": 50, "sample_interval": 10, "seed": 1,
                   "tracked_subsets": [["English","Welsh","Russian","Bulgarian"]]})");
    const auto out = tmp.file("trace.csv").string();
    REQUIRE(run_cli({"simulate", "--config", config.string(), "--matrix", matrix_path(),
                     "--schema", schema_path(), "--out", out}) == 0);

    const auto rows = parse_csv(std::string_view{read_file(out)});
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == CsvRow{"step", "energy", "magnetization", "avg_dist", "max_dist",
                            "track0_delta", "track0_rate"});
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][5] == "0"); // delta of the duplicated initial words
    CHECK(std::stod(rows[1][6]) == doctest::Approx(0.63093).epsilon(1e-5));

    // rate column is string-constant across samples
    for (std::size_t r = 2; r < rows.size(); ++r) CHECK(rows[r][6] == rows[1][6]);
}

TEST_CASE("simulate honors entailment energy overrides and weights") {
    TempDir tmp;
    const auto config = tmp.file("config.json");
    write_file(config,
               R"({"temperature": 10.0, "entailment_energy": 0.0, "sweeps": 20,
                   "sample_interval": 5, "seed": 2})");
    const auto out = tmp.file("trace.csv").string();
    REQUIRE(run_cli({"simulate", "--config", config.string(), "--matrix", matrix_path(),
                     "--schema", schema_path(), "--weights",
                     testutil::config_path("example_4lang_weights.csv").string(), "--out",
                     out}) == 0);
    CHECK(std::filesystem::exists(out));
}

TEST_CASE("density bins a points csv into json") {
    TempDir tmp;
    const auto points = tmp.file("points.csv");
    write_file(points, "delta,rate\n0,1\n0.5,0.5\n0.9,0.1\n");
    const auto out = tmp.file("density.json").string();
    REQUIRE(run_cli({"density", "--points", points.string(), "--q", "2", "--bins-delta", "2",
                     "--bins-rate", "2", "--out", out}) == 0);
    const std::string doc = read_file(out);
    CHECK(doc.find("\"points\": 3") != std::string::npos);
    CHECK(doc.find("region_totals") != std::string::npos);
}

TEST_CASE("plot renders a deterministic svg") {
    TempDir tmp;
    const auto points = tmp.file("points.csv");
    write_file(points, "delta,rate\n0.1,0.2\n0.4,0.9\n");
    const auto curve = tmp.file("curve.csv");
    write_file(curve, "delta,rate\n0,1\n1,0\n");
    const auto out = tmp.file("plot.svg").string();
    REQUIRE(run_cli({"plot", "--points", points.string(), "--curve", curve.string(),
                     "--q", "2", "--out", out}) == 0);
    const std::string svg = read_file(out);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<!-- syncode") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);

    const auto out2 = tmp.file("plot2.svg").string();
    REQUIRE(run_cli({"plot", "--points", points.string(), "--curve", curve.string(),
                     "--q", "2", "--out", out2}) == 0);
    CHECK(read_file(out) == read_file(out2));
}

TEST_CASE("random-subsets is reproducible for a fixed seed") {
    TempDir tmp;
    const auto matrix = tmp.file("toy.csv");
    {
        std::ofstream out(matrix);
        out << "language,f1,f2,f3,f4,f5,f6\n";
        for (int l = 0; l < 8; ++l) {
            out << "L" << l;
            for (int f = 0; f < 6; ++f) out << ',' << ((l + f) % 2);
            out << '\n';
        }
    }
    const auto out1 = tmp.file("a.csv").string();
    const auto out2 = tmp.file("b.csv").string();
    const std::vector<std::string> base{
        "random-subsets", "--matrix", matrix.string(), "--trials", "50", "--seed", "7",
        "--features-min", "2", "--features-max", "4", "--langs-min", "2", "--langs-max", "4"};
    auto args1 = base;
    args1.insert(args1.end(), {"--out", out1});
    auto args2 = base;
    args2.insert(args2.end(), {"--out", out2});
    REQUIRE(run_cli(args1) == 0);
    REQUIRE(run_cli(args2) == 0);
    CHECK(read_file(out1) == read_file(out2));

    const auto rows = parse_csv(std::string_view{read_file(out1)});
    CHECK(rows.size() == 51); // header + one record per trial
}

TEST_CASE("the --seed flag overrides the config seed") {
    TempDir tmp;
    const auto config = tmp.file("config.json");
    write_file(config,
               R"({"temperature": 5.0, "sweeps": 100, "sample_interval": 10, "seed": 1})");
    auto run_with = [&](const std::string& name,
                        const std::vector<std::string>& extra) {
        const auto out = tmp.file(name).string();
        std::vector<std::string> args{"simulate", "--config", config.string(), "--matrix",
                                      matrix_path(), "--schema", schema_path(),
                                      "--out", out};
        args.insert(args.end(), extra.begin(), extra.end());
        REQUIRE(run_cli(args) == 0);
        return read_file(out);
    };
    const std::string with_config_seed = run_with("a.csv", {});
    const std::string with_same_flag = run_with("b.csv", {"--seed", "1"});
    const std::string with_other_flag = run_with("c.csv", {"--seed", "2"});
    CHECK(with_config_seed == with_same_flag);
    CHECK(with_config_seed != with_other_flag);
}

TEST_CASE("validate summarizes inputs") {
    CHECK(run_cli({"validate", "--matrix", matrix_path(), "--schema", schema_path()}) == 0);
}

TEST_CASE("usage and input errors exit with status 1") {
    CHECK(run_cli({"no-such-command"}) == 1);
    CHECK(run_cli({"codepoints", "--matrix", "/definitely/missing.csv", "--out",
                   "/tmp/x.csv"}) == 1);
    TempDir tmp;
    const auto bad = tmp.file("bad.csv");
    write_file(bad, "language,f1\nA,banana\n");
    CHECK(run_cli({"codepoints", "--matrix", bad.string(), "--out",
                   tmp.file("out.csv").string()}) == 1);
}
