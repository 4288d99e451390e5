// End-to-end checks of the command line tool; each case shells out to the
// built binary (path injected by CMake).
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "acovdiff/csv.hpp"

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        (env.empty() ? std::string() : env + " ") + ACOVDIFF_CLI_BIN + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
    return std::string(ACOVDIFF_TEST_TMPDIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("estimate reproduces the hand-computed variance") {
    const auto input = temp_path("tiny.csv");
    write_file(input, "1\n2\n3\n4\n");
    const auto result = run_cli("estimate --input " + input + " --m 0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"gamma\"") != std::string::npos);
    CHECK(result.output.find("0.5") != std::string::npos);
}

TEST_CASE("estimate flags constant input without failing") {
    const auto input = temp_path("constant.csv");
    std::ostringstream data;
    for (int i = 0; i < 1600; ++i) data << "3.7\n";
    write_file(input, data.str());
    const auto result = run_cli("estimate --input " + input + " --m 2");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"flagged\": true") != std::string::npos);
    CHECK(result.output.find("warning") != std::string::npos);
}

TEST_CASE("estimate reports data errors with exit code 3") {
    CHECK(run_cli("estimate --input " + temp_path("missing.csv") + " --m 1").exit_code == 3);

    const auto short_input = temp_path("short.csv");
    write_file(short_input, "1\n2\n");
    CHECK(run_cli("estimate --input " + short_input + " --m 5").exit_code == 3);

    const auto words = temp_path("words.csv");
    write_file(words, "a\nb\nc\n");
    CHECK(run_cli("estimate --input " + words + " --m 1").exit_code == 3);
}

TEST_CASE("estimate accepts a named column") {
    const auto input = temp_path("named.csv");
    write_file(input, "index,y\n1,1\n2,2\n3,3\n4,4\n");
    const auto result = run_cli("estimate --input " + input + " --column y --m 0 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("lag,gamma,rho") != std::string::npos);

    const auto ambiguous = run_cli("estimate --input " + input + " --m 0");
    CHECK(ambiguous.exit_code == 3);
    CHECK(ambiguous.output.find("--column") != std::string::npos);
    CHECK(run_cli("estimate --input " + input + " --column z --m 0").exit_code == 3);
}

TEST_CASE("simulate is reproducible and internally consistent") {
    const auto first = temp_path("sim1.csv");
    const auto second = temp_path("sim2.csv");
    const std::string flags = "simulate --signal none --f zero --noise ma1 --gamma1 0 --n 10 "
                              "--seed 1 --output ";
    CHECK(run_cli(flags + first).exit_code == 0);
    CHECK(run_cli(flags + second).exit_code == 0);
    const auto text = read_file(first);
    CHECK(text == read_file(second));
    CHECK(text.find("# seed = 1") != std::string::npos);

    long rows = 0;
    std::istringstream lines(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            CHECK(line == "index,mean,noise,y");
            continue;
        }
        const auto fields = acovdiff::csv::split_row(line);
        REQUIRE(fields.size() == 4);
        const double mean = std::stod(fields[1]);
        const double noise = std::stod(fields[2]);
        const double y = std::stod(fields[3]);
        CHECK(std::abs(mean + noise - y) < 1e-12);
        ++rows;
    }
    CHECK(rows == 10);
}

TEST_CASE("simulated six-jump mean column changes level exactly six times") {
    const auto path = temp_path("sixjump.csv");
    CHECK(run_cli("simulate --signal six-jump --f zero --noise ma1 --gamma1 0.2 --n 1600 "
                  "--seed 9 --output " + path).exit_code == 0);
    std::istringstream lines(read_file(path));
    std::string line;
    std::vector<double> mean;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        mean.push_back(std::stod(acovdiff::csv::split_row(line)[1]));
    }
    REQUIRE(mean.size() == 1600);
    std::vector<long> jump_positions;
    for (std::size_t i = 1; i < mean.size(); ++i) {
        if (mean[i] != mean[i - 1]) jump_positions.push_back(static_cast<long>(i + 1));
    }
    CHECK(jump_positions == std::vector<long>{222, 311, 711, 888, 1200, 1466});
}

TEST_CASE("unknown scenario names exit nonzero and list the options") {
    const auto result = run_cli("simulate --signal staircase --n 10");
    CHECK(result.exit_code == 3);
    CHECK(result.output.find("six-jump") != std::string::npos);

    const auto bad_innovation = run_cli("simulate --noise ma1 --innovation cauchy --n 10");
    CHECK(bad_innovation.exit_code == 3);
    CHECK(bad_innovation.output.find("t4") != std::string::npos);
}

TEST_CASE("simulate covers the t4 and ar1 generators") {
    const auto heavy = temp_path("heavy.csv");
    CHECK(run_cli("simulate --signal none --f f3 --noise ma1 --gamma1 -0.4 --innovation t4 "
                  "--n 50 --seed 2 --output " + heavy).exit_code == 0);
    CHECK(read_file(heavy).find("t4") != std::string::npos);

    const auto ar = temp_path("ar.csv");
    CHECK(run_cli("simulate --signal none --f zero --noise ar1 --phi 0.4 --n 50 --seed 2 "
                  "--output " + ar).exit_code == 0);
    CHECK(read_file(ar).find("ar1") != std::string::npos);

    CHECK(run_cli("simulate --noise ar1 --phi 1.5 --n 50").exit_code == 3);
    CHECK(run_cli("simulate --noise ma1 --gamma1 0.7 --n 50").exit_code == 3);
}

TEST_CASE("estimate output is stable across repeated runs on the same input") {
    const auto data = temp_path("roundtrip.csv");
    CHECK(run_cli("simulate --signal six-jump --f f1 --noise ma1 --gamma1 0.2 --n 2000 --seed 4 "
                  "--output " + data).exit_code == 0);
    const auto once = run_cli("estimate --input " + data + " --column y --m 2");
    const auto twice = run_cli("estimate --input " + data + " --column y --m 2");
    CHECK(once.exit_code == 0);
    CHECK(once.output == twice.output);
}

TEST_CASE("tables subcommand validates its table id") {
    CHECK(run_cli("tables --table T9").exit_code == 2);
}

TEST_CASE("tables subcommand writes both artifacts") {
    const auto prefix = temp_path("t7");
    const auto result = run_cli("tables --table T7 --seed 3 --replications 5 --workers 2 "
                                "--output-prefix " + prefix);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("phi=0.3") != std::string::npos);
    const auto csv_text = read_file(prefix + ".csv");
    CHECK(csv_text.find("table,f,phi,estimator,lag") != std::string::npos);
    CHECK(read_file(prefix + ".txt") == result.output);
}

TEST_CASE("mse-study runs a config file and echoes the seed") {
    const auto cfg = temp_path("study.cfg");
    write_file(cfg, R"([signal]
preset = six-jump
smooth = f1
[noise]
model = ma1
gamma1 = 0.2
[experiment]
n = 400
replications = 50
seed = 11
lags = 1 2
[estimator]
method = difference
m = 2
)");
    const auto out = temp_path("study_report.csv");
    const auto result = run_cli("mse-study --config " + cfg + " --workers 2 --output " + out);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("seed=11") != std::string::npos);
    const auto report = read_file(out);
    CHECK(report.find("estimator,lag,target,mse") != std::string::npos);
    CHECK(report.find("difference(m=2),1,") != std::string::npos);

    const auto reseeded = run_cli("mse-study --config " + cfg + " --seed 13");
    CHECK(reseeded.exit_code == 0);
    CHECK(reseeded.output.find("seed=13") != std::string::npos);

    // Worker count from the environment; the report must not change.
    const auto via_env = run_cli("mse-study --config " + cfg, "ACOVDIFF_WORKERS=3");
    CHECK(via_env.exit_code == 0);
    CHECK(via_env.output == result.output);
}

TEST_CASE("simulate then estimate recovers the generating autocorrelation") {
    const auto data = temp_path("bigsim.csv");
    CHECK(run_cli("simulate --signal none --f zero --noise ma1 --gamma1 0.4 --n 100000 --seed 21 "
                  "--output " + data).exit_code == 0);
    const auto out = temp_path("bigsim_estimate.csv");
    CHECK(run_cli("estimate --input " + data + " --column y --m 1 --format csv --output " + out)
              .exit_code == 0);
    std::istringstream lines(read_file(out));
    std::string line;
    double rho1 = 0.0;
    while (std::getline(lines, line)) {
        if (line.rfind("1,", 0) == 0) rho1 = std::stod(acovdiff::csv::split_row(line)[2]);
    }
    CHECK(std::abs(rho1 - 0.4) < 0.02);
}

TEST_CASE("mse-study json report carries the expansion predictions") {
    const auto cfg = temp_path("study_json.cfg");
    write_file(cfg, R"([signal]
preset = six-jump
smooth = f1
[noise]
model = ma1
gamma1 = 0.2
[experiment]
n = 400
replications = 40
seed = 12
lags = 1
[estimator]
method = difference
m = 1
)");
    const auto out = temp_path("study_report.json");
    CHECK(run_cli("mse-study --config " + cfg + " --json " + out).exit_code == 0);
    const auto text = read_file(out);
    CHECK(text.find("\"predicted_mean\"") != std::string::npos);
    CHECK(text.find("\"predicted_variance\"") != std::string::npos);
    CHECK(text.find("\"mse\"") != std::string::npos);
}

TEST_CASE("mse-study rejects malformed configs with exit code 3") {
    const auto cfg = temp_path("broken.cfg");
    write_file(cfg, "[signal]\npreset = nope\n");
    CHECK(run_cli("mse-study --config " + cfg).exit_code == 3);
}

TEST_CASE("rate-study needs at least three sample sizes") {
    const auto cfg = temp_path("rate.cfg");
    write_file(cfg, R"([signal]
preset = none
[noise]
model = ma1
gamma1 = 0
[experiment]
n = 400
replications = 30
seed = 2
lags = 1
[estimator]
method = difference
m = 1
)");
    CHECK(run_cli("rate-study --config " + cfg + " --n-grid 400,1600").exit_code == 3);
    const auto ok = run_cli("rate-study --config " + cfg + " --n-grid 200,400,800 --workers 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("slope=") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
