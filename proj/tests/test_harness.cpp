#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sbmtest/harness.hpp"
#include "sbmtest/serialize.hpp"

using namespace sbmtest;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

struct Cleanup {
    std::vector<std::string> paths;
    ~Cleanup() {
        for (const auto& p : paths) std::remove(p.c_str());
    }
};

json meta_without_timestamp(const std::string& path) {
    json j = json::parse(slurp(path));
    j.erase("timestamp");
    return j;
}

#ifdef SBMTEST_CLI
int run_cli(const std::string& args) {
    const std::string cmd = std::string(SBMTEST_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("model spec resolves block patterns and validates") {
    ModelSpec m;
    m.kind = "sbm";
    m.n = 10;
    m.k = 3;
    m.r = 0.1;
    const auto b = m.block_matrix();
    CHECK(b(0, 0) == doctest::Approx(0.3));
    CHECK(b(0, 1) == doctest::Approx(0.1));

    m.p_diag = 0.6;  // two patterns at once
    CHECK_THROWS_AS(m.block_matrix(), ParamError);
    m.r.reset();
    CHECK_THROWS_AS(m.block_matrix(), ParamError);  // p_off missing
    m.p_off = 0.2;
    CHECK(m.block_matrix()(1, 1) == doctest::Approx(0.6));

    const json round = ModelSpec::from_json(m.to_json()).to_json();
    CHECK(round == m.to_json());
}

TEST_CASE("experiment spec json round trip and validation") {
    ExperimentSpec spec = ExperimentSpec::preset("error-table", "smoke");
    spec.seed = 17;
    const auto parsed = ExperimentSpec::from_json(spec.to_json());
    CHECK(parsed.to_json() == spec.to_json());
    CHECK_THROWS_AS(ExperimentSpec::preset("error-table", "huge"), ParamError);
    ExperimentSpec bad = spec;
    bad.kind = "mystery";
    CHECK_THROWS_AS(bad.validate(), ParamError);
    bad = spec;
    bad.columns = {"nulls"};
    CHECK_THROWS_AS(bad.validate(), ParamError);
}

TEST_CASE("generate_instance draws every model kind") {
    ModelSpec m;
    m.n = 40;
    m.k = 2;
    m.p_diag = 0.7;
    m.p_off = 0.2;
    for (const char* kind : {"sbm", "dcbm", "mmbm"}) {
        m.kind = kind;
        SeededRng rng(3);
        const auto instance = generate_instance(m, rng);
        instance.graph.validate();
        CHECK(instance.graph.size() == 40);
    }
}

TEST_CASE("null-dist run: R=1 gives one data row with the header intact") {
    Cleanup cleanup;
    ExperimentSpec spec = ExperimentSpec::preset("null-dist", "smoke");
    spec.reps = 1;
    spec.model.n = 80;
    spec.bootstrap_m = 10;
    spec.out = "./tmp_nd1.csv";
    spec.threads = 1;
    run_null_distribution(spec);
    cleanup.paths = {spec.out, spec.out + ".meta.json"};
    // no density curves for a single sample
    CHECK(!std::ifstream("./tmp_nd1.lambda1_scaled.density.dat").good());
    const std::string csv = slurp(spec.out);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.rfind("seed,lambda1_scaled,lambdan_scaled,boot_lambda1,boot_lambdan\n", 0) ==
          0);
    const json meta = json::parse(slurp(spec.out + ".meta.json"));
    CHECK(meta.at("kind") == "null-dist");
    CHECK(meta.at("master_seed") == spec.seed);
    CHECK(meta.contains("tw1_table_checksum"));
    CHECK(meta.contains("timestamp"));
    CHECK(!meta.at("spec").contains("threads"));
}

TEST_CASE("error-table: alpha near one rejects every alternative") {
    Cleanup cleanup;
    ExperimentSpec spec = ExperimentSpec::preset("error-table", "smoke");
    spec.model.n = 150;
    spec.reps = 5;
    spec.alpha = 0.9999;
    spec.k0_list = {2};
    spec.columns = {"finer_sbm", "dcbm"};
    spec.with_bootstrap = false;
    spec.out = "./tmp_et_alt.csv";
    spec.threads = 2;
    run_error_table(spec);
    cleanup.paths = {spec.out, spec.out + ".meta.json"};
    const std::string csv = slurp(spec.out);
    CHECK(csv == "mode,k0,finer_sbm,dcbm\nplain,2,1,1\n");
}

TEST_CASE("experiment outputs are byte-identical across worker counts") {
    Cleanup cleanup;
    ExperimentSpec spec = ExperimentSpec::preset("null-dist", "smoke");
    spec.model.n = 60;
    spec.reps = 8;
    spec.bootstrap_m = 8;
    spec.out = "./tmp_det.csv";
    spec.threads = 1;
    run_null_distribution(spec);
    cleanup.paths = {spec.out, spec.out + ".meta.json",
                     "./tmp_det.lambda1_scaled.density.dat",
                     "./tmp_det.lambdan_scaled.density.dat",
                     "./tmp_det.boot_lambda1.density.dat",
                     "./tmp_det.boot_lambdan.density.dat"};
    const std::string csv_serial = slurp(spec.out);
    const std::string density_serial = slurp("./tmp_det.boot_lambda1.density.dat");
    const json meta_serial = meta_without_timestamp(spec.out + ".meta.json");

    spec.threads = 4;
    run_null_distribution(spec);
    CHECK(slurp(spec.out) == csv_serial);
    CHECK(slurp("./tmp_det.boot_lambda1.density.dat") == density_serial);
    CHECK(meta_without_timestamp(spec.out + ".meta.json") == meta_serial);
}

TEST_CASE("select-k table smoke shape") {
    Cleanup cleanup;
    ExperimentSpec spec = ExperimentSpec::preset("select-k", "smoke");
    spec.model.n = 150;
    spec.reps = 3;
    spec.bootstrap_m = 10;
    spec.r_list = {0.2};
    spec.k_list = {2};
    spec.out = "./tmp_sk.csv";
    spec.threads = 2;
    run_select_k_table(spec);
    cleanup.paths = {spec.out, spec.out + ".meta.json"};
    const std::string csv = slurp(spec.out);
    CHECK(csv.rfind("k,bootstrap_r0.2\n", 0) == 0);
    CHECK(count_lines(csv) == 2);
}

TEST_CASE("random-b design resamples until the singular floor holds") {
    Cleanup cleanup;
    ExperimentSpec spec;
    spec.kind = "select-k";
    spec.design = "random-b";
    spec.reps = 3;
    spec.seed = 4;
    spec.k_list = {2};
    spec.n_list = {120};
    spec.bootstrap_m = 10;
    spec.with_plain = false;
    spec.out = "./tmp_rb.csv";
    spec.threads = 2;
    spec.model.n = 120;  // unused by the design but kept consistent
    run_select_k_table(spec);
    cleanup.paths = {spec.out, spec.out + ".meta.json"};
    const std::string csv = slurp(spec.out);
    CHECK(csv.rfind("n,bootstrap_k2\n", 0) == 0);

    // an impossible floor trips the resample cap
    ExperimentSpec impossible = spec;
    impossible.sigma_min = 10.0;
    impossible.resample_cap = 5;
    CHECK_THROWS_AS(run_select_k_table(impossible), NumericError);
}

TEST_CASE("real-data fixture report matches the library call bit-for-bit") {
    Cleanup cleanup;
    // labels for the whole 6-node file; the workflow subsets them to the
    // 4-node component
    const std::string labels_path = "./tmp_fixture6.labels";
    {
        std::ofstream labels(labels_path);
        labels << "left\nleft\nright\nright\nleft\nright\n";
    }
    cleanup.paths = {labels_path};

    RealDataOptions options;
    options.labels_path = labels_path;
    options.k0 = 2;
    options.alpha = 0.05;
    options.bootstrap = false;
    options.seed = 77;
    const auto report = run_real_data("tests/data/fixture6.edges", options);
    CHECK(report.total_nodes == 6);
    CHECK(report.component_nodes == 4);
    CHECK(report.component_edges == 5);

    const auto loaded = read_edge_list("tests/data/fixture6.edges");
    const auto component = largest_connected_component(loaded.graph);
    const Membership ghat({1, 1, 2, 2}, 2);
    const auto direct = gof_test(component.graph, 2, 0.05, ghat, SeededRng(77));
    CHECK(report.test.statistic == direct.statistic);
    CHECK(report.test.lambda_1 == direct.lambda_1);
    CHECK(report.test.lambda_n == direct.lambda_n);
    CHECK(report.test.reject == direct.reject);

    const json j = report.to_json();
    CHECK(j.at("test").at("statistic") == direct.statistic);

    // component-sized label files are accepted directly
    const std::string short_labels = "./tmp_fixture4.labels";
    {
        std::ofstream labels(short_labels);
        labels << "a\na\nb\nb\n";
    }
    cleanup.paths.push_back(short_labels);
    RealDataOptions direct_options = options;
    direct_options.labels_path = short_labels;
    const auto report2 = run_real_data("tests/data/fixture6.edges", direct_options);
    CHECK(report2.test.statistic == report.test.statistic);

    // any other length is an error naming both counts
    const std::string bad_labels = "./tmp_fixture5.labels";
    {
        std::ofstream labels(bad_labels);
        labels << "a\na\nb\nb\nb\n";
    }
    cleanup.paths.push_back(bad_labels);
    RealDataOptions bad_options = options;
    bad_options.labels_path = bad_labels;
    try {
        run_real_data("tests/data/fixture6.edges", bad_options);
        FAIL("expected ParamError");
    } catch (const ParamError& e) {
        const std::string what = e.what();
        CHECK(what.find("5") != std::string::npos);
        CHECK(what.find("4") != std::string::npos);
    }
}

TEST_CASE("kde integrates to about one and is deterministic") {
    SeededRng rng(5);
    std::vector<double> samples;
    for (int i = 0; i < 500; ++i) samples.push_back(rng.normal());
    const auto curve = gaussian_kde(samples, 401);
    double integral = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        integral += 0.5 * (curve[i].second + curve[i - 1].second) *
                    (curve[i].first - curve[i - 1].first);
    CHECK(integral == doctest::Approx(1.0).epsilon(0.02));
    CHECK(gaussian_kde(samples, 401) == curve);
    CHECK_THROWS_AS(gaussian_kde({1.0}, 10), ParamError);
}

TEST_CASE("format_double is locale-independent %.12g") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1172.3) == "1172.3");
}

#ifdef SBMTEST_CLI
TEST_CASE("cli exit codes: 0 success, 2 parameter, 3 io") {
    Cleanup cleanup;
    cleanup.paths = {"./tmp_cli.edges", "./tmp_cli.labels", "./tmp_cli.json"};
    CHECK(run_cli("gen --model sbm --n 40 --k 2 --p-diag 0.7 --p-off 0.2 "
                  "--membership balanced --seed 3 --out ./tmp_cli.edges "
                  "--labels-out ./tmp_cli.labels") == 0);
    CHECK(run_cli("test --in ./tmp_cli.edges --labels ./tmp_cli.labels --k0 2 "
                  "--json ./tmp_cli.json") == 0);
    CHECK(run_cli("test --in ./tmp_cli.edges --k0 0") == 2);
    CHECK(run_cli("test --in ./nonexistent.edges --k0 2") == 3);
    CHECK(run_cli("bogus-subcommand") == 2);
    CHECK(run_cli("simulate errors --preset huge") == 2);

    const json j = json::parse(slurp("./tmp_cli.json"));
    CHECK(j.at("k0") == 2);
    CHECK(j.at("mode") == "plain");
}
#endif
