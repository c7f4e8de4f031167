// Acceptance suite: one pass/fail line per criterion, paper-scale settings
// pinned in code. Returns the number of failed criteria (77 = skipped).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi_oracle.hpp"
#include "ks_util.hpp"
#include "sbmtest/harness.hpp"
#include "sbmtest/serialize.hpp"
#include "sbmtest/tw1.hpp"

using namespace sbmtest;

namespace {

int g_threads = 0;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "    FAILED: " << what << "\n";
        }
    }
    void note(const std::string& line) { detail << "    " << line << "\n"; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// parse a harness CSV into header + rows of strings
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    static Csv load(const std::string& path) {
        Csv out;
        std::istringstream in(slurp(path));
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            std::vector<std::string> fields;
            std::istringstream ls(line);
            std::string field;
            while (std::getline(ls, field, ',')) fields.push_back(field);
            if (first) {
                out.header = fields;
                first = false;
            } else if (!fields.empty()) {
                out.rows.push_back(fields);
            }
        }
        return out;
    }

    double cell(const std::string& row_key, const std::string& col, int key_cols = 1) const {
        std::size_t col_idx = header.size();
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == col) col_idx = c;
        if (col_idx == header.size()) throw IoError("csv: no column " + col);
        for (const auto& row : rows) {
            std::string key = row[0];
            for (int k = 1; k < key_cols; ++k) key += "," + row[k];
            if (key == row_key) return std::stod(row[col_idx]);
        }
        throw IoError("csv: no row " + row_key);
    }
};

std::string fmt(double v) { return format_double(v); }

// frozen TW1 oracle values (Fredholm determinant of the Airy kernel,
// cross-checked against a Painleve II integration; moments validated
// against the published constants)
struct Probe {
    double x;
    double cdf;
};
const Probe kTw1Probes[25] = {
    {-9.713, 1.419933784622e-20}, {-8.421, 3.383076395669e-14},
    {-7.037, 4.215753869359e-09}, {-6.284, 5.515104306671e-07},
    {-5.551, 2.592335316329e-05}, {-4.903, 4.042666265121e-04},
    {-4.317, 3.020289634878e-03}, {-3.731, 1.514244787827e-02},
    {-3.137, 5.427994287889e-02}, {-2.618, 1.282438852592e-01},
    {-2.003, 2.734765729304e-01}, {-1.507, 4.240000470769e-01},
    {-1.206, 5.198205879893e-01}, {-0.914, 6.096515375800e-01},
    {-0.453, 7.353315270287e-01}, {0.017, 8.349720833476e-01},
    {0.487, 9.044421714144e-01},  {0.979, 9.499780136414e-01},
    {1.523, 9.775270094044e-01},  {2.041, 9.902919059312e-01},
    {2.617, 9.964873252969e-01},  {3.209, 9.988661275982e-01},
    {4.113, 9.998276017414e-01},  {5.407, 9.999914203549e-01},
    {6.893, 9.999998171073e-01},
};
const double kTw1MeanOracle = -1.206533574582;  // published high-precision value
const double kTw1SdOracle = 1.267983056623;
const double kTw1Q975Oracle = 1.453771351949;

// ---------------------------------------------------------------------------

bool criterion_1_smoke(Check& check) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentSpec spec = ExperimentSpec::preset("error-table", "smoke");
    spec.out = "./acc_c1_smoke.csv";
    spec.threads = g_threads;
    run_error_table(spec);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Csv csv = Csv::load(spec.out);
    for (const char* mode_name : {"plain", "bootstrap"}) {
        const std::string mode = mode_name;
        for (int k0 : {2, 3, 4}) {
            const double level = csv.cell(mode + "," + std::to_string(k0), "null", 2);
            check.note("smoke " + mode + " K0=" + std::to_string(k0) +
                       " level=" + fmt(level));
            check.expect(level <= 0.12, mode + " smoke level " + fmt(level) + " > 0.12");
        }
    }
    check.note("smoke runtime " + fmt(elapsed) + " s");
    check.expect(elapsed < 180.0, "smoke preset took " + fmt(elapsed) + " s (limit 180)");
    return check.ok;
}

bool criterion_1(Check& check) {
    ExperimentSpec spec = ExperimentSpec::preset("error-table", "paper");
    spec.columns = {"null"};
    spec.out = "./acc_c1_paper.csv";
    spec.threads = g_threads;
    run_error_table(spec);
    const Csv csv = Csv::load(spec.out);
    for (int k0 : {2, 3, 4}) {
        const double plain = csv.cell("plain," + std::to_string(k0), "null", 2);
        const double boot = csv.cell("bootstrap," + std::to_string(k0), "null", 2);
        check.note("K0=" + std::to_string(k0) + " plain=" + fmt(plain) +
                   " bootstrap=" + fmt(boot));
        check.expect(plain >= 0.0 && plain <= 0.08,
                     "plain level at K0=" + std::to_string(k0) + " is " + fmt(plain) +
                         ", outside [0, 0.08]");
        check.expect(boot >= 0.01 && boot <= 0.10,
                     "bootstrap level at K0=" + std::to_string(k0) + " is " + fmt(boot) +
                         ", outside [0.01, 0.10]");
    }
    return check.ok;
}

bool criterion_2(Check& check) {
    ExperimentSpec spec = ExperimentSpec::preset("error-table", "paper");
    spec.columns = {"finer_sbm", "dcbm", "mmbm"};
    spec.with_bootstrap = false;
    spec.out = "./acc_c2.csv";
    spec.threads = g_threads;
    run_error_table(spec);
    const Csv csv = Csv::load(spec.out);
    for (int k0 : {2, 3, 4}) {
        const std::string key = "plain," + std::to_string(k0);
        const double finer = csv.cell(key, "finer_sbm", 2);
        const double dcbm = csv.cell(key, "dcbm", 2);
        const double mmbm = csv.cell(key, "mmbm", 2);
        check.note("K0=" + std::to_string(k0) + " finer=" + fmt(finer) +
                   " dcbm=" + fmt(dcbm) + " mmbm=" + fmt(mmbm));
        check.expect(finer >= 0.98, "finer-SBM power " + fmt(finer) + " < 0.98 at K0=" +
                                        std::to_string(k0));
        check.expect(dcbm >= 0.98,
                     "DCBM power " + fmt(dcbm) + " < 0.98 at K0=" + std::to_string(k0));
        if (k0 == 4)
            check.expect(mmbm >= 0.84 && mmbm <= 1.0,
                         "MMBM power at K0=4 is " + fmt(mmbm) + ", outside 0.92 +/- 0.08");
    }
    return check.ok;
}

double select_k_cell(double r, int k_true, const std::string& out) {
    ExperimentSpec spec;
    spec.kind = "select-k";
    spec.design = "r-sweep";
    spec.model.kind = "sbm";
    spec.model.membership = "balanced";
    spec.model.n = 1000;
    spec.model.k = k_true;
    spec.model.r = r;
    spec.reps = 200;
    spec.seed = 1;
    spec.with_plain = false;
    spec.r_list = {r};
    spec.k_list = {k_true};
    spec.out = out;
    spec.threads = g_threads;
    run_select_k_table(spec);
    const Csv csv = Csv::load(out);
    return std::stod(csv.rows.at(0).at(1));
}

bool criterion_3(Check& check) {
    const double p_r020_k8 = select_k_cell(0.2, 8, "./acc_c3_r020_k8.csv");
    check.note("r=0.2 K=8 correct proportion = " + fmt(p_r020_k8));
    check.expect(p_r020_k8 >= 0.95,
                 "r=0.2, K=8 proportion " + fmt(p_r020_k8) + " < 0.95");

    const double p_r005_k8 = select_k_cell(0.05, 8, "./acc_c3_r005_k8.csv");
    check.note("r=0.05 K=8 correct proportion = " + fmt(p_r005_k8));
    check.expect(p_r005_k8 >= 0.59 && p_r005_k8 <= 0.83,
                 "r=0.05, K=8 proportion " + fmt(p_r005_k8) + " outside 0.71 +/- 0.12");

    const double p_r001_k4 = select_k_cell(0.01, 4, "./acc_c3_r001_k4.csv");
    check.note("r=0.01 K=4 correct proportion = " + fmt(p_r001_k4));
    check.expect(p_r001_k4 <= 0.10, "r=0.01, K=4 proportion " + fmt(p_r001_k4) +
                                        " > 0.10 (the documented failure regime "
                                        "must reproduce)");
    return check.ok;
}

bool criterion_4(Check& check) {
    ExperimentSpec spec;
    spec.kind = "select-k";
    spec.design = "random-b";
    spec.reps = 200;
    spec.seed = 1;
    spec.with_plain = false;
    spec.k_list = {2, 3, 4};
    spec.n_list = {1000};
    spec.model.n = 1000;
    spec.out = "./acc_c4.csv";
    spec.threads = g_threads;
    run_select_k_table(spec);
    const Csv csv = Csv::load(spec.out);
    const double floor_by_k[3] = {0.95, 0.95, 0.88};
    const int ks[3] = {2, 3, 4};
    for (int i = 0; i < 3; ++i) {
        const double p = csv.cell("1000", "bootstrap_k" + std::to_string(ks[i]));
        check.note("n=1000 K=" + std::to_string(ks[i]) + " correct proportion = " + fmt(p));
        check.expect(p >= floor_by_k[i], "K=" + std::to_string(ks[i]) + " proportion " +
                                             fmt(p) + " < " + fmt(floor_by_k[i]));
    }
    return check.ok;
}

bool criterion_5(Check& check) {
    ExperimentSpec spec = ExperimentSpec::preset("null-dist", "paper");
    spec.out = "./acc_c5.csv";
    spec.threads = g_threads;
    run_null_distribution(spec);
    const Csv csv = Csv::load(spec.out);
    std::vector<double> lam1, lamn, boot1, bootn;
    for (const auto& row : csv.rows) {
        lam1.push_back(std::stod(row.at(1)));
        lamn.push_back(std::stod(row.at(2)));
        boot1.push_back(std::stod(row.at(3)));
        bootn.push_back(std::stod(row.at(4)));
    }
    const double d_boot1 = ks_distance_tw1(boot1);
    const double d_bootn = ks_distance_tw1(bootn);
    check.note("bootstrap-corrected KS distances: upper=" + fmt(d_boot1) +
               " lower=" + fmt(d_bootn));
    check.expect(d_boot1 < 0.08, "corrected upper-side KS " + fmt(d_boot1) + " >= 0.08");
    check.expect(d_bootn < 0.08, "corrected lower-side KS " + fmt(d_bootn) + " >= 0.08");

    const double crit = ks_critical(0.01, lam1.size());
    const double d_lam1 = ks_distance_tw1(lam1);
    const double d_lamn = ks_distance_tw1(lamn);
    check.note("uncorrected KS distances: upper=" + fmt(d_lam1) + " lower=" + fmt(d_lamn) +
               " (1% critical " + fmt(crit) + ")");
    check.expect(d_lam1 > crit, "uncorrected upper side unexpectedly passes KS at 1%");
    check.expect(d_lamn > crit, "uncorrected lower side unexpectedly passes KS at 1%");

    double mean1 = 0.0;
    for (double v : lam1) mean1 += v;
    mean1 /= static_cast<double>(lam1.size());
    const double bias = std::abs(mean1 - tw1_moments().mean);
    check.note("uncorrected upper-side mean bias = " + fmt(bias));
    check.expect(bias > 0.2, "expected visible finite-sample bias (> 0.2), got " + fmt(bias));
    return check.ok;
}

bool criterion_6(Check& check) {
    const auto& dist = Tw1Distribution::bundled();
    double worst = 0.0;
    for (const auto& probe : kTw1Probes)
        worst = std::max(worst, std::abs(dist.cdf(probe.x) - probe.cdf));
    check.note("max |cdf - oracle| over 25 probes = " + fmt(worst));
    check.expect(worst <= 1e-4, "cdf error " + fmt(worst) + " > 1e-4");

    double worst_inverse = 0.0;
    for (const auto& probe : kTw1Probes) {
        if (probe.cdf <= 1e-12 || probe.cdf >= 1.0 - 1e-12) continue;
        worst_inverse =
            std::max(worst_inverse, std::abs(dist.cdf(dist.quantile(probe.cdf)) - probe.cdf));
    }
    for (double p : {1e-4, 0.01, 0.025, 0.5, 0.95, 0.975, 0.99995})
        worst_inverse = std::max(worst_inverse, std::abs(dist.cdf(dist.quantile(p)) - p));
    check.note("max inverse-consistency error = " + fmt(worst_inverse));
    check.expect(worst_inverse <= 1e-6, "inverse consistency " + fmt(worst_inverse) +
                                            " > 1e-6");

    check.note("mean=" + fmt(dist.mean()) + " sd=" + fmt(dist.sd()));
    check.expect(std::abs(dist.mean() - kTw1MeanOracle) <= 1e-3, "mean off by > 1e-3");
    check.expect(std::abs(dist.sd() - kTw1SdOracle) <= 1e-3, "sd off by > 1e-3");
    check.expect(std::abs(dist.quantile(0.975) - kTw1Q975Oracle) <= 1e-4,
                 "t(0.025) off by > 1e-4");
    return check.ok;
}

bool criterion_7(Check& check) {
    // hand-computed 6-node plug-in and residual entries
    AdjacencyGraph fixture(6);
    fixture.set_edge(0, 1);
    fixture.set_edge(0, 3);
    fixture.set_edge(1, 4);
    fixture.set_edge(3, 4);
    fixture.set_edge(4, 5);
    const Membership ghat({1, 1, 1, 2, 2, 2}, 2);
    const auto bhat = estimate_block_matrix(fixture, ghat);
    check.expect(std::abs(bhat(0, 0) - 1.0 / 3.0) <= 1e-12, "fixture B11");
    check.expect(std::abs(bhat(0, 1) - 2.0 / 9.0) <= 1e-12, "fixture B12");
    check.expect(std::abs(bhat(1, 1) - 2.0 / 3.0) <= 1e-12, "fixture B22");
    const auto residual = residual_matrix(fixture, ghat, bhat);
    const double expected = (1.0 - 1.0 / 3.0) / std::sqrt(5.0 / 3.0 * 2.0 / 3.0);
    check.expect(std::abs(residual.values(0, 1) - expected) <= 1e-12, "fixture residual");
    check.note("fixture entries reproduced to 1e-12");

    // dense-decomposition oracle on every size up to 50, both solver paths
    SeededRng rng(777);
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        SeededRng child = rng.derive(n);
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = child.uniform(-2.0, 2.0);
                m(i, j) = v;
                m(j, i) = v;
            }
        const auto oracle = jacobi_eigenvalues(m);
        const auto dense = symmetric_extreme_eigenvalues(m);
        ExtremeOpts force;
        force.force_iterative = true;
        const auto lanczos = symmetric_extreme_eigenvalues(m, force);
        worst = std::max(worst, std::abs(dense.lambda_1 - oracle.back()));
        worst = std::max(worst, std::abs(dense.lambda_n - oracle.front()));
        worst = std::max(worst, std::abs(lanczos.lambda_1 - oracle.back()));
        worst = std::max(worst, std::abs(lanczos.lambda_n - oracle.front()));
    }
    check.note("max extreme-eigenvalue error vs Jacobi oracle = " + fmt(worst));
    check.expect(worst <= 1e-9, "eigenvalue error " + fmt(worst) + " > 1e-9");

    // reconstruction identity and label-permutation invariance, 100 instances
    int failures = 0;
    for (int rep = 0; rep < 100; ++rep) {
        SeededRng child = rng.derive(1000 + rep);
        const int n = 20 + static_cast<int>(child.below(60));
        const int k = 2 + static_cast<int>(child.below(3));
        const Membership truth = random_membership(n, k, child);
        auto graph =
            generate_sbm(truth, BlockMatrix::two_level(k, 0.7, 0.2), child);
        const auto est = estimate_block_matrix_with_fallback(graph, truth);
        const auto res = residual_matrix(graph, truth, est.bhat);
        for (int i = 0; i < n && failures == 0; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double p = res.phat(i, j);
                const double back =
                    res.values(i, j) * std::sqrt((n - 1) * p * (1.0 - p)) + p;
                if (std::abs(back - graph(i, j)) > 1e-9) {
                    ++failures;
                    break;
                }
            }
        Membership permuted = truth;
        for (auto& lab : permuted.labels) lab = lab % k + 1;
        const auto res_b =
            residual_matrix(graph, permuted, estimate_block_matrix(graph, permuted));
        if ((res.values - res_b.values).cwiseAbs().maxCoeff() != 0.0) ++failures;
    }
    check.note("reconstruction + permutation instances failed: " +
               std::to_string(failures) + " of 100");
    check.expect(failures == 0, "identity/invariance failures");
    return check.ok;
}

int criterion_8(Check& check) {
    const char* edges = std::getenv("SBMTEST_POLBLOGS");
    const char* labels = std::getenv("SBMTEST_POLBLOGS_LABELS");
    if (!edges || !labels) {
        check.note("SKIP: set SBMTEST_POLBLOGS and SBMTEST_POLBLOGS_LABELS to run");
        return 77;
    }
    RealDataOptions options;
    options.labels_path = labels;
    options.k0 = 2;
    options.alpha = 0.05;
    options.bootstrap = false;
    options.threads = g_threads;
    const auto plain = run_real_data(edges, options);
    check.note("component " + std::to_string(plain.component_nodes) + " nodes, plain T=" +
               fmt(plain.test.statistic));
    check.expect(std::abs(plain.test.statistic - 1172.3) <= 0.05 * 1172.3,
                 "plain statistic " + fmt(plain.test.statistic) +
                     " not within 5% of 1172.3");
    options.bootstrap = true;
    options.bootstrap_m = 50;
    const auto boot = run_real_data(edges, options);
    check.note("bootstrap T=" + fmt(boot.test.statistic));
    check.expect(std::abs(boot.test.statistic - 491.5) <= 0.10 * 491.5,
                 "bootstrap statistic " + fmt(boot.test.statistic) +
                     " not within 10% of 491.5");
    return check.ok ? 0 : 1;
}

bool criterion_9(Check& check) {
    auto strip_timestamp = [](const std::string& text) {
        std::string out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
        return out;
    };

    ExperimentSpec nd = ExperimentSpec::preset("null-dist", "smoke");
    nd.model.n = 120;
    nd.reps = 10;
    nd.bootstrap_m = 10;
    nd.out = "./acc_c9_nd.csv";
    nd.threads = 1;
    run_null_distribution(nd);
    const std::string nd_csv = slurp(nd.out);
    const std::string nd_density = slurp("./acc_c9_nd.boot_lambda1.density.dat");
    const std::string nd_meta = strip_timestamp(slurp(nd.out + ".meta.json"));
    nd.threads = 4;
    run_null_distribution(nd);
    check.expect(slurp(nd.out) == nd_csv, "null-dist CSV changed with worker count");
    check.expect(slurp("./acc_c9_nd.boot_lambda1.density.dat") == nd_density,
                 "density file changed with worker count");
    check.expect(strip_timestamp(slurp(nd.out + ".meta.json")) == nd_meta,
                 "metadata (minus timestamp) changed with worker count");

    ExperimentSpec et = ExperimentSpec::preset("error-table", "smoke");
    et.model.n = 150;
    et.reps = 8;
    et.bootstrap_m = 8;
    et.k0_list = {2};
    et.out = "./acc_c9_et.csv";
    et.threads = 1;
    run_error_table(et);
    const std::string et_csv = slurp(et.out);
    et.threads = 4;
    run_error_table(et);
    check.expect(slurp(et.out) == et_csv, "error-table CSV changed with worker count");

    ExperimentSpec sk = ExperimentSpec::preset("select-k", "smoke");
    sk.model.n = 150;
    sk.reps = 4;
    sk.bootstrap_m = 8;
    sk.r_list = {0.2};
    sk.k_list = {2};
    sk.out = "./acc_c9_sk.csv";
    sk.threads = 1;
    run_select_k_table(sk);
    const std::string sk_csv = slurp(sk.out);
    sk.threads = 4;
    run_select_k_table(sk);
    check.expect(slurp(sk.out) == sk_csv, "select-k CSV changed with worker count");

    check.note("byte-identical outputs across worker counts");
    return check.ok;
}

bool extra_select_cell(Check& check) {
    const double p = select_k_cell(0.2, 3, "./acc_extra_r020_k3.csv");
    check.note("r=0.2 K=3 correct proportion = " + fmt(p));
    check.expect(p >= 0.95, "r=0.2, K=3 proportion " + fmt(p) + " < 0.95");
    return check.ok;
}

struct Criterion {
    std::string name;
    std::string description;
    std::function<int(Check&)> run;  // 0 pass, 1 fail, 77 skip
};

int wrap(bool (*fn)(Check&), Check& check) { return fn(check) ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            wanted.push_back(argv[++i]);
        } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
            g_threads = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion NAME]... [--threads N]\n");
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {"1_smoke", "Table 1 null level, smoke preset (< 3 min, level <= 0.12)",
         [](Check& c) { return wrap(criterion_1_smoke, c); }},
        {"1", "Table 1 null level, paper scale (plain in [0,0.08], bootstrap in [0.01,0.10])",
         [](Check& c) { return wrap(criterion_1, c); }},
        {"2", "Table 1 power (finer SBM and DCBM >= 0.98; MMBM at K0=4 within 0.92 +/- 0.08)",
         [](Check& c) { return wrap(criterion_2, c); }},
        {"3", "Table 2 spot cells with bootstrap (r=0.2/K=8, r=0.05/K=8, r=0.01/K=4)",
         [](Check& c) { return wrap(criterion_3, c); }},
        {"4", "Table 3 with bootstrap, n=1000 row >= (0.95, 0.95, 0.88)",
         [](Check& c) { return wrap(criterion_4, c); }},
        {"5", "Figure 1 property at n=200 (corrected KS < 0.08; uncorrected fails KS at 1%)",
         [](Check& c) { return wrap(criterion_5, c); }},
        {"6", "TW1 table accuracy (cdf 1e-4, inverse 1e-6, moments 1e-3)",
         [](Check& c) { return wrap(criterion_6, c); }},
        {"7", "oracle equivalence (fixture 1e-12, eigen oracle 1e-9, invariances)",
         [](Check& c) { return wrap(criterion_7, c); }},
        {"8", "political-blog statistics (conditional on user-supplied data)",
         [](Check& c) { return criterion_8(c); }},
        {"9", "determinism: byte-identical outputs regardless of worker count",
         [](Check& c) { return wrap(criterion_9, c); }},
        {"extra_select", "Table 2 op-example cell (r=0.2, K=3) >= 0.95",
         [](Check& c) { return wrap(extra_select_cell, c); }},
    };

    if (wanted.empty())
        for (const auto& criterion : criteria) wanted.push_back(criterion.name);

    int failures = 0;
    bool any_skip = false;
    bool any_run = false;
    for (const auto& name : wanted) {
        const auto it =
            std::find_if(criteria.begin(), criteria.end(),
                         [&](const Criterion& c) { return c.name == name; });
        if (it == criteria.end()) {
            std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
            return 2;
        }
        Check check;
        int outcome;
        try {
            outcome = it->run(check);
        } catch (const std::exception& e) {
            outcome = 1;
            check.detail << "    EXCEPTION: " << e.what() << "\n";
        }
        const char* verdict = outcome == 0 ? "PASS" : outcome == 77 ? "SKIP" : "FAIL";
        std::printf("%s criterion %s: %s\n%s", verdict, it->name.c_str(),
                    it->description.c_str(), check.detail.str().c_str());
        std::fflush(stdout);
        if (outcome == 77)
            any_skip = true;
        else {
            any_run = true;
            failures += outcome;
        }
    }
    if (failures > 0) return failures;
    if (any_skip && !any_run) return 77;
    return 0;
}
