#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aztec/bijection.hpp"
#include "aztec/checks.hpp"
#include "aztec/linalg.hpp"
#include "aztec/tilings.hpp"

using namespace aztec;

namespace {

struct SingleParams {
    long m = 2;
    std::string l = "2";
    long a = 1;
    long s = 1;
    long r = 1;
    long n = 3;
    long b = 0;
    long rho = 1;
    std::string c1 = "2";
    std::string c2 = "3";
    std::string w1 = "1", w2 = "1", w3 = "1";
    int truncation = 12;
    std::string matrix = "WH31";
};

bool is_suite(const std::string& name) {
    if (name == "all")
        return true;
    const auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_single(const std::string& id, const SingleParams& p,
                                    const FormulaCatalog& catalog) {
    if (id == "main-d")
        return check_main_d(p.m, rat_from_string(p.l), p.a, p.n);
    if (id == "main-h")
        return check_main_h(p.m, rat_from_string(p.l), p.a, p.n);
    if (id == "scaling")
        return check_scaling(p.s, p.r, p.n, rat_from_string(p.c1), rat_from_string(p.c2),
                             rat_from_string(p.l));
    if (id == "epilogue")
        return check_epilogue(catalog, p.s, p.r, p.n, p.b, p.rho);
    if (id == "holonomic")
        return check_holonomic(catalog, p.matrix, p.n);
    if (id == "series-relation")
        return {check_series_relation(p.m, rat_from_string(p.l), p.a, p.truncation)};
    if (id == "triple")
        return check_tiling_triple(p.s, p.r, p.n,
                                   WeightTriple{rat_from_string(p.w1), rat_from_string(p.w2),
                                                rat_from_string(p.w3)});
    if (id == "bijection")
        return check_bijection(p.s, p.r, p.n);
    throw std::invalid_argument(
        "unknown check target '" + id +
        "'; expected a suite name or one of: main-d, main-h, scaling, epilogue, holonomic, "
        "series-relation, triple, bijection");
}

int run_check(const std::string& target, const SuiteOptions& options, const SingleParams& single,
              bool single_flags_used, const std::string& json_path,
              const std::string& catalog_path) {
    const FormulaCatalog catalog =
        catalog_path.empty() ? FormulaCatalog::load_default() : FormulaCatalog::load(catalog_path);
    // "scaling", "epilogue" and "holonomic" name both a suite and a single
    // check; explicit parameter flags select the single check.
    const bool as_suite = is_suite(target) && !single_flags_used;
    const std::vector<CheckReport> reports = as_suite ? run_suite(target, catalog, options)
                                                      : run_single(target, single, catalog);

    long passed = 0, failed = 0, skipped = 0;
    for (const CheckReport& r : reports) {
        if (r.passed())
            ++passed;
        else if (r.skipped())
            ++skipped;
        else
            ++failed;
        std::cout << (r.passed() ? "PASS " : (r.skipped() ? "SKIP " : "FAIL ")) << r.id << " ["
                  << r.params << "]";
        if (!r.passed() && !r.skipped())
            std::cout << " lhs=" << r.lhs << " rhs=" << r.rhs;
        std::cout << " (" << r.millis << " ms)\n";
    }
    std::cout << reports.size() << " checks: " << passed << " passed, " << failed << " failed, "
              << skipped << " skipped\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << reports_to_json(reports) << "\n";
        std::cout << "report written to " << json_path << "\n";
    }
    return failed == 0 ? 0 : 1;
}

int run_table(const std::string& id, long nmax, long kappa, long s,
              const std::string& catalog_path) {
    const FormulaCatalog catalog =
        catalog_path.empty() ? FormulaCatalog::load_default() : FormulaCatalog::load(catalog_path);
    FormulaParams params;
    params.kappa = kappa;
    params.s = s;
    for (long n = 1; n <= nmax; ++n)
        std::cout << n << "\t" << rat_to_string(catalog.eval(id, n, params)) << "\n";
    return 0;
}

int run_render(int type, long s, long r, long n, long tiling_index, const std::string& svg_path) {
    const Partition lambda = arithmetic_partition(s, r, n);
    const AztecDomain domain = (type == 1) ? aztec_type1(lambda) : aztec_type2(lambda);

    std::optional<Tiling> chosen;
    if (tiling_index >= 0) {
        long seen = 0;
        try {
            for_each_tiling(domain, [&](const Tiling& t) {
                if (seen++ == tiling_index)
                    chosen = t;
            });
        } catch (const CapExceededError& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        if (!chosen) {
            std::cerr << "tiling index " << tiling_index << " out of range (found " << seen
                      << " tilings)\n";
            return 1;
        }
    }
    const Tiling* tiling = chosen ? &*chosen : nullptr;
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        out << render_svg(domain, tiling);
        std::cout << "svg written to " << svg_path << "\n";
    } else {
        std::cout << render_ascii(domain, tiling);
    }
    return 0;
}

int run_cofactors(const std::string& which, long n) {
    const KKSParams params = (which == "WH31") ? kks_params_wh31(n) : kks_params_wd33(n);
    const VecQ c = normalized_cofactors(kks_matrix(params));
    for (Eigen::Index j = 0; j < c.size(); ++j)
        std::cout << "c[" << j << "] = " << rat_to_string(c(j)) << "\n";
    return 0;
}

int run_bench(const std::string& algorithm, long n) {
    const MatQ matrix = kks_matrix(kks_params_wd33(n));
    MatZ integral(matrix.rows(), matrix.cols());
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < matrix.cols(); ++j)
            integral(i, j) = matrix(i, j).get_num();

    const auto start = std::chrono::steady_clock::now();
    const Int det = (algorithm == "modular") ? det_modular(integral) : det_bareiss(integral);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const std::string digits = det.get_str();
    std::cout << algorithm << " determinant of the WD33 matrix at n=" << n << ": " << digits.size()
              << " digits, " << ms << " ms\n";
    if (digits.size() <= 80)
        std::cout << digits << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for Aztec-type tiling / Delannoy path / "
                 "binomial determinant identities"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "path to the formula catalog (JSON)");

    auto* check = app.add_subcommand("check", "run a verification suite or a single check");
    std::string target = "all";
    std::string json_path;
    SuiteOptions suite_options;
    SingleParams single;
    check->add_option("suite", target,
                      "suite (all, main, conjectures, corollaries, scaling, epilogue, holonomic, "
                      "series, tilings) or single check (main-d, main-h, scaling, epilogue, "
                      "holonomic, series-relation, triple, bijection)");
    std::vector<CLI::Option*> single_flags;
    single_flags.push_back(check->add_option("--m", single.m, "theorem parameter m"));
    single_flags.push_back(check->add_option("--l", single.l, "theorem parameter l (rational)"));
    single_flags.push_back(check->add_option("--a", single.a, "theorem parameter a"));
    single_flags.push_back(check->add_option("--s", single.s, "family parameter s"));
    single_flags.push_back(check->add_option("--r", single.r, "family parameter r"));
    single_flags.push_back(check->add_option("--n", single.n, "size n for single checks"));
    single_flags.push_back(check->add_option("--b", single.b, "KKS parameter b (epilogue)"));
    single_flags.push_back(
        check->add_option("--rho", single.rho, "shift parameter rho (epilogue)"));
    single_flags.push_back(
        check->add_option("--c1", single.c1, "scaling factor c1 (rational)"));
    single_flags.push_back(
        check->add_option("--c2", single.c2, "scaling factor c2 (rational)"));
    single_flags.push_back(check->add_option("--w1", single.w1, "weight w1 (triple check)"));
    single_flags.push_back(check->add_option("--w2", single.w2, "weight w2 (triple check)"));
    single_flags.push_back(check->add_option("--w3", single.w3, "weight w3 (triple check)"));
    single_flags.push_back(
        check->add_option("--truncation", single.truncation, "series truncation order"));
    single_flags.push_back(check->add_option("--matrix", single.matrix,
                                             "matrix id for holonomic checks")
                               ->check(CLI::IsMember({"WH31", "WD33"})));
    check->add_option("--nmax", suite_options.nmax_conjectures,
                      "max n for the conjecture determinants");
    check->add_option("--nmax-main", suite_options.nmax_main, "max n for the theorem grid");
    check->add_option("--nmax-corollaries", suite_options.nmax_corollaries,
                      "max n for the corollary formulas");
    check->add_option("--nmax-tilings", suite_options.nmax_tilings,
                      "max n for the tiling/path/determinant triple");
    check->add_option("--series-instances", suite_options.series_instances,
                      "random instances for the series action checks");
    check->add_option("--seed", suite_options.seed, "seed for randomized checks");
    check->add_option("--cell-cap", suite_options.tiling_options.tiling_cell_cap,
                      "max domain size for tiling enumeration");
    check->add_option("--json", json_path, "write the JSON report to this file");

    auto* table = app.add_subcommand("table", "print exact values of a product formula");
    std::string table_id;
    long table_nmax = 10, table_kappa = 0, table_s = 1;
    table->add_option("id", table_id, "formula id, e.g. WD33 or D-111-11")->required();
    table->add_option("--nmax", table_nmax, "largest n");
    table->add_option("--kappa", table_kappa, "kappa for the kappa family");
    table->add_option("--s", table_s, "s for the L-110 family");

    auto* render = app.add_subcommand("render", "draw a domain (and optionally one tiling)");
    int render_type = 1;
    long render_s = 1, render_r = 1, render_n = 4, render_index = -1;
    std::string svg_path;
    render->add_option("--type", render_type, "domain type: 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    render->add_option("--s", render_s, "family parameter s");
    render->add_option("--r", render_r, "family parameter r");
    render->add_option("--n", render_n, "family parameter n");
    render->add_option("--tiling", render_index, "index of the tiling to draw (enumeration order)");
    render->add_option("--svg", svg_path, "write SVG here instead of ascii to stdout");

    auto* cofactors = app.add_subcommand("cofactors", "normalized last-row cofactors");
    std::string cof_matrix = "WH31";
    long cof_n = 4;
    cofactors->add_option("--matrix", cof_matrix, "WH31 or WD33")
        ->check(CLI::IsMember({"WH31", "WD33"}));
    cofactors->add_option("--n", cof_n, "matrix size");

    auto* bench = app.add_subcommand("bench", "time a determinant of the WD33 matrix");
    std::string bench_algorithm = "modular";
    long bench_n = 40;
    bench->add_option("--det", bench_algorithm, "bareiss or modular")
        ->check(CLI::IsMember({"bareiss", "modular"}));
    bench->add_option("--n", bench_n, "matrix size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            bool single_flags_used = false;
            for (const CLI::Option* opt : single_flags)
                single_flags_used |= opt->count() > 0;
            return run_check(target, suite_options, single, single_flags_used, json_path,
                             catalog_path);
        }
        if (table->parsed())
            return run_table(table_id, table_nmax, table_kappa, table_s, catalog_path);
        if (render->parsed())
            return run_render(render_type, render_s, render_r, render_n, render_index, svg_path);
        if (cofactors->parsed())
            return run_cofactors(cof_matrix, cof_n);
        if (bench->parsed())
            return run_bench(bench_algorithm, bench_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
