#include "aztec/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aztec/bijection.hpp"
#include "aztec/errors.hpp"
#include "aztec/linalg.hpp"
#include "aztec/paths.hpp"
#include "aztec/series.hpp"
#include "aztec/tilings.hpp"

namespace aztec {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckReport make_report(std::string id, std::string params, std::string lhs, std::string rhs,
                        long millis) {
    CheckReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.status = (r.lhs == r.rhs) ? "pass" : "fail";
    r.millis = millis;
    return r;
}

CheckReport make_report(std::string id, std::string params, const Rat& lhs, const Rat& rhs,
                        long millis) {
    return make_report(std::move(id), std::move(params), rat_to_string(lhs), rat_to_string(rhs),
                       millis);
}

CheckReport make_skipped(std::string id, std::string params, std::string reason) {
    CheckReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.status = "skipped: " + std::move(reason);
    return r;
}

std::string matrix_to_string(const MatQ& m) {
    std::ostringstream out;
    out << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << rat_to_string(m(i, j));
        out << "]";
    }
    out << "]";
    return out.str();
}

Rat half() {
    return rat(1, 2);
}

std::string fmt_params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty())
            out += ",";
        out += key;
        out += "=";
        out += value;
    }
    return out;
}

std::string str(long v) {
    return std::to_string(v);
}

WeightTriple theorem_weights(const Rat& l) {
    return WeightTriple{Rat(1), l - 1, Rat(1)};
}

MatZ to_integer_matrix(const MatQ& a) {
    MatZ m(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).get_den() != 1)
                throw std::invalid_argument("matrix entry is not an integer");
            m(i, j) = a(i, j).get_num();
        }
    return m;
}

} // namespace

void to_json(nlohmann::json& j, const CheckReport& r) {
    j = nlohmann::json{{"id", r.id},   {"params", r.params}, {"status", r.status},
                       {"lhs", r.lhs}, {"rhs", r.rhs},       {"millis", r.millis}};
}

void from_json(const nlohmann::json& j, CheckReport& r) {
    j.at("id").get_to(r.id);
    j.at("params").get_to(r.params);
    j.at("status").get_to(r.status);
    j.at("lhs").get_to(r.lhs);
    j.at("rhs").get_to(r.rhs);
    j.at("millis").get_to(r.millis);
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json j = reports;
    return j.dump(2);
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
    return nlohmann::json::parse(text).get<std::vector<CheckReport>>();
}

KKSParams kks_params_wh31(long n) {
    return KKSParams{4, Rat(2), 2, 1, 2, 0, n};
}

KKSParams kks_params_wd33(long n) {
    return KKSParams{4, Rat(2), 3, 0, 3, 3, n};
}

namespace {

std::vector<CheckReport> check_main(long m, const Rat& l, long a, long n, bool hat,
                                    const CheckOptions& options) {
    if (m < 1 || a < 0 || n < 1)
        throw std::invalid_argument("check_main: need m >= 1, a >= 0, n >= 1");
    const char* base_id = hat ? "main-h" : "main-d";
    const std::string params = fmt_params(
        {{"m", str(m)}, {"l", rat_to_string(l)}, {"a", str(a)}, {"n", str(n)}});

    std::vector<CheckReport> out;
    Stopwatch watch;
    const WeightTriple w = theorem_weights(l);
    const PathFamilyParams family{m - 1, a, n, hat ? PathKind::HDelannoy : PathKind::Delannoy};
    const Rat lgv = det_bareiss(lgv_matrix(family, w));
    const KKSParams kp = hat ? KKSParams{m, l, a + 1, 1, a + 1, a - 1, n}
                             : KKSParams{m, l, a, 0, a, a, n};
    const Rat rhs = hat ? kks_det(kp) : half() * kks_det(kp);
    out.push_back(make_report(base_id, params, lgv, rhs, watch.millis()));

    if (options.include_tilings) {
        const Partition lambda = arithmetic_partition(m - 1, a, n);
        const AztecDomain domain = hat ? aztec_type2(lambda) : aztec_type1(lambda);
        const long cells = static_cast<long>(domain.cells().size());
        const std::string tiling_id = std::string(base_id) + "/tiling";
        if (cells > options.tiling_cell_cap) {
            out.push_back(make_skipped(tiling_id, params,
                                       str(cells) + " cells over cap " +
                                           str(options.tiling_cell_cap)));
        } else {
            Stopwatch tw;
            const Rat tiled = weighted_tiling_count(domain, w,
                                                    EnumerationOptions{options.tiling_cell_cap});
            out.push_back(make_report(tiling_id, params, tiled, lgv, tw.millis()));
        }
    }
    return out;
}

} // namespace

std::vector<CheckReport> check_main_d(long m, const Rat& l, long a, long n,
                                      const CheckOptions& options) {
    return check_main(m, l, a, n, false, options);
}

std::vector<CheckReport> check_main_h(long m, const Rat& l, long a, long n,
                                      const CheckOptions& options) {
    return check_main(m, l, a, n, true, options);
}

std::vector<CheckReport> check_conjectures(const FormulaCatalog& catalog, long n_max) {
    std::vector<CheckReport> out;
    for (long n = 1; n <= n_max; ++n) {
        for (const char* which : {"WH31", "WD33"}) {
            const KKSParams kp = (std::string(which) == "WH31") ? kks_params_wh31(n)
                                                                : kks_params_wd33(n);
            const std::string params = fmt_params({{"n", str(n)}});
            Stopwatch watch;
            const MatQ matrix = kks_matrix(kp);
            const Rat det = det_bareiss(matrix);
            const Rat product = catalog.eval(which, n);
            out.push_back(make_report(std::string("conjecture/") + which, params, det, product,
                                      watch.millis()));
            Stopwatch modular_watch;
            const Int det_crt = det_modular(to_integer_matrix(matrix));
            out.push_back(make_report(std::string("conjecture/") + which + "/modular", params,
                                      Rat(det_crt), det, modular_watch.millis()));
        }
    }
    return out;
}

namespace {

struct CorollaryRow {
    const char* id;
    long m;
    long l;
    long a;
    bool hat;
    bool product_is_det; // catalog value equals the raw determinant, not the count
};

constexpr CorollaryRow kCorollaries[] = {
    {"D-111-10", 2, 2, 0, false, false}, {"D-111-11", 2, 2, 1, false, false},
    {"D-131-11", 2, 4, 1, false, false}, {"D-121-20", 3, 3, 0, false, false},
    {"D-121-21", 3, 3, 1, false, false}, {"D-121-22", 3, 3, 2, false, false},
    {"H-111-10", 2, 2, 0, true, false},  {"H-111-11", 2, 2, 1, true, false},
    {"H-131-10", 2, 4, 0, true, false},  {"WD33", 4, 2, 3, false, true},
    {"WH31", 4, 2, 1, true, false},
};

} // namespace

std::vector<CheckReport> check_corollaries(const FormulaCatalog& catalog, long n_max) {
    std::vector<CheckReport> out;
    for (const CorollaryRow& row : kCorollaries) {
        for (long n = 1; n <= n_max; ++n) {
            const std::string params = fmt_params({{"m", str(row.m)},
                                                   {"l", str(row.l)},
                                                   {"a", str(row.a)},
                                                   {"n", str(n)}});
            Stopwatch watch;
            const WeightTriple w = theorem_weights(Rat(row.l));
            const PathFamilyParams family{row.m - 1, row.a, n,
                                          row.hat ? PathKind::HDelannoy : PathKind::Delannoy};
            const Rat lgv = det_bareiss(lgv_matrix(family, w));
            const KKSParams kp = row.hat
                                     ? KKSParams{row.m, Rat(row.l), row.a + 1, 1, row.a + 1,
                                                 row.a - 1, n}
                                     : KKSParams{row.m, Rat(row.l), row.a, 0, row.a, row.a, n};
            const Rat det = kks_det(kp);
            const Rat count = row.hat ? det : half() * det;
            out.push_back(make_report(std::string("corollary/") + row.id + "/lgv-vs-kks", params,
                                      lgv, count, watch.millis()));
            Stopwatch product_watch;
            const Rat product = catalog.eval(row.id, n);
            out.push_back(make_report(std::string("corollary/") + row.id + "/kks-vs-product",
                                      params, row.product_is_det ? det : count, product,
                                      product_watch.millis()));
        }
    }
    return out;
}

std::vector<CheckReport> check_scaling(long s, long r, long n, const Rat& c1, const Rat& c2,
                                       const Rat& l) {
    if (c1 == 0 || c2 == 0)
        throw std::invalid_argument("check_scaling: c1 and c2 must be nonzero");
    if (s < 0 || r < 0 || n < 1)
        throw std::invalid_argument("check_scaling: need s, r >= 0 and n >= 1");
    const std::string params = fmt_params({{"s", str(s)},
                                           {"r", str(r)},
                                           {"n", str(n)},
                                           {"c1", rat_to_string(c1)},
                                           {"c2", rat_to_string(c2)},
                                           {"l", rat_to_string(l)}});
    const long choose2 = n * (n - 1) / 2;
    const long size_exponent = s * choose2 + r * n;
    const WeightTriple base = theorem_weights(l);
    const WeightTriple scaled{c1, (l - 1) * c2, c1 * c2};

    std::vector<CheckReport> out;
    Stopwatch watch;
    const Rat lhs_d = det_bareiss(lgv_matrix({s, r, n, PathKind::Delannoy}, scaled));
    const Rat rhs_d = pow_rat(c1, size_exponent) * pow_rat(c2, choose2) *
                      det_bareiss(lgv_matrix({s, r, n, PathKind::Delannoy}, base));
    out.push_back(make_report("scaling/delannoy", params, lhs_d, rhs_d, watch.millis()));

    Stopwatch hat_watch;
    const Rat lhs_h = det_bareiss(lgv_matrix({s, r, n, PathKind::HDelannoy}, scaled));
    const Rat rhs_h = pow_rat(c1, size_exponent) * pow_rat(c2, choose2 + n) *
                      det_bareiss(lgv_matrix({s, r, n, PathKind::HDelannoy}, base));
    out.push_back(make_report("scaling/h-delannoy", params, lhs_h, rhs_h, hat_watch.millis()));
    return out;
}

std::vector<CheckReport> check_epilogue(const FormulaCatalog& catalog, long s, long r, long n,
                                        long b, long rho) {
    if (s < 1 || r < 0 || n < 1 || rho < 1)
        throw std::invalid_argument("check_epilogue: need s >= 1, r >= 0, n >= 1, rho >= 1");
    const std::string params = fmt_params(
        {{"s", str(s)}, {"r", str(r)}, {"n", str(n)}, {"b", str(b)}, {"rho", str(rho)}});
    std::vector<CheckReport> out;

    // east/north only: value (s+1)^C(n,2), independent of r
    const Rat product_110 = catalog.eval("L-110", n, FormulaParams{0, s});
    {
        Stopwatch watch;
        const Rat lgv = det_bareiss(lgv_matrix({s, r, n, PathKind::Delannoy},
                                               WeightTriple{Rat(1), Rat(1), Rat(0)}));
        out.push_back(make_report("epilogue/L-110/lgv-vs-product", params, lgv, product_110,
                                  watch.millis()));
    }
    for (long c : {0L, 1L, 2L}) {
        Stopwatch watch;
        const Rat det = half() * kks_det(KKSParams{1, Rat(s + 2), 0, 0, c, c, n});
        out.push_back(make_report("epilogue/L-110/kks-vs-product",
                                  params + ",c=" + str(c), det, product_110, watch.millis()));
    }
    {
        Stopwatch watch;
        const Rat lgv = det_bareiss(lgv_matrix({s, r, n, PathKind::HDelannoy},
                                               WeightTriple{Rat(1), Rat(1), Rat(0)}));
        out.push_back(make_report("epilogue/hL-110/lgv-vs-product", params, lgv, product_110,
                                  watch.millis()));
    }

    // east/northeast only: half of the small KKS determinant
    {
        Stopwatch watch;
        const Rat lgv = det_bareiss(lgv_matrix({s, r, n, PathKind::Delannoy},
                                               WeightTriple{Rat(1), Rat(0), Rat(1)}));
        const Rat small = half() * kks_det(KKSParams{s + 1, Rat(1), r, b, r, r, n});
        out.push_back(make_report("epilogue/L-101/lgv-vs-kks", params, lgv, small,
                                  watch.millis()));
        Stopwatch big_watch;
        const Rat big = kks_det(KKSParams{s + 1, Rat(1), r + 2 * rho, b, r + 2 * rho, r, n});
        out.push_back(make_report("epilogue/L-101/shifted-kks", params, big, small,
                                  big_watch.millis()));
    }
    if (r >= 1) {
        Stopwatch watch;
        const Rat lgv = det_bareiss(lgv_matrix({s, r, n, PathKind::HDelannoy},
                                               WeightTriple{Rat(1), Rat(0), Rat(1)}));
        const Rat small = half() * kks_det(KKSParams{s + 1, Rat(1), r - 1, b, r - 1, r - 1, n});
        out.push_back(make_report("epilogue/hL-101/lgv-vs-kks", params, lgv, small,
                                  watch.millis()));
        Stopwatch big_watch;
        const Rat big =
            kks_det(KKSParams{s + 1, Rat(1), r + 2 * rho - 1, b, r + 2 * rho - 1, r - 1, n});
        out.push_back(make_report("epilogue/hL-101/shifted-kks", params, big, small,
                                  big_watch.millis()));
    } else {
        out.push_back(make_skipped("epilogue/hL-101/lgv-vs-kks", params, "needs r >= 1"));
    }

    // matrix identity: shifting (a, c) by 2*rho multiplies from the right by
    // the banded matrix ((-1)^(j-i) C(2*rho, j-i)) and subtracts the
    // all-ones first column.
    {
        Stopwatch watch;
        const long m = s + 1, a = r;
        const MatQ small = kks_matrix(KKSParams{m, Rat(1), a, b, a, a, n});
        const MatQ big = kks_matrix(KKSParams{m, Rat(1), a + 2 * rho, b, a + 2 * rho, a, n});
        MatQ factor(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const Int binom = binomial(Int(2 * rho), j - i);
                factor(i, j) = ((j - i) % 2 == 0) ? Rat(binom) : Rat(-binom);
            }
        MatQ lhs = small;
        for (long i = 0; i < n; ++i)
            lhs(i, 0) -= 1;
        const MatQ rhs = big * factor;
        out.push_back(make_report("epilogue/shift-matrix-identity", params, matrix_to_string(lhs),
                                  matrix_to_string(rhs), watch.millis()));
    }
    return out;
}

namespace {

std::vector<CheckReport> holonomic_reports(const std::string& label, const MatQ& a,
                                           const Rat& expected_ratio, const std::string& params) {
    std::vector<CheckReport> out;
    const long n = a.rows();
    Stopwatch watch;
    VecQ c;
    try {
        c = normalized_cofactors(a);
    } catch (const std::domain_error&) {
        out.push_back(make_skipped(label + "/H1", params, "corner minor vanishes"));
        return out;
    }
    out.push_back(make_report(label + "/H1", params, c(n - 1), Rat(1), watch.millis()));
    for (long i = 0; i + 1 < n; ++i) {
        Stopwatch row_watch;
        Rat sum(0);
        for (long j = 0; j < n; ++j)
            sum += a(i, j) * c(j);
        out.push_back(make_report(label + "/H2", params + ",i=" + str(i), sum, Rat(0),
                                  row_watch.millis()));
    }
    Stopwatch last_watch;
    Rat sum(0);
    for (long j = 0; j < n; ++j)
        sum += a(n - 1, j) * c(j);
    out.push_back(make_report(label + "/H3", params, sum, expected_ratio, last_watch.millis()));
    return out;
}

} // namespace

std::vector<CheckReport> check_holonomic(const FormulaCatalog& catalog, const std::string& which,
                                         long n) {
    if (which != "WH31" && which != "WD33")
        throw std::invalid_argument("check_holonomic: matrix id must be WH31 or WD33");
    const KKSParams kp = (which == "WH31") ? kks_params_wh31(n) : kks_params_wd33(n);
    return holonomic_reports("holonomic/" + which, kks_matrix(kp), catalog.ratio(which, n),
                             fmt_params({{"n", str(n)}}));
}

std::vector<CheckReport> check_holonomic(const KKSParams& params) {
    KKSParams prev = params;
    prev.n = params.n - 1;
    const Rat ratio = kks_det(params) / kks_det(prev); // empty det at n=0 is 1
    return holonomic_reports("holonomic/custom", kks_matrix(params), ratio,
                             fmt_params({{"matrix", params.describe()}}));
}

CheckReport check_series_relation(long m, const Rat& l, long a, int truncation) {
    if (m < 1 || a < 0)
        throw std::invalid_argument("check_series_relation: need m >= 1 and a >= 0");
    if (truncation < 4)
        throw std::invalid_argument("check_series_relation: truncation too small");
    const std::string params = fmt_params(
        {{"m", str(m)}, {"l", rat_to_string(l)}, {"a", str(a)}, {"N", str(truncation)}});
    Stopwatch watch;

    const int order = truncation;
    DelannoyTable table(theorem_weights(l));
    Series2D path_gf(order, order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            path_gf.at(i, j) = table.delannoy(m * i - j + a, j);

    // beta = 1/((1-v)(1-lv)), alpha = (1 - l v^2) * beta; both constant term 1
    SeriesV denom({Rat(1), Rat(-1) - l, l}, order);
    const SeriesV beta = denom.inverse();
    const SeriesV alpha = SeriesV({Rat(1), Rat(0), -l}, order) * beta;
    const Series2D lhs = scale_v(substitute_v(path_gf, beta), alpha);

    const KKSParams kp{m, l, a, 0, a, a, 1};
    std::string first_lhs = "equal(" + str(order) + "x" + str(order) + ")";
    std::string first_rhs = first_lhs;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            const Rat expected = kks_entry(kp, i, j) - (j == 0 ? Rat(1) : Rat(0));
            if (lhs.at(i, j) != expected) {
                first_lhs = "u^" + str(i) + " v^" + str(j) + ": " + rat_to_string(lhs.at(i, j));
                first_rhs = "u^" + str(i) + " v^" + str(j) + ": " + rat_to_string(expected);
                goto done;
            }
        }
done:
    return make_report("series/path-vs-kks-grid", params, first_lhs, first_rhs, watch.millis());
}

std::vector<CheckReport> check_series_actions(int instances, int block, unsigned seed) {
    if (block < 1 || instances < 1)
        throw std::invalid_argument("check_series_actions: need positive block and count");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto random_rat = [&]() { return rat(num(rng), den(rng)); };

    const int nu = block;
    const int nv = 2 * block; // margin documented by the series tests
    std::vector<CheckReport> out;
    for (int t = 0; t < instances; ++t) {
        Series2D f(nu, nv);
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j)
                f.at(i, j) = random_rat();
        SeriesV alpha = SeriesV::one(nv);
        SeriesV beta = SeriesV::one(nv);
        for (int k = 1; k < nv; ++k) {
            alpha[k] = random_rat();
            beta[k] = random_rat();
        }
        const std::string params = fmt_params({{"t", str(t)}, {"block", str(block)}});

        Stopwatch right_watch;
        const Rat before = det_bareiss(coeff_matrix(f, block));
        const Series2D right = scale_v(substitute_v(f, beta), alpha);
        out.push_back(make_report("series/right-action", params, before,
                                  det_bareiss(coeff_matrix(right, block)), right_watch.millis()));

        Stopwatch left_watch;
        SeriesV alpha_u = alpha.truncated(nu);
        SeriesV beta_u = beta.truncated(nu);
        const Series2D left = scale_u(substitute_u(f, beta_u), alpha_u);
        out.push_back(make_report("series/left-action", params, before,
                                  det_bareiss(coeff_matrix(left, block)), left_watch.millis()));
    }
    return out;
}

std::vector<CheckReport> check_tiling_triple(long s, long r, long n, const WeightTriple& w,
                                             const CheckOptions& options) {
    const Partition lambda = arithmetic_partition(s, r, n);
    const std::string weight_str = "(" + rat_to_string(w.w1) + "," + rat_to_string(w.w2) + "," +
                                   rat_to_string(w.w3) + ")";
    std::vector<CheckReport> out;
    for (bool hat : {false, true}) {
        const char* label = hat ? "triple/type2" : "triple/type1";
        const std::string params = fmt_params(
            {{"s", str(s)}, {"r", str(r)}, {"n", str(n)}, {"w", weight_str}});
        const AztecDomain domain = hat ? aztec_type2(lambda) : aztec_type1(lambda);
        const PathFamilyParams family{s, r, n, hat ? PathKind::HDelannoy : PathKind::Delannoy};

        Stopwatch watch;
        const Rat paths = brute_force_path_count(family, w);
        const Rat det = det_bareiss(lgv_matrix(family, w));
        out.push_back(make_report(std::string(label) + "/paths-vs-det", params, paths, det,
                                  watch.millis()));

        const long cells = static_cast<long>(domain.cells().size());
        if (cells > options.tiling_cell_cap) {
            out.push_back(make_skipped(std::string(label) + "/tilings-vs-paths", params,
                                       str(cells) + " cells over cap"));
        } else {
            Stopwatch tiling_watch;
            const Rat tilings =
                weighted_tiling_count(domain, w, EnumerationOptions{options.tiling_cell_cap});
            out.push_back(make_report(std::string(label) + "/tilings-vs-paths", params, tilings,
                                      paths, tiling_watch.millis()));
        }
    }
    return out;
}

namespace {

std::string serialize_system(const PathSystem& p) {
    std::string out;
    for (const LatticePath& path : p.paths) {
        for (Step s : path.steps)
            out += (s == Step::East) ? 'E' : (s == Step::North ? 'N' : 'D');
        out += '|';
    }
    return out;
}

} // namespace

std::vector<CheckReport> check_bijection(long s, long r, long n, const CheckOptions& options) {
    const Partition lambda = arithmetic_partition(s, r, n);
    std::vector<CheckReport> out;
    for (bool hat : {false, true}) {
        const char* label = hat ? "bijection/type2" : "bijection/type1";
        const std::string params = fmt_params({{"s", str(s)}, {"r", str(r)}, {"n", str(n)}});
        const AztecDomain domain = hat ? aztec_type2(lambda) : aztec_type1(lambda);
        if (static_cast<long>(domain.cells().size()) > options.tiling_cell_cap) {
            out.push_back(make_skipped(std::string(label) + "/steps", params, "domain over cap"));
            continue;
        }
        Stopwatch watch;
        long tiling_count = 0;
        long step_mismatches = 0;
        std::set<std::string> images;
        for_each_tiling(
            domain,
            [&](const Tiling& t) {
                ++tiling_count;
                const PathSystem p = hat ? phi_hat(t, domain) : phi(t, domain);
                if (p.count(Step::East) != t.count(DominoType::D1) ||
                    p.count(Step::North) != t.count(DominoType::D2) ||
                    p.count(Step::NorthEast) != t.count(DominoType::D3))
                    ++step_mismatches;
                images.insert(serialize_system(p));
            },
            EnumerationOptions{options.tiling_cell_cap});
        out.push_back(make_report(std::string(label) + "/steps", params,
                                  "mismatches=" + str(step_mismatches), "mismatches=0",
                                  watch.millis()));
        out.push_back(make_report(std::string(label) + "/injective", params,
                                  str(static_cast<long>(images.size())), str(tiling_count),
                                  watch.millis()));
        Stopwatch card_watch;
        const PathFamilyParams family{s, r, n, hat ? PathKind::HDelannoy : PathKind::Delannoy};
        const long systems = static_cast<long>(enumerate_path_systems(family).size());
        out.push_back(make_report(std::string(label) + "/cardinality", params, str(tiling_count),
                                  str(systems), card_watch.millis()));
    }
    return out;
}

namespace {

void append(std::vector<CheckReport>& into, std::vector<CheckReport> more) {
    for (CheckReport& r : more)
        into.push_back(std::move(r));
}

std::vector<CheckReport> suite_main(const SuiteOptions& options) {
    std::vector<CheckReport> out;
    for (long m = 1; m <= 4; ++m)
        for (long l = 0; l <= 4; ++l)
            for (long a = 0; a <= 3; ++a)
                for (long n = 1; n <= options.nmax_main; ++n) {
                    append(out, check_main_d(m, Rat(l), a, n, options.tiling_options));
                    append(out, check_main_h(m, Rat(l), a, n, options.tiling_options));
                }
    return out;
}

std::vector<CheckReport> suite_scaling() {
    std::vector<CheckReport> out;
    append(out, check_scaling(1, 1, 3, rat(2), rat(3)));
    append(out, check_scaling(2, 0, 2, rat(-1), rat(1)));
    append(out, check_scaling(1, 1, 4, rat(1), rat(1)));
    append(out, check_scaling(2, 1, 3, rat(1, 2), rat(3), rat(3)));
    append(out, check_scaling(0, 2, 3, rat(5), rat(-1, 2), rat(0)));
    return out;
}

std::vector<CheckReport> suite_epilogue(const FormulaCatalog& catalog,
                                        const SuiteOptions& options) {
    std::vector<CheckReport> out;
    for (long s = 1; s <= 3; ++s)
        for (long r = 0; r <= 3; ++r)
            for (long n = 1; n <= options.nmax_epilogue; ++n)
                for (long rho = 1; rho <= 2; ++rho)
                    append(out, check_epilogue(catalog, s, r, n, 0, rho));
    append(out, check_epilogue(catalog, 1, 1, 3, 5, 2));
    return out;
}

std::vector<CheckReport> suite_holonomic(const FormulaCatalog& catalog,
                                         const SuiteOptions& options) {
    std::vector<CheckReport> out;
    for (long n = 1; n <= options.nmax_holonomic; ++n) {
        append(out, check_holonomic(catalog, "WH31", n));
        append(out, check_holonomic(catalog, "WD33", n));
    }
    return out;
}

std::vector<CheckReport> suite_series(const SuiteOptions& options) {
    std::vector<CheckReport> out;
    append(out, check_series_actions(options.series_instances, options.series_block,
                                     options.seed));
    for (long m = 1; m <= 3; ++m)
        for (long l = 1; l <= 3; ++l)
            for (long a = 0; a <= 2; ++a)
                out.push_back(check_series_relation(m, Rat(l), a, 12));
    return out;
}

std::vector<CheckReport> suite_tilings(const FormulaCatalog& catalog,
                                       const SuiteOptions& options) {
    const std::vector<WeightTriple> weights = {
        {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(0)},
        {Rat(2), Rat(1), Rat(1)}, {Rat(1), Rat(-1), Rat(1)},
    };
    std::vector<CheckReport> out;
    for (long s = 0; s <= 2; ++s)
        for (long r = 0; r <= 2; ++r)
            for (long n = 1; n <= options.nmax_tilings; ++n) {
                for (const WeightTriple& w : weights)
                    append(out, check_tiling_triple(s, r, n, w, options.tiling_options));
                append(out, check_bijection(s, r, n, options.tiling_options));
            }

    // the staircase instance: 3328 tilings, pinned against the product value
    {
        Stopwatch watch;
        CheckOptions big = options.tiling_options;
        big.tiling_cell_cap = std::max(big.tiling_cell_cap, 44L);
        const AztecDomain domain = aztec_type1(arithmetic_partition(1, 1, 4));
        const Rat count = weighted_tiling_count(domain, unit_weights(),
                                                EnumerationOptions{big.tiling_cell_cap});
        out.push_back(make_report("triple/staircase-n4/tilings-vs-product",
                                  fmt_params({{"s", "1"}, {"r", "1"}, {"n", "4"}}), count,
                                  catalog.eval("DF", 4), watch.millis()));
        Stopwatch det_watch;
        const Rat det = det_bareiss(lgv_matrix({1, 1, 4, PathKind::Delannoy}, unit_weights()));
        out.push_back(make_report("triple/staircase-n4/det-vs-product",
                                  fmt_params({{"s", "1"}, {"r", "1"}, {"n", "4"}}), det,
                                  catalog.eval("DF", 4), det_watch.millis()));
    }
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"main", "conjectures", "corollaries", "scaling",
            "epilogue", "holonomic", "series", "tilings"};
}

std::vector<CheckReport> run_suite(const std::string& name, const FormulaCatalog& catalog,
                                   const SuiteOptions& options) {
    std::vector<CheckReport> out;
    if (name == "main" || name == "all")
        append(out, suite_main(options));
    if (name == "conjectures" || name == "all")
        append(out, check_conjectures(catalog, options.nmax_conjectures));
    if (name == "corollaries" || name == "all")
        append(out, check_corollaries(catalog, options.nmax_corollaries));
    if (name == "scaling" || name == "all")
        append(out, suite_scaling());
    if (name == "epilogue" || name == "all")
        append(out, suite_epilogue(catalog, options));
    if (name == "holonomic" || name == "all")
        append(out, suite_holonomic(catalog, options));
    if (name == "series" || name == "all")
        append(out, suite_series(options));
    if (name == "tilings" || name == "all")
        append(out, suite_tilings(catalog, options));
    if (out.empty()) {
        const auto names = suite_names();
        bool known = std::find(names.begin(), names.end(), name) != names.end() || name == "all";
        if (!known)
            throw std::invalid_argument("unknown suite: " + name);
    }
    // deterministic report order regardless of how the checks ran
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         return std::tie(a.id, a.params) < std::tie(b.id, b.params);
                     });
    return out;
}

} // namespace aztec
