// Acceptance suite: one line per criterion, exact comparisons throughout.
// Exit code equals the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "aztec/checks.hpp"
#include "aztec/kks.hpp"
#include "aztec/linalg.hpp"
#include "aztec/paths.hpp"
#include "aztec/tilings.hpp"

using namespace aztec;

namespace {

struct Criterion {
    int number;
    std::string description;
    long budget_ms;
    std::function<std::vector<CheckReport>()> run;
};

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void append(std::vector<CheckReport>& into, std::vector<CheckReport> more) {
    for (CheckReport& r : more)
        into.push_back(std::move(r));
}

CheckReport equality_report(std::string id, std::string params, const Rat& lhs, const Rat& rhs) {
    CheckReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.lhs = rat_to_string(lhs);
    r.rhs = rat_to_string(rhs);
    r.status = (r.lhs == r.rhs) ? "pass" : "fail";
    return r;
}

} // namespace

int main() {
    const FormulaCatalog catalog = FormulaCatalog::load_default();
    const CheckOptions tiling_options{true, 80};

    std::vector<Criterion> criteria;

    criteria.push_back({1,
                        "conjectured determinants equal their Gamma products for n <= 12, "
                        "Bareiss and modular routes agreeing",
                        10'000,
                        [&] { return check_conjectures(catalog, 12); }});

    criteria.push_back({2,
                        "nine corollary formulas: LGV det = (1/2) KKS det = product for n <= 8",
                        30'000,
                        [&] { return check_corollaries(catalog, 8); }});

    criteria.push_back({3,
                        "LGV det vs KKS det over the full (m, l, a) grid, n <= 5",
                        60'000,
                        [&] {
                            std::vector<CheckReport> out;
                            const CheckOptions dets_only{false, 0};
                            for (long m = 1; m <= 4; ++m)
                                for (long l = 0; l <= 4; ++l)
                                    for (long a = 0; a <= 3; ++a)
                                        for (long n = 1; n <= 5; ++n) {
                                            append(out, check_main_d(m, Rat(l), a, n, dets_only));
                                            append(out, check_main_h(m, Rat(l), a, n, dets_only));
                                        }
                            return out;
                        }});

    criteria.push_back({4,
                        "tiling = path = determinant triple on the s, r <= 2, n <= 3 grid "
                        "(5 weight triples), plus the 3328-tiling staircase at n = 4",
                        300'000,
                        [&] {
                            std::vector<CheckReport> out;
                            const std::vector<WeightTriple> weights = {
                                {rat(1), rat(1), rat(1)},
                                {rat(1), rat(0), rat(1)},
                                {rat(1), rat(1), rat(0)},
                                {rat(2), rat(1), rat(1)},
                                {rat(1), rat(-1), rat(1)},
                            };
                            for (long s = 0; s <= 2; ++s)
                                for (long r = 0; r <= 2; ++r)
                                    for (long n = 1; n <= 3; ++n)
                                        for (const WeightTriple& w : weights)
                                            append(out,
                                                   check_tiling_triple(s, r, n, w,
                                                                       tiling_options));
                            const AztecDomain staircase =
                                aztec_type1(arithmetic_partition(1, 1, 4));
                            const Rat tilings = weighted_tiling_count(staircase, unit_weights());
                            out.push_back(equality_report("staircase-n4/count", "s=1,r=1,n=4",
                                                          tilings, rat(3328)));
                            out.push_back(equality_report("staircase-n4/product", "s=1,r=1,n=4",
                                                          tilings, catalog.eval("DF", 4)));
                            out.push_back(equality_report(
                                "staircase-n4/lgv", "s=1,r=1,n=4", tilings,
                                det_bareiss(lgv_matrix({1, 1, 4, PathKind::Delannoy},
                                                       unit_weights()))));
                            return out;
                        }});

    criteria.push_back({5,
                        "bijections preserve step counts and are bijective on the same grid",
                        300'000,
                        [&] {
                            std::vector<CheckReport> out;
                            for (long s = 0; s <= 2; ++s)
                                for (long r = 0; r <= 2; ++r)
                                    for (long n = 1; n <= 3; ++n)
                                        append(out, check_bijection(s, r, n, tiling_options));
                            append(out, check_bijection(1, 1, 4, tiling_options));
                            return out;
                        }});

    criteria.push_back({6,
                        "holonomic relations (H1), (H2), (H3) for WH31 and WD33 at n <= 6",
                        60'000,
                        [&] {
                            std::vector<CheckReport> out;
                            for (long n = 1; n <= 6; ++n) {
                                append(out, check_holonomic(catalog, "WH31", n));
                                append(out, check_holonomic(catalog, "WD33", n));
                            }
                            return out;
                        }});

    criteria.push_back({7,
                        "series lemmas: 50 randomized action invariances and the "
                        "path-to-KKS grid identity at truncation 12",
                        120'000,
                        [&] {
                            std::vector<CheckReport> out;
                            append(out, check_series_actions(50, 6, 20250810));
                            for (long m = 1; m <= 3; ++m)
                                for (long l = 1; l <= 3; ++l)
                                    for (long a = 0; a <= 2; ++a)
                                        out.push_back(
                                            check_series_relation(m, Rat(l), a, 12));
                            return out;
                        }});

    criteria.push_back({8,
                        "epilogue identities over s <= 3, r <= 3, n <= 5, rho <= 2",
                        120'000,
                        [&] {
                            std::vector<CheckReport> out;
                            for (long s = 1; s <= 3; ++s)
                                for (long r = 0; r <= 3; ++r)
                                    for (long n = 1; n <= 5; ++n)
                                        for (long rho = 1; rho <= 2; ++rho)
                                            append(out,
                                                   check_epilogue(catalog, s, r, n, 0, rho));
                            append(out, check_epilogue(catalog, 1, 1, 3, 5, 2));
                            return out;
                        }});

    criteria.push_back({9,
                        "modular and Bareiss determinants agree on the WD33 matrix at n = 40",
                        60'000,
                        [&] {
                            const MatQ matrix = kks_matrix(kks_params_wd33(40));
                            MatZ integral(matrix.rows(), matrix.cols());
                            for (Eigen::Index i = 0; i < matrix.rows(); ++i)
                                for (Eigen::Index j = 0; j < matrix.cols(); ++j)
                                    integral(i, j) = matrix(i, j).get_num();
                            const Int modular = det_modular(integral);
                            const Int bareiss = det_bareiss(integral);
                            std::vector<CheckReport> out;
                            out.push_back(equality_report("wd33-n40/modular-vs-bareiss", "n=40",
                                                          Rat(modular), Rat(bareiss)));
                            return out;
                        }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        const long start = now_ms();
        std::vector<CheckReport> reports;
        std::string error;
        try {
            reports = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const long elapsed = now_ms() - start;

        long failed = 0, skipped = 0;
        std::vector<std::string> failing_ids;
        for (const CheckReport& r : reports) {
            if (r.skipped()) {
                ++skipped;
            } else if (!r.passed()) {
                ++failed;
                if (failing_ids.size() < 5)
                    failing_ids.push_back(r.id + "[" + r.params + "] lhs=" + r.lhs +
                                          " rhs=" + r.rhs);
            }
        }
        const bool in_budget = elapsed <= c.budget_ms;
        const bool ok = error.empty() && failed == 0 && in_budget;
        if (!ok)
            ++failures;

        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.description
                  << " [" << reports.size() << " checks";
        if (skipped > 0)
            std::cout << ", " << skipped << " skipped";
        std::cout << ", " << elapsed << " ms, budget " << c.budget_ms << " ms]\n";
        if (!error.empty())
            std::cout << "     error: " << error << "\n";
        if (!in_budget)
            std::cout << "     over budget\n";
        for (const std::string& id : failing_ids)
            std::cout << "     failed: " << id << "\n";
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                              " criteria failed")
              << "\n";
    return failures;
}
