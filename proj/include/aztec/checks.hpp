#pragma once

/**
 * @file checks.hpp
 * @brief The verification suite: every identity of interest as an exact
 *        left = right comparison producing a CheckReport.
 */

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "aztec/formulas.hpp"
#include "aztec/kks.hpp"
#include "aztec/weights.hpp"

namespace aztec {

/// One verified equality. status is "pass", "fail", or "skipped: <reason>";
/// pass holds exactly when lhs and rhs are identical strings of exact values.
struct CheckReport {
    std::string id;
    std::string params;
    std::string status;
    std::string lhs;
    std::string rhs;
    long millis = 0;

    bool passed() const { return status == "pass"; }
    bool skipped() const { return status.rfind("skipped", 0) == 0; }
};

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(const std::string& text);

struct CheckOptions {
    bool include_tilings = true;
    long tiling_cell_cap = 80;
};

/// det LGV(s=m-1, r=a, Delannoy, (1, l-1, 1)) = (1/2) B^{(m,l)}_{a,0,a,a}(n),
/// plus the tiling route when the domain is under the cap.
std::vector<CheckReport> check_main_d(long m, const Rat& l, long a, long n,
                                      const CheckOptions& options = {});

/// H-Delannoy analogue against B^{(m,l)}_{a+1,1,a+1,a-1}(n); no 1/2 factor.
std::vector<CheckReport> check_main_h(long m, const Rat& l, long a, long n,
                                      const CheckOptions& options = {});

/// The two conjectural product formulas, checked for 1 <= n <= n_max by
/// exact determinants, with a Bareiss/modular cross-check.
std::vector<CheckReport> check_conjectures(const FormulaCatalog& catalog, long n_max);

/// Nine corollary product formulas (plus the two conjectural ones):
/// LGV determinant = (1/2 or 1) KKS determinant = product formula.
std::vector<CheckReport> check_corollaries(const FormulaCatalog& catalog, long n_max);

/// Weight rescaling identities via LGV determinants: scaling (w1, w3) by c1
/// and (w2, w3) by c2 multiplies the count by c1^(s C(n,2) + r n) * c2^C(n,2)
/// (Delannoy) or c1^(...) * c2^(C(n,2)+n) (H-Delannoy). Base weights (1, l-1, 1).
std::vector<CheckReport> check_scaling(long s, long r, long n, const Rat& c1, const Rat& c2,
                                       const Rat& l = Rat(2));

/// East/north and east/northeast specializations plus the half-determinant
/// shift identity and its factor-matrix form.
std::vector<CheckReport> check_epilogue(const FormulaCatalog& catalog, long s, long r, long n,
                                        long b, long rho);

/// (H1), (H2), (H3) for a named matrix ("WH31" or "WD33"); (H3) is compared
/// against the catalog ratio.
std::vector<CheckReport> check_holonomic(const FormulaCatalog& catalog, const std::string& which,
                                         long n);

/// Same relations for arbitrary parameters; (H3) against a direct
/// determinant ratio.
std::vector<CheckReport> check_holonomic(const KKSParams& params);

/// Coefficientwise identity between the substituted/scaled path generating
/// function and the KKS entry grid minus the geometric column.
CheckReport check_series_relation(long m, const Rat& l, long a, int truncation);

/// Determinant invariance of coefficient matrices under the v- (or u-)
/// substitution and scaling action, on seeded random instances.
std::vector<CheckReport> check_series_actions(int instances, int block, unsigned seed);

/// weighted_tiling_count = brute_force_path_count = LGV determinant for one
/// family and weight triple, both domain types.
std::vector<CheckReport> check_tiling_triple(long s, long r, long n, const WeightTriple& w,
                                             const CheckOptions& options = {});

/// Step-count preservation and bijectivity of the tiling-to-path maps.
std::vector<CheckReport> check_bijection(long s, long r, long n, const CheckOptions& options = {});

/// Named KKS parameter sets for the two conjectural determinants.
KKSParams kks_params_wh31(long n);
KKSParams kks_params_wd33(long n);

struct SuiteOptions {
    long nmax_main = 5;
    long nmax_conjectures = 12;
    long nmax_corollaries = 8;
    long nmax_holonomic = 6;
    long nmax_epilogue = 5;
    long nmax_tilings = 3;
    int series_instances = 20;
    int series_block = 5;
    unsigned seed = 20250810;
    CheckOptions tiling_options{true, 60};
};

std::vector<std::string> suite_names();

/// Run a named suite ("all" runs everything).
std::vector<CheckReport> run_suite(const std::string& name, const FormulaCatalog& catalog,
                                   const SuiteOptions& options = {});

} // namespace aztec
