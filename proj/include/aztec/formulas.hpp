#pragma once

/**
 * @file formulas.hpp
 * @brief Catalog of product formulas as structured data, exactly evaluable
 *        at any n. Entries are read from a JSON data file; each consists of
 *        power-of-constant prefactors, optional Gamma ratios in n, and
 *        per-index Gamma/rational factor lists.
 */

#include <map>
#include <string>
#include <vector>

#include "aztec/arith.hpp"

namespace aztec {

/// Linear form ci*i + cn*n + ck*kappa + cs*s + c0 with rational
/// coefficients, used both for Gamma arguments and rational factors.
struct LinForm {
    Rat ci{0}, cn{0}, ck{0}, cs{0}, c0{0};

    Rat eval(long i, long n, long kappa, long s) const;

    /// Parses e.g. "i", "2*i", "4*i-3", "(3*i-1)/2", "n+2*i", "s+1".
    static LinForm parse(const std::string& text);
};

/// base ^ (qa n^2 + qb n + qc); the exponent must be integer-valued at
/// every integer n (checked at evaluation time).
struct PowerTerm {
    LinForm base; // evaluated with i = 0
    Rat qa{0}, qb{0}, qc{0};
};

struct ProductFormula {
    std::string id;
    std::string note;
    std::vector<PowerTerm> powers;
    std::vector<LinForm> prefactor_gamma_numer; // Gamma ratio in n alone
    std::vector<LinForm> prefactor_gamma_denom;
    std::vector<LinForm> gamma_numer; // per product index i = 1..n
    std::vector<LinForm> gamma_denom;
    std::vector<LinForm> rational_numer;
    std::vector<LinForm> rational_denom;
};

/// Extra parameters for the parameterized entries ("kappa", "L-110").
struct FormulaParams {
    long kappa = 0;
    long s = 1;
};

class FormulaCatalog {
public:
    /// Load and validate a catalog: every entry must evaluate to a pairable,
    /// pole-free product for 1 <= n <= 16 at the default parameters.
    static FormulaCatalog load(const std::string& path);

    /// AZTEC_CATALOG env var, else the build-time default data file.
    static FormulaCatalog load_default();

    const ProductFormula& get(const std::string& id) const;
    std::vector<std::string> ids() const;

    /// Exact value at n >= 1; n = 0 gives the empty product 1.
    Rat eval(const std::string& id, long n, const FormulaParams& params = {}) const;

    /// eval(id, n) / eval(id, n-1).
    Rat ratio(const std::string& id, long n, const FormulaParams& params = {}) const;

private:
    std::map<std::string, ProductFormula> formulas_;
};

Rat eval_formula(const ProductFormula& f, long n, const FormulaParams& params = {});

} // namespace aztec
