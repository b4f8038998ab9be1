#include "aztec/formulas.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef AZTEC_DEFAULT_CATALOG
#define AZTEC_DEFAULT_CATALOG "data/formulas.json"
#endif

namespace aztec {

Rat LinForm::eval(long i, long n, long kappa, long s) const {
    return ci * i + cn * n + ck * kappa + cs * s + c0;
}

namespace {

struct Scanner {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }
    long number() {
        skip_ws();
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
            ++end;
        if (end == pos)
            throw std::invalid_argument("LinForm: expected number in '" + text + "'");
        long value = std::stol(text.substr(pos, end - pos));
        pos = end;
        return value;
    }
    std::string ident() {
        skip_ws();
        std::size_t end = pos;
        while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end])))
            ++end;
        std::string s = text.substr(pos, end - pos);
        pos = end;
        return s;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
};

void add_var(LinForm& f, const std::string& var, const Rat& coeff, const std::string& text) {
    if (var == "i")
        f.ci += coeff;
    else if (var == "n")
        f.cn += coeff;
    else if (var == "kappa")
        f.ck += coeff;
    else if (var == "s")
        f.cs += coeff;
    else
        throw std::invalid_argument("LinForm: unknown variable '" + var + "' in '" + text + "'");
}

// sum := term (('+'|'-') term)*;  term := num ['*' var] | var
LinForm parse_sum(Scanner& sc) {
    LinForm f;
    long sign = 1;
    if (sc.eat('-'))
        sign = -1;
    for (;;) {
        if (sc.peek_digit()) {
            Rat coeff = rat(sign * sc.number());
            if (sc.eat('*')) {
                add_var(f, sc.ident(), coeff, sc.text);
            } else {
                f.c0 += coeff;
            }
        } else {
            add_var(f, sc.ident(), rat(sign), sc.text);
        }
        if (sc.eat('+'))
            sign = 1;
        else if (sc.eat('-'))
            sign = -1;
        else
            break;
    }
    return f;
}

} // namespace

LinForm LinForm::parse(const std::string& text) {
    Scanner sc{text};
    LinForm f;
    if (sc.eat('(')) {
        f = parse_sum(sc);
        if (!sc.eat(')'))
            throw std::invalid_argument("LinForm: missing ')' in '" + text + "'");
    } else {
        f = parse_sum(sc);
    }
    if (sc.eat('/')) {
        const Rat d = rat(1, sc.number());
        f.ci *= d;
        f.cn *= d;
        f.ck *= d;
        f.cs *= d;
        f.c0 *= d;
    }
    if (!sc.done())
        throw std::invalid_argument("LinForm: trailing input in '" + text + "'");
    return f;
}

namespace {

long as_integer(const Rat& q, const std::string& what) {
    if (q.get_den() != 1)
        throw std::domain_error(what + " is not an integer: " + rat_to_string(q));
    if (!q.get_num().fits_slong_p())
        throw std::overflow_error(what + " out of range");
    return q.get_num().get_si();
}

std::vector<GammaArg> gamma_args(const std::vector<LinForm>& forms, long i, long n,
                                 const FormulaParams& p) {
    std::vector<GammaArg> out;
    out.reserve(forms.size());
    for (const LinForm& f : forms)
        out.emplace_back(f.eval(i, n, p.kappa, p.s));
    return out;
}

} // namespace

Rat eval_formula(const ProductFormula& f, long n, const FormulaParams& params) {
    if (n < 0)
        throw std::invalid_argument("eval_formula: n must be nonnegative");
    if (n == 0)
        return Rat(1); // empty product
    Rat result(1);
    for (const PowerTerm& p : f.powers) {
        const Rat base = p.base.eval(0, n, params.kappa, params.s);
        const long e = as_integer(p.qa * n * n + p.qb * n + p.qc,
                                  "power exponent of formula " + f.id);
        result *= pow_rat(base, e);
    }
    if (!f.prefactor_gamma_numer.empty() || !f.prefactor_gamma_denom.empty())
        result *= gamma_ratio_product(gamma_args(f.prefactor_gamma_numer, 0, n, params),
                                      gamma_args(f.prefactor_gamma_denom, 0, n, params));

    std::vector<GammaArg> numer, denom;
    for (long i = 1; i <= n; ++i) {
        for (const GammaArg& g : gamma_args(f.gamma_numer, i, n, params))
            numer.push_back(g);
        for (const GammaArg& g : gamma_args(f.gamma_denom, i, n, params))
            denom.push_back(g);
        for (const LinForm& r : f.rational_numer)
            result *= r.eval(i, n, params.kappa, params.s);
        for (const LinForm& r : f.rational_denom) {
            const Rat value = r.eval(i, n, params.kappa, params.s);
            if (value == 0)
                throw PoleError("rational factor vanishes in formula " + f.id);
            result /= value;
        }
    }
    result *= gamma_ratio_product(numer, denom);
    return result;
}

namespace {

std::vector<LinForm> parse_forms(const nlohmann::json& j, const char* key) {
    std::vector<LinForm> out;
    if (!j.contains(key))
        return out;
    for (const auto& item : j.at(key))
        out.push_back(LinForm::parse(item.get<std::string>()));
    return out;
}

} // namespace

FormulaCatalog FormulaCatalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open formula catalog: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    FormulaCatalog catalog;
    for (const auto& j : doc.at("formulas")) {
        ProductFormula f;
        f.id = j.at("id").get<std::string>();
        f.note = j.value("note", "");
        if (j.contains("powers")) {
            for (const auto& pj : j.at("powers")) {
                PowerTerm p;
                p.base = LinForm::parse(pj.at("base").get<std::string>());
                const auto& e = pj.at("exponent");
                p.qa = rat_from_string(e.at(0).get<std::string>());
                p.qb = rat_from_string(e.at(1).get<std::string>());
                p.qc = rat_from_string(e.at(2).get<std::string>());
                f.powers.push_back(std::move(p));
            }
        }
        f.prefactor_gamma_numer = parse_forms(j, "prefactor_gamma_numer");
        f.prefactor_gamma_denom = parse_forms(j, "prefactor_gamma_denom");
        f.gamma_numer = parse_forms(j, "gamma_numer");
        f.gamma_denom = parse_forms(j, "gamma_denom");
        f.rational_numer = parse_forms(j, "rational_numer");
        f.rational_denom = parse_forms(j, "rational_denom");
        if (!catalog.formulas_.emplace(f.id, f).second)
            throw std::runtime_error("duplicate formula id: " + f.id);
    }

    // Fail fast on mis-transcribed entries: every formula must evaluate
    // cleanly (positive arguments, pairable classes) on a leading range.
    for (const auto& [id, f] : catalog.formulas_)
        for (long n = 1; n <= 16; ++n)
            (void)eval_formula(f, n, FormulaParams{});
    return catalog;
}

FormulaCatalog FormulaCatalog::load_default() {
    if (const char* env = std::getenv("AZTEC_CATALOG"))
        return load(env);
    return load(AZTEC_DEFAULT_CATALOG);
}

const ProductFormula& FormulaCatalog::get(const std::string& id) const {
    auto it = formulas_.find(id);
    if (it == formulas_.end())
        throw std::out_of_range("unknown formula id: " + id);
    return it->second;
}

std::vector<std::string> FormulaCatalog::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, f] : formulas_)
        out.push_back(id);
    return out;
}

Rat FormulaCatalog::eval(const std::string& id, long n, const FormulaParams& params) const {
    return eval_formula(get(id), n, params);
}

Rat FormulaCatalog::ratio(const std::string& id, long n, const FormulaParams& params) const {
    return eval(id, n, params) / eval(id, n - 1, params);
}

} // namespace aztec
