#include "ztk/lemmas.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace ztk;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 3;

unsigned resolve_max_prec(unsigned flag_value, bool flag_set) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("ZT_MAX_PREC")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return kDefaultMaxPrec;
}

void parse_range(const std::string& text, unsigned long& lo, unsigned long& hi) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        lo = hi = std::stoul(text);
    } else {
        lo = std::stoul(text.substr(0, pos));
        hi = std::stoul(text.substr(pos + 2));
    }
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--n", "expected 'a..b' with 1 <= a <= b");
}

SeriesKind kind_from_flags(bool alt, bool riemann) {
    if (alt == riemann) throw CLI::ValidationError("kind", "exactly one of --alt/--riemann required");
    return alt ? SeriesKind::alternating : SeriesKind::riemann;
}

void print_endpoint(const char* label, const Rational& v, unsigned digits) {
    std::cout << label << " " << v.str() << " ~ " << v.decimal(digits) << "\n";
}

std::string row_csv(const VerifyRow& r) {
    std::string s = std::to_string(r.n) + "," + parity_name(r.parity) + "," +
                    (r.in_range ? "true" : "false") + "," + r.formula_value.get_str() + "," +
                    (r.oracle_value ? r.oracle_value->get_str() : "indeterminate") + "," +
                    (r.match ? "true" : "false") + "," + std::to_string(r.bits_used);
    return s;
}

ordered_json row_json(const VerifyRow& r) {
    ordered_json j;
    j["n"] = r.n;
    j["parity"] = parity_name(r.parity);
    j["in_range"] = r.in_range;
    j["formula_value"] = r.formula_value.get_str();
    j["oracle_value"] = r.oracle_value ? ordered_json(r.oracle_value->get_str()) : ordered_json();
    j["match"] = r.match;
    j["bits_used"] = r.bits_used;
    return j;
}

int emit_rows(const std::vector<VerifyRow>& rows, const std::string& format) {
    bool all_match = true;
    if (format == "csv") {
        std::cout << "n,parity,in_range,formula_value,oracle_value,match,bits_used\n";
        for (const auto& r : rows) std::cout << row_csv(r) << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : rows)
        if (r.in_range && !r.match) all_match = false;
    return all_match ? kExitOk : kExitFail;
}

void print_side(const LemmaSideReport& rep) {
    std::cout << "  " << side_name(rep.side) << ": difference ("
              << rep.parts.difference.num().str() << ") / (" << rep.parts.difference.den().str()
              << ")\n";
    std::cout << "    numerator raw " << rep.parts.delta_raw.str() << "\n";
    if (rep.parts.common_factor.degree() >= 1)
        std::cout << "    common factor " << rep.parts.common_factor.str() << "\n";
    std::cout << "    numerator reduced " << rep.parts.delta_reduced.str() << "\n";
    std::cout << "    certified from k >= " << rep.min_threshold << " (stated "
              << rep.expected_threshold << "), forms "
              << (rep.matches_expected ? "match" : "MISMATCH") << "\n";
}

int run_lemma(const std::string& id) {
    std::vector<std::pair<unsigned, Parity>> picks;
    if (id == "all") {
        for (unsigned s = 1; s <= 4; ++s) {
            picks.emplace_back(s, Parity::even);
            picks.emplace_back(s, Parity::odd);
        }
    } else {
        if (id.size() < 6 || id[0] != 's' || id[2] != '-')
            throw CLI::ValidationError("--id", "expected s<1..4>-<even|odd> or all");
        unsigned s = static_cast<unsigned>(id[1] - '0');
        std::string par = id.substr(3);
        if (s < 1 || s > 4 || (par != "even" && par != "odd"))
            throw CLI::ValidationError("--id", "expected s<1..4>-<even|odd> or all");
        picks.emplace_back(s, par == "even" ? Parity::even : Parity::odd);
    }
    bool ok = true;
    for (auto [s, parity] : picks) {
        LemmaReport rep = verify_lemma(s, parity);
        std::cout << "lemma s" << s << "-" << parity_name(parity) << ": threshold "
                  << rep.threshold << ", " << (rep.matches_expected ? "certified" : "FAILED")
                  << "\n";
        print_side(rep.right);
        print_side(rep.left);
        ok = ok && rep.matches_expected;
    }
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified zeta tail enclosures, floor formulas, and inequality certificates"};
    app.require_subcommand(1);

    bool alt = false, riemann = false;
    std::string s_text = "1", n_text = "1", format = "csv", formula_id, lemma_id, poly_text,
                parity_text = "even", exp_text = "1/2";
    unsigned long n_single = 1, cap = 100;
    unsigned prec = 64, digits = 30, max_prec = kDefaultMaxPrec;
    bool max_prec_set = false;
    long from_k = 1, prover_cap = kDefaultSearchCap;
    long fib_a = 1, fib_b = 1;

    auto* tail = app.add_subcommand("tail", "enclosure of a zeta tail");
    tail->add_flag("--alt", alt, "alternating series");
    tail->add_flag("--riemann", riemann, "plain series");
    tail->add_option("--s", s_text, "exponent, rational a/b")->required();
    tail->add_option("--n", n_single, "start index");
    tail->add_option("--prec", prec, "target width 2^-prec");
    tail->add_option("--digits", digits, "decimal digits to display");

    auto* floor_cmd = app.add_subcommand("floor", "floor of a reciprocal tail");
    floor_cmd->add_flag("--alt", alt, "alternating series");
    floor_cmd->add_flag("--riemann", riemann, "plain series");
    floor_cmd->add_option("--s", s_text, "exponent, rational a/b")->required();
    floor_cmd->add_option("--n", n_single, "start index")->required();
    floor_cmd->add_option("--max-prec", max_prec, "precision cap in bits")
        ->each([&](const std::string&) { max_prec_set = true; });

    auto* verify = app.add_subcommand("verify", "check formulas and lemmas against oracles");
    verify->require_subcommand(1);
    auto* v_lemma = verify->add_subcommand("lemma", "certify a telescoping lemma");
    v_lemma->add_option("--id", lemma_id, "s<1..4>-<even|odd> or all")->required();
    auto* v_thm = verify->add_subcommand("theorem", "formula vs oracle with containment");
    v_thm->add_option("--id", formula_id, "thm1..thm4")->required();
    v_thm->add_option("--n", n_text, "index range a..b")->required();
    v_thm->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    v_thm->add_option("--max-prec", max_prec, "precision cap in bits")
        ->each([&](const std::string&) { max_prec_set = true; });
    auto* v_formula = verify->add_subcommand("formula", "closed form vs oracle");
    v_formula->add_option("--id", formula_id, "formula name")->required();
    v_formula->add_option("--n", n_text, "index range a..b")->required();
    v_formula->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    v_formula->add_option("--a", fib_a, "recurrence coefficient a");
    v_formula->add_option("--b", fib_b, "recurrence coefficient b");
    v_formula->add_option("--exp", exp_text, "fractional exponent q/p");
    v_formula->add_option("--max-prec", max_prec, "precision cap in bits")
        ->each([&](const std::string&) { max_prec_set = true; });

    auto* prove = app.add_subcommand("prove", "positivity certificate for a polynomial");
    prove->add_option("--poly", poly_text, "coefficients, constant first")->required();
    prove->add_option("--from", from_k, "certify for k >= this");
    prove->add_option("--cap", prover_cap, "shift search cap");

    auto* threshold = app.add_subcommand("threshold", "empirical validity threshold of a formula");
    threshold->add_option("--formula", formula_id, "formula name")->required();
    threshold->add_option("--parity", parity_text, "even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    threshold->add_option("--cap", cap, "largest n scanned");
    threshold->add_option("--a", fib_a, "recurrence coefficient a");
    threshold->add_option("--b", fib_b, "recurrence coefficient b");
    threshold->add_option("--exp", exp_text, "fractional exponent q/p");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const unsigned cap_bits = resolve_max_prec(max_prec, max_prec_set);
        if (tail->parsed()) {
            TailQuery q{kind_from_flags(alt, riemann), Rational::parse(s_text), n_single, prec};
            Interval enc = q.kind == SeriesKind::alternating ? alt_tail_enclosure(q)
                                                             : riemann_tail_enclosure(q);
            std::cout << "tail kind=" << (alt ? "alt" : "riemann") << " s=" << q.s.str()
                      << " n=" << q.n << " prec=" << q.prec << "\n";
            print_endpoint("lo", enc.lo(), digits);
            print_endpoint("hi", enc.hi(), digits);
            std::cout << "decimals truncated toward zero; exact endpoints are authoritative\n";
            return kExitOk;
        }
        if (floor_cmd->parsed()) {
            SeriesKind kind = kind_from_flags(alt, riemann);
            Rational s = Rational::parse(s_text);
            FloorResult r = floor_reciprocal_tail(kind, s, n_single, cap_bits);
            std::cout << "floor kind=" << (alt ? "alt" : "riemann") << " s=" << s.str()
                      << " n=" << n_single << "\n";
            std::cout << "reciprocal in [" << r.reciprocal.lo().str() << ", "
                      << r.reciprocal.hi().str() << "]\n";
            std::cout << "bits_used " << r.bits_used << "\n";
            if (!r.determinate()) {
                std::cout << "floor indeterminate at precision cap " << cap_bits << "\n";
                return kExitIndeterminate;
            }
            std::cout << "floor " << r.value->get_str() << "\n";
            return kExitOk;
        }
        if (v_lemma->parsed()) return run_lemma(lemma_id);
        if (v_thm->parsed()) {
            unsigned long lo = 1, hi = 1;
            parse_range(n_text, lo, hi);
            FormulaId id = formula_from_name(formula_id);
            unsigned s = id == FormulaId::thm1   ? 1
                         : id == FormulaId::thm2 ? 2
                         : id == FormulaId::thm3 ? 3
                         : id == FormulaId::thm4 ? 4
                                                 : 0;
            if (s == 0) throw std::domain_error("verify theorem takes thm1..thm4");
            return emit_rows(verify_theorem(s, lo, hi, cap_bits), format);
        }
        if (v_formula->parsed()) {
            unsigned long lo = 1, hi = 1;
            parse_range(n_text, lo, hi);
            FormulaId id = formula_from_name(formula_id);
            FibParams fp{fib_a, fib_b, 0};
            Rational e = Rational::parse(exp_text);
            KimSongParams ks{static_cast<unsigned long>(mpz_get_ui(e.den().get_mpz_t())),
                             static_cast<unsigned long>(mpz_get_ui(e.num().get_mpz_t()))};
            return emit_rows(verify_formula(id, lo, hi, fp, ks, cap_bits), format);
        }
        if (prove->parsed()) {
            Polynomial p = Polynomial::parse_coeffs(poly_text);
            PositivityCertificate cert = prove_positive(p, from_k, prover_cap);
            std::cout << "positive for all integers k >= " << from_k << "\n" << cert.str();
            return kExitOk;
        }
        if (threshold->parsed()) {
            FormulaId id = formula_from_name(formula_id);
            Parity parity = parity_text == "even" ? Parity::even : Parity::odd;
            FibParams fp{fib_a, fib_b, 0};
            Rational e = Rational::parse(exp_text);
            KimSongParams ks{static_cast<unsigned long>(mpz_get_ui(e.den().get_mpz_t())),
                             static_cast<unsigned long>(mpz_get_ui(e.num().get_mpz_t()))};
            std::cout << "threshold " << find_empirical_threshold(id, parity, cap, fp, ks)
                      << "\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ProverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
