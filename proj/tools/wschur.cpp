// wschur: exact weighted Schur function calculator.
//
// Subcommands: schur (render one function), expand (basis expansions and
// structure constants), restrict (fixed-point restriction tables), verify
// (identity sweeps). All output is deterministic for a fixed invocation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wschur/errors.hpp"
#include "wschur/parallel.hpp"
#include "wschur/serialize.hpp"

using namespace wschur;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternalDivision = 3;
constexpr int kExitNotInSpan = 4;
constexpr int kExitMembership = 5;

struct SchurOptions {
    int d = 2;
    std::string lambda;
    std::string variant = "factorial";
    std::string form = "tableaux";
    std::string format = "text";
};

struct ExpandOptions {
    int d = 2;
    std::string lambda;
    std::string mu = "0";
    std::string basis = "factorial";
    std::string route = "interpolate";
    std::string format = "json";
};

struct RestrictOptions {
    int d = 2;
    int n = 4;
    std::vector<long long> itw;
    long long u = 2;
    std::string format = "csv";
    std::string output;
};

struct VerifyOptions {
    std::string suite;
    int d = 2;
    int max_size = -1; // suite-specific default when negative
    int n = 4;
    std::vector<long long> itw = {1, 0, 2, 1};
    long long u = 2;
};

WeightConfig make_config(int d, int n, std::vector<long long> itw, long long u) {
    WeightConfig cfg{d, n, std::move(itw), u};
    cfg.validate();
    return cfg;
}

int run_schur(const SchurOptions& opt) {
    Partition lambda = Partition::parse(opt.d, opt.lambda);
    const bool det_form = opt.form == "det";

    auto base = [&](SchurAlphabet alphabet) {
        return det_form ? factorial_schur_det(lambda, alphabet)
                        : factorial_schur_tableaux(lambda, alphabet);
    };

    Json json;
    std::string text;
    if (opt.variant == "factorial") {
        Polynomial p = base(SchurAlphabet::A);
        text = p.to_string();
        json = to_json(p);
    } else if (opt.variant == "ordinary") {
        Polynomial p = base(SchurAlphabet::Zero);
        text = p.to_string();
        json = to_json(p);
    } else if (opt.variant == "weighted" || opt.variant == "weighted-factorial") {
        const bool with_a = opt.variant == "weighted-factorial";
        LocalizedElem e =
            substitute(base(SchurAlphabet::A), [&](VarId v) -> std::optional<LocalizedElem> {
                if (v.family == VarFamily::X) return x_shifted(v.index, opt.d);
                if (v.family == VarFamily::A)
                    return with_a ? a_shifted(v.index, opt.d) : zero_shifted(v.index, opt.d);
                return std::nullopt;
            });
        e = e.normalized();
        text = e.to_string();
        json = to_json(e);
    } else {
        throw std::invalid_argument("unknown variant " + opt.variant);
    }

    if (opt.format == "json")
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text << "\n";
    return 0;
}

int run_expand(const ExpandOptions& opt) {
    Partition lambda = Partition::parse(opt.d, opt.lambda);
    Partition mu = Partition::parse(opt.d, opt.mu);

    ExpansionResult result;
    if (opt.basis == "factorial") {
        result = structure_constants(lambda, mu);
    } else {
        const bool with_a = opt.basis == "weighted-factorial";
        if (!with_a && opt.basis != "weighted")
            throw std::invalid_argument("unknown basis " + opt.basis);
        ExpansionBasis basis =
            with_a ? ExpansionBasis::WeightedFactorial : ExpansionBasis::Weighted;
        if (opt.route == "pieri") {
            result = weighted_expand_pieri(shifted_ms_form(lambda, mu, !with_a, !with_a),
                                           opt.d, basis);
        } else {
            LocalizedElem product =
                with_a ? weighted_factorial_schur(lambda) * weighted_factorial_schur(mu)
                       : weighted_schur(lambda) * weighted_schur(mu);
            result = weighted_expand_interpolate(product, opt.d,
                                                 lambda.size() + mu.size(), basis);
        }
    }

    if (opt.format == "text") {
        for (const auto& [nu, value] : result.coefficients)
            std::cout << nu.to_string() << ": " << value.to_string() << "\n";
        std::cout << "residualZero: " << (result.residual_zero ? "true" : "false") << "\n";
    } else {
        std::cout << to_json(result).dump(2) << "\n";
    }
    return result.residual_zero ? 0 : kExitNotInSpan;
}

int run_restrict(const RestrictOptions& opt) {
    WeightConfig cfg = make_config(opt.d, opt.n, opt.itw, opt.u);
    RestrictionTable table = build_table(cfg);

    std::string rendered;
    if (opt.format == "json")
        rendered = to_json(table).dump(2) + "\n";
    else
        rendered = table_to_csv(table);

    if (opt.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::invalid_argument("cannot open output file " + opt.output);
        out << rendered;
    }

    CheckReport invariants = check_table_invariants(table);
    std::cout << "classes: " << table.classes.size()
              << "  triangular: " << (invariants.ok ? "yes" : "NO") << "\n";
    return invariants.ok ? 0 : kExitVerifyFailure;
}

struct SuiteOutcome {
    bool ok = true;

    void report(const std::string& name, bool passed, const std::string& detail = "") {
        std::cout << (passed ? "[PASS] " : "[FAIL] ") << name;
        if (!passed && !detail.empty()) std::cout << "  -- " << detail;
        std::cout << "\n";
        ok = ok && passed;
    }

    void report(const std::string& name, const CheckReport& r) {
        report(name, r.ok, r.failures.empty() ? "" : r.failures.front());
    }
};

void suite_vanishing(SuiteOutcome& outcome, int d, int max_size) {
    std::vector<Partition> window = enumerate_partitions(d, max_size);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& lambda : window)
        for (const Partition& mu : window) pairs.push_back({lambda, mu});
    std::vector<char> results = parallel_map(pairs, [&](const auto& pair) -> char {
        auto predicted = vanishing_value(pair.first, pair.second);
        if (!predicted) return 1;
        LocalizedElem value = psi_mu_vw(weighted_factorial_schur(pair.first), pair.second);
        return loc_equal(value, *predicted) ? 1 : 0;
    });
    bool all_ok = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!results[i]) {
            all_ok = false;
            outcome.report("vanishing", false,
                           "lambda=" + pairs[i].first.to_string() +
                               " mu=" + pairs[i].second.to_string());
        }
    }
    outcome.report("vanishing d=" + std::to_string(d) + " size<=" + std::to_string(max_size),
                   all_ok);
}

void suite_pieri(SuiteOutcome& outcome, int d, int max_size) {
    LocalizedElem one_box_plain = weighted_schur(Partition::one_box(d), WeightAlphabet::WP);
    LocalizedElem one_box_factorial =
        weighted_factorial_schur(Partition::one_box(d), SchurAlphabet::B, WeightAlphabet::WP);
    for (const Partition& lambda : enumerate_partitions(d, max_size)) {
        bool plain = loc_equal(one_box_plain * weighted_schur(lambda),
                               weighted_pieri_rhs(lambda, false));
        bool factorial = loc_equal(one_box_factorial * weighted_factorial_schur(lambda),
                                   weighted_pieri_rhs(lambda, true));
        outcome.report("pieri lambda=" + lambda.to_string(), plain && factorial,
                       plain ? "factorial form" : "non-factorial form");
    }
}

void suite_basis(SuiteOutcome& outcome, int d, int max_size, const WeightConfig& cfg) {
    bool triangular = true;
    std::string detail;
    std::vector<Partition> window = enumerate_partitions(d, max_size);
    for (const Partition& lambda : window) {
        LocalizedElem cls = weighted_factorial_schur(lambda);
        for (const Partition& mu : window) {
            LocalizedElem value = psi_mu_vw(cls, mu);
            if (!mu.contains(lambda) && !loc_equal(value, LocalizedElem::zero())) {
                triangular = false;
                detail = "nonzero below containment at (" + lambda.to_string() + "," +
                         mu.to_string() + ")";
            }
            if (mu == lambda && value.normalized().is_zero()) {
                triangular = false;
                detail = "zero diagonal at " + lambda.to_string();
            }
        }
    }
    outcome.report("basis triangularity d=" + std::to_string(d), triangular, detail);
    outcome.report("basis stage table " + cfg.to_string(),
                   check_table_invariants(build_table(cfg)));
}

void suite_closure(SuiteOutcome& outcome, int d, int max_size) {
    for (const Partition& lambda : enumerate_partitions(d, max_size)) {
        for (const Partition& mu : enumerate_partitions(d, max_size)) {
            std::string name = "closure " + lambda.to_string() + " * " + mu.to_string();
            try {
                LocalizedElem product = weighted_schur(lambda) * weighted_schur(mu);
                ExpansionResult interpolated = weighted_expand_interpolate(
                    product, d, lambda.size() + mu.size(), ExpansionBasis::Weighted);
                ExpansionResult reduced = weighted_expand_pieri(
                    shifted_ms_form(lambda, mu, true, true), d, ExpansionBasis::Weighted);
                bool ok = interpolated.residual_zero &&
                          interpolated.coefficients.size() == reduced.coefficients.size();
                for (const auto& [nu, coeff] : interpolated.coefficients) {
                    auto other = reduced.coefficients.find(nu);
                    ok = ok && !coeff.numerator().uses_family(VarFamily::A) &&
                         coeff.denominator_only_w_lambda() &&
                         other != reduced.coefficients.end() &&
                         loc_equal(coeff, other->second);
                }
                outcome.report(name, ok);
            } catch (const std::exception& e) {
                outcome.report(name, false, e.what());
            }
        }
    }
}

void suite_homomorphism(SuiteOutcome& outcome, const WeightConfig& cfg, int max_sum) {
    RestrictionTable table = build_table(cfg);
    HomomorphismVerifier verifier(table);
    for (const Partition& lambda : table.classes) {
        for (const Partition& mu : table.classes) {
            if (lambda.size() + mu.size() > max_sum) continue;
            outcome.report("homomorphism " + lambda.to_string() + " * " + mu.to_string(),
                           verifier.check(lambda, mu));
        }
    }
    std::vector<int> outside_rows(static_cast<std::size_t>(cfg.d), 0);
    outside_rows[0] = cfg.n - cfg.d + 1;
    outcome.report("kills outside rectangle",
                   check_kills_outside(table, Partition(cfg.d, outside_rows)));
}

void suite_pullback(SuiteOutcome& outcome, const WeightConfig& cfg) {
    outcome.report("pullback " + std::to_string(cfg.n - 1) + "->" + std::to_string(cfg.n),
                   pullback_check(cfg));
}

int run_verify(const VerifyOptions& opt) {
    SuiteOutcome outcome;
    auto with_default = [&](int fallback) { return opt.max_size < 0 ? fallback : opt.max_size; };
    WeightConfig cfg = make_config(opt.d, opt.n, opt.itw, opt.u);

    bool known = false;
    if (opt.suite == "vanishing" || opt.suite == "all") {
        suite_vanishing(outcome, opt.d, with_default(4));
        known = true;
    }
    if (opt.suite == "pieri" || opt.suite == "all") {
        suite_pieri(outcome, opt.d, with_default(3));
        known = true;
    }
    if (opt.suite == "basis" || opt.suite == "all") {
        suite_basis(outcome, opt.d, with_default(3), cfg);
        known = true;
    }
    if (opt.suite == "closure" || opt.suite == "all") {
        suite_closure(outcome, opt.d, with_default(2));
        known = true;
    }
    if (opt.suite == "homomorphism" || opt.suite == "all") {
        suite_homomorphism(outcome, cfg, with_default(4));
        known = true;
    }
    if (opt.suite == "pullback" || opt.suite == "all") {
        suite_pullback(outcome, cfg);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite " + opt.suite);

    std::cout << (outcome.ok ? "all checks passed" : "FAILURES above") << "\n";
    return outcome.ok ? 0 : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weighted Schur functions, expansions, and fixed-point restrictions"};
    app.require_subcommand(1);

    SchurOptions schur_opt;
    CLI::App* schur = app.add_subcommand("schur", "compute one Schur-type function");
    schur->add_option("--d", schur_opt.d, "number of rows")->required();
    schur->add_option("--lambda", schur_opt.lambda, "partition, comma-separated rows")->required();
    schur->add_option("--variant", schur_opt.variant,
                      "factorial | ordinary | weighted | weighted-factorial");
    schur->add_option("--form", schur_opt.form, "det | tableaux");
    schur->add_option("--format", schur_opt.format, "text | json");

    ExpandOptions expand_opt;
    CLI::App* expand = app.add_subcommand("expand", "expand a product over a Schur basis");
    expand->add_option("--d", expand_opt.d, "number of rows")->required();
    expand->add_option("--lambda", expand_opt.lambda, "left partition")->required();
    expand->add_option("--mu", expand_opt.mu, "right partition (default empty)");
    expand->add_option("--basis", expand_opt.basis, "factorial | weighted | weighted-factorial");
    expand->add_option("--route", expand_opt.route, "interpolate | pieri");
    expand->add_option("--format", expand_opt.format, "json | text");

    RestrictOptions restrict_opt;
    CLI::App* restrict_cmd =
        app.add_subcommand("restrict", "build the fixed-point restriction table");
    restrict_cmd->add_option("--d", restrict_opt.d, "number of rows")->required();
    restrict_cmd->add_option("--n", restrict_opt.n, "stage")->required();
    restrict_cmd->add_option("--itw", restrict_opt.itw, "weights itw_1..itw_n")
        ->required()
        ->delimiter(',');
    restrict_cmd->add_option("--u", restrict_opt.u, "positive twist");
    restrict_cmd->add_option("--format", restrict_opt.format, "csv | json");
    restrict_cmd->add_option("--output", restrict_opt.output, "output file (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run identity sweeps");
    verify->add_option("--suite", verify_opt.suite,
                       "vanishing | pieri | basis | closure | homomorphism | pullback | all")
        ->required();
    verify->add_option("--d", verify_opt.d, "number of rows");
    verify->add_option("--max-size", verify_opt.max_size, "partition size bound");
    verify->add_option("--n", verify_opt.n, "stage for table-based suites");
    verify->add_option("--itw", verify_opt.itw, "weights itw_1..itw_n")->delimiter(',');
    verify->add_option("--u", verify_opt.u, "positive twist");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schur->parsed()) return run_schur(schur_opt);
        if (expand->parsed()) return run_expand(expand_opt);
        if (restrict_cmd->parsed()) return run_restrict(restrict_opt);
        if (verify->parsed()) return run_verify(verify_opt);
    } catch (const InternalNonDivisible& e) {
        std::cerr << "internal divisibility failure: " << e.what() << "\n";
        return kExitInternalDivision;
    } catch (const NotInSpan& e) {
        std::cerr << "not in span: " << e.what() << "\n";
        return kExitNotInSpan;
    } catch (const MembershipViolation& e) {
        std::cerr << "membership violation: " << e.what() << "\n";
        return kExitMembership;
    } catch (const Mismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
