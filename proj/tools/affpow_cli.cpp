#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "affpow/json_io.hpp"

using namespace affpow;

namespace {

struct CliError : std::runtime_error {
    int code;
    CliError(int code, std::string msg) : std::runtime_error(std::move(msg)), code(code) {}
};

Json load_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw CliError(2, "cannot open input file: " + path);
        in = &file;
    }
    try {
        return Json::parse(*in);
    } catch (const Json::parse_error& e) {
        throw CliError(65, e.what());
    }
}

// Text output is a flat rendering of the same JSON payload.
void dump_text(const Json& j, std::ostream& os, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            dump_text(it.value(), os, key);
        }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            dump_text(j[i], os, prefix + "[" + std::to_string(i) + "]");
    } else if (prefix.empty()) {
        if (j.is_string())
            os << j.get<std::string>() << "\n";
        else
            os << j.dump() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const Json& payload, const std::string& out_path, const std::string& format) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw CliError(2, "cannot open output file: " + out_path);
        os = &file;
    }
    if (format == "json")
        *os << payload.dump(2) << "\n";
    else
        dump_text(payload, *os, "");
}

FieldPtr parse_field(const std::string& spec) {
    if (spec.empty() || spec == "rational") return nullptr;
    if (spec.rfind("cyclotomic:", 0) == 0) {
        unsigned long k = std::stoul(spec.substr(11));
        if (k < 1) throw CliError(2, "conductor must be positive");
        return CycloField::get(k);
    }
    throw CliError(2, "unknown field: " + spec + " (use rational or cyclotomic:k)");
}

void require_seed_in_ci(bool seed_given) {
    const char* ci = std::getenv("CI");
    if (ci && std::string(ci) == "1" && !seed_given)
        throw CliError(2, "CI mode requires an explicit --seed for randomized subcommands");
}

Json witness_payload(const std::string& kind, const Family& w) {
    return Json{{"kind", kind}, {"size", w.size()}, {"family", family_to_json(w)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of families of shifted powers (x-a)^e"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path, format = "text", field_spec, kind, mu_str = "1";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t trials = 2000, set_size = 100, samples = 200, s = 0;
    unsigned long d = 0, k_param = 0, t_param = 0, k_bound = 0, l_param = 0;
    unsigned long min_exponent = 0, span = 2;
    long h_poly_d = -1;
    std::vector<unsigned long> exponents;

    auto add_io = [&](CLI::App* cmd, bool with_in = true) {
        if (with_in) cmd->add_option("--in", in_path, "input JSON path, - for stdin");
        cmd->add_option("--out", out_path, "output path, default stdout");
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto* c_check = app.add_subcommand("family-check", "exponent and independence conditions");
    add_io(c_check);
    auto* c_dim = app.add_subcommand("family-dim", "dimension of the span");
    add_io(c_dim);
    auto* c_wit = app.add_subcommand("family-witness", "independent subfamily witnesses");
    add_io(c_wit);
    c_wit->add_option("--kind", kind, "sqrt, halfplus or top")
        ->check(CLI::IsMember({"sqrt", "halfplus", "top"}))
        ->default_val("sqrt");

    auto* c_find = app.add_subcommand("sde-find", "annihilating equation for a family");
    add_io(c_find);
    auto* opt_t = c_find->add_option("-t", t_param, "degree-jump index");
    auto* opt_k = c_find->add_option("-k", k_bound, "order bound");
    auto* opt_l = c_find->add_option("-l", l_param, "degree shift");

    auto* c_verify = app.add_subcommand("sde-verify", "check an equation against a family");
    add_io(c_verify);

    auto* c_waring = app.add_subcommand("waring-rank", "Waring rank of a rational polynomial");
    add_io(c_waring);
    c_waring->add_option("--h-poly", h_poly_d, "use (x+1)^{2d+2} - x^{2d+2} for this d");

    auto* c_count = app.add_subcommand("polya-count", "ballot number |P_{s,d}|");
    add_io(c_count, false);
    c_count->add_option("-s", s, "family size")->required();
    c_count->add_option("-d", d, "degree bound")->required();

    auto* c_enum = app.add_subcommand("polya-enum", "all Polya sequences for (s, d)");
    add_io(c_enum, false);
    c_enum->add_option("-s", s, "family size")->required();
    c_enum->add_option("-d", d, "degree bound")->required();

    auto* c_exp = app.add_subcommand("experiment", "seeded independence experiments");
    add_io(c_exp, false);
    c_exp->add_option("--mode", kind, "montecarlo or sweep")
        ->check(CLI::IsMember({"montecarlo", "sweep"}))
        ->default_val("montecarlo");
    c_exp->add_option("--exponents", exponents, "exponent sequence (montecarlo)")
        ->delimiter(',');
    c_exp->add_option("-s", s, "family size (sweep)");
    c_exp->add_option("--trials", trials, "trial count")->capture_default_str();
    c_exp->add_option("--set-size", set_size, "shift pool size |S|")->capture_default_str();
    auto* exp_seed = c_exp->add_option("--seed", seed, "RNG seed")->capture_default_str();
    c_exp->add_option("--field", field_spec, "rational or cyclotomic:k");

    auto* c_con = app.add_subcommand("construct", "explicit families and conjecture probes");
    add_io(c_con, false);
    c_con->add_option("--kind", kind, "unity, unity-family, lowdim, probe-bigexp, probe-gmk")
        ->check(CLI::IsMember({"unity", "unity-family", "lowdim", "probe-bigexp", "probe-gmk"}))
        ->required();
    c_con->add_option("-k", k_param, "root-of-unity order / probe conductor");
    c_con->add_option("-d", d, "degree parameter");
    c_con->add_option("--mu", mu_str, "nonzero rational mu")->capture_default_str();
    c_con->add_option("-s", s, "probe family size");
    c_con->add_option("--samples", samples, "probe sample count")->capture_default_str();
    c_con->add_option("--min-exponent", min_exponent, "probe exponent floor (0: derive)");
    c_con->add_option("--span", span, "probe exponent span")->capture_default_str();
    auto* con_seed = c_con->add_option("--seed", seed, "RNG seed")->capture_default_str();

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            // distinguish an unknown subcommand from flag-level problems
            bool named = argc > 1 && argv[1][0] != '-';
            bool known = named && app.get_subcommand_no_throw(argv[1]) != nullptr;
            if (named && !known) throw CliError(64, std::string("unknown subcommand: ") + argv[1]);
            throw CliError(2, e.what());
        }

        Json payload;
        if (c_check->parsed()) {
            Family fam = family_from_json(load_json(in_path));
            PolyaSequence e(fam.exponents());
            payload = Json{{"s", fam.size()},
                           {"exponents", e.exponents()},
                           {"polya", polya_check(e)},
                           {"gmk", gmk_condition(e)},
                           {"atkinson_sharma", atkinson_sharma_condition(fam)},
                           {"independent", is_independent(fam)}};
        } else if (c_dim->parsed()) {
            Family fam = family_from_json(load_json(in_path));
            std::size_t dim = dimension(fam);
            payload = Json{{"s", fam.size()}, {"dim", dim}, {"independent", dim == fam.size()}};
        } else if (c_wit->parsed()) {
            Family fam = family_from_json(load_json(in_path));
            if (kind == "sqrt")
                payload = witness_payload(kind, sqrt_witness(fam));
            else if (kind == "halfplus")
                payload = witness_payload(kind, real_halfplus_witness(fam));
            else
                payload = witness_payload(kind, real_top_exponent_witness(fam));
        } else if (c_find->parsed()) {
            Family fam = family_from_json(load_json(in_path));
            std::optional<Sde> sde;
            if (*opt_t || *opt_k || *opt_l) {
                if (!(*opt_t && *opt_k && *opt_l))
                    throw CliError(2, "sde-find needs all of -t, -k, -l or none");
                sde = find_sde(fam, SdeParams{t_param, k_bound, l_param});
                if (!sde) throw CliError(2, "no annihilating equation for these parameters");
            } else {
                sde = find_small_sde(fam);
            }
            payload = sde_to_json(*sde);
            payload["s"] = fam.size();
        } else if (c_verify->parsed()) {
            Json in = load_json(in_path);
            if (!in.contains("family") || !in.contains("sde"))
                throw CliError(2, "sde-verify input needs \"family\" and \"sde\"");
            Family fam = family_from_json(in.at("family"));
            FieldPtr field;
            for (const auto& term : fam.terms())
                if (!term.shift.is_rational()) field = term.shift.field();
            Sde sde = sde_from_json(in.at("sde"), field);
            bool all = true;
            Json per_term = Json::array();
            for (const auto& term : fam.terms()) {
                bool ok = verify_sde(sde, term.expand());
                per_term.push_back(ok);
                all = all && ok;
            }
            payload = Json{{"order", sde.order()}, {"satisfied", all}, {"per_term", per_term}};
        } else if (c_waring->parsed()) {
            Poly f;
            if (h_poly_d >= 0)
                f = h_polynomial(static_cast<unsigned long>(h_poly_d));
            else
                f = poly_from_json(load_json(in_path));
            WaringCertificate cert = waring_rank(f);
            payload = waring_report_to_json(cert, std::nullopt);
        } else if (c_count->parsed()) {
            Int n = count_polya(s, d);
            if (format == "json")
                payload = Json{{"s", s}, {"d", d}, {"count", n.get_str()}};
            else
                payload = Json(n.get_str());
        } else if (c_enum->parsed()) {
            Json list = Json::array();
            for (const auto& m : enumerate_polya(s, d))
                list.push_back(m.to_sequence().exponents());
            payload = Json{{"s", s}, {"d", d}, {"count", list.size()}, {"sequences", list}};
        } else if (c_exp->parsed()) {
            require_seed_in_ci(exp_seed->count() > 0);
            ExperimentConfig cfg{s, set_size, trials, seed,
                                 field_spec.empty() ? 0 : (parse_field(field_spec)
                                                               ? parse_field(field_spec)->conductor()
                                                               : 0)};
            if (kind == "montecarlo") {
                if (exponents.empty())
                    throw CliError(2, "montecarlo mode needs --exponents");
                PolyaSequence e(exponents);
                cfg.s = e.size();
                payload = monte_carlo_report_to_json(monte_carlo_independence(e, cfg));
            } else {
                if (s < 2) throw CliError(2, "sweep mode needs -s >= 2");
                payload = sweep_report_to_json(genericity_sweep(s, cfg));
            }
        } else if (c_con->parsed()) {
            Rational mu = parse_rational(mu_str);
            if (kind == "unity") {
                payload = certificate_to_json(unity_identity(k_param, d, mu));
                payload["verified"] = true;
            } else if (kind == "unity-family") {
                Family fam = unity_dependence_family(k_param, d, mu);
                std::size_t dim = dimension(fam);
                payload = Json{{"family", family_to_json(fam)},
                               {"s", fam.size()},
                               {"dim", dim},
                               {"independent", dim == fam.size()},
                               {"gmk", gmk_condition(PolyaSequence(fam.exponents()))}};
            } else if (kind == "lowdim") {
                auto [fam, expected] = lowdim_family(d);
                payload = Json{{"family", family_to_json(fam)},
                               {"s", fam.size()},
                               {"dim", dimension(fam)},
                               {"expected_dim", expected}};
            } else {
                require_seed_in_ci(con_seed->count() > 0);
                ProbeParams params;
                if (s) params.s = s;
                if (k_param) params.conductor = k_param;
                if (d) params.d = d;
                params.min_exponent = min_exponent;
                params.exponent_span = span;
                params.seed = seed;
                params.samples = samples;
                ProbeKind pk = kind == "probe-bigexp" ? ProbeKind::BigExp : ProbeKind::Gmk;
                payload = probe_report_to_json(conjecture_probe(pk, params));
            }
        }
        emit(payload, out_path, format);
        return 0;
    } catch (const CliError& e) {
        Json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return e.code;
    } catch (const JsonFormatError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 65;
    } catch (const std::invalid_argument& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
