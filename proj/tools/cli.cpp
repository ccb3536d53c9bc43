#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <map>

#include <dcoset/coset.hpp>
#include <dcoset/hecke.hpp>
#include <dcoset/text.hpp>

namespace dcoset::cli {

using json = nlohmann::ordered_json;

namespace {

json json_int(const Int& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

json json_ideal(const FractionalIdeal& a) {
    json basis = json::array();
    basis.push_back({json_int(a.basis00()), json_int(a.basis01())});
    basis.push_back({json_int(Int(0)), json_int(a.basis11())});
    return json{{"basis", basis}, {"den", json_int(a.den())}};
}

json json_matrix(const Mat2& m) {
    return json::array({json::array({format_element(m.a()), format_element(m.b())}),
                        json::array({format_element(m.c()), format_element(m.d())})});
}

json json_hecke(const HeckeElement& f) {
    json terms = json::array();
    for (const auto& [key, coeff] : f.terms()) {
        terms.push_back(json{{"delta1", json_ideal(key.delta1)},
                             {"f2", json_ideal(key.f2)},
                             {"coeff", json_int(coeff)},
                             {"witness", json_matrix(f.witness(key))}});
    }
    return terms;
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    // text format: flat human-readable key/value lines
    for (const auto& [key, value] : doc.items()) {
        if (value.is_string())
            out << key << ": " << value.get<std::string>() << "\n";
        else
            out << key << ": " << value.dump() << "\n";
    }
}

struct Request {
    std::string ring_text;
    std::string format = "json";
    std::uint64_t seed = 0;
    long budget = 0;
    bool seed_given = false;
    bool budget_given = false;
    bool random = false;
    std::array<std::string, 3> args;
    std::string scope = "all";
};

int dispatch(const std::string& command, Request& req, std::ostream& out);

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact right-coset counts and Hecke products for GL2 over Z and quadratic "
                 "rings of integers"};
    app.name("dcoset");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Request req;
    app.add_option("--ring", req.ring_text, "ring descriptor: Z or Q(sqrt,d)");
    app.add_option("--format", req.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* seed_opt = app.add_option("--seed", req.seed, "sampler seed");
    auto* budget_opt = app.add_option("--budget", req.budget, "sampler budget");

    struct Sub {
        const char* name;
        const char* help;
        int arity;
    };
    const Sub subs[] = {
        {"invariants", "determinantal divisors of a matrix", 1},
        {"mu", "number of right cosets in U A U", 1},
        {"mu-ideal", "right cosets in U A U with a given first-column ideal", 2},
        {"decompose", "deterministic right transversal of U \\ U A U", 1},
        {"decompose-random", "probabilistic right transversal of U \\ U A U", 1},
        {"hecke-mult", "product of two double-coset characteristic functions", 2},
        {"index", "index of the congruence subgroup U0[m]", 1},
        {"newman", "right cosets among all matrices of fixed determinant", 1},
        {"reduction-check", "evaluate 1_{UAU} * 1_{UBU} at diag(1,c)", 3},
        {"verify", "run the built-in check suites", 0},
    };
    std::map<std::string, CLI::App*> handles;
    const char* positional_names[] = {"arg1", "arg2", "arg3"};
    for (const auto& sub : subs) {
        CLI::App* s = app.add_subcommand(sub.name, sub.help);
        for (int i = 0; i < sub.arity; ++i)
            s->add_option(positional_names[i], req.args[i], "argument")->required();
        if (std::string(sub.name) == "verify")
            s->add_option("scope", req.scope, "paper-tables, properties or all")
                ->check(CLI::IsMember({"paper-tables", "properties", "all"}));
        if (std::string(sub.name) == "hecke-mult")
            s->add_flag("--random", req.random, "decompose probabilistically");
        handles[sub.name] = s;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    req.seed_given = seed_opt->count() > 0;
    req.budget_given = budget_opt->count() > 0;

    std::string command;
    for (const auto& [name, handle] : handles)
        if (handle->parsed()) command = name;

    bool randomised = command == "decompose-random" || (command == "hecke-mult" && req.random);
    if ((req.seed_given || req.budget_given) && !randomised) {
        err << "error: --seed/--budget are only valid with decompose-random and "
               "hecke-mult --random\n";
        return 2;
    }

    try {
        return dispatch(command, req, out);
    } catch (const std::invalid_argument& e) {
        json doc{{"error", e.what()}, {"kind", "parse"}};
        emit(doc, req.format, err);
        return 2;
    } catch (const std::exception& e) {
        json doc{{"error", e.what()}, {"kind", "domain"}};
        emit(doc, req.format, err);
        return 1;
    }
}

namespace {

int dispatch(const std::string& command, Request& req, std::ostream& out) {
    if (command == "verify") {
        auto checks = run_verify_checks(req.scope);
        json rows = json::array();
        int failed = 0;
        for (const auto& c : checks) {
            rows.push_back(json{{"name", c.name},
                                {"expected", c.expected},
                                {"computed", c.computed},
                                {"pass", c.pass}});
            if (!c.pass) ++failed;
        }
        json doc{{"command", "verify"},
                 {"scope", req.scope},
                 {"checks", rows},
                 {"passed", static_cast<int>(checks.size()) - failed},
                 {"failed", failed}};
        if (req.format == "text") {
            for (const auto& c : checks)
                out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (expected " << c.expected
                    << ", computed " << c.computed << ")\n";
            out << "passed " << checks.size() - failed << "/" << checks.size() << "\n";
        } else {
            out << doc.dump(2) << "\n";
        }
        return failed == 0 ? 0 : 1;
    }

    if (req.ring_text.empty())
        throw std::invalid_argument("--ring is required for this subcommand");
    Ring ring = parse_ring(req.ring_text);

    json doc{{"ring", ring.str()}, {"command", command}};

    auto integral_element = [&](const std::string& text) {
        FieldElement e = parse_element(ring, text);
        if (!e.is_integral()) throw std::domain_error("element is not integral: " + text);
        return e.as_ring_element();
    };

    if (command == "invariants") {
        Mat2 m = parse_matrix(ring, req.args[0]);
        doc["matrix"] = json_matrix(m);
        auto inv = invariants(m);
        doc["rank"] = inv.rank;
        doc["delta1"] = json_ideal(inv.delta1);
        doc["e1"] = json_ideal(inv.delta1);
        doc["f1"] = json_ideal(inv.delta1);
        if (inv.delta2) doc["delta2"] = json_ideal(*inv.delta2);
        if (inv.e2) doc["e2"] = json_ideal(*inv.e2);
        if (inv.f2) doc["f2"] = json_ideal(*inv.f2);
        if (inv.g) doc["g"] = json_ideal(*inv.g);
    } else if (command == "mu") {
        Mat2 m = parse_matrix(ring, req.args[0]);
        doc["matrix"] = json_matrix(m);
        doc["mu"] = json_int(mu_total(m));
    } else if (command == "mu-ideal") {
        Mat2 m = parse_matrix(ring, req.args[0]);
        FractionalIdeal a = parse_ideal(ring, req.args[1]);
        doc["matrix"] = json_matrix(m);
        doc["ideal"] = json_ideal(a);
        doc["mu_ideal"] = json_int(mu_ideal(m, a));
    } else if (command == "decompose") {
        Mat2 m = parse_matrix(ring, req.args[0]);
        doc["matrix"] = json_matrix(m);
        auto reps = decompose_deterministic(m);
        doc["count"] = static_cast<long>(reps.size());
        json list = json::array();
        for (const auto& rep : reps) list.push_back(json_matrix(rep));
        doc["cosets"] = list;
    } else if (command == "decompose-random") {
        Mat2 m = parse_matrix(ring, req.args[0]);
        doc["matrix"] = json_matrix(m);
        SamplerConfig cfg;
        cfg.seed = req.seed;
        DecomposeStats stats;
        auto reps = decompose_probabilistic(m, cfg, req.budget, &stats);
        doc["seed"] = req.seed;
        doc["count"] = static_cast<long>(reps.size());
        doc["samples"] = stats.samples;
        json list = json::array();
        for (const auto& rep : reps) list.push_back(json_matrix(rep));
        doc["cosets"] = list;
    } else if (command == "hecke-mult") {
        Mat2 a = parse_matrix(ring, req.args[0]);
        Mat2 b = parse_matrix(ring, req.args[1]);
        doc["a"] = json_matrix(a);
        doc["b"] = json_matrix(b);
        Decomposer dec;
        if (req.random) {
            dec.probabilistic = true;
            dec.cfg.seed = req.seed;
            dec.budget = req.budget;
            doc["seed"] = req.seed;
        }
        doc["terms"] = json_hecke(hecke_multiply(a, b, dec));
    } else if (command == "index") {
        RingElement m = integral_element(req.args[0]);
        doc["m"] = format_element(m);
        doc["index"] = json_int(congruence_index(m));
    } else if (command == "newman") {
        RingElement d = integral_element(req.args[0]);
        doc["d"] = format_element(d);
        doc["count"] = json_int(newman_count(d));
    } else if (command == "reduction-check") {
        RingElement a = integral_element(req.args[0]);
        RingElement b = integral_element(req.args[1]);
        RingElement c = integral_element(req.args[2]);
        doc["a"] = format_element(a);
        doc["b"] = format_element(b);
        doc["c"] = format_element(c);
        doc["value"] = reduction_check(a, b, c);
    } else {
        throw std::invalid_argument("unknown subcommand");
    }

    emit(doc, req.format, out);
    return 0;
}

}  // namespace

}  // namespace dcoset::cli
