#include "ringforge/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using ringforge::BigInt;
using ringforge::Json;

// Values arrive either as comma-separated integers or as the JSON object the
// tool itself emits.
std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::string token;
    for (char c : text) {
        if (c == ',') {
            out.emplace_back(token);
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    if (!token.empty()) out.emplace_back(token);
    return out;
}

ringforge::BinaryForm parse_form(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return ringforge::form_from_json(Json::parse(text));
    return ringforge::BinaryForm::from_coeffs(parse_int_list(text));
}

ringforge::UnimodularMatrix parse_matrix(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return ringforge::matrix_from_json(Json::parse(text));
    auto v = parse_int_list(text);
    if (v.size() != 4) throw std::invalid_argument("matrix needs exactly p,q,r,s");
    return {v[0], v[1], v[2], v[3]};
}

std::vector<BigInt> parse_element(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return ringforge::coords_from_json(Json::parse(text));
    return parse_int_list(text);
}

struct Output {
    bool pretty = false;
    void emit(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

int run(int argc, char** argv) {
    CLI::App app{"ringforge: exact arithmetic in orders attached to binary forms,\n"
                 "their GL2(Z) transformation law, and symbolic certification of the\n"
                 "change-of-basis identity"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --pretty appear after the subcommand
    Output out;
    app.add_flag("--pretty", out.pretty, "indent JSON output");

    std::string form_text, matrix_text, element_text, table_text, json_path;
    int n = 0, up_to = 0, trials = 1000, budget = 25;
    std::uint64_t seed = 1;

    auto* table = app.add_subcommand("table", "multiplication table of the order of a form");
    table->add_option("--form", form_text, "coefficients a1,...,a_{n+1}")->required();
    bool normalized = false;
    table->add_flag("--normalized", normalized, "shifted cubic basis {1, phi, psi}");
    table->callback([&] {
        const auto form = parse_form(form_text);
        const ringforge::OrderContext ctx(form);
        const auto t = normalized ? ringforge::normalized_cubic_table(ctx)
                                  : ringforge::multiplication_table(ctx);
        out.emit(ringforge::to_json(t));
    });

    auto* act_cmd = app.add_subcommand("act", "transform a form by a unimodular matrix");
    act_cmd->add_option("--form", form_text)->required();
    act_cmd->add_option("--matrix", matrix_text, "p,q,r,s with ps-qr = +-1")->required();
    act_cmd->callback([&] {
        out.emit(ringforge::to_json(ringforge::act(parse_form(form_text), parse_matrix(matrix_text))));
    });

    auto* arith = app.add_subcommand("arith", "multiplication matrix of an element (symbolic "
                                              "coordinates x0..x_{n-1} when --element is omitted)");
    arith->add_option("--form", form_text)->required();
    arith->add_option("--element", element_text, "coordinates x0,...,x_{n-1}");
    arith->callback([&] {
        const auto form = parse_form(form_text);
        const ringforge::OrderContext ctx(form);
        if (element_text.empty()) {
            out.emit(ringforge::to_json(ringforge::arithmetic_matrix_symbolic(ctx)));
        } else {
            const ringforge::RingElement elem(ctx, parse_element(element_text));
            out.emit(ringforge::to_json(ringforge::arithmetic_matrix(ctx, elem)));
        }
    });

    auto* tn = app.add_subcommand("trace-norm", "trace and norm of an element");
    tn->add_option("--form", form_text)->required();
    tn->add_option("--element", element_text)->required();
    tn->callback([&] {
        const ringforge::OrderContext ctx(parse_form(form_text));
        const ringforge::RingElement elem(ctx, parse_element(element_text));
        out.emit(Json{{"trace", ringforge::big_to_json(ringforge::trace(elem))},
                      {"norm", ringforge::big_to_json(ringforge::norm(elem))}});
    });

    auto* inv = app.add_subcommand("inverse", "exact inverse of an element as coordinates over a "
                                              "positive denominator");
    inv->add_option("--form", form_text)->required();
    inv->add_option("--element", element_text)->required();
    inv->callback([&] {
        const ringforge::OrderContext ctx(parse_form(form_text));
        const ringforge::RingElement elem(ctx, parse_element(element_text));
        const auto r = ringforge::element_inverse(elem);
        Json j = ringforge::coords_to_json(r.coords);
        j["denom"] = ringforge::big_to_json(r.denom);
        out.emit(j);
    });

    auto* param = app.add_subcommand("param", "the matrices A, B, Q, P, T for a (form, matrix) "
                                              "pair; fully symbolic when only --n is given");
    param->add_option("--n", n, "degree for the symbolic system");
    param->add_option("--form", form_text);
    param->add_option("--matrix", matrix_text);
    param->callback([&] {
        ringforge::ParamSystem sys;
        if (!form_text.empty()) {
            const auto form = parse_form(form_text);
            std::vector<ringforge::Polynomial> coeffs;
            for (const auto& c : form.coeffs()) coeffs.emplace_back(c);
            const ringforge::Gl2 m = matrix_text.empty()
                                         ? ringforge::Gl2::symbols()
                                         : ringforge::Gl2::of(parse_matrix(matrix_text));
            sys = ringforge::build_param_system(coeffs, m);
        } else if (n >= 3) {
            sys = ringforge::build_param_system(n);
        } else {
            throw CLI::ValidationError("param", "give --form or --n (>= 3)");
        }
        Json image = Json::array();
        for (const auto& b : sys.image_coeffs) image.push_back(b.str());
        out.emit(Json{{"n", sys.n},
                      {"image_coeffs", std::move(image)},
                      {"A", ringforge::to_json(sys.A)},
                      {"B", ringforge::to_json(sys.B)},
                      {"Q", ringforge::to_json(sys.Q)},
                      {"P", ringforge::to_json(sys.P)},
                      {"T", ringforge::to_json(sys.T)}});
    });

    auto* transport = app.add_subcommand("transport", "carry an element of the order of B o M "
                                                      "into the order of B");
    transport->add_option("--form", form_text)->required();
    transport->add_option("--matrix", matrix_text)->required();
    transport->add_option("--element", element_text)->required();
    transport->callback([&] {
        const auto elem = ringforge::transport_element(parse_form(form_text), parse_matrix(matrix_text),
                                                       parse_element(element_text));
        out.emit(ringforge::coords_to_json(elem.coords()));
    });

    auto* iso = app.add_subcommand("check-iso", "randomized ring-homomorphism check of the "
                                                "transport map");
    iso->add_option("--form", form_text)->required();
    iso->add_option("--matrix", matrix_text)->required();
    iso->add_option("--trials", trials, "number of random element pairs")->capture_default_str();
    iso->add_option("--seed", seed)->capture_default_str();
    iso->callback([&] {
        const auto report =
            ringforge::isomorphism_check(parse_form(form_text), parse_matrix(matrix_text), trials, seed);
        out.emit(ringforge::to_json(report));
        if (!report.ok()) throw std::domain_error("transport is not a homomorphism (see report)");
    });

    auto* verify = app.add_subcommand("verify", "symbolically certify the change-of-basis identity");
    verify->add_option("--n", n, "single degree to verify");
    verify->add_option("--up-to", up_to, "verify every degree from 3 to this bound");
    verify->add_option("--json", json_path, "also write the certificate JSON to a file");
    verify->callback([&] {
        std::vector<ringforge::Certificate> certs;
        if (up_to >= 3) {
            for (int k = 3; k <= up_to; ++k) certs.push_back(ringforge::verify_identity(k));
        } else if (n >= 3) {
            certs.push_back(ringforge::verify_identity(n));
        } else {
            throw CLI::ValidationError("verify", "give --n or --up-to (>= 3)");
        }
        Json payload;
        if (certs.size() == 1) {
            payload = ringforge::to_json(certs[0]);
        } else {
            payload = Json::array();
            for (const auto& c : certs) payload.push_back(ringforge::to_json(c));
        }
        if (!json_path.empty()) {
            std::ofstream f(json_path);
            if (!f) throw std::runtime_error("cannot write " + json_path);
            f << payload.dump(2) << "\n";
        }
        out.emit(payload);
        for (const auto& c : certs)
            if (!c.verified()) throw std::domain_error("identity failed at n = " + std::to_string(c.n));
    });

    auto* cov = app.add_subcommand("covariants", "invariants I, J and ternary forms G, H, F of a "
                                                 "binary quartic, with the syzygy re-checked");
    cov->add_option("--form", form_text, "a,b,c,d,e")->required();
    cov->callback([&] {
        const auto form = parse_form(form_text);
        const auto c = ringforge::quartic_covariants(form);
        const auto syz = ringforge::syzygy_check(form);
        out.emit(Json{{"I", ringforge::big_to_json(c.I.constant_value())},
                      {"J", ringforge::big_to_json(c.J.constant_value())},
                      {"G", c.G.str()},
                      {"H", c.H.str()},
                      {"F", c.F.str()},
                      {"syzygy", syz.holds ? "holds" : "fails"}});
        if (!syz.holds) throw std::domain_error("syzygy failed: " + syz.difference.str());
    });

    auto* from_order = app.add_subcommand("from-order", "recover the binary cubic form of a rank-3 "
                                                        "multiplication table");
    from_order->add_option("--table", table_text, "table JSON as emitted by `table`")->required();
    from_order->callback([&] {
        const auto table = ringforge::table_from_json(Json::parse(table_text));
        const auto form = ringforge::cubic_form_from_order_integral(table);
        Json j = ringforge::to_json(form);
        out.emit(j);
    });

    auto* irr = app.add_subcommand("irreducible", "mod-p irreducibility certificate for a form");
    irr->add_option("--form", form_text)->required();
    irr->add_option("--budget", budget, "number of primes to try")->capture_default_str();
    irr->callback([&] {
        const auto r = ringforge::irreducibility_certificate(parse_form(form_text), budget);
        using Kind = ringforge::IrreducibilityResult::Kind;
        Json j;
        switch (r.kind) {
        case Kind::Irreducible:
            j = Json{{"status", "irreducible"}, {"witness_prime", r.witness_prime}};
            break;
        case Kind::RationalRoot:
            j = Json{{"status", "rational_root"},
                     {"root_num", ringforge::big_to_json(r.root_num)},
                     {"root_den", ringforge::big_to_json(r.root_den)}};
            break;
        case Kind::Unknown:
            j = Json{{"status", "unknown"}};
            break;
        }
        out.emit(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        Json err{{"error", Json{{"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
}
