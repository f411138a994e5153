// constacode: command-line front end.
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 validation error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "constacode/constacode.hpp"
#include "reproduce.hpp"

#ifndef CONSTACODE_FIXTURE_DIR
#define CONSTACODE_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace constacode;

struct GlobalOptions {
    std::string output = "table";
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = kDefaultBudget;
    bool paper_form = false;

    bool as_json() const { return output == "json"; }
};

struct CodeInput {
    std::string descriptor;
    std::optional<std::size_t> n;
    std::optional<unsigned> m;
    std::string f, g, h;

    void attach(CLI::App* cmd) {
        cmd->add_option("-d,--descriptor", descriptor, "code descriptor JSON file");
        cmd->add_option("-n", n, "code length (odd)");
        cmd->add_option("-m", m, "field degree, 1..8");
        cmd->add_option("--f-poly", f, "polynomial f in the text grammar");
        cmd->add_option("--g-poly", g, "polynomial g (default: (x^n - (1+u)) / (f h))");
        cmd->add_option("--h-poly", h, "polynomial h (default: 1)");
    }

    ConstaCode load() const {
        if (!descriptor.empty()) return tools::load_descriptor(descriptor);
        if (!n || !m) throw Error(ErrorKind::ParseError, "give --descriptor or both -n and -m");
        json j{{"n", *n}, {"m", *m}};
        if (!f.empty()) j["f"] = f;
        if (!g.empty()) j["g"] = g;
        if (!h.empty()) j["h"] = h;
        return code_from_descriptor(j);
    }
};

std::uint64_t max_enumeration() {
    if (const char* env = std::getenv("CONSTACODE_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "CONSTACODE_MAX_ENUM is not an integer");
        }
    }
    return kDefaultMaxEnumeration;
}

DistanceOptions distance_options(const GlobalOptions& g, const std::string& mode) {
    DistanceOptions opt;
    opt.budget = g.budget;
    opt.seed = g.seed;
    opt.max_codewords = max_enumeration();
    if (mode == "exact")
        opt.strategy = DistanceStrategy::exact;
    else if (mode == "upper")
        opt.strategy = DistanceStrategy::upper_bound;
    return opt;
}

int cmd_factor(const GlobalOptions& g, std::size_t n, unsigned m, bool lift) {
    const auto factors = factor_xn_minus_1(n, m);
    json out = json::array();
    for (const auto& p : factors) {
        json item{{"degree", p.degree()}, {"text", to_text(p)}};
        json coeffs = json::array();
        for (FieldElem c : p.coeffs()) coeffs.push_back(c.bits);
        item["coeffs"] = coeffs;
        if (lift) {
            const RPoly lifted = g.paper_form ? mu_lift_unit_form(p, n) : mu_lift(p, n);
            item["lift"] = to_text(lifted);
            item["lift_coeffs"] = to_json(lifted);
        }
        out.push_back(item);
    }
    if (g.as_json()) {
        std::cout << json{{"n", n}, {"m", m}, {"count", factors.size()}, {"factors", out}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "x^" << n << " - 1 over GF(2^" << m << "): " << factors.size() << " factors\n";
    for (const auto& item : out) {
        std::cout << "  " << item["text"].get<std::string>();
        if (lift) std::cout << "    ->  " << item["lift"].get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

json verify_json(const ConstaCode& code) {
    const BinaryCode& image = code.gray_image();
    const ConstaCode d = dual(code);
    return json{{"descriptor", descriptor_json(code)},
                {"cardinality", cardinality_pretty(code)},
                {"cardinality_log2", cardinality(code).exponent},
                {"dual", descriptor_json(d)},
                {"dual_cardinality", cardinality_pretty(d)},
                {"dual_containing", is_dual_containing(code)},
                {"gray", {{"length", image.length()}, {"dimension", image.dimension()}}}};
}

int cmd_build(const GlobalOptions& g, const ConstaCode& code) {
    if (g.as_json()) {
        std::cout << descriptor_json(code).dump() << "\n";
        return 0;
    }
    std::cout << "n = " << code.n() << ", m = " << code.m() << "\n"
              << "f = " << to_text(code.f()) << "\n"
              << "g = " << to_text(code.g()) << "\n"
              << "h = " << to_text(code.h()) << "\n"
              << "|C| = " << cardinality_pretty(code) << "\n";
    return 0;
}

int cmd_verify(const GlobalOptions& g, const ConstaCode& code) {
    if (g.as_json()) {
        std::cout << verify_json(code).dump(2) << "\n";
        return 0;
    }
    const ConstaCode d = dual(code);
    const BinaryCode& image = code.gray_image();
    std::cout << "n = " << code.n() << ", m = " << code.m() << ", deg(f,g,h) = (" << code.f().degree() << ", "
              << code.g().degree() << ", " << code.h().degree() << ")\n"
              << "|C|          = " << cardinality_pretty(code) << " = 2^" << cardinality(code).exponent << "\n"
              << "dual f       = " << to_text(d.f()) << "\n"
              << "dual h       = " << to_text(d.h()) << "\n"
              << "|C_perp|     = " << cardinality_pretty(d) << "\n"
              << "dual-containing: " << (is_dual_containing(code) ? "yes" : "no") << "\n"
              << "Gray image   = [" << image.length() << ", " << image.dimension() << "]\n";
    return 0;
}

int cmd_gray(const GlobalOptions& g, const ConstaCode* code, const std::string& word, unsigned m) {
    if (code) {
        const BinaryCode& image = code->gray_image();
        if (g.as_json()) {
            std::cout << to_json(image).dump(2) << "\n";
            return 0;
        }
        std::cout << "Gray image [" << image.length() << ", " << image.dimension() << "], basis rows (hex):\n";
        for (const auto& r : image.basis()) std::cout << "  " << r.to_hex() << "\n";
        return 0;
    }
    json j;
    try {
        j = json::parse(word);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("word: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "word must be a JSON array of [a, b] pairs");
    RWord w;
    for (const auto& e : j) w.push_back(relem_from_json(e, m));
    const TraceOrthogonalBasis& basis = find_tob(m);
    const BitVec v = phi(w, basis);
    if (g.as_json()) {
        std::cout << json{{"length", v.size()}, {"hex", v.to_hex()}, {"lee_weight", lee_weight(w, basis)},
                          {"tob", to_json(basis)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "hex:    " << v.to_hex() << "\n"
              << "blocks: " << block_string(v, m) << "\n"
              << "Lee weight: " << lee_weight(w, basis) << "\n";
    return 0;
}

int cmd_distance(const GlobalOptions& g, const ConstaCode& code, const std::string& mode) {
    const DistanceReport r = lee_distance_report(code, find_tob(code.m()), distance_options(g, mode));
    if (g.as_json()) {
        std::cout << to_json(r).dump(2) << "\n";
        return 0;
    }
    std::cout << "d_L " << (r.mode == DistanceMode::exact ? "= " : "<= ") << r.value << "  (" << to_string(r.mode)
              << ", " << r.effort << " codewords examined)\n"
              << "witness: " << r.witness.to_hex() << "\n";
    return 0;
}

int cmd_quantum(const GlobalOptions& g, const ConstaCode& code, const std::string& mode) {
    const QuantumParams q = css_params(code, find_tob(code.m()), distance_options(g, mode));
    if (g.as_json()) {
        json j = to_json(q);
        j["pretty"] = q.pretty();
        j["distance"] = to_json(q.distance);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << q.pretty() << "_2\n";
    return 0;
}

int cmd_reproduce(const GlobalOptions& g, const std::string& which, const std::string& fixtures) {
    DistanceOptions opt;
    opt.budget = g.budget;
    opt.seed = g.seed;
    const auto rows = tools::reproduce(which, fixtures, opt);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass;
    if (g.as_json()) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"example", r.example},
                           {"quantity", r.quantity},
                           {"expected", r.expected},
                           {"actual", r.actual},
                           {"pass", r.pass}});
        std::cout << json{{"pass", ok}, {"rows", out}}.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << r.example << std::setw(28)
                      << r.quantity << "expected " << std::setw(14) << r.expected << "got " << r.actual << "\n";
        std::cout << (ok ? "all rows match\n" : "MISMATCH\n");
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes over GF(2^m) + u GF(2^m), Gray images and CSS parameters"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--output", global.output, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", global.seed, "seed for the witness search");
    app.add_option("--budget", global.budget, "information sets sampled by the witness search");
    app.add_flag("--paper-form", global.paper_form, "print lifted factors as (1+u) p((1+u)x)");

    std::size_t factor_n = 1;
    unsigned factor_m = 1;
    bool factor_lift = false;
    auto* factor = app.add_subcommand("factor", "factor x^n - 1 over GF(2^m)");
    factor->add_option("-n", factor_n, "odd length")->required();
    factor->add_option("-m", factor_m, "field degree")->required();
    factor->add_flag("--lift", factor_lift, "also print the lifts to x^n - (1+u)");

    CodeInput build_in, verify_in, gray_in, dist_in, quantum_in;
    auto* build = app.add_subcommand("build", "validate a code and print its descriptor");
    build_in.attach(build);
    auto* verify = app.add_subcommand("verify", "cardinality, dual, dual-containing test, Gray parameters");
    verify_in.attach(verify);

    std::string word;
    auto* gray = app.add_subcommand("gray", "Gray image of a code, or of a single word with --word");
    gray_in.attach(gray);
    gray->add_option("--word", word, "word as JSON [[a, b], ...]; needs -m");

    std::string dist_mode = "auto", quantum_mode = "auto";
    auto* distance = app.add_subcommand("distance", "minimum Lee distance");
    dist_in.attach(distance);
    distance->add_option("--mode", dist_mode)->check(CLI::IsMember({"auto", "exact", "upper"}));
    auto* quantum = app.add_subcommand("quantum", "CSS quantum code parameters");
    quantum_in.attach(quantum);
    quantum->add_option("--mode", quantum_mode)->check(CLI::IsMember({"auto", "exact", "upper"}));

    std::string which = "all";
    std::string fixtures = CONSTACODE_FIXTURE_DIR;
    auto* repro = app.add_subcommand("reproduce", "rerun the fixed example codes");
    repro->add_option("example", which, "5.5, 6.6-85, 6.6-93 or all")
        ->check(CLI::IsMember({"5.5", "6.6-85", "6.6-93", "all"}));
    repro->add_option("--fixtures", fixtures, "directory with the descriptor files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*factor) return cmd_factor(global, factor_n, factor_m, factor_lift);
        if (*build) return cmd_build(global, build_in.load());
        if (*verify) return cmd_verify(global, verify_in.load());
        if (*gray) {
            if (!word.empty()) {
                if (!gray_in.m) throw Error(ErrorKind::ParseError, "--word needs -m");
                return cmd_gray(global, nullptr, word, *gray_in.m);
            }
            const ConstaCode code = gray_in.load();
            return cmd_gray(global, &code, word, code.m());
        }
        if (*distance) return cmd_distance(global, dist_in.load(), dist_mode);
        if (*quantum) return cmd_quantum(global, quantum_in.load(), quantum_mode);
        if (*repro) return cmd_reproduce(global, which, fixtures);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
