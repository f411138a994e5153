#pragma once

// Text grammar for polynomials over R and the JSON encodings of the library's
// value types.
//
// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := 'x' | 'w' | 'u' | '0' | '1' | '(' expr ')'
// e.g. "x^2 + w*(1+u)*x + 1". Subtraction equals addition in characteristic 2.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "constacode/analysis.hpp"

namespace constacode {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const ChainRing& ring) : text_(text), ring_(ring) {}

    RPoly parse() {
        RPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" +
                                               std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RPoly expr() {
        RPoly acc = term();
        while (accept('+') || accept('-')) acc += term();
        return acc;
    }

    RPoly term() {
        RPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    RPoly factor() {
        RPoly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (e > 100000) fail("exponent too large");
        RPoly out = RPoly::one(ring_);
        for (unsigned long i = 0; i < e; ++i) out = out * base;
        return out;
    }

    RPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_++];
        switch (c) {
            case 'x': return RPoly::monomial(ring_, ring_.one(), 1);
            case 'w':
                if (ring_.degree() < 2) fail("'w' needs m >= 2");
                return RPoly::constant(ring_, RElem(2U, 0U));
            case 'u': return RPoly::constant(ring_, ring_.u());
            case '0': return RPoly(ring_);
            case '1': return RPoly::one(ring_);
            case '(': {
                RPoly inner = expr();
                if (!accept(')')) fail("expected ')'");
                return inner;
            }
            default: --pos_; fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    std::string_view text_;
    const ChainRing& ring_;
    std::size_t pos_ = 0;
};

inline std::string as_factor(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) return "(" + s + ")";
    }
    return s;
}

template <class Coeff>
std::string poly_text(const std::vector<Coeff>& coeffs, Coeff one) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Coeff c = coeffs[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += as_factor(pretty(c));
            continue;
        }
        if (!(c == one)) out += as_factor(pretty(c)) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline RPoly parse_poly(std::string_view text, unsigned m) {
    return detail::PolyParser(text, ChainRing::of(m)).parse();
}

inline std::string to_text(const RPoly& p) { return detail::poly_text(p.coeffs(), p.ring().one()); }
inline std::string to_text(const FPoly& p) { return detail::poly_text(p.coeffs(), p.ring().one()); }

// ---- JSON ----------------------------------------------------------------

using json = nlohmann::json;

inline json to_json(RElem x) { return json::array({x.a.bits, x.b.bits}); }

inline json to_json(const RPoly& p) {
    json out = json::array();
    for (RElem c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const TraceOrthogonalBasis& basis) {
    json out = json::array();
    for (FieldElem e : basis.elements) out.push_back(e.bits);
    return out;
}

inline RElem relem_from_json(const json& j, unsigned m) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
        throw Error(ErrorKind::ParseError, "ring element must be [a_bits, b_bits]");
    const RElem x(j[0].get<unsigned>(), j[1].get<unsigned>());
    if (j[0].get<unsigned>() >= (1U << m) || j[1].get<unsigned>() >= (1U << m))
        throw Error(ErrorKind::ParseError, "ring element out of range for m=" + std::to_string(m));
    return x;
}

inline RPoly rpoly_from_json(const json& j, unsigned m) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial must be a JSON array");
    std::vector<RElem> c;
    for (const auto& e : j) c.push_back(relem_from_json(e, m));
    return RPoly(ChainRing::of(m), std::move(c));
}

inline json descriptor_json(const ConstaCode& code) {
    return json{{"n", code.n()}, {"m", code.m()}, {"f", to_json(code.f())}, {"g", to_json(code.g())},
                {"h", to_json(code.h())}};
}

/// Accepts `{n, m, f, g, h}`; each polynomial is a JSON array of [a, b] pairs
/// or a string in the text grammar. A missing g is taken as (x^n - (1+u)) / (f h).
inline ConstaCode code_from_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m"))
        throw Error(ErrorKind::ParseError, "descriptor needs n and m");
    const std::size_t n = j.at("n").get<std::size_t>();
    const unsigned m = j.at("m").get<unsigned>();
    check_degree(m);
    require_odd_length(n);
    auto read = [&](const char* key) -> std::optional<RPoly> {
        if (!j.contains(key)) return std::nullopt;
        const json& v = j.at(key);
        if (v.is_string()) return parse_poly(v.get<std::string>(), m);
        return rpoly_from_json(v, m);
    };
    const ChainRing& ring = ChainRing::of(m);
    RPoly f = read("f").value_or(RPoly::one(ring));
    RPoly h = read("h").value_or(RPoly::one(ring));
    std::optional<RPoly> g = read("g");
    if (!g) {
        const auto dm = poly_divmod(constacyclic_modulus(n, m), f * h);
        if (!dm.remainder.is_zero())
            throw Error(ErrorKind::BadFactorization, "f*h does not divide x^n - (1+u)");
        g = dm.quotient;
    }
    return build_code(std::move(f), std::move(*g), std::move(h), n, m);
}

inline json to_json(const BinaryCode& code) {
    json rows = json::array();
    for (const auto& r : code.basis()) rows.push_back(r.to_hex());
    return json{{"length", code.length()}, {"dimension", code.dimension()}, {"rows", rows}};
}

inline BinaryCode binary_code_from_json(const json& j) {
    const std::size_t length = j.at("length").get<std::size_t>();
    std::vector<BitVec> rows;
    for (const auto& r : j.at("rows")) rows.push_back(BitVec::from_hex(r.get<std::string>(), length));
    return BinaryCode(length, std::move(rows));
}

inline json to_json(const DistanceReport& r) {
    return json{{"value", r.value}, {"mode", to_string(r.mode)}, {"witness_hex", r.witness.to_hex()},
                {"effort", r.effort}};
}

inline json to_json(const QuantumParams& q) {
    return json{{"n", q.length}, {"k", q.logical_dim_exponent}, {"d", q.distance.value},
                {"d_mode", to_string(q.distance.mode)}};
}

}  // namespace constacode
