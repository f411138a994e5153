#pragma once

// The chain ring R = GF(2^m) + u GF(2^m), u^2 = 0.

#include <string>

#include "constacode/gf2m.hpp"

namespace constacode {

/// a + u*b.
struct RElem {
    FieldElem a;
    FieldElem b;

    constexpr RElem() = default;
    constexpr RElem(FieldElem a_, FieldElem b_) : a(a_), b(b_) {}
    constexpr RElem(unsigned a_bits, unsigned b_bits) : a(a_bits), b(b_bits) {}

    constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend constexpr RElem operator+(RElem x, RElem y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr bool operator==(RElem, RElem) = default;
    friend constexpr auto operator<=>(RElem, RElem) = default;
};

class ChainRing {
public:
    using value_type = RElem;

    explicit ChainRing(const GF2m& field) : field_(&field) {}

    static const ChainRing& of(unsigned m) {
        static const std::array<ChainRing, kMaxDegree + 1> rings = [] {
            std::array<ChainRing, kMaxDegree + 1> out{ChainRing(GF2m::of(1)), ChainRing(GF2m::of(1)),
                                                      ChainRing(GF2m::of(2)), ChainRing(GF2m::of(3)),
                                                      ChainRing(GF2m::of(4)), ChainRing(GF2m::of(5)),
                                                      ChainRing(GF2m::of(6)), ChainRing(GF2m::of(7)),
                                                      ChainRing(GF2m::of(8))};
            return out;
        }();
        check_degree(m);
        return rings[m];
    }

    const GF2m& field() const { return *field_; }
    unsigned degree() const { return field_->degree(); }

    RElem zero() const { return {}; }
    RElem one() const { return {1U, 0U}; }
    RElem u() const { return {0U, 1U}; }
    RElem lambda() const { return {1U, 1U}; }
    RElem add(RElem x, RElem y) const { return x + y; }
    RElem neg(RElem x) const { return x; }

    RElem mul(RElem x, RElem y) const {
        const GF2m& f = *field_;
        return {f.mul(x.a, y.a), f.mul(x.a, y.b) + f.mul(x.b, y.a)};
    }

    bool is_unit(RElem x) const { return !x.a.is_zero(); }
    bool is_zero(RElem x) const { return x.is_zero(); }

    /// (a + ub)^-1 = a^-1 + u a^-2 b.
    RElem inv(RElem x) const {
        if (x.a.is_zero()) throw Error(ErrorKind::NotAUnit, "a + u*b with a = 0 has no inverse");
        const FieldElem ai = field_->inv(x.a);
        return {ai, field_->mul(field_->mul(ai, ai), x.b)};
    }

    RElem pow(RElem x, std::uint64_t e) const {
        RElem r = one();
        while (e) {
            if (e & 1U) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    RElem embed(FieldElem a) const { return {a, FieldElem{}}; }

    bool valid(RElem x) const { return field_->valid(x.a) && field_->valid(x.b); }

private:
    const GF2m* field_;
};

inline RElem r_mul(RElem x, RElem y, unsigned m) { return ChainRing::of(m).mul(x, y); }
inline RElem r_inv(RElem x, unsigned m) { return ChainRing::of(m).inv(x); }

/// The constacyclic constant 1 + u.
inline RElem lambda(unsigned m) { return ChainRing::of(m).lambda(); }

/// "a", "u*b", or "(a + u*b)"; a + u*a prints as "a*(1+u)".
inline std::string pretty(RElem x) {
    auto wrap = [](FieldElem f) {
        std::string s = pretty(f);
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
    };
    if (x.b.is_zero()) return pretty(x.a);
    if (x.a.is_zero()) return x.b.bits == 1 ? "u" : "u*" + wrap(x.b);
    if (x.a == x.b) return x.a.bits == 1 ? "(1+u)" : wrap(x.a) + "*(1+u)";
    return "(" + pretty(x.a) + " + u*" + wrap(x.b) + ")";
}

}  // namespace constacode
