#pragma once

// Arithmetic in GF(2^m), 1 <= m <= 8, in the polynomial basis over a fixed
// irreducible modulus per degree, plus the absolute trace and a canonical
// trace-orthogonal basis.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "constacode/error.hpp"

namespace constacode {

inline constexpr unsigned kMaxDegree = 8;

/// Bit i is the coefficient of w^i, w a root of the modulus for the ambient degree.
struct FieldElem {
    std::uint8_t bits = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(unsigned b) : bits(static_cast<std::uint8_t>(b)) {}

    constexpr bool is_zero() const { return bits == 0; }
    friend constexpr FieldElem operator+(FieldElem x, FieldElem y) { return FieldElem(x.bits ^ y.bits); }
    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Modulus polynomial (including the leading x^m bit) for each supported degree.
constexpr unsigned field_modulus(unsigned m) {
    constexpr std::array<unsigned, kMaxDegree + 1> moduli = {
        0,
        0b11,         // x + 1
        0b111,        // x^2 + x + 1
        0b1011,       // x^3 + x + 1
        0b10011,      // x^4 + x + 1
        0b100101,     // x^5 + x^2 + 1
        0b1000011,    // x^6 + x + 1
        0b10001001,   // x^7 + x^3 + 1
        0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
    };
    return m <= kMaxDegree ? moduli[m] : 0;
}

inline void check_degree(unsigned m) {
    if (m < 1 || m > kMaxDegree)
        throw Error(ErrorKind::BadDegree, "extension degree must be in 1..8, got " + std::to_string(m));
}

/// Carry-less product reduced by the modulus; the reference path the tables are built from.
constexpr unsigned clmul_reduce(unsigned x, unsigned y, unsigned m) {
    unsigned acc = 0;
    for (unsigned i = 0; i < m; ++i)
        if (y >> i & 1U) acc ^= x << i;
    const unsigned mod = field_modulus(m);
    for (int d = static_cast<int>(2 * m) - 2; d >= static_cast<int>(m); --d)
        if (acc >> d & 1U) acc ^= mod << (d - static_cast<int>(m));
    return acc;
}

class GF2m {
public:
    using value_type = FieldElem;

    explicit GF2m(unsigned m) : m_(m), q_(1U << m) {
        check_degree(m);
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        for (unsigned x = 0; x < q_; ++x)
            for (unsigned y = 0; y < q_; ++y) mul_[x * q_ + y] = static_cast<std::uint8_t>(clmul_reduce(x, y, m));
        inv_.assign(q_, 0);
        for (unsigned x = 1; x < q_; ++x)
            for (unsigned y = 1; y < q_; ++y)
                if (mul_[x * q_ + y] == 1) inv_[x] = static_cast<std::uint8_t>(y);
        trace_.resize(q_);
        for (unsigned x = 0; x < q_; ++x) {
            FieldElem acc{}, p(x);
            for (unsigned i = 0; i < m; ++i) {
                acc = acc + p;
                p = mul(p, p);
            }
            if (acc.bits > 1) throw Error(ErrorKind::NotFound, "trace left the prime field");
            trace_[x] = acc.bits;
        }
    }

    /// Shared instance for degree m; construction is thread-safe.
    static const GF2m& of(unsigned m) {
        check_degree(m);
        static std::array<std::unique_ptr<GF2m>, kMaxDegree + 1> cache;
        static std::array<std::once_flag, kMaxDegree + 1> flags;
        std::call_once(flags[m], [m] { cache[m] = std::make_unique<GF2m>(m); });
        return *cache[m];
    }

    unsigned degree() const { return m_; }
    unsigned order() const { return q_; }

    FieldElem zero() const { return FieldElem{}; }
    FieldElem one() const { return FieldElem(1); }
    FieldElem add(FieldElem x, FieldElem y) const { return x + y; }
    FieldElem neg(FieldElem x) const { return x; }
    FieldElem mul(FieldElem x, FieldElem y) const { return FieldElem(mul_[x.bits * q_ + y.bits]); }
    bool is_unit(FieldElem x) const { return !x.is_zero(); }
    bool is_zero(FieldElem x) const { return x.is_zero(); }

    FieldElem inv(FieldElem x) const {
        if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(2^" + std::to_string(m_) + ")");
        return FieldElem(inv_[x.bits]);
    }

    FieldElem pow(FieldElem x, std::uint64_t e) const {
        FieldElem r = one();
        while (e) {
            if (e & 1U) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    unsigned trace(FieldElem x) const { return trace_[x.bits]; }

    bool valid(FieldElem x) const { return x.bits < q_; }

private:
    unsigned m_;
    unsigned q_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> inv_;
    std::vector<std::uint8_t> trace_;
};

inline FieldElem field_mul(FieldElem x, FieldElem y, unsigned m) { return GF2m::of(m).mul(x, y); }
inline FieldElem field_inv(FieldElem x, unsigned m) { return GF2m::of(m).inv(x); }
inline unsigned trace(FieldElem x, unsigned m) { return GF2m::of(m).trace(x); }

struct TraceOrthogonalBasis {
    unsigned m = 0;
    std::vector<FieldElem> elements;

    friend bool operator==(const TraceOrthogonalBasis&, const TraceOrthogonalBasis&) = default;
};

namespace detail {

inline bool extend_tob(const GF2m& field, const std::vector<FieldElem>& candidates, std::size_t from,
                       std::vector<FieldElem>& chosen) {
    if (chosen.size() == field.degree()) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
        const FieldElem c = candidates[i];
        bool orthogonal = true;
        for (FieldElem prev : chosen)
            if (field.trace(field.mul(prev, c)) != 0) {
                orthogonal = false;
                break;
            }
        if (!orthogonal) continue;
        chosen.push_back(c);
        if (extend_tob(field, candidates, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

inline TraceOrthogonalBasis search_tob(unsigned m) {
    const GF2m& field = GF2m::of(m);
    std::vector<FieldElem> candidates;
    for (unsigned x = 1; x < field.order(); ++x)
        if (field.trace(field.mul(FieldElem(x), FieldElem(x))) == 1) candidates.emplace_back(x);
    std::vector<FieldElem> chosen;
    if (!extend_tob(field, candidates, 0, chosen))
        throw Error(ErrorKind::NotFound, "no trace-orthogonal basis for m=" + std::to_string(m));
    return {m, chosen};
}

}  // namespace detail

/// First basis, as an increasing sequence of bit encodings, whose trace Gram
/// matrix is the identity. Such a basis is automatically F2-independent.
inline const TraceOrthogonalBasis& find_tob(unsigned m) {
    check_degree(m);
    static std::array<TraceOrthogonalBasis, kMaxDegree + 1> cache;
    static std::array<std::once_flag, kMaxDegree + 1> flags;
    std::call_once(flags[m], [m] { cache[m] = detail::search_tob(m); });
    return cache[m];
}

/// Bit i of the result is trace(x * alpha_i).
inline std::uint32_t coords(FieldElem x, const TraceOrthogonalBasis& basis) {
    const GF2m& field = GF2m::of(basis.m);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        out |= static_cast<std::uint32_t>(field.trace(field.mul(x, basis.elements[i]))) << i;
    return out;
}

inline FieldElem from_coords(std::uint32_t c, const TraceOrthogonalBasis& basis) {
    FieldElem x{};
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        if (c >> i & 1U) x = x + basis.elements[i];
    return x;
}

/// Hamming weight of the TOB coordinates of x.
inline unsigned field_lee_weight(FieldElem x, const TraceOrthogonalBasis& basis) {
    return static_cast<unsigned>(std::popcount(coords(x, basis)));
}

/// Polynomial in `w`, e.g. "0", "1", "w", "w^2+w+1".
inline std::string pretty(FieldElem x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (int i = 7; i >= 0; --i) {
        if (!(x.bits >> i & 1U)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "w";
        else
            out += "w^" + std::to_string(i);
    }
    return out;
}

}  // namespace constacode
