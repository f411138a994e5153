#pragma once

// Dense univariate polynomials over GF(2^m) and over R, factorization of
// x^n - 1 for odd n, and the substitution x -> (1+u)x that carries those
// factors to x^n - (1+u).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "constacode/ring.hpp"

namespace constacode {

/// Coefficient i multiplies x^i. Canonical: no trailing zeros, zero polynomial is empty.
template <class Ring>
class Poly {
public:
    using coeff_type = typename Ring::value_type;

    explicit Poly(const Ring& ring) : ring_(&ring) {}
    Poly(const Ring& ring, std::vector<coeff_type> coeffs) : ring_(&ring), coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(const Ring& ring, coeff_type c) { return Poly(ring, {c}); }
    static Poly one(const Ring& ring) { return constant(ring, ring.one()); }

    static Poly monomial(const Ring& ring, coeff_type c, std::size_t k) {
        std::vector<coeff_type> v(k + 1, ring.zero());
        v[k] = c;
        return Poly(ring, std::move(v));
    }

    /// x^n + c, which is x^n - c in characteristic 2.
    static Poly binomial(const Ring& ring, std::size_t n, coeff_type c) {
        std::vector<coeff_type> v(n + 1, ring.zero());
        v[n] = ring.one();
        v[0] = ring.add(v[0], c);
        return Poly(ring, std::move(v));
    }

    const Ring& ring() const { return *ring_; }
    const std::vector<coeff_type>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    coeff_type operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
    coeff_type leading() const { return is_zero() ? ring_->zero() : coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == ring_->one(); }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_->zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = ring_->add(coeffs_[i], o.coeffs_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_->zero());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = ring_->add(coeffs_[i], ring_->neg(o.coeffs_[i]));
        trim();
        return *this;
    }

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly(*x.ring_);
        const Ring& r = *x.ring_;
        std::vector<coeff_type> out(x.coeffs_.size() + y.coeffs_.size() - 1, r.zero());
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (r.is_zero(x.coeffs_[i])) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                out[i + j] = r.add(out[i + j], r.mul(x.coeffs_[i], y.coeffs_[j]));
        }
        return Poly(r, std::move(out));
    }

    Poly scaled(coeff_type c) const {
        std::vector<coeff_type> out(coeffs_);
        for (auto& v : out) v = ring_->mul(v, c);
        return Poly(*ring_, std::move(out));
    }

    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<coeff_type> out(k, ring_->zero());
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Poly(*ring_, std::move(out));
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs_ == y.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    const Ring* ring_;
    std::vector<coeff_type> coeffs_;
};

using FPoly = Poly<GF2m>;
using RPoly = Poly<ChainRing>;

template <class Ring>
struct DivMod {
    Poly<Ring> quotient;
    Poly<Ring> remainder;
};

/// Long division; the divisor's leading coefficient must be a unit.
template <class Ring>
DivMod<Ring> poly_divmod(const Poly<Ring>& num, const Poly<Ring>& den) {
    const Ring& r = num.ring();
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    if (!r.is_unit(den.leading()))
        throw Error(ErrorKind::NonUnitLeadingCoeff, "divisor has a non-unit leading coefficient");
    const auto lead_inv = r.inv(den.leading());
    const int dd = den.degree();
    std::vector<typename Ring::value_type> rem = num.coeffs();
    std::vector<typename Ring::value_type> quo;
    if (num.degree() >= dd) quo.assign(static_cast<std::size_t>(num.degree() - dd + 1), r.zero());
    for (int i = num.degree(); i >= dd; --i) {
        const auto c = r.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (r.is_zero(c)) continue;
        const std::size_t shift = static_cast<std::size_t>(i - dd);
        quo[shift] = c;
        for (int j = 0; j <= dd; ++j) {
            auto& slot = rem[shift + static_cast<std::size_t>(j)];
            slot = r.add(slot, r.neg(r.mul(c, den.coeffs()[static_cast<std::size_t>(j)])));
        }
    }
    return {Poly<Ring>(r, std::move(quo)), Poly<Ring>(r, std::move(rem))};
}

template <class Ring>
Poly<Ring> poly_mod(const Poly<Ring>& num, const Poly<Ring>& den) {
    return poly_divmod(num, den).remainder;
}

template <class Ring>
bool divides(const Poly<Ring>& d, const Poly<Ring>& p) {
    return poly_divmod(p, d).remainder.is_zero();
}

template <class Ring>
Poly<Ring> make_monic(const Poly<Ring>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.ring().inv(p.leading()));
}

/// a0^-1 x^k p(1/x); requires a unit constant term.
template <class Ring>
Poly<Ring> reciprocal(const Poly<Ring>& p) {
    const Ring& r = p.ring();
    if (p.is_zero() || !r.is_unit(p[0]))
        throw Error(ErrorKind::NonUnitConstantTerm, "reciprocal needs a unit constant term");
    std::vector<typename Ring::value_type> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<Ring>(r, std::move(rev)).scaled(r.inv(p[0]));
}

/// Monic gcd over a field.
inline FPoly poly_gcd(FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly t = poly_mod(a, b);
        a = std::move(b);
        b = std::move(t);
    }
    return make_monic(a);
}

inline FPoly poly_mulmod(const FPoly& a, const FPoly& b, const FPoly& mod) { return poly_mod(a * b, mod); }

inline FPoly poly_powmod(FPoly base, std::uint64_t e, const FPoly& mod) {
    FPoly result = poly_mod(FPoly::one(base.ring()), mod);
    base = poly_mod(base, mod);
    while (e) {
        if (e & 1U) result = poly_mulmod(result, base, mod);
        base = poly_mulmod(base, base, mod);
        e >>= 1;
    }
    return result;
}

inline FPoly x_poly(const GF2m& field) { return FPoly::monomial(field, field.one(), 1); }

/// Canonical factor order: by degree, then coefficient vectors compared from x^0 upward.
template <class Ring>
bool canonical_less(const Poly<Ring>& x, const Poly<Ring>& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.coeffs() < y.coeffs();
}

namespace detail {

/// Splits a squarefree product of irreducibles that all have degree k.
inline void equal_degree_split(const FPoly& g, int k, std::mt19937_64& rng, std::vector<FPoly>& out) {
    if (g.degree() == k) {
        out.push_back(g);
        return;
    }
    const GF2m& field = g.ring();
    const unsigned q = field.order();
    const unsigned total_squarings = field.degree() * static_cast<unsigned>(k);
    for (;;) {
        std::vector<FieldElem> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = FieldElem(static_cast<unsigned>(rng() % q));
        FPoly a(field, std::move(c));
        if (a.degree() < 1) continue;
        // a + a^2 + a^4 + ... + a^(2^(mk-1)) mod g
        FPoly t = a;
        FPoly p = a;
        for (unsigned i = 1; i < total_squarings; ++i) {
            p = poly_mulmod(p, p, g);
            t += p;
        }
        FPoly d = poly_gcd(g, t);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            equal_degree_split(d, k, rng, out);
            equal_degree_split(poly_divmod(g, d).quotient, k, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Monic irreducible factors of the squarefree polynomial `p` over GF(2^m), canonical order.
inline std::vector<FPoly> factor_squarefree(const FPoly& p, std::uint64_t seed = 0x5eedf00dULL) {
    const GF2m& field = p.ring();
    std::mt19937_64 rng(seed);
    std::vector<FPoly> out;
    FPoly rest = make_monic(p);
    const FPoly x = x_poly(field);
    FPoly xq = x;
    for (int k = 1; 2 * k <= rest.degree(); ++k) {
        xq = poly_powmod(xq, field.order(), rest);
        FPoly g = poly_gcd(rest, xq - x);
        if (g.degree() > 0) {
            detail::equal_degree_split(g, k, rng, out);
            rest = poly_divmod(rest, g).quotient;
            xq = poly_mod(xq, rest);
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    std::sort(out.begin(), out.end(), canonical_less<GF2m>);
    return out;
}

inline void require_odd_length(std::size_t n) {
    if (n == 0 || n % 2 == 0)
        throw Error(ErrorKind::EvenLength, "length must be odd and positive, got " + std::to_string(n));
}

inline std::vector<FPoly> factor_xn_minus_1(std::size_t n, unsigned m) {
    require_odd_length(n);
    const GF2m& field = GF2m::of(m);
    return factor_squarefree(FPoly::binomial(field, n, field.one()));
}

/// Product of a list of polynomials (1 for an empty list).
template <class Ring>
Poly<Ring> product(const Ring& ring, const std::vector<Poly<Ring>>& factors) {
    Poly<Ring> acc = Poly<Ring>::one(ring);
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

inline RPoly embed(const FPoly& p, const ChainRing& ring) {
    std::vector<RElem> c;
    c.reserve(p.coeffs().size());
    for (FieldElem a : p.coeffs()) c.push_back(ring.embed(a));
    return RPoly(ring, std::move(c));
}

/// Image modulo u (drop every u-coefficient).
inline FPoly reduce_mod_u(const RPoly& p) {
    std::vector<FieldElem> c;
    c.reserve(p.coeffs().size());
    for (RElem e : p.coeffs()) c.push_back(e.a);
    return FPoly(p.ring().field(), std::move(c));
}

/// p(x) -> p((1+u)x).
inline RPoly substitute_lambda_x(const RPoly& p) {
    const ChainRing& r = p.ring();
    std::vector<RElem> c(p.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = r.mul(c[i], r.lambda());
    return RPoly(r, std::move(c));
}

/// Monic lift (1+u)^deg(p) p((1+u)x) of a factor of x^n - 1 to a factor of x^n - (1+u).
inline RPoly mu_lift(const FPoly& p, std::size_t n) {
    require_odd_length(n);
    const GF2m& field = p.ring();
    const ChainRing& ring = ChainRing::of(field.degree());
    if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "mu_lift expects a monic polynomial");
    if (!divides(p, FPoly::binomial(field, n, field.one())))
        throw Error(ErrorKind::NotAFactor, "polynomial does not divide x^" + std::to_string(n) + " - 1");
    RPoly lifted = substitute_lambda_x(embed(p, ring));
    return p.degree() % 2 == 1 ? lifted.scaled(ring.lambda()) : lifted;
}

/// The unit-scaled display form (1+u) p((1+u)x); same ideal as mu_lift(p).
inline RPoly mu_lift_unit_form(const FPoly& p, std::size_t n) {
    const ChainRing& ring = ChainRing::of(p.ring().degree());
    return mu_lift(p, n).scaled(p.degree() % 2 == 1 ? ring.one() : ring.lambda());
}

/// x^n - (1+u).
inline RPoly constacyclic_modulus(std::size_t n, unsigned m) {
    const ChainRing& ring = ChainRing::of(m);
    return RPoly::binomial(ring, n, ring.lambda());
}

}  // namespace constacode
