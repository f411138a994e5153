#pragma once

// (1+u)-constacyclic codes C = <f h, u f g> with f g h = x^n - (1+u), their
// duals, and their binary Gray images.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "constacode/bitvec.hpp"
#include "constacode/gray.hpp"
#include "constacode/poly.hpp"

namespace constacode {

/// A binary linear code kept as its generator rows and their echelon basis.
class BinaryCode {
public:
    BinaryCode() = default;
    BinaryCode(std::size_t length, std::vector<BitVec> rows)
        : length_(length), gen_rows_(std::move(rows)), rref_(length, gen_rows_) {}

    std::size_t length() const { return length_; }
    std::size_t dimension() const { return rref_.rank(); }
    const std::vector<BitVec>& gen_rows() const { return gen_rows_; }
    const EchelonBasis& rref() const { return rref_; }
    const std::vector<BitVec>& basis() const { return rref_.rows(); }

    bool contains(const BitVec& v) const { return rref_.contains(v); }

    /// The dual code, generated by a basis of the orthogonal complement.
    BinaryCode dual() const { return BinaryCode(length_, rref_.orthogonal_complement()); }

    bool contains_code(const BinaryCode& other) const {
        for (const auto& r : other.basis())
            if (!contains(r)) return false;
        return true;
    }

private:
    std::size_t length_ = 0;
    std::vector<BitVec> gen_rows_;
    EchelonBasis rref_;
};

/// 2^exponent, kept symbolically so cardinalities like 4^154 stay exact.
struct PowerOfTwo {
    unsigned exponent = 0;

    friend PowerOfTwo operator*(PowerOfTwo x, PowerOfTwo y) { return {x.exponent + y.exponent}; }
    friend bool operator==(PowerOfTwo, PowerOfTwo) = default;

    std::string decimal() const {
        std::vector<unsigned> digits{1};  // little-endian base 10
        for (unsigned i = 0; i < exponent; ++i) {
            unsigned carry = 0;
            for (auto& d : digits) {
                const unsigned v = d * 2 + carry;
                d = v % 10;
                carry = v / 10;
            }
            if (carry) digits.push_back(carry);
        }
        std::string out;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += static_cast<char>('0' + *it);
        return out;
    }
};

/// Reduces p modulo x^n - c and returns its n coefficients.
inline RWord word_from_poly(const RPoly& p, std::size_t n, RElem c) {
    const ChainRing& ring = p.ring();
    RPoly r = p.degree() >= static_cast<int>(n) ? poly_mod(p, RPoly::binomial(ring, n, c)) : p;
    RWord w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = r[i];
    return w;
}

inline RPoly poly_from_word(const RWord& w, unsigned m) { return RPoly(ChainRing::of(m), w); }

namespace detail {

/// F2-spanning set of the ideal <g1, g2> in R[x]/(x^n - c): every F2-basis
/// element of R times x^i g1 for i < rows1, and every F2-basis element of
/// GF(2^m) times x^i g2 for i < rows2 (g2 is a multiple of u).
inline std::vector<RWord> ideal_words(const RPoly& g1, std::size_t rows1, const RPoly& g2, std::size_t rows2,
                                      std::size_t n, RElem c) {
    const ChainRing& ring = g1.ring();
    const unsigned m = ring.degree();
    std::vector<RWord> out;
    auto push = [&](const RPoly& base, std::size_t rows, bool with_u) {
        for (std::size_t i = 0; i < rows; ++i) {
            const RWord shifted = word_from_poly(base.shifted(i), n, c);
            for (unsigned j = 0; j < m; ++j) {
                const FieldElem beta(1U << j);
                for (RElem scalar : {RElem(beta, FieldElem{}), RElem(FieldElem{}, beta)}) {
                    if (!with_u && !scalar.b.is_zero()) continue;
                    RWord w(n);
                    for (std::size_t k = 0; k < n; ++k) w[k] = ring.mul(scalar, shifted[k]);
                    out.push_back(std::move(w));
                }
            }
        }
    };
    if (!g1.is_zero()) push(g1, rows1, true);
    if (!g2.is_zero()) push(g2, rows2, false);
    return out;
}

inline BinaryCode gray_code_of(const std::vector<RWord>& words, std::size_t n, const TraceOrthogonalBasis& basis) {
    std::vector<BitVec> rows;
    rows.reserve(words.size());
    for (const auto& w : words) rows.push_back(phi(w, basis));
    return BinaryCode(2 * basis.m * n, std::move(rows));
}

inline void check_triple(const RPoly& f, const RPoly& g, const RPoly& h, std::size_t n, unsigned m,
                         RElem constant) {
    require_odd_length(n);
    const ChainRing& ring = ChainRing::of(m);
    const std::pair<const char*, const RPoly*> named[] = {{"f", &f}, {"g", &g}, {"h", &h}};
    for (auto [name, p] : named) {
        if (p->ring().degree() != m)
            throw Error(ErrorKind::BadDegree, std::string(name) + " has coefficients in the wrong ring");
        if (!p->is_monic()) throw Error(ErrorKind::NotMonic, std::string(name) + " is not monic");
    }
    // coprimality first: once the product matches, squarefreeness of x^n - 1 already implies it
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const FPoly d = poly_gcd(reduce_mod_u(*named[i].second), reduce_mod_u(*named[j].second));
            if (d.degree() > 0)
                throw Error(ErrorKind::NotCoprime,
                            std::string(named[i].first) + " and " + named[j].first + " share a factor mod u");
        }
    if (!(f * g * h == RPoly::binomial(ring, n, constant)))
        throw Error(ErrorKind::BadFactorization, "f*g*h differs from the ambient modulus");
}

}  // namespace detail

class ConstaCode {
public:
    /// Validates f g h = x^n - (1+u), monic, pairwise coprime.
    static ConstaCode build(RPoly f, RPoly g, RPoly h, std::size_t n, unsigned m) {
        detail::check_triple(f, g, h, n, m, lambda(m));
        return ConstaCode(std::move(f), std::move(g), std::move(h), n, m);
    }

    std::size_t n() const { return n_; }
    unsigned m() const { return m_; }
    const RPoly& f() const { return f_; }
    const RPoly& g() const { return g_; }
    const RPoly& h() const { return h_; }
    std::size_t k1() const { return static_cast<std::size_t>(g_.degree()); }
    std::size_t k2() const { return static_cast<std::size_t>(h_.degree()); }

    /// f h and u f g reduced modulo x^n - (1+u).
    RPoly generator1() const { return reduce(f_ * h_); }
    RPoly generator2() const { return reduce((f_ * g_).scaled(ChainRing::of(m_).u())); }

    /// log2 |C| = m (2 deg g + deg h).
    std::size_t gray_dimension() const { return m_ * (2 * k1() + k2()); }

    /// F2-spanning set of C as words of R^n.
    std::vector<RWord> spanning_words() const {
        const ChainRing& ring = ChainRing::of(m_);
        return detail::ideal_words(f_ * h_, k1() + k2(), (f_ * g_).scaled(ring.u()), k2(), n_, ring.lambda());
    }

    /// Gray image under the canonical basis find_tob(m), computed once.
    const BinaryCode& gray_image() const { return *gray_; }

    friend bool operator==(const ConstaCode& x, const ConstaCode& y) {
        return x.n_ == y.n_ && x.m_ == y.m_ && x.f_ == y.f_ && x.g_ == y.g_ && x.h_ == y.h_;
    }

private:
    ConstaCode(RPoly f, RPoly g, RPoly h, std::size_t n, unsigned m)
        : n_(n), m_(m), f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
        gray_ = std::make_shared<const BinaryCode>(build_gray(find_tob(m_)));
    }

    RPoly reduce(const RPoly& p) const { return poly_mod(p, constacyclic_modulus(n_, m_)); }

    BinaryCode build_gray(const TraceOrthogonalBasis& basis) const {
        BinaryCode code = detail::gray_code_of(spanning_words(), n_, basis);
        if (code.dimension() != gray_dimension())
            throw Error(ErrorKind::RankMismatch, "Gray image has rank " + std::to_string(code.dimension()) +
                                                     ", expected " + std::to_string(gray_dimension()));
        return code;
    }

    friend BinaryCode generator_matrix_gray(const ConstaCode& c, const TraceOrthogonalBasis& basis);

    std::size_t n_;
    unsigned m_;
    RPoly f_, g_, h_;
    std::shared_ptr<const BinaryCode> gray_;
};

inline ConstaCode build_code(RPoly f, RPoly g, RPoly h, std::size_t n, unsigned m) {
    return ConstaCode::build(std::move(f), std::move(g), std::move(h), n, m);
}

/// |C| = 2^(m (2 deg g + deg h)).
inline PowerOfTwo cardinality(const ConstaCode& c) { return {static_cast<unsigned>(c.gray_dimension())}; }

/// "4^a*2^b" with the factors that are present; "1" for the zero code.
inline std::string cardinality_pretty(const ConstaCode& c) {
    const std::size_t quads = c.m() * c.k1();
    const std::size_t pairs = c.m() * c.k2();
    std::string out;
    if (quads) out += "4^" + std::to_string(quads);
    if (pairs) out += (out.empty() ? "" : "*") + std::string("2^") + std::to_string(pairs);
    return out.empty() ? "1" : out;
}

/// C-perp = <g* h*, u g* f*>, i.e. the triple (g*, f*, h*).
inline ConstaCode dual(const ConstaCode& c) {
    return ConstaCode::build(reciprocal(c.g()), reciprocal(c.f()), reciprocal(c.h()), c.n(), c.m());
}

/// C-perp is contained in C exactly when f divides g*.
inline bool is_dual_containing(const ConstaCode& c) { return divides(c.f(), reciprocal(c.g())); }

inline BinaryCode generator_matrix_gray(const ConstaCode& c, const TraceOrthogonalBasis& basis) {
    if (basis.m != c.m()) throw Error(ErrorKind::BadDegree, "basis degree differs from the code's field degree");
    if (basis == find_tob(c.m())) return c.gray_image();
    return c.build_gray(basis);
}

inline bool contains(const ConstaCode& c, const RWord& w, const TraceOrthogonalBasis& basis) {
    if (w.size() != c.n())
        throw Error(ErrorKind::LengthMismatch,
                    "word has length " + std::to_string(w.size()) + ", code has " + std::to_string(c.n()));
    if (basis == find_tob(c.m())) return c.gray_image().contains(phi(w, basis));
    return generator_matrix_gray(c, basis).contains(phi(w, basis));
}

/// Spanning words of the cyclic code <f h, u f g> in R[x]/(x^n - 1), f g h = x^n - 1.
inline std::vector<RWord> cyclic_spanning_words(const RPoly& f, const RPoly& g, const RPoly& h, std::size_t n) {
    const ChainRing& ring = f.ring();
    detail::check_triple(f, g, h, n, ring.degree(), ring.one());
    return detail::ideal_words(f * h, static_cast<std::size_t>(g.degree() + h.degree()), (f * g).scaled(ring.u()),
                               static_cast<std::size_t>(h.degree()), n, ring.one());
}

inline BinaryCode gray_image_of_words(const std::vector<RWord>& words, std::size_t n,
                                      const TraceOrthogonalBasis& basis) {
    return detail::gray_code_of(words, n, basis);
}

}  // namespace constacode
