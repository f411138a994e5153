#pragma once

// The Gray map R^n -> F2^(2mn), Lee weights, and the shifts that the map
// intertwines.
//
// Block layout of Phi(c), c_i = r_i + u q_i, blocks of m bits each:
//   block i     = TOB coordinates of q_i          (0 <= i < n)
//   block n + i = TOB coordinates of r_i + q_i
// Bit j of a block is the coefficient of the j-th basis element.

#include <bit>
#include <string>
#include <vector>

#include "constacode/bitvec.hpp"
#include "constacode/ring.hpp"

namespace constacode {

using RWord = std::vector<RElem>;

inline BitVec phi(const RWord& w, const TraceOrthogonalBasis& basis) {
    const std::size_t n = w.size();
    const std::size_t m = basis.m;
    BitVec out(2 * m * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t q = coords(w[i].b, basis);
        const std::uint32_t rq = coords(w[i].a + w[i].b, basis);
        for (std::size_t j = 0; j < m; ++j) {
            if (q >> j & 1U) out.set(i * m + j);
            if (rq >> j & 1U) out.set((n + i) * m + j);
        }
    }
    return out;
}

/// Inverse of phi on its image.
inline RWord phi_inverse(const BitVec& v, const TraceOrthogonalBasis& basis) {
    const std::size_t m = basis.m;
    if (m == 0 || v.size() % (2 * m) != 0) throw Error(ErrorKind::BadBlocking, "length is not a multiple of 2m");
    const std::size_t n = v.size() / (2 * m);
    RWord w(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t q = 0, rq = 0;
        for (std::size_t j = 0; j < m; ++j) {
            q |= static_cast<std::uint32_t>(v.get(i * m + j)) << j;
            rq |= static_cast<std::uint32_t>(v.get((n + i) * m + j)) << j;
        }
        const FieldElem b = from_coords(q, basis);
        w[i] = RElem(from_coords(rq, basis) + b, b);
    }
    return w;
}

/// w_L(a + ub) = w(b) + w(a + b) in TOB coordinates.
inline unsigned lee_weight(RElem x, const TraceOrthogonalBasis& basis) {
    return field_lee_weight(x.b, basis) + field_lee_weight(x.a + x.b, basis);
}

inline std::size_t lee_weight(const RWord& w, const TraceOrthogonalBasis& basis) {
    std::size_t total = 0;
    for (RElem x : w) total += lee_weight(x, basis);
    return total;
}

inline RWord word_add(const RWord& x, const RWord& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "words of different lengths");
    RWord out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

/// In characteristic 2, x - y = x + y.
inline std::size_t lee_distance(const RWord& x, const RWord& y, const TraceOrthogonalBasis& basis) {
    return lee_weight(word_add(x, y), basis);
}

inline std::size_t hamming_distance(const BitVec& x, const BitVec& y) { return (x ^ y).weight(); }

/// (c0, ..., c_{n-1}) -> ((1+u) c_{n-1}, c0, ..., c_{n-2}).
inline RWord nu_shift(const RWord& w, unsigned m) {
    if (w.empty()) return w;
    const ChainRing& ring = ChainRing::of(m);
    RWord out(w.size());
    out[0] = ring.mul(ring.lambda(), w.back());
    for (std::size_t i = 1; i < w.size(); ++i) out[i] = w[i - 1];
    return out;
}

inline RWord sigma_shift(const RWord& w) {
    if (w.empty()) return w;
    RWord out(w.size());
    out[0] = w.back();
    for (std::size_t i = 1; i < w.size(); ++i) out[i] = w[i - 1];
    return out;
}

/// Rotates the 2n blocks of m bits right by one block.
inline BitVec sigma_m_shift(const BitVec& v, unsigned m) {
    if (m == 0 || v.size() % (2 * m) != 0) throw Error(ErrorKind::BadBlocking, "length is not a multiple of 2m");
    const std::size_t len = v.size();
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (v.get(i)) out.set((i + m) % len);
    return out;
}

/// Scales entry i by (1+u)^i; since (1+u)^2 = 1 only the odd entries change.
inline RWord mu_bar(const RWord& w, unsigned m) {
    if (w.size() % 2 == 0)
        throw Error(ErrorKind::EvenLengthUnsupported, "mu_bar is defined for odd lengths only");
    const ChainRing& ring = ChainRing::of(m);
    RWord out(w);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = ring.mul(ring.lambda(), out[i]);
    return out;
}

/// Swaps block 2i+1 with block n+2i+1 for 0 <= i <= (n-3)/2.
inline BitVec nechaev_permutation(const BitVec& v, std::size_t n, unsigned m) {
    if (n % 2 == 0)
        throw Error(ErrorKind::EvenLengthUnsupported, "the Nechaev permutation needs an odd length");
    if (v.size() != 2 * static_cast<std::size_t>(m) * n)
        throw Error(ErrorKind::BadBlocking, "length must be 2mn");
    BitVec out(v);
    for (std::size_t blk = 1; blk + 1 < n; blk += 2)
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t lo = blk * m + j;
            const std::size_t hi = (n + blk) * m + j;
            out.set(lo, v.get(hi));
            out.set(hi, v.get(lo));
        }
    return out;
}

inline bool check_commuting_nu(const RWord& w, const TraceOrthogonalBasis& basis) {
    return phi(nu_shift(w, basis.m), basis) == sigma_m_shift(phi(w, basis), basis.m);
}

inline bool check_commuting_mu(const RWord& w, const TraceOrthogonalBasis& basis) {
    return phi(mu_bar(w, basis.m), basis) == nechaev_permutation(phi(w, basis), w.size(), basis.m);
}

/// Binary string with a space between m-bit blocks and " | " between the two halves.
inline std::string block_string(const BitVec& v, unsigned m) {
    if (m == 0 || v.size() % (2 * m) != 0) throw Error(ErrorKind::BadBlocking, "length is not a multiple of 2m");
    const std::size_t blocks = v.size() / m;
    std::string out;
    for (std::size_t b = 0; b < blocks; ++b) {
        if (b > 0) out += b == blocks / 2 ? " | " : " ";
        for (std::size_t j = 0; j < m; ++j) out += v.get(b * m + j) ? '1' : '0';
    }
    return out;
}

}  // namespace constacode
