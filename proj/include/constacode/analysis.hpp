#pragma once

// Minimum distances (exhaustive and information-set witness search) and CSS
// quantum parameters of dual-containing codes.

#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "constacode/code.hpp"

namespace constacode {

enum class DistanceMode { exact, upper_bound };

inline std::string to_string(DistanceMode mode) { return mode == DistanceMode::exact ? "exact" : "upper_bound"; }

struct DistanceReport {
    std::size_t value = 0;
    DistanceMode mode = DistanceMode::exact;
    BitVec witness;
    std::uint64_t effort = 0;
};

inline constexpr std::uint64_t kDefaultMaxEnumeration = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultBudget = 100000;
inline constexpr std::uint64_t kDefaultSeed = 0xC0DE;

namespace detail {

inline void require_enumerable(std::size_t dimension, std::uint64_t max_codewords) {
    if (dimension >= 64 || (std::uint64_t{1} << dimension) > max_codewords)
        throw Error(ErrorKind::TooLarge, "2^" + std::to_string(dimension) + " codewords exceed the enumeration limit " +
                                             std::to_string(max_codewords));
}

}  // namespace detail

/// Exhaustive minimum Hamming weight over all nonzero codewords (Gray-code walk over the basis).
inline DistanceReport min_distance_exact(const BinaryCode& code,
                                         std::uint64_t max_codewords = kDefaultMaxEnumeration) {
    const std::size_t k = code.dimension();
    if (k == 0) throw Error(ErrorKind::ZeroCode, "the zero code has no minimum distance");
    detail::require_enumerable(k, max_codewords);
    const auto& basis = code.basis();
    BitVec current(code.length());
    DistanceReport best{std::numeric_limits<std::size_t>::max(), DistanceMode::exact, {}, 0};
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        const std::size_t w = current.weight();
        if (w < best.value) {
            best.value = w;
            best.witness = current;
        }
    }
    best.effort = total - 1;
    return best;
}

/// Exhaustive minimum Lee weight, enumerated over R^n words rather than Gray images.
inline DistanceReport min_lee_distance_exact(const ConstaCode& code, const TraceOrthogonalBasis& basis,
                                             std::uint64_t max_codewords = kDefaultMaxEnumeration) {
    const std::size_t k = code.gray_dimension();
    if (k == 0) throw Error(ErrorKind::ZeroCode, "the zero code has no minimum distance");
    detail::require_enumerable(k, max_codewords);

    std::vector<RWord> independent;
    EchelonBasis span(2 * code.m() * code.n());
    for (auto& w : code.spanning_words())
        if (span.insert(phi(w, basis))) independent.push_back(std::move(w));

    const unsigned q = 1U << code.m();
    std::vector<unsigned> table(static_cast<std::size_t>(q) * q);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) table[a * q + b] = lee_weight(RElem(a, b), basis);

    RWord current(code.n());
    DistanceReport best{std::numeric_limits<std::size_t>::max(), DistanceMode::exact, {}, 0};
    RWord best_word;
    const std::uint64_t total = std::uint64_t{1} << independent.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const RWord& step = independent[static_cast<std::size_t>(std::countr_zero(i))];
        std::size_t w = 0;
        for (std::size_t j = 0; j < current.size(); ++j) {
            current[j] = current[j] + step[j];
            w += table[current[j].a.bits * q + current[j].b.bits];
        }
        if (w < best.value) {
            best.value = w;
            best_word = current;
        }
    }
    best.witness = phi(best_word, basis);
    best.effort = total - 1;
    return best;
}

enum class SearchSide { automatic, generator, parity_check };

namespace detail {

/// Gauss-Jordan elimination choosing pivot columns in the given order; returns the pivot column per row.
inline std::vector<std::size_t> rref_in_order(std::vector<BitVec>& rows, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col : order) {
        if (r == rows.size()) break;
        std::size_t i = r;
        while (i < rows.size() && !rows[i].get(col)) ++i;
        if (i == rows.size()) continue;
        std::swap(rows[i], rows[r]);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != r && rows[j].get(col)) rows[j] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

inline void shuffle_columns(std::vector<std::size_t>& order, std::mt19937_64& rng) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
}

}  // namespace detail

/// Lightest nonzero codeword found by (a) every single and pair of echelon
/// basis rows, then (b) `budget` random information sets. Each information
/// set is the greedy set of independent columns under a random column order,
/// and its systematic rows are examined. When the code has more information
/// than redundancy the same rows are read off the parity-check matrix reduced
/// in the reverse order.
inline DistanceReport min_distance_upper_bound(const BinaryCode& code, std::uint64_t budget = kDefaultBudget,
                                               std::uint64_t seed = kDefaultSeed,
                                               SearchSide side = SearchSide::automatic) {
    const std::size_t k = code.dimension();
    const std::size_t len = code.length();
    if (k == 0) throw Error(ErrorKind::ZeroCode, "the zero code has no minimum distance");
    DistanceReport best{std::numeric_limits<std::size_t>::max(), DistanceMode::upper_bound, {}, 0};
    auto offer = [&best](const BitVec& v) {
        const std::size_t w = v.weight();
        if (w > 0 && w < best.value) {
            best.value = w;
            best.witness = v;
        }
    };

    const auto& basis = code.basis();
    for (std::size_t i = 0; i < k; ++i) {
        offer(basis[i]);
        for (std::size_t j = i + 1; j < k; ++j) offer(basis[i] ^ basis[j]);
    }
    best.effort = k + k * (k - 1) / 2;

    if (side == SearchSide::automatic) side = k <= len - k ? SearchSide::generator : SearchSide::parity_check;
    const std::vector<BitVec> generator = basis;
    const std::vector<BitVec> parity = side == SearchSide::parity_check ? code.rref().orthogonal_complement()
                                                                          : std::vector<BitVec>{};

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(len);
    for (std::size_t i = 0; i < len; ++i) order[i] = i;
    std::vector<std::size_t> counts(len);
    std::vector<char> is_pivot(len);

    for (std::uint64_t it = 0; it < budget; ++it) {
        detail::shuffle_columns(order, rng);
        if (side == SearchSide::generator) {
            std::vector<BitVec> rows = generator;
            detail::rref_in_order(rows, order);
            for (const auto& r : rows) offer(r);
        } else {
            std::vector<BitVec> rows = parity;
            const std::vector<std::size_t> reversed(order.rbegin(), order.rend());
            const auto pivots = detail::rref_in_order(rows, reversed);
            std::fill(counts.begin(), counts.end(), 0);
            std::fill(is_pivot.begin(), is_pivot.end(), 0);
            for (auto p : pivots) is_pivot[p] = 1;
            for (const auto& r : rows) {
                const auto& words = r.words();
                for (std::size_t wi = 0; wi < words.size(); ++wi)
                    for (std::uint64_t bits = words[wi]; bits; bits &= bits - 1)
                        ++counts[wi * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
            }
            for (std::size_t j = 0; j < len; ++j) {
                if (is_pivot[j] || counts[j] + 1 >= best.value) continue;
                BitVec v(len);
                v.set(j);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (rows[i].get(j)) v.set(pivots[i]);
                offer(v);
            }
        }
        best.effort += k;
    }
    return best;
}

struct QuantumParams {
    std::size_t length = 0;
    long long logical_dim_exponent = 0;
    DistanceReport distance;

    /// "[[n, k, d]]", with "?" after d for an upper bound.
    std::string pretty() const {
        return "[[" + std::to_string(length) + ", " + std::to_string(logical_dim_exponent) + ", " +
               std::to_string(distance.value) + (distance.mode == DistanceMode::upper_bound ? "?" : "") + "]]";
    }
};

enum class DistanceStrategy { automatic, exact, upper_bound };

struct DistanceOptions {
    DistanceStrategy strategy = DistanceStrategy::automatic;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_codewords = kDefaultMaxEnumeration;
};

/// Minimum Lee distance of C: exhaustive when the code is small enough, else a witness upper bound on Phi(C).
inline DistanceReport lee_distance_report(const ConstaCode& code, const TraceOrthogonalBasis& basis,
                                          const DistanceOptions& opt = {}) {
    const std::size_t k = code.gray_dimension();
    bool exact = opt.strategy == DistanceStrategy::exact;
    if (opt.strategy == DistanceStrategy::automatic)
        exact = k < 64 && (std::uint64_t{1} << k) <= opt.max_codewords;
    if (exact) return min_lee_distance_exact(code, basis, opt.max_codewords);
    return min_distance_upper_bound(generator_matrix_gray(code, basis), opt.budget, opt.seed);
}

/// [[2mn, 4m k1 + 2m k2 - 2mn, d_L]] for a dual-containing code, with k1 = deg g and k2 = deg h.
inline QuantumParams css_params(const ConstaCode& code, const TraceOrthogonalBasis& basis,
                                const DistanceOptions& opt = {}) {
    const DivMod<ChainRing> test = poly_divmod(reciprocal(code.g()), code.f());
    if (!test.remainder.is_zero())
        throw Error(ErrorKind::NotDualContaining,
                    "f does not divide g*: the remainder has degree " + std::to_string(test.remainder.degree()));
    const long long m = code.m();
    const long long n = static_cast<long long>(code.n());
    QuantumParams out;
    out.length = static_cast<std::size_t>(2 * m * n);
    out.logical_dim_exponent = 4 * m * static_cast<long long>(code.k1()) +
                               2 * m * static_cast<long long>(code.k2()) - 2 * m * n;
    const long long dim = static_cast<long long>(generator_matrix_gray(code, basis).dimension());
    if (out.logical_dim_exponent != 2 * dim - 2 * m * n)
        throw Error(ErrorKind::RankMismatch, "CSS dimension disagrees with the Gray image rank");
    out.distance = lee_distance_report(code, basis, opt);
    return out;
}

}  // namespace constacode
