#include <gtest/gtest.h>

#include <random>
#include <set>

#include "constacode/constacode.hpp"
#include "oracles.hpp"

using namespace constacode;

namespace {

RPoly rp(const std::string& text, unsigned m) { return parse_poly(text, m); }

/// Every way of distributing the lifted factors of x^n - 1 among f, g, h.
std::vector<ConstaCode> all_codes(std::size_t n, unsigned m) {
    const auto fs = factor_xn_minus_1(n, m);
    const ChainRing& ring = ChainRing::of(m);
    std::vector<ConstaCode> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        RPoly parts[3] = {RPoly::one(ring), RPoly::one(ring), RPoly::one(ring)};
        std::size_t t = code;
        for (const auto& f : fs) {
            parts[t % 3] = parts[t % 3] * mu_lift(f, n);
            t /= 3;
        }
        out.push_back(build_code(parts[0], parts[1], parts[2], n, m));
    }
    return out;
}

RPoly full_modulus(std::size_t n, unsigned m) { return constacyclic_modulus(n, m); }

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

}  // namespace

TEST(Build, SmallExample) {
    const auto c = build_code(rp("(x + 1 + u)*(x + w*(1+u))", 2), rp("1", 2), rp("x + w^2*(1+u)", 2), 3, 2);
    EXPECT_EQ(c.k1(), 0U);
    EXPECT_EQ(c.k2(), 1U);
    EXPECT_EQ(c.gray_image().length(), 12U);
    EXPECT_EQ(c.gray_image().dimension(), 2U);
    EXPECT_EQ(cardinality_pretty(c), "2^2");
}

TEST(Build, TrivialCodes) {
    const ChainRing& r = ChainRing::of(2);
    const auto zero = build_code(full_modulus(5, 2), RPoly::one(r), RPoly::one(r), 5, 2);
    EXPECT_EQ(zero.gray_image().dimension(), 0U);
    EXPECT_EQ(cardinality(zero).exponent, 0U);
    EXPECT_EQ(cardinality_pretty(zero), "1");
    const auto full = build_code(RPoly::one(r), full_modulus(5, 2), RPoly::one(r), 5, 2);
    EXPECT_EQ(full.gray_image().dimension(), 20U);
    EXPECT_EQ(cardinality_pretty(full), "4^10");
    const auto half = build_code(RPoly::one(r), RPoly::one(r), full_modulus(5, 2), 5, 2);
    EXPECT_EQ(half.gray_image().dimension(), 10U);
    EXPECT_EQ(cardinality_pretty(half), "2^10");
}

TEST(Build, ValidationErrors) {
    const unsigned m = 2;
    const RPoly one = RPoly::one(ChainRing::of(m));
    EXPECT_EQ(kind_of([&] { build_code(rp("x + 1", m), rp("x + w", m), rp("x + w^2", m), 3, m); }),
              ErrorKind::BadFactorization);
    EXPECT_EQ(kind_of([&] { build_code(rp("x + 1 + u", m), rp("x + 1 + u", m), one, 3, m); }),
              ErrorKind::NotCoprime);
    EXPECT_EQ(kind_of([&] { build_code(rp("(1+u)*x + 1", m), one, one, 1, m); }), ErrorKind::NotMonic);
    EXPECT_EQ(kind_of([&] { build_code(one, one, one, 4, m); }), ErrorKind::EvenLength);
}

TEST(Build, CardinalityFormula) {
    for (std::size_t n : {3, 5, 7})
        for (unsigned m : {1U, 2U})
            for (const auto& c : all_codes(n, m)) {
                EXPECT_EQ(c.gray_image().dimension(), m * (2 * c.g().degree() + c.h().degree()));
                EXPECT_EQ(c.gray_image().dimension(), oracle::code_ideal(c).rows.size());
            }
}

TEST(Build, PowerOfTwoDecimal) {
    EXPECT_EQ(PowerOfTwo{0}.decimal(), "1");
    EXPECT_EQ(PowerOfTwo{10}.decimal(), "1024");
    EXPECT_EQ(PowerOfTwo{64}.decimal(), "18446744073709551616");
}

TEST(Dual, CardinalitiesMultiplyToAmbient) {
    for (std::size_t n : {1, 3, 5, 7, 9})
        for (unsigned m : {1U, 2U})
            for (const auto& c : all_codes(n, m)) {
                const auto d = dual(c);
                EXPECT_EQ(cardinality(c) * cardinality(d), PowerOfTwo{static_cast<unsigned>(2 * m * n)});
                EXPECT_EQ(dual(d), c);
            }
}

TEST(Dual, MatchesBruteForceOrthogonalComplement) {
    for (const auto& c : all_codes(3, 2)) {
        const auto ideal = oracle::code_ideal(c);
        const auto perp = oracle::brute_dual(ideal, 3, 2);
        const auto d = oracle::code_ideal(dual(c)).enumerate();
        EXPECT_EQ(std::set<std::uint64_t>(perp.begin(), perp.end()), std::set<std::uint64_t>(d.begin(), d.end()));
    }
}

TEST(Dual, ContainmentPredicateMatchesInclusion) {
    for (std::size_t n : {3, 5, 7})
        for (unsigned m : {1U, 2U})
            for (const auto& c : all_codes(n, m)) {
                const auto mine = oracle::code_ideal(c);
                bool included = true;
                for (auto r : oracle::code_ideal(dual(c)).rows) {
                    oracle::XorBasis probe = mine;
                    if (probe.insert(r)) included = false;
                }
                EXPECT_EQ(is_dual_containing(c), included);
                // and the Gray image follows suit
                EXPECT_EQ(is_dual_containing(c), c.gray_image().contains_code(c.gray_image().dual()));
            }
}

TEST(Dual, GrayImageOfDualIsBinaryDual) {
    for (std::size_t n : {3, 5})
        for (unsigned m : {1U, 2U, 3U})
            for (const auto& c : all_codes(n, m)) {
                const BinaryCode a = dual(c).gray_image();
                const BinaryCode b = c.gray_image().dual();
                EXPECT_EQ(a.dimension(), b.dimension());
                EXPECT_TRUE(a.contains_code(b));
            }
}

TEST(Membership, Generators) {
    for (const auto& c : all_codes(5, 2)) {
        const RWord g1 = word_from_poly(c.generator1(), 5, lambda(2));
        const RWord g2 = word_from_poly(c.generator2(), 5, lambda(2));
        EXPECT_TRUE(contains(c, g1, find_tob(2)));
        EXPECT_TRUE(contains(c, g2, find_tob(2)));
        EXPECT_TRUE(contains(c, nu_shift(g1, 2), find_tob(2)));
        EXPECT_TRUE(contains(c, RWord(5), find_tob(2)));
    }
    const auto c = all_codes(3, 2)[1];
    EXPECT_THROW(contains(c, RWord(4), find_tob(2)), Error);
}

TEST(Membership, AgreesWithOracleSpan) {
    std::mt19937_64 rng(17);
    for (const auto& c : all_codes(3, 2)) {
        const auto ideal = oracle::code_ideal(c).enumerate();
        const std::set<std::uint64_t> members(ideal.begin(), ideal.end());
        for (int t = 0; t < 300; ++t) {
            const RWord w = oracle::random_word(3, 2, rng);
            EXPECT_EQ(contains(c, w, find_tob(2)), members.count(oracle::pack(oracle::to_pairs(w), 2)) == 1);
        }
        for (std::uint64_t x : ideal) {
            RWord w;
            for (auto p : oracle::unpack(x, 3, 2)) w.emplace_back(p.a, p.b);
            ASSERT_TRUE(contains(c, w, find_tob(2)));
        }
    }
}

TEST(Membership, AlternateBasis) {
    // Another trace-orthogonal basis of GF(8), found by search here.
    const unsigned m = 3;
    TraceOrthogonalBasis other{m, {}};
    const auto& canonical = find_tob(m);
    for (unsigned a = 1; a < 8 && other.elements.empty(); ++a)
        for (unsigned b = 1; b < 8 && other.elements.empty(); ++b)
            for (unsigned c = 1; c < 8 && other.elements.empty(); ++c) {
                const unsigned s[3] = {a, b, c};
                bool ok = true;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        ok = ok && oracle::gf_trace(oracle::gf_mul(s[i], s[j], m), m) == (i == j ? 1U : 0U);
                std::vector<FieldElem> e{FieldElem(a), FieldElem(b), FieldElem(c)};
                if (ok && e != canonical.elements) other.elements = e;
            }
    ASSERT_EQ(other.elements.size(), 3U);
    for (const auto& c : all_codes(5, m)) {
        const BinaryCode img = generator_matrix_gray(c, other);
        EXPECT_EQ(img.dimension(), c.gray_image().dimension());
        EXPECT_TRUE(contains(c, word_from_poly(c.generator1(), 5, lambda(m)), other));
    }
}

TEST(QuasiCyclic, GrayImagesClosedUnderBlockShift) {
    for (std::size_t n : {3, 5, 7, 9})
        for (unsigned m : {1U, 2U})
            for (const auto& c : all_codes(n, m))
                for (const auto& row : c.gray_image().basis()) ASSERT_TRUE(c.gray_image().contains(sigma_m_shift(row, m)));
}

TEST(QuasiCyclic, CyclicCodesUnderNechaevPermutation) {
    // Cyclic codes over R of odd length: permuted Gray image is block-shift invariant.
    for (std::size_t n : {3, 5, 7})
        for (unsigned m : {1U, 2U}) {
            const auto fs = factor_xn_minus_1(n, m);
            const ChainRing& ring = ChainRing::of(m);
            std::size_t total = 1;
            for (std::size_t i = 0; i < fs.size(); ++i) total *= 3;
            for (std::size_t code = 0; code < total; ++code) {
                RPoly parts[3] = {RPoly::one(ring), RPoly::one(ring), RPoly::one(ring)};
                std::size_t t = code;
                for (const auto& f : fs) {
                    parts[t % 3] = parts[t % 3] * embed(f, ring);
                    t /= 3;
                }
                const auto words = cyclic_spanning_words(parts[0], parts[1], parts[2], n);
                std::vector<BitVec> rows;
                for (const auto& w : words) rows.push_back(nechaev_permutation(phi(w, find_tob(m)), n, m));
                const BinaryCode img(2 * m * n, rows);
                for (const auto& row : img.basis()) ASSERT_TRUE(img.contains(sigma_m_shift(row, m)));
            }
        }
}

TEST(KnownCodes, SmallLengths) {
    const auto c1 = build_code(rp("(x + 1 + u)*(x + w*(1+u))", 2), rp("1", 2), rp("x + w^2*(1+u)", 2), 3, 2);
    const auto c2 = build_code(rp("x + 1 + u", 2), rp("x + w^2*(1+u)", 2), rp("x + w*(1+u)", 2), 3, 2);
    const auto c5 =
        build_code(rp("x + 1 + u", 2), rp("x^2 + w^2*(1+u)*x + 1", 2), rp("x^2 + w*(1+u)*x + 1", 2), 5, 2);
    EXPECT_EQ(c1.gray_image().dimension(), 2U);
    EXPECT_EQ(c2.gray_image().dimension(), 6U);
    EXPECT_EQ(c5.gray_image().dimension(), 12U);
    EXPECT_EQ(c5.gray_image().length(), 20U);
}
