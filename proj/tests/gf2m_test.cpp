#include <gtest/gtest.h>

#include <random>

#include "constacode/gf2m.hpp"
#include "oracles.hpp"

using namespace constacode;

TEST(Field, SmallProducts) {
    EXPECT_EQ(field_mul(FieldElem(2), FieldElem(2), 2), FieldElem(3));  // w^2 = w + 1
    EXPECT_EQ(field_mul(FieldElem(2), FieldElem(3), 2), FieldElem(1));  // w^3 = 1
    EXPECT_EQ(field_mul(FieldElem(1), FieldElem(1), 1), FieldElem(1));
    EXPECT_EQ(field_mul(FieldElem(4), FieldElem(2), 3), FieldElem(3));  // x^3 = x + 1
}

TEST(Field, MultiplicationTableMatchesShiftAndAdd) {
    for (unsigned m = 1; m <= 8; ++m) {
        const GF2m& f = GF2m::of(m);
        for (unsigned x = 0; x < f.order(); ++x)
            for (unsigned y = 0; y < f.order(); ++y)
                ASSERT_EQ(f.mul(FieldElem(x), FieldElem(y)).bits, oracle::gf_mul(x, y, m)) << m << " " << x << " " << y;
    }
}

TEST(Field, InverseAndTraceMatchOracle) {
    for (unsigned m = 1; m <= 8; ++m) {
        const GF2m& f = GF2m::of(m);
        for (unsigned x = 1; x < f.order(); ++x) {
            EXPECT_EQ(f.inv(FieldElem(x)).bits, oracle::gf_inv(x, m));
            EXPECT_EQ(f.mul(FieldElem(x), f.inv(FieldElem(x))), f.one());
        }
        for (unsigned x = 0; x < f.order(); ++x) EXPECT_EQ(f.trace(FieldElem(x)), oracle::gf_trace(x, m));
    }
}

TEST(Field, InverseOfZeroThrows) {
    try {
        field_inv(FieldElem(0), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
}

TEST(Field, TraceExamples) {
    EXPECT_EQ(trace(FieldElem(0), 2), 0U);
    EXPECT_EQ(trace(FieldElem(1), 2), 0U);
    EXPECT_EQ(trace(FieldElem(2), 2), 1U);
    EXPECT_EQ(trace(FieldElem(3), 2), 1U);
    EXPECT_EQ(trace(FieldElem(1), 1), 1U);
    EXPECT_EQ(trace(FieldElem(1), 3), 1U);
}

TEST(Field, TraceIsLinear) {
    for (unsigned m = 1; m <= 8; ++m) {
        const GF2m& f = GF2m::of(m);
        for (unsigned x = 0; x < f.order(); ++x)
            for (unsigned y = 0; y < f.order(); y += (m > 5 ? 7 : 1))
                ASSERT_EQ(f.trace(FieldElem(x) + FieldElem(y)), f.trace(FieldElem(x)) ^ f.trace(FieldElem(y)));
    }
}

TEST(Field, FieldAxiomsExhaustiveSmall) {
    for (unsigned m = 1; m <= 4; ++m) {
        const GF2m& f = GF2m::of(m);
        for (unsigned a = 0; a < f.order(); ++a)
            for (unsigned b = 0; b < f.order(); ++b)
                for (unsigned c = 0; c < f.order(); ++c) {
                    const FieldElem x(a), y(b), z(c);
                    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    ASSERT_EQ(f.mul(x, y + z), f.mul(x, y) + f.mul(x, z));
                }
    }
}

TEST(Field, MultiplicativeOrderDividesGroupOrder) {
    for (unsigned m = 1; m <= 8; ++m) {
        const GF2m& f = GF2m::of(m);
        for (unsigned x = 1; x < f.order(); ++x) EXPECT_EQ(f.pow(FieldElem(x), f.order() - 1), f.one());
        EXPECT_EQ(f.pow(FieldElem(0), 0), f.one());
    }
}

TEST(Field, DegreeOutOfRange) {
    for (unsigned m : {0U, 9U}) {
        try {
            GF2m::of(m);
            FAIL() << m;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadDegree);
        }
    }
}

TEST(Tob, KnownBases) {
    EXPECT_EQ(find_tob(1).elements, std::vector<FieldElem>{FieldElem(1)});
    EXPECT_EQ(find_tob(2).elements, (std::vector<FieldElem>{FieldElem(2), FieldElem(3)}));
}

TEST(Tob, GramMatrixIsIdentityForAllDegrees) {
    for (unsigned m = 1; m <= 8; ++m) {
        const auto& basis = find_tob(m);
        ASSERT_EQ(basis.elements.size(), m);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) {
                const unsigned prod = oracle::gf_mul(basis.elements[i].bits, basis.elements[j].bits, m);
                EXPECT_EQ(oracle::gf_trace(prod, m), i == j ? 1U : 0U) << "m=" << m;
            }
    }
}

TEST(Tob, IsLexicographicallyFirstForSmallDegrees) {
    // Exhaustive over strictly increasing m-tuples.
    for (unsigned m = 1; m <= 4; ++m) {
        const unsigned q = 1U << m;
        std::vector<unsigned> pick;
        std::vector<unsigned> first;
        auto ok = [&](const std::vector<unsigned>& s) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (oracle::gf_trace(oracle::gf_mul(s[i], s[j], m), m) != (i == j ? 1U : 0U)) return false;
            return true;
        };
        auto rec = [&](auto&& self, unsigned from) -> void {
            if (!first.empty()) return;
            if (pick.size() == m) {
                if (ok(pick)) first = pick;
                return;
            }
            for (unsigned x = from; x < q && first.empty(); ++x) {
                pick.push_back(x);
                self(self, x + 1);
                pick.pop_back();
            }
        };
        rec(rec, 1);
        std::vector<unsigned> got;
        for (auto e : find_tob(m).elements) got.push_back(e.bits);
        EXPECT_EQ(got, first) << "m=" << m;
    }
}

TEST(Coords, Examples) {
    const auto& b = find_tob(2);
    EXPECT_EQ(coords(FieldElem(0), b), 0U);
    EXPECT_EQ(coords(FieldElem(2), b), 0b01U);
    EXPECT_EQ(coords(FieldElem(3), b), 0b10U);
    EXPECT_EQ(coords(FieldElem(1), b), 0b11U);  // 1 = w + w^2
    EXPECT_EQ(field_lee_weight(FieldElem(1), b), 2U);
}

TEST(Coords, RoundTripAndLinearity) {
    for (unsigned m = 1; m <= 8; ++m) {
        const auto& b = find_tob(m);
        for (unsigned x = 0; x < (1U << m); ++x) {
            const std::uint32_t c = coords(FieldElem(x), b);
            ASSERT_LT(c, 1U << m);
            ASSERT_EQ(from_coords(c, b), FieldElem(x));
            // c_i = Tr(x * beta_i) for a trace-orthogonal basis
            for (unsigned i = 0; i < m; ++i)
                ASSERT_EQ(c >> i & 1U, oracle::gf_trace(oracle::gf_mul(x, b.elements[i].bits, m), m));
        }
    }
}

TEST(Pretty, FieldElements) {
    EXPECT_EQ(pretty(FieldElem(0)), "0");
    EXPECT_EQ(pretty(FieldElem(1)), "1");
    EXPECT_EQ(pretty(FieldElem(2)), "w");
    EXPECT_EQ(pretty(FieldElem(3)), "w+1");
}
