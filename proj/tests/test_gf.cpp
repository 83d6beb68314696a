#include <map>
#include <random>

#include <gtest/gtest.h>

#include "liecensus/gf.hpp"
#include "liecensus/poly.hpp"

using namespace liecensus;

namespace {

// Independent reference: multiply two coordinate vectors as polynomials over
// GF(p) and reduce modulo the defining polynomial.
std::vector<Elem> schoolbook_mul(unsigned p, const std::vector<Elem>& modulus, std::vector<Elem> a,
                                 std::vector<Elem> b)
{
    const std::size_t e = modulus.size() - 1;
    std::vector<long> prod(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j)
            prod[i + j] += static_cast<long>(a[i]) * b[j];
    for (std::size_t d = prod.size(); d-- > e;) {
        long c = prod[d] % p;
        prod[d] = 0;
        for (std::size_t i = 0; i < e; ++i)
            prod[d - e + i] -= c * modulus[i];
    }
    std::vector<Elem> out(e);
    for (std::size_t i = 0; i < e; ++i)
        out[i] = static_cast<Elem>(((prod[i] % long(p)) + p) % p);
    return out;
}

bool irreducible_by_trial_division(unsigned p, const Poly& f)
{
    auto F = Field::prime(p);
    const int d = poly::degree(f);
    for (int k = 1; 2 * k <= d; ++k) {
        bool found = false;
        poly::for_each_monic(p, static_cast<unsigned>(k), [&](const Poly& g) {
            if (!found && poly::mod(*F, f, g).empty())
                found = true;
        });
        if (found)
            return false;
    }
    return true;
}

} // namespace

TEST(Field, PrimeFieldGF2)
{
    auto F = make_field(2, 1);
    EXPECT_EQ(F->order(), 2u);
    EXPECT_EQ(F->characteristic(), 2u);
    EXPECT_EQ(F->add(1, 1), 0u);
    EXPECT_EQ(F->mul(1, 1), 1u);
}

TEST(Field, GF9GeneratorHasOrderEight)
{
    auto F = make_field(3, 2);
    EXPECT_EQ(F->order(), 9u);
    EXPECT_EQ(F->mult_order(F->primitive()), 8u);
    int generators = 0;
    for (Elem a = 1; a < 9; ++a)
        generators += F->mult_order(a) == 8;
    EXPECT_EQ(generators, 4); // phi(8)
}

TEST(Field, RejectsNonPrimeAndDegreeZero)
{
    EXPECT_THROW(make_field(4, 1), invalid_argument);
    EXPECT_THROW(make_field(1, 1), invalid_argument);
    EXPECT_THROW(make_field(3, 0), invalid_argument);
}

TEST(Field, ArithmeticGF3)
{
    auto F = make_field(3, 1);
    auto r = field_arith({F, 2}, {F, 2});
    EXPECT_EQ(r.sum.value(), 1u);
    EXPECT_EQ(r.product.value(), 1u);
    EXPECT_EQ(r.inverse.value(), 2u);
}

TEST(Field, ArithmeticGF4Omega)
{
    auto F = make_field(2, 2);
    EXPECT_EQ(F->defining_poly(), (std::vector<Elem>{1, 1, 1}));
    // omega is the class of X, index 2 in coordinate encoding.
    FieldElem w{F, 2};
    auto r = field_arith(w, w);
    EXPECT_TRUE(r.sum.is_zero());
    EXPECT_EQ(r.product, w * w);
    EXPECT_EQ(r.product.value(), 3u); // omega^2 = omega + 1
    EXPECT_EQ(r.inverse, r.product);
}

TEST(Field, InverseIsInverseInGF9)
{
    auto F = make_field(3, 2);
    for (Elem a = 1; a < F->order(); ++a)
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
    EXPECT_THROW(F->inv(0), invalid_argument);
    EXPECT_THROW(FieldElem(F, 0).inverse(), invalid_argument);
}

TEST(Field, ContextMismatchThrows)
{
    auto F = make_field(3, 1);
    auto G = make_field(5, 1);
    EXPECT_THROW((void)(FieldElem(F, 1) + FieldElem(G, 1)), context_mismatch);
    EXPECT_THROW(FieldElem(F, 3), invalid_argument);
}

TEST(Field, PrimitiveElements)
{
    EXPECT_EQ(primitive_element(make_field(2, 1)).value(), 1u);
    EXPECT_EQ(primitive_element(make_field(5, 1)).value(), 2u);
    auto F9 = make_field(3, 2);
    Elem least = 0;
    for (Elem a = 1; a < 9 && !least; ++a)
        if (F9->mult_order(a) == 8)
            least = a;
    EXPECT_EQ(primitive_element(F9).value(), least);
}

TEST(Field, DefiningPolynomialIsLeastIrreducible)
{
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto F = make_field(p, e);
        const auto& f = F->defining_poly();
        ASSERT_EQ(poly::degree(f), static_cast<int>(e));
        EXPECT_TRUE(irreducible_by_trial_division(p, f));
        // Any monic irreducible preceding it in constant-term-first order would win.
        bool earlier = false;
        poly::for_each_monic(p, e, [&](const Poly& g) {
            if (std::lexicographical_compare(g.begin(), g.end(), f.begin(), f.end())
                && irreducible_by_trial_division(p, g))
                earlier = true;
        });
        EXPECT_FALSE(earlier) << "p=" << p << " e=" << e;
    }
}

TEST(Field, MultiplicationMatchesSchoolbook)
{
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        auto F = make_field(p, e);
        const auto& f = F->defining_poly();
        for (Elem a = 0; a < F->order(); ++a)
            for (Elem b = 0; b < F->order(); ++b)
                ASSERT_EQ(F->coordinates(F->mul(a, b)), schoolbook_mul(p, f, F->coordinates(a), F->coordinates(b)));
    }
}

TEST(Field, CyclicDivisorStructure)
{
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 2}, {3, 3}}) {
        auto F = make_field(p, e);
        const unsigned m = F->order() - 1;
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d != 0)
                continue;
            unsigned roots = 0;
            for (Elem a = 1; a < F->order(); ++a)
                roots += F->pow(a, d) == 1;
            EXPECT_EQ(roots, d) << "GF(" << F->order() << ") d=" << d;
        }
    }
}

TEST(Tower, FrobeniusExamples)
{
    auto t = make_tower(3);
    const Elem g = t.ext->primitive();
    ASSERT_EQ(t.ext->mult_order(g), 8u);
    EXPECT_EQ(t.frobenius_q(g), t.ext->pow(g, 3));
    for (Elem a = 0; a < 3; ++a)
        EXPECT_EQ(t.frobenius_q(t.embed(a)), a);
}

TEST(Tower, FixedSetIsEmbeddedBase)
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto t = make_tower(q);
        unsigned fixed = 0;
        for (Elem a = 0; a < t.ext->order(); ++a)
            if (t.frobenius_q(a) == a) {
                ++fixed;
                EXPECT_TRUE(t.in_base(a));
            }
        EXPECT_EQ(fixed, q);
    }
}

TEST(Tower, FrobeniusIsInvolutionOnRandomGF25)
{
    auto t = make_tower(5);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Elem> pick(0, t.ext->order() - 1);
    for (int i = 0; i < 20; ++i) {
        FieldElem a{t.ext, pick(rng)};
        EXPECT_EQ(t.frobenius_q(t.frobenius_q(a)), a);
    }
}

TEST(Tower, FrobeniusIsAutomorphism)
{
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto t = make_tower(q);
        const Field& E = *t.ext;
        for (Elem a = 0; a < E.order(); ++a)
            for (Elem b = 0; b < E.order(); ++b) {
                ASSERT_EQ(t.frobenius_q(E.add(a, b)), E.add(t.frobenius_q(a), t.frobenius_q(b)));
                ASSERT_EQ(t.frobenius_q(E.mul(a, b)), E.mul(t.frobenius_q(a), t.frobenius_q(b)));
            }
    }
}

TEST(Tower, EmbeddingRespectsArithmetic)
{
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        auto t = make_tower(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                EXPECT_EQ(t.embed(t.base->add(a, b)), t.ext->add(t.embed(a), t.embed(b)));
                EXPECT_EQ(t.embed(t.base->mul(a, b)), t.ext->mul(t.embed(a), t.embed(b)));
            }
    }
}

TEST(Tower, EmbedRejectsForeignElement)
{
    auto t = make_tower(3);
    auto other = make_field(5, 1);
    EXPECT_THROW(t.embed(FieldElem(other, 1)), context_mismatch);
    EXPECT_THROW(t.frobenius_q(FieldElem(t.base, 1)), context_mismatch);
}
