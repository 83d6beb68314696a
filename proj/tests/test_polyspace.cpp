#include <map>
#include <set>

#include <gtest/gtest.h>

#include "liecensus/polyspace.hpp"

using namespace liecensus;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Orbits of alpha -> alpha^{eps q} on the nonzero algebraic closure, counted
// through exponents in a cyclic group of order M that contains every orbit
// of size dividing d.  Returns the number of orbits of size exactly d.
std::uint64_t orbit_count_by_exponents(unsigned q, int eps, unsigned d)
{
    const std::uint64_t M = ipow(q, eps == 1 ? d : 2 * d) - 1;
    const std::uint64_t step = eps == 1 ? q % M : (M - q % M) % M;
    std::uint64_t exact = 0;
    for (std::uint64_t e = 0; e < M; ++e) {
        std::uint64_t x = e;
        unsigned size = 0;
        do {
            x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * step) % M);
            ++size;
        } while (x != e && size <= d);
        exact += size == d;
    }
    return exact / d;
}

bool irreducible_by_trial_division(const Field& F, const Poly& f)
{
    const int d = poly::degree(f);
    bool reducible = false;
    for (int k = 1; 2 * k <= d && !reducible; ++k)
        poly::for_each_monic(F.order(), static_cast<unsigned>(k), [&](const Poly& g) {
            if (!reducible && poly::mod(F, f, g).empty())
                reducible = true;
        });
    return !reducible;
}

std::map<unsigned, std::uint64_t> degree_histogram(const std::vector<GammaOrbit>& gs)
{
    std::map<unsigned, std::uint64_t> h;
    for (const auto& g : gs)
        ++h[g.degree()];
    return h;
}

} // namespace

TEST(Irreducibles, GF2Quadratic)
{
    auto F = make_field(2, 1);
    auto irr = irreducibles(*F, 2);
    ASSERT_EQ(irr.size(), 1u);
    EXPECT_EQ(irr[0], (Poly{1, 1, 1}));
}

TEST(Irreducibles, LinearAndQuadraticCounts)
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
        auto t = make_tower(q);
        EXPECT_EQ(irreducibles(*t.base, 1).size(), q);
        EXPECT_EQ(irreducibles(*t.base, 2).size(), (q * q - q) / 2);
    }
    EXPECT_EQ(irreducibles(*make_field(3, 1), 2).size(), 3u);
}

TEST(Irreducibles, GaussCount)
{
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto t = make_tower(q);
        std::map<unsigned, std::uint64_t> n;
        for (unsigned d = 1; d <= 4; ++d)
            n[d] = irreducibles(*t.base, d).size();
        for (unsigned d = 1; d <= 4; ++d) {
            std::uint64_t sum = 0;
            for (unsigned e = 1; e <= d; ++e)
                if (d % e == 0)
                    sum += e * n[e];
            EXPECT_EQ(sum, ipow(q, d)) << "q=" << q << " d=" << d;
        }
    }
}

TEST(Irreducibles, RabinAgreesWithTrialDivision)
{
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto F = make_tower(q).base;
        for (unsigned d = 1; d <= (q <= 3 ? 5u : 4u); ++d)
            poly::for_each_monic(q, d, [&](const Poly& f) {
                ASSERT_EQ(poly::is_irreducible(*F, f), irreducible_by_trial_division(*F, f))
                    << "q=" << q << " f=" << poly::to_string(f);
            });
    }
}

TEST(Irreducibles, CapExceeded)
{
    auto F = make_field(5, 1);
    EXPECT_THROW(irreducibles(*F, 4, 100), cap_exceeded);
}

TEST(Tilde, FixesXMinusOneOverGF4)
{
    auto t = make_tower(2);
    Poly d = poly::linear(*t.ext, 1);
    EXPECT_EQ(tilde(t, d), d);
}

TEST(Tilde, GF9Generator)
{
    auto t = make_tower(3);
    const Field& E = *t.ext;
    const Elem g = E.primitive();
    ASSERT_EQ(E.mult_order(g), 8u);
    EXPECT_EQ(tilde(t, poly::linear(E, g)), poly::linear(E, E.pow(g, 5)));
}

TEST(Tilde, InvolutionOverGF9)
{
    auto t = make_tower(3);
    for (unsigned d = 1; d <= 2; ++d)
        poly::for_each_monic(9, d, [&](const Poly& f) {
            if (f[0] == 0)
                return;
            Poly tf = tilde(t, f);
            EXPECT_TRUE(poly::is_monic(tf));
            EXPECT_EQ(poly::degree(tf), poly::degree(f));
            EXPECT_EQ(tilde(t, tf), f);
        });
}

TEST(Tilde, RootsMapToMinusQPower)
{
    auto t = make_tower(3);
    const Field& E = *t.ext;
    for (Elem a = 1; a < E.order(); ++a)
        for (Elem b = 1; b < E.order(); ++b) {
            Poly f = poly::mul(E, poly::linear(E, a), poly::linear(E, b));
            Poly expect = poly::mul(E, poly::linear(E, E.pow(a, -3)), poly::linear(E, E.pow(b, -3)));
            ASSERT_EQ(tilde(t, f), expect);
        }
}

TEST(Tilde, Errors)
{
    auto t = make_tower(3);
    EXPECT_THROW(tilde(t, Poly{0, 1}), invalid_argument);
    EXPECT_THROW(tilde(t, Poly{1, 2}), invalid_argument);
}

TEST(GammaSet, Examples)
{
    auto gl2 = gamma_set(make_signed_q(2, 1), 1);
    ASSERT_EQ(gl2.size(), 1u);
    EXPECT_EQ(gl2[0].poly, (Poly{1, 1}));

    const auto sq4 = make_signed_q(2, -1);
    auto gu2 = gamma_set(sq4, 1);
    EXPECT_EQ(gu2.size(), 3u);
    const Field& F4 = sq4.field();
    for (const auto& g : gu2) {
        EXPECT_EQ(g.family, GammaFamily::F1);
        EXPECT_EQ(F4.pow(F4.neg(g.poly[0]), 3), 1u); // root is a cube root of unity
    }

    auto gl3 = gamma_set(make_signed_q(3, 1), 2);
    auto h = degree_histogram(gl3);
    EXPECT_EQ(gl3.size(), 5u);
    EXPECT_EQ(h[1], 2u);
    EXPECT_EQ(h[2], 3u);
}

TEST(GammaSet, OrbitCountsMatchExponentModel)
{
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (int eps : {1, -1}) {
            const unsigned n = q <= 3 ? 4 : 3;
            auto h = degree_histogram(gamma_set(make_signed_q(q, eps), n));
            for (unsigned d = 1; d <= n; ++d)
                EXPECT_EQ(h[d], orbit_count_by_exponents(q, eps, d)) << "q=" << q << " eps=" << eps << " d=" << d;
        }
}

TEST(GammaSet, PartitionProperty)
{
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (int eps : {1, -1}) {
            const unsigned n = q <= 3 ? 4 : 3;
            auto h = degree_histogram(gamma_set(make_signed_q(q, eps), n));
            for (unsigned d = 1; d <= n; ++d) {
                std::int64_t sum = 0;
                for (unsigned e = 1; e <= d; ++e)
                    if (d % e == 0)
                        sum += static_cast<std::int64_t>(e * h[e]);
                const auto qd = static_cast<std::int64_t>(ipow(q, d));
                const std::int64_t expect = eps == 1 ? qd - 1 : qd - ((d % 2) ? -1 : 1);
                EXPECT_EQ(sum, expect) << "q=" << q << " eps=" << eps << " d=" << d;
            }
        }
}

TEST(GammaSet, StructureOfUnitaryFamilies)
{
    for (unsigned q : {2u, 3u, 4u}) {
        auto sq = make_signed_q(q, -1);
        for (const auto& g : gamma_set(sq, 4)) {
            EXPECT_NE(g.poly[0], 0u);
            EXPECT_EQ(tilde(sq.tower, g.poly), g.poly);
            if (g.family == GammaFamily::F2) {
                Poly other = tilde(sq.tower, g.factor);
                EXPECT_NE(other, g.factor);
                EXPECT_TRUE(poly::less{}(g.factor, other));
                EXPECT_EQ(poly::mul(sq.field(), g.factor, other), g.poly);
            } else {
                EXPECT_EQ(g.factor, g.poly);
            }
        }
    }
}

TEST(GammaSet, SortedAndDuplicateFree)
{
    auto gs = gamma_set(make_signed_q(3, -1), 3);
    EXPECT_TRUE(std::is_sorted(gs.begin(), gs.end()));
    EXPECT_EQ(std::adjacent_find(gs.begin(), gs.end()), gs.end());
}

TEST(Twist, Examples)
{
    auto sq = make_signed_q(3, 1);
    const Elem minus_one = 2;
    auto x_minus_1 = make_gamma(sq, Poly{2, 1});
    EXPECT_EQ(twist(sq, minus_one, x_minus_1).poly, (Poly{1, 1}));
    auto x2_plus_1 = make_gamma(sq, Poly{1, 0, 1});
    EXPECT_EQ(twist(sq, minus_one, x2_plus_1).poly, (Poly{1, 0, 1}));
    for (const auto& g : gamma_set(sq, 2))
        EXPECT_EQ(twist(sq, Elem{1}, g), g);
}

TEST(Twist, RejectsNonCentral)
{
    auto sq = make_signed_q(5, 1);
    auto g = gamma_set(sq, 1).front();
    EXPECT_THROW(twist(sq, Elem{0}, g), invalid_argument);
    auto gu = make_signed_q(2, -1);
    // In GF(4) every nonzero element has order dividing 3 = q + 1; in GF(9)
    // with eps = -1 the generator has order 8, not dividing 4.
    auto gu3 = make_signed_q(3, -1);
    EXPECT_THROW(twist(gu3, gu3.field().primitive(), gamma_set(gu3, 1).front()), invalid_argument);
    EXPECT_NO_THROW(twist(gu, gu.field().primitive(), gamma_set(gu, 1).front()));
}

TEST(Twist, IsCyclicGroupAction)
{
    for (unsigned q : {3u, 4u, 5u, 7u})
        for (int eps : {1, -1}) {
            auto sq = make_signed_q(q, eps);
            const auto gs = gamma_set(sq, 3);
            const std::set<GammaOrbit> all(gs.begin(), gs.end());
            std::vector<Elem> zs;
            const Elem gen = central_generator(sq);
            for (std::int64_t j = 0; j < sq.center_order(); ++j)
                zs.push_back(sq.field().pow(gen, j));
            for (const auto& g : gs)
                for (Elem z : zs) {
                    auto zg = twist(sq, z, g);
                    ASSERT_EQ(zg.degree(), g.degree());
                    ASSERT_TRUE(all.count(zg));
                    ASSERT_EQ(zg.family, g.family);
                    for (Elem w : zs)
                        ASSERT_EQ(twist(sq, w, zg), twist(sq, sq.field().mul(w, z), g));
                }
        }
}

TEST(CentralElements, CanonicalChoice)
{
    auto sq = make_signed_q(5, 1);
    EXPECT_EQ(central_generator(sq), 2u);
    EXPECT_EQ(central_element_of_order(sq, 2), 4u);
    EXPECT_EQ(central_element_of_order(sq, 1), 1u);
    EXPECT_THROW(central_element_of_order(sq, 3), inadmissible);
    auto gu = make_signed_q(3, -1);
    EXPECT_EQ(gu.field().mult_order(central_element_of_order(gu, 4)), 4u);
}
