#ifndef LIECENSUS_POLYSPACE_HPP
#define LIECENSUS_POLYSPACE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"

namespace liecensus {

inline constexpr std::uint64_t default_poly_cap = 20'000'000;

// A prime power q with a sign: +1 selects GL_n(q), -1 selects GU_n(q).
// Polynomials, matrices and central elements live in field(): GF(q) for
// eps = +1 and GF(q^2) for eps = -1.
struct SignedQ {
    unsigned q = 0;
    int epsilon = 1;
    Tower tower;

    bool linear() const noexcept { return epsilon == 1; }
    const FieldPtr& field_ptr() const noexcept { return linear() ? tower.base : tower.ext; }
    const Field& field() const noexcept { return *field_ptr(); }
    // |Z(GL_n(eps q))| = q - eps.
    std::int64_t center_order() const noexcept { return static_cast<std::int64_t>(q) - epsilon; }
};

inline SignedQ make_signed_q(std::uint64_t q, int epsilon)
{
    if (epsilon != 1 && epsilon != -1)
        throw invalid_argument("epsilon must be +1 or -1");
    return SignedQ{static_cast<unsigned>(q), epsilon, make_tower(q)};
}

enum class GammaFamily { F0, F1, F2 };

inline const char* to_string(GammaFamily f)
{
    switch (f) {
    case GammaFamily::F0: return "F0";
    case GammaFamily::F1: return "F1";
    case GammaFamily::F2: return "F2";
    }
    return "?";
}

// An orbit of alpha -> alpha^{eps q} on nonzero roots, identified by the
// polynomial whose roots are the orbit.  For F2, `factor` is the smaller of
// the pair {Delta, tilde Delta}; otherwise factor == poly.
struct GammaOrbit {
    GammaFamily family = GammaFamily::F0;
    Poly poly;
    Poly factor;

    unsigned degree() const noexcept { return static_cast<unsigned>(poly.size() - 1); }

    friend bool operator==(const GammaOrbit& a, const GammaOrbit& b) { return a.poly == b.poly; }
    friend std::strong_ordering operator<=>(const GammaOrbit& a, const GammaOrbit& b)
    {
        return poly::compare(a.poly, b.poly);
    }
};

// All monic irreducibles of degree d over F, in canonical order.  A monic
// polynomial of degree d is reducible iff it has a monic irreducible factor of
// degree at most d/2, so those products are sieved out.
inline std::vector<Poly> irreducibles(const Field& F, unsigned d, std::uint64_t cap = default_poly_cap)
{
    if (d == 0)
        return {};
    const unsigned Q = F.order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        total *= Q;
        if (total > cap)
            throw cap_exceeded("too many monic polynomials of degree " + std::to_string(d));
    }
    // Index of a monic polynomial in for_each_monic order.
    auto index = [&](const Poly& f) {
        std::uint64_t k = 0;
        for (unsigned i = 0; i < d; ++i)
            k = k * Q + f[i];
        return k;
    };
    std::vector<char> reducible(total, 0);
    for (unsigned e = 1; 2 * e <= d; ++e)
        for (const Poly& f : irreducibles(F, e, cap))
            poly::for_each_monic(Q, d - e, [&](const Poly& g) { reducible[index(poly::mul(F, f, g))] = 1; });
    std::vector<Poly> out;
    for (std::uint64_t k = 0; k < total; ++k) {
        if (reducible[k])
            continue;
        Poly f(d + 1, 0);
        f[d] = 1;
        std::uint64_t r = k;
        for (unsigned i = d; i-- > 0;) {
            f[i] = static_cast<Elem>(r % Q);
            r /= Q;
        }
        out.push_back(std::move(f));
    }
    return out;
}

// tilde(Delta)(X) = X^m a0^{-q} Delta^{(q)}(1/X); roots alpha -> alpha^{-q}.
inline Poly tilde(const Tower& t, const Poly& delta)
{
    const Field& F = *t.ext;
    if (!poly::is_monic(delta))
        throw invalid_argument("tilde requires a monic polynomial");
    if (delta[0] == 0)
        throw invalid_argument("tilde requires a nonzero constant term");
    const std::size_t m = delta.size() - 1;
    const Elem a0 = F.pow(delta[0], -static_cast<std::int64_t>(t.q));
    Poly out(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        out[i] = F.mul(a0, t.frobenius_q(delta[m - i]));
    return out;
}

inline GammaOrbit make_gamma(const SignedQ& sq, const Poly& factor)
{
    if (sq.linear())
        return {GammaFamily::F0, factor, factor};
    Poly t = tilde(sq.tower, factor);
    if (t == factor)
        return {GammaFamily::F1, factor, factor};
    const Field& F = sq.field();
    return {GammaFamily::F2, poly::mul(F, factor, t), std::min(factor, t, poly::less{})};
}

// Every orbit polynomial of degree <= n, canonically ordered.
inline std::vector<GammaOrbit> gamma_set(const SignedQ& sq, unsigned n, std::uint64_t cap = default_poly_cap)
{
    const Field& F = sq.field();
    std::vector<GammaOrbit> out;
    for (unsigned d = 1; d <= n; ++d) {
        for (const Poly& f : irreducibles(F, d, cap)) {
            if (f[0] == 0) // X itself
                continue;
            GammaOrbit g = make_gamma(sq, f);
            if (g.degree() > n)
                continue;
            if (g.family == GammaFamily::F2 && g.factor != f)
                continue; // counted once from the smaller of the pair
            out.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_central(const SignedQ& sq, Elem z)
{
    return z != 0 && sq.field().pow(z, sq.center_order()) == 1;
}

// The monic polynomial whose roots are z times those of g.
inline Poly scale_roots(const Field& F, const Poly& g, Elem z)
{
    const std::size_t d = g.size() - 1;
    Poly out(g.size());
    for (std::size_t j = 0; j <= d; ++j)
        out[j] = F.mul(g[j], F.pow(z, static_cast<std::int64_t>(d - j)));
    return out;
}

// z Gamma for a central z (z^{q - eps} = 1).  Since z^{-q} = z when eps = -1,
// scaling commutes with tilde and F2 pairs map to F2 pairs.
inline GammaOrbit twist(const SignedQ& sq, Elem z, const GammaOrbit& g)
{
    if (!sq.field().contains(z) || !is_central(sq, z))
        throw invalid_argument("twist requires z with z^(q - eps) = 1");
    const Field& F = sq.field();
    GammaOrbit out = make_gamma(sq, scale_roots(F, g.factor, z));
    return out;
}

inline GammaOrbit twist(const SignedQ& sq, const FieldElem& z, const GammaOrbit& g)
{
    if (!same_field(*z.context(), sq.field()))
        throw context_mismatch("twist element is not in the group's field");
    return twist(sq, z.value(), g);
}

// Least element of multiplicative order q - eps in field(); its powers are
// the central scalars of GL_n(eps q).
inline Elem central_generator(const SignedQ& sq)
{
    const Field& F = sq.field();
    const auto m = static_cast<std::uint64_t>(sq.center_order());
    for (Elem a = 1; a < F.order(); ++a)
        if (F.mult_order(a) == m)
            return a;
    throw std::logic_error("no central generator");
}

// z_k = g^{(q - eps)/k}; requires k | q - eps.
inline Elem central_element_of_order(const SignedQ& sq, unsigned k)
{
    if (k == 0 || sq.center_order() % k != 0)
        throw inadmissible("k = " + std::to_string(k) + " does not divide q - eps = "
                           + std::to_string(sq.center_order()));
    return sq.field().pow(central_generator(sq), sq.center_order() / k);
}

} // namespace liecensus

#endif
