#ifndef LIECENSUS_POLY_HPP
#define LIECENSUS_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace liecensus {

// Univariate polynomial over a Field, ascending coefficients, no trailing
// zeros (the zero polynomial is empty).
using Poly = std::vector<Elem>;

namespace poly {

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_monic(const Poly& a) { return !a.empty() && a.back() == 1; }

inline Poly constant(Elem c) { return c == 0 ? Poly{} : Poly{c}; }

// X - a
inline Poly linear(const Field& F, Elem a) { return {F.neg(a), 1}; }

inline Poly add(const Field& F, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(r);
    return r;
}

inline Poly scale(const Field& F, const Poly& a, Elem c)
{
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Poly pow(const Field& F, const Poly& a, unsigned e)
{
    Poly r{1};
    for (unsigned i = 0; i < e; ++i)
        r = mul(F, r, a);
    return r;
}

// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(const Field& F, Poly a, const Poly& b)
{
    if (b.empty())
        throw invalid_argument("polynomial division by zero");
    trim(a);
    if (a.size() < b.size())
        return {Poly{}, a};
    const std::size_t db = b.size() - 1;
    const Elem lead_inv = F.inv(b.back());
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Elem c = F.mul(a[i], lead_inv);
        q[i - db] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

inline Poly make_monic(const Field& F, const Poly& a)
{
    if (a.empty())
        return a;
    return scale(F, a, F.inv(a.back()));
}

// Monic gcd (zero if both are zero).
inline Poly gcd(const Field& F, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline Poly derivative(const Field& F, const Poly& a)
{
    if (a.size() <= 1)
        return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
    trim(r);
    return r;
}

inline Elem eval(const Field& F, const Poly& a, Elem x)
{
    Elem r = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        r = F.add(F.mul(r, x), a[i]);
    return r;
}

// Over a perfect field, f is squarefree iff gcd(f, f') = 1; when f' = 0 the
// gcd is f itself, which correctly reports a p-th power as not squarefree.
inline bool is_squarefree(const Field& F, const Poly& f)
{
    if (f.empty())
        return false;
    return gcd(F, f, derivative(F, f)).size() == 1;
}

// a^e mod m for a large exponent.
inline Poly powmod(const Field& F, Poly a, std::uint64_t e, const Poly& m)
{
    Poly r = mod(F, Poly{1}, m);
    a = mod(F, a, m);
    while (e) {
        if (e & 1)
            r = mod(F, mul(F, r, a), m);
        a = mod(F, mul(F, a, a), m);
        e >>= 1;
    }
    return r;
}

// Rabin's test: f of degree d is irreducible over GF(Q) iff
// X^{Q^d} = X mod f and gcd(X^{Q^{d/r}} - X, f) = 1 for every prime r | d.
inline bool is_irreducible(const Field& F, const Poly& f)
{
    if (f.size() < 2)
        return false;
    const Poly monic = make_monic(F, f);
    const unsigned d = static_cast<unsigned>(monic.size() - 1);
    if (d == 1)
        return true;
    const Poly X{0, 1};
    std::vector<Poly> frob(d + 1); // frob[i] = X^{Q^i} mod f
    frob[0] = mod(F, X, monic);
    for (unsigned i = 1; i <= d; ++i)
        frob[i] = powmod(F, frob[i - 1], F.order(), monic);
    if (frob[d] != mod(F, X, monic))
        return false;
    for (auto r : prime_divisors(d)) {
        Poly g = gcd(F, sub(F, frob[d / r], X), monic);
        if (g.size() != 1)
            return false;
    }
    return true;
}

// Canonical polynomial order: degree first, then coefficients compared
// from the constant term upward.
inline std::strong_ordering compare(const Poly& a, const Poly& b)
{
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

struct less {
    bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

// Calls fn(poly) for every monic polynomial of degree d in canonical order.
template <class Fn>
void for_each_monic(unsigned Q, unsigned d, Fn&& fn)
{
    Poly c(d + 1, 0);
    c[d] = 1;
    while (true) {
        fn(static_cast<const Poly&>(c));
        std::size_t i = d;
        while (i-- > 0) {
            if (++c[i] < Q)
                break;
            c[i] = 0;
        }
        if (i == std::size_t(-1))
            return;
    }
}

// Human-readable rendering; coefficients are shown as canonical element indices.
inline std::string to_string(const Poly& a, const char* var = "X")
{
    if (a.empty())
        return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        bool show_coeff = a[i] != 1 || i == 0;
        if (show_coeff)
            out += std::to_string(a[i]);
        if (i > 0) {
            if (show_coeff)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace poly
} // namespace liecensus

#endif
