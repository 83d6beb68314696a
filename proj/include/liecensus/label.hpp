#ifndef LIECENSUS_LABEL_HPP
#define LIECENSUS_LABEL_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "polyspace.hpp"

namespace liecensus {

struct LabelEntry {
    GammaOrbit gamma;
    Partition lambda;

    friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
    friend std::strong_ordering operator<=>(const LabelEntry& a, const LabelEntry& b)
    {
        if (auto c = a.gamma <=> b.gamma; c != 0)
            return c;
        return a.lambda <=> b.lambda;
    }
};

// Finitely supported map Gamma -> lambda_Gamma.  Labels one conjugacy class
// (and one irreducible character) of GL_n(eps q).
class ClassLabel {
public:
    ClassLabel() = default;
    explicit ClassLabel(std::vector<LabelEntry> entries) : entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end());
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.lambda.empty())
                throw invalid_argument("label support must not contain empty partitions");
            if (!poly::is_monic(e.gamma.poly) || e.gamma.poly[0] == 0)
                throw invalid_argument("label orbit polynomial must be monic with nonzero constant term");
            if (i > 0 && entries_[i - 1].gamma == e.gamma)
                throw invalid_argument("duplicate orbit in label");
        }
    }

    const std::vector<LabelEntry>& entries() const noexcept { return entries_; }

    // n = sum |lambda_Gamma| deg Gamma
    unsigned size() const noexcept
    {
        unsigned n = 0;
        for (const auto& e : entries_)
            n += e.lambda.size() * e.gamma.degree();
        return n;
    }

    bool is_semisimple() const noexcept
    {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const LabelEntry& e) { return e.lambda.largest() == 1; });
    }

    bool is_regular_semisimple() const noexcept
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const LabelEntry& e) {
            return e.lambda.parts() == std::vector<unsigned>{1};
        });
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += "; ";
            s += poly::to_string(entries_[i].gamma.poly) + " -> " + entries_[i].lambda.to_string();
        }
        return s + "}";
    }

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
    friend auto operator<=>(const ClassLabel& a, const ClassLabel& b)
    {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    std::vector<LabelEntry> entries_;
};

// X^d Gamma(1/X) = prod (1 - zeta X) over the roots zeta of Gamma.
inline Poly reversed(const Poly& g) { return Poly(g.rbegin(), g.rend()); }

// u_i(X) = prod_Gamma prod_{zeta root of Gamma} (1 - zeta X)^{m_i(lambda_Gamma)},
// returned as u_1 .. u_L (L = largest part), each with constant term 1.
inline std::vector<Poly> u_polys(const SignedQ& sq, const ClassLabel& label)
{
    const Field& F = sq.field();
    unsigned L = 0;
    for (const auto& e : label.entries())
        L = std::max(L, e.lambda.largest());
    std::vector<Poly> u(L, Poly{1});
    for (const auto& e : label.entries()) {
        for (const auto& c : e.gamma.poly)
            if (!F.contains(c))
                throw invalid_argument("label polynomial is not over the group's field");
        Poly rev = reversed(e.gamma.poly);
        for (unsigned i = 1; i <= L; ++i)
            if (unsigned m = e.lambda.multiplicity(i))
                u[i - 1] = poly::mul(F, u[i - 1], poly::pow(F, rev, m));
    }
    return u;
}

// det(I - gX) = prod_i u_i(X)^i for g in the class of the label.
inline Poly det_one_minus_gx(const SignedQ& sq, const ClassLabel& label)
{
    const Field& F = sq.field();
    auto u = u_polys(sq, label);
    Poly out{1};
    for (std::size_t i = 0; i < u.size(); ++i)
        out = poly::mul(F, out, poly::pow(F, u[i], static_cast<unsigned>(i + 1)));
    return out;
}

// n_i = deg u_i = sum_Gamma deg(Gamma) m_i(lambda_Gamma)
inline TypeVector type_of(const ClassLabel& label)
{
    std::vector<unsigned> counts;
    for (const auto& e : label.entries())
        for (unsigned p : e.lambda.parts()) {
            if (counts.size() < p)
                counts.resize(p, 0);
            counts[p - 1] += e.gamma.degree();
        }
    return TypeVector(std::move(counts));
}

// (z label)_{z Gamma} = label_Gamma
inline ClassLabel twist_label(const SignedQ& sq, Elem z, const ClassLabel& label)
{
    std::vector<LabelEntry> out;
    out.reserve(label.entries().size());
    for (const auto& e : label.entries())
        out.push_back({twist(sq, z, e.gamma), e.lambda});
    return ClassLabel(std::move(out));
}

} // namespace liecensus

#endif
