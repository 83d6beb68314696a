#ifndef LIECENSUS_SERIES_HPP
#define LIECENSUS_SERIES_HPP

#include <optional>
#include <vector>

#include "census.hpp"
#include "intpoly.hpp"

namespace liecensus {

inline constexpr unsigned default_series_order = 12;

// Power series in t truncated after t^N, coefficients in Z[q].
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1) { coeffs_[0] = IntPoly::constant(1); }

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const IntPoly& coefficient(unsigned n) const { return coeffs_.at(n); }
    const std::vector<IntPoly>& coefficients() const noexcept { return coeffs_; }

    // Multiply by (a + b t^s), dropping terms beyond the truncation order.
    void mul_binomial(const IntPoly& a, const IntPoly& b, unsigned s)
    {
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            IntPoly c = a * coeffs_[i];
            if (i >= s)
                c += b * coeffs_[i - s];
            coeffs_[i] = std::move(c);
        }
    }

    // Divide by (1 - x t^s), i.e. multiply by sum_j x^j t^{sj}.
    void div_one_minus(const IntPoly& x, unsigned s)
    {
        for (std::size_t i = s; i < coeffs_.size(); ++i)
            coeffs_[i] += x * coeffs_[i - s];
    }

    // t -> t^k, truncated at `order`.
    TruncSeries substitute_power(unsigned k, unsigned order) const
    {
        TruncSeries out(order);
        out.coeffs_[0] = IntPoly{};
        for (std::size_t i = 0; i < coeffs_.size() && i * k <= order; ++i)
            out.coeffs_[i * k] = coeffs_[i];
        return out;
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<IntPoly> coeffs_;
};

// c_k(t) = prod_{r >= 1} (1 - eps t^{kr}) / (1 - q t^{kr}) up to t^N.
inline TruncSeries product_series(unsigned k, int epsilon, unsigned order = default_series_order)
{
    if (k == 0)
        throw invalid_argument("k must be >= 1");
    if (epsilon != 1 && epsilon != -1)
        throw invalid_argument("epsilon must be +1 or -1");
    TruncSeries s(order);
    for (unsigned r = 1; k * r <= order; ++r) {
        s.mul_binomial(IntPoly::constant(1), IntPoly::constant(-epsilon), k * r);
        s.div_one_minus(IntPoly::q(), k * r);
    }
    return s;
}

struct SeriesCheck {
    unsigned k = 1;
    int epsilon = 1;
    unsigned order = 0;
    std::vector<IntPoly> from_product;
    std::vector<IntPoly> from_census;
    std::optional<unsigned> first_mismatch;

    bool ok() const noexcept { return !first_mismatch.has_value(); }
};

// Compares each coefficient of the product with c_{n,k}(q) from the type sum.
inline SeriesCheck verify_series_vs_census(unsigned k, int epsilon, unsigned order)
{
    SeriesCheck out{k, epsilon, order, {}, {}, std::nullopt};
    const auto s = product_series(k, epsilon, order);
    for (unsigned n = 0; n <= order; ++n) {
        out.from_product.push_back(s.coefficient(n));
        out.from_census.push_back(c_n_k(n, k, epsilon));
        if (!out.first_mismatch && out.from_product.back() != out.from_census.back())
            out.first_mismatch = n;
    }
    return out;
}

} // namespace liecensus

#endif
