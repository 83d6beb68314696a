#ifndef LIECENSUS_INTPOLY_HPP
#define LIECENSUS_INTPOLY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace liecensus {

// Exact integer polynomial in the indeterminate q, ascending coefficients,
// normalized (no trailing zeros; zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(std::int64_t c) { return IntPoly(std::vector<std::int64_t>{c}); }
    // c q^d
    static IntPoly monomial(std::int64_t c, unsigned d)
    {
        std::vector<std::int64_t> v(d + 1, 0);
        v[d] = c;
        return IntPoly(std::move(v));
    }
    static IntPoly q() { return monomial(1, 1); }

    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    std::int64_t evaluate(std::int64_t x) const
    {
        std::int64_t r = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = checked_add(checked_mul(r, x), c_[i]);
        return r;
    }

    IntPoly& operator+=(const IntPoly& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = checked_add(c_[i], o.c_[i]);
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) { return *this += -o; }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a)
    {
        for (auto& x : a.c_)
            x = checked_mul(x, -1);
        return a;
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
        return IntPoly(std::move(r));
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // e.g. "q^2 + 2*q + 1", "q - 1", "0"
    std::string to_string(const char* var = "q") const
    {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            std::int64_t c = c_[i];
            if (c == 0)
                continue;
            std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (i == 0) {
                out += std::to_string(mag);
                continue;
            }
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

} // namespace liecensus

#endif
