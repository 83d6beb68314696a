#ifndef LIECENSUS_GF_HPP
#define LIECENSUS_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace liecensus {

// Field elements are dense indices 0..Q-1.  For a field built as an extension
// of degree r over a base of size B, the index of c_0 + c_1 y + ... is
// sum c_i B^i with c_i base indices.  Consequences used throughout:
//   - 0 and 1 are the field's zero and one;
//   - a base element keeps its index inside the extension;
//   - the base-p digits of an index are the coordinates over GF(p), so
//     addition is digitwise mod p no matter how the tower was built;
//   - the canonical element order is plain index order.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr unsigned max_order = 1u << 20;

    static FieldPtr prime(unsigned p)
    {
        if (!is_prime(p))
            throw invalid_argument("field characteristic must be prime, got " + std::to_string(p));
        if (p > max_order)
            throw cap_exceeded("prime field too large");
        auto f = std::shared_ptr<Field>(new Field());
        f->p_ = p;
        f->e_ = 1;
        f->r_ = 1;
        f->Q_ = p;
        f->defining_ = {0, 1};
        f->build_tables();
        return f;
    }

    // Degree-r extension of `base` defined by the least monic irreducible
    // of degree r, polynomials compared coefficientwise from the constant
    // term upward.
    static FieldPtr extension(const FieldPtr& base, unsigned r)
    {
        if (!base)
            throw invalid_argument("null base field");
        if (r == 0)
            throw invalid_argument("extension degree must be >= 1");
        if (r == 1)
            return base;
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < r; ++i) {
            Q *= base->order();
            if (Q > max_order)
                throw cap_exceeded("field order exceeds " + std::to_string(max_order));
        }
        auto f = std::shared_ptr<Field>(new Field());
        f->p_ = base->p_;
        f->e_ = base->e_ * r;
        f->r_ = r;
        f->Q_ = static_cast<unsigned>(Q);
        f->base_ = base;
        f->defining_ = least_irreducible(*base, r);
        f->build_tables();
        return f;
    }

    unsigned characteristic() const noexcept { return p_; }
    // Degree over the prime field.
    unsigned degree() const noexcept { return e_; }
    // Degree over base() (1 for a prime field).
    unsigned relative_degree() const noexcept { return r_; }
    unsigned order() const noexcept { return Q_; }
    const FieldPtr& base() const noexcept { return base_; }
    bool is_prime_field() const noexcept { return !base_; }
    // Monic, ascending coefficients over base() (over GF(p) for prime fields: X).
    const std::vector<Elem>& defining_poly() const noexcept { return defining_; }

    bool contains(Elem a) const noexcept { return a < Q_; }

    Elem add(Elem a, Elem b) const noexcept
    {
        if (!add_table_.empty())
            return add_table_[std::size_t(a) * Q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const noexcept
    {
        if (a == 0 || b == 0)
            return 0;
        unsigned s = log_[a] + log_[b];
        if (s >= Q_ - 1)
            s -= Q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw invalid_argument("inversion of zero");
        unsigned l = log_[a];
        return exp_[l == 0 ? 0 : Q_ - 1 - l];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    // Negative exponents are allowed for nonzero a.
    Elem pow(Elem a, std::int64_t e) const
    {
        if (a == 0) {
            if (e < 0)
                throw invalid_argument("inversion of zero");
            return e == 0 ? 1 : 0;
        }
        std::int64_t m = Q_ - 1;
        std::int64_t t = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
        if (t < 0)
            t += m;
        return exp_[static_cast<std::size_t>(t)];
    }
    // Multiplicative order of a nonzero element.
    std::uint64_t mult_order(Elem a) const
    {
        if (a == 0)
            throw invalid_argument("zero has no multiplicative order");
        std::uint64_t m = Q_ - 1;
        return m / std::gcd<std::uint64_t>(log_[a], m);
    }
    // Discrete log to the base primitive().
    unsigned log(Elem a) const
    {
        if (a == 0)
            throw invalid_argument("log of zero");
        return log_[a];
    }
    // Least generator of the multiplicative group in index order.
    Elem primitive() const noexcept { return exp_[Q_ == 2 ? 0 : 1]; }
    // Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }

    std::vector<Elem> coordinates(Elem a) const
    {
        std::vector<Elem> c(r_);
        unsigned B = base_ ? base_->order() : Q_;
        for (unsigned i = 0; i < r_; ++i) {
            c[i] = a % B;
            a /= B;
        }
        return c;
    }

    Elem from_coordinates(std::span<const Elem> c) const
    {
        unsigned B = base_ ? base_->order() : Q_;
        Elem a = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            a = a * B + c[i];
        return a;
    }

private:
    Field() = default;

    Elem add_digits(Elem a, Elem b) const noexcept
    {
        Elem out = 0, scale = 1;
        while (a != 0 || b != 0) {
            Elem d = (a % p_ + b % p_) % p_;
            out += d * scale;
            scale *= p_;
            a /= p_;
            b /= p_;
        }
        return out;
    }

    // Multiplication from the defining polynomial, used only while the
    // log tables are being built.
    Elem mul_slow(Elem a, Elem b) const
    {
        if (!base_)
            return static_cast<Elem>((std::uint64_t(a) * b) % p_);
        const Field& B = *base_;
        auto ca = coordinates(a), cb = coordinates(b);
        std::vector<Elem> prod(2 * r_ - 1, 0);
        for (unsigned i = 0; i < r_; ++i)
            for (unsigned j = 0; j < r_; ++j)
                prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
        for (unsigned i = 2 * r_ - 2; i >= r_; --i) {
            Elem c = prod[i];
            if (c != 0)
                for (unsigned j = 0; j < r_; ++j)
                    prod[i - r_ + j] = B.sub(prod[i - r_ + j], B.mul(c, defining_[j]));
            prod[i] = 0;
        }
        prod.resize(r_);
        return from_coordinates(prod);
    }

    Elem pow_slow(Elem a, std::uint64_t e) const
    {
        Elem r = 1;
        while (e) {
            if (e & 1)
                r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables()
    {
        neg_.resize(Q_);
        for (Elem a = 0; a < Q_; ++a) {
            Elem out = 0, scale = 1, x = a;
            while (x) {
                out += ((p_ - x % p_) % p_) * scale;
                scale *= p_;
                x /= p_;
            }
            neg_[a] = out;
        }
        if (Q_ <= 256) {
            add_table_.resize(std::size_t(Q_) * Q_);
            for (Elem a = 0; a < Q_; ++a)
                for (Elem b = 0; b < Q_; ++b)
                    add_table_[std::size_t(a) * Q_ + b] = add_digits(a, b);
        }
        const std::uint64_t m = Q_ - 1;
        const auto primes = prime_divisors(m);
        Elem g = 0;
        for (Elem c = 1; c < Q_; ++c) {
            if (pow_slow(c, m) != 1)
                throw std::logic_error("defining polynomial is reducible");
            bool gen = true;
            for (auto r : primes)
                if (pow_slow(c, m / r) == 1) {
                    gen = false;
                    break;
                }
            if (gen) {
                g = c;
                break;
            }
        }
        if (g == 0)
            throw std::logic_error("multiplicative group is not cyclic");
        exp_.resize(m == 0 ? 1 : m);
        log_.assign(Q_, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            exp_[i] = x;
            log_[x] = static_cast<unsigned>(i);
            x = mul_slow(x, g);
        }
        if (x != 1)
            throw std::logic_error("primitive element order mismatch");
    }

    // Least monic irreducible of degree r over F by trial division against
    // all monic polynomials of degree 1..r/2.
    static std::vector<Elem> least_irreducible(const Field& F, unsigned r)
    {
        const unsigned B = F.order();
        auto rem_is_zero = [&](std::vector<Elem> a, const std::vector<Elem>& d) {
            // d monic
            const std::size_t dd = d.size() - 1;
            for (std::size_t i = a.size(); i-- > dd;) {
                Elem c = a[i];
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j <= dd; ++j)
                    a[i - dd + j] = F.sub(a[i - dd + j], F.mul(c, d[j]));
            }
            for (std::size_t i = 0; i < dd; ++i)
                if (a[i] != 0)
                    return false;
            return true;
        };
        auto next = [&](std::vector<Elem>& c, std::size_t len) {
            // Odometer with c[0] most significant.
            for (std::size_t i = len; i-- > 0;) {
                if (++c[i] < B)
                    return true;
                c[i] = 0;
            }
            return false;
        };
        std::vector<Elem> cand(r + 1, 0);
        cand[r] = 1;
        do {
            if (cand[0] == 0)
                continue;
            bool irreducible = true;
            for (unsigned d = 1; 2 * d <= r && irreducible; ++d) {
                std::vector<Elem> div(d + 1, 0);
                div[d] = 1;
                do {
                    if (rem_is_zero(cand, div)) {
                        irreducible = false;
                        break;
                    }
                } while (next(div, d));
            }
            if (irreducible)
                return cand;
        } while (next(cand, r));
        throw std::logic_error("no irreducible polynomial found");
    }

    unsigned p_ = 0, e_ = 0, r_ = 0, Q_ = 0;
    FieldPtr base_;
    std::vector<Elem> defining_;
    std::vector<Elem> add_table_, neg_, exp_;
    std::vector<unsigned> log_;
};

// Structural identity: same prime, same construction chain.
inline bool same_field(const Field& a, const Field& b)
{
    if (&a == &b)
        return true;
    if (a.characteristic() != b.characteristic() || a.degree() != b.degree()
        || a.relative_degree() != b.relative_degree() || a.defining_poly() != b.defining_poly())
        return false;
    if (a.is_prime_field() || b.is_prime_field())
        return a.is_prime_field() && b.is_prime_field();
    return same_field(*a.base(), *b.base());
}

// GF(p^e) as a single extension of GF(p).
inline FieldPtr make_field(unsigned p, unsigned e)
{
    if (e == 0)
        throw invalid_argument("field degree must be >= 1");
    return Field::extension(Field::prime(p), e);
}

class FieldElem {
public:
    FieldElem(FieldPtr ctx, Elem v) : ctx_(std::move(ctx)), v_(v)
    {
        if (!ctx_ || !ctx_->contains(v_))
            throw invalid_argument("element index out of range");
    }

    const FieldPtr& context() const noexcept { return ctx_; }
    Elem value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElem inverse() const { return {ctx_, ctx_->inv(v_)}; }
    FieldElem pow(std::int64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
    std::uint64_t order() const { return ctx_->mult_order(v_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b)
    {
        check(a, b);
        return {a.ctx_, a.ctx_->add(a.v_, b.v_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b)
    {
        check(a, b);
        return {a.ctx_, a.ctx_->sub(a.v_, b.v_)};
    }
    friend FieldElem operator-(const FieldElem& a) { return {a.ctx_, a.ctx_->neg(a.v_)}; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b)
    {
        check(a, b);
        return {a.ctx_, a.ctx_->mul(a.v_, b.v_)};
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b)
    {
        check(a, b);
        return {a.ctx_, a.ctx_->div(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElem& a, const FieldElem& b)
    {
        return same_field(*a.ctx_, *b.ctx_) && a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b)
    {
        check(a, b);
        return a.v_ <=> b.v_;
    }

private:
    static void check(const FieldElem& a, const FieldElem& b)
    {
        if (!same_field(*a.ctx_, *b.ctx_))
            throw context_mismatch("field elements from different contexts");
    }

    FieldPtr ctx_;
    Elem v_;
};

// Sum, product and inverse of a in one call; inverse requires a != 0.
struct ArithResult {
    FieldElem sum, product, inverse;
};

inline ArithResult field_arith(const FieldElem& a, const FieldElem& b)
{
    return {a + b, a * b, a.inverse()};
}

inline FieldElem primitive_element(const FieldPtr& ctx) { return {ctx, ctx->primitive()}; }

// GF(q) inside GF(q^2), the latter built as a quadratic extension of the former.
struct Tower {
    FieldPtr base;
    FieldPtr ext;
    unsigned q = 0;

    // Base indices are preserved in ext, so embedding is the identity on indices.
    Elem embed(Elem a) const noexcept { return a; }
    FieldElem embed(const FieldElem& a) const
    {
        if (!same_field(*a.context(), *base))
            throw context_mismatch("element is not in the base field");
        return {ext, a.value()};
    }
    bool in_base(Elem a) const noexcept { return a < q; }

    Elem frobenius_q(Elem a) const { return ext->pow(a, q); }
    FieldElem frobenius_q(const FieldElem& a) const
    {
        if (!same_field(*a.context(), *ext))
            throw context_mismatch("element is not in GF(q^2)");
        return {ext, frobenius_q(a.value())};
    }
};

inline Tower make_tower(std::uint64_t q)
{
    auto [p, f] = prime_power(q);
    Tower t;
    t.base = make_field(p, f);
    t.ext = Field::extension(t.base, 2);
    t.q = static_cast<unsigned>(q);
    return t;
}

} // namespace liecensus

#endif
