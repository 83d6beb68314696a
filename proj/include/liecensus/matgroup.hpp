#ifndef LIECENSUS_MATGROUP_HPP
#define LIECENSUS_MATGROUP_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "census.hpp"
#include "label.hpp"
#include "polyspace.hpp"

namespace liecensus {

// Oracle for the symbolic census: explicit matrix groups over small fields,
// their conjugacy classes, and class-level predicates.

enum class Family { GL, SL, GU, SU };

inline const char* to_string(Family f)
{
    switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    }
    return "?";
}

struct GroupSpec {
    Family family = Family::GL;
    unsigned n = 1;
    unsigned q = 2;

    int epsilon() const noexcept { return unitary() ? -1 : 1; }
    bool unitary() const noexcept { return family == Family::GU || family == Family::SU; }
    bool special() const noexcept { return family == Family::SL || family == Family::SU; }
    std::string name() const
    {
        return std::string(to_string(family)) + "_" + std::to_string(n) + "(" + std::to_string(q) + ")";
    }
};

inline constexpr unsigned max_matrix_dim = 4;
inline constexpr std::uint64_t default_max_order = 2'000'000;
inline constexpr std::uint64_t soft_order_warning = 100'000;
// Explicit centralizers are enumerated for every class up to this order.
inline constexpr std::uint64_t explicit_centralizer_limit = 10'000;
// Conjugating by every element instead of a generating set is allowed up to this order.
inline constexpr std::uint64_t all_elements_limit = 5'000;

// |GL_n(eps q)| = q^{n(n-1)/2} prod_{i=1}^n (q^i - eps^i); divide by q - eps for SL/SU.
inline std::uint64_t closed_form_order(const GroupSpec& s)
{
    const std::int64_t q = s.q, eps = s.epsilon();
    std::int64_t order = checked_pow(q, s.n * (s.n - 1) / 2);
    std::int64_t sign = 1;
    for (unsigned i = 1; i <= s.n; ++i) {
        sign *= eps;
        order = checked_mul(order, checked_pow(q, i) - sign);
    }
    if (s.special())
        order /= q - eps;
    return static_cast<std::uint64_t>(order);
}

struct Matrix {
    unsigned n = 0;
    std::array<Elem, max_matrix_dim * max_matrix_dim> a{};

    Elem operator()(unsigned i, unsigned j) const noexcept { return a[i * max_matrix_dim + j]; }
    Elem& operator()(unsigned i, unsigned j) noexcept { return a[i * max_matrix_dim + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Matrix arithmetic over a fixed field and dimension.
class MatrixRing {
public:
    MatrixRing(FieldPtr field, unsigned n) : F_(std::move(field)), n_(n)
    {
        if (n == 0 || n > max_matrix_dim)
            throw invalid_argument("matrix dimension must be in 1.." + std::to_string(max_matrix_dim));
        // Keys are base-Q integers with n^2 digits.
        long double bits = static_cast<long double>(n * n) * std::log2(static_cast<long double>(F_->order()));
        if (bits >= 63.5L)
            throw cap_exceeded("matrix keys do not fit in 64 bits");
    }

    const Field& field() const noexcept { return *F_; }
    const FieldPtr& field_ptr() const noexcept { return F_; }
    unsigned dim() const noexcept { return n_; }

    Matrix zero() const
    {
        Matrix m;
        m.n = n_;
        return m;
    }
    Matrix scalar(Elem z) const
    {
        Matrix m = zero();
        for (unsigned i = 0; i < n_; ++i)
            m(i, i) = z;
        return m;
    }
    Matrix identity() const { return scalar(1); }

    Matrix mul(const Matrix& x, const Matrix& y) const
    {
        Matrix r = zero();
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned k = 0; k < n_; ++k) {
                Elem xik = x(i, k);
                if (xik == 0)
                    continue;
                for (unsigned j = 0; j < n_; ++j)
                    r(i, j) = F_->add(r(i, j), F_->mul(xik, y(k, j)));
            }
        return r;
    }
    Matrix add(const Matrix& x, const Matrix& y) const
    {
        Matrix r = zero();
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                r(i, j) = F_->add(x(i, j), y(i, j));
        return r;
    }
    Matrix scale(const Matrix& x, Elem c) const
    {
        Matrix r = zero();
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                r(i, j) = F_->mul(x(i, j), c);
        return r;
    }

    // Entrywise x -> x^q, transposed.
    Matrix conj_transpose(const Matrix& x, unsigned q) const
    {
        Matrix r = zero();
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                r(j, i) = F_->pow(x(i, j), q);
        return r;
    }

    Elem det(Matrix x) const
    {
        Elem d = 1;
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && x(piv, c) == 0)
                ++piv;
            if (piv == n_)
                return 0;
            if (piv != c) {
                for (unsigned j = 0; j < n_; ++j)
                    std::swap(x(piv, j), x(c, j));
                d = F_->neg(d);
            }
            d = F_->mul(d, x(c, c));
            const Elem inv = F_->inv(x(c, c));
            for (unsigned r = c + 1; r < n_; ++r) {
                Elem f = F_->mul(x(r, c), inv);
                if (f == 0)
                    continue;
                for (unsigned j = c; j < n_; ++j)
                    x(r, j) = F_->sub(x(r, j), F_->mul(f, x(c, j)));
            }
        }
        return d;
    }

    unsigned rank(Matrix x) const
    {
        unsigned rank = 0;
        for (unsigned c = 0; c < n_ && rank < n_; ++c) {
            unsigned piv = rank;
            while (piv < n_ && x(piv, c) == 0)
                ++piv;
            if (piv == n_)
                continue;
            for (unsigned j = 0; j < n_; ++j)
                std::swap(x(piv, j), x(rank, j));
            const Elem inv = F_->inv(x(rank, c));
            for (unsigned r = rank + 1; r < n_; ++r) {
                Elem f = F_->mul(x(r, c), inv);
                if (f == 0)
                    continue;
                for (unsigned j = c; j < n_; ++j)
                    x(r, j) = F_->sub(x(r, j), F_->mul(f, x(rank, j)));
            }
            ++rank;
        }
        return rank;
    }

    Matrix inverse(const Matrix& x) const
    {
        Matrix a = x, inv = identity();
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && a(piv, c) == 0)
                ++piv;
            if (piv == n_)
                throw invalid_argument("matrix is singular");
            for (unsigned j = 0; j < n_; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
            const Elem s = F_->inv(a(c, c));
            for (unsigned j = 0; j < n_; ++j) {
                a(c, j) = F_->mul(a(c, j), s);
                inv(c, j) = F_->mul(inv(c, j), s);
            }
            for (unsigned r = 0; r < n_; ++r) {
                if (r == c || a(r, c) == 0)
                    continue;
                Elem f = a(r, c);
                for (unsigned j = 0; j < n_; ++j) {
                    a(r, j) = F_->sub(a(r, j), F_->mul(f, a(c, j)));
                    inv(r, j) = F_->sub(inv(r, j), F_->mul(f, inv(c, j)));
                }
            }
        }
        return inv;
    }

    // p(x) by Horner's rule.
    Matrix eval(const Poly& p, const Matrix& x) const
    {
        Matrix r = zero();
        for (std::size_t i = p.size(); i-- > 0;)
            r = add(mul(r, x), scalar(p[i]));
        return r;
    }

    // det(X I - x) by cofactor expansion over F[X].
    Poly charpoly(const Matrix& x) const
    {
        std::vector<Poly> m(n_ * n_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                Poly e = poly::constant(F_->neg(x(i, j)));
                if (i == j)
                    e = poly::add(*F_, e, Poly{0, 1});
                m[i * n_ + j] = e;
            }
        std::vector<unsigned> rows(n_), cols(n_);
        for (unsigned i = 0; i < n_; ++i)
            rows[i] = cols[i] = i;
        return poly_det(m, rows, cols);
    }

    // Monic minimal polynomial from the first linear dependency among I, x, x^2, ...
    Poly minpoly(const Matrix& x) const
    {
        const unsigned N = n_ * n_;
        struct Row {
            std::vector<Elem> v;    // flattened matrix, reduced
            std::vector<Elem> comb; // coefficients over the powers
            unsigned pivot;
        };
        std::vector<Row> basis;
        Matrix power = identity();
        for (unsigned d = 0; d <= n_; ++d) {
            std::vector<Elem> v(N), comb(n_ + 1, 0);
            for (unsigned i = 0; i < n_; ++i)
                for (unsigned j = 0; j < n_; ++j)
                    v[i * n_ + j] = power(i, j);
            comb[d] = 1;
            for (const auto& b : basis) {
                Elem f = v[b.pivot];
                if (f == 0)
                    continue;
                for (unsigned t = 0; t < N; ++t)
                    v[t] = F_->sub(v[t], F_->mul(f, b.v[t]));
                for (unsigned t = 0; t <= n_; ++t)
                    comb[t] = F_->sub(comb[t], F_->mul(f, b.comb[t]));
            }
            unsigned piv = 0;
            while (piv < N && v[piv] == 0)
                ++piv;
            if (piv == N) {
                poly::trim(comb);
                return poly::make_monic(*F_, comb);
            }
            const Elem s = F_->inv(v[piv]);
            for (auto& e : v)
                e = F_->mul(e, s);
            for (auto& e : comb)
                e = F_->mul(e, s);
            for (auto& b : basis) {
                Elem f = b.v[piv];
                if (f == 0)
                    continue;
                for (unsigned t = 0; t < N; ++t)
                    b.v[t] = F_->sub(b.v[t], F_->mul(f, v[t]));
                for (unsigned t = 0; t <= n_; ++t)
                    b.comb[t] = F_->sub(b.comb[t], F_->mul(f, comb[t]));
            }
            basis.push_back({std::move(v), std::move(comb), piv});
            power = mul(power, x);
        }
        throw std::logic_error("minimal polynomial degree exceeds n");
    }

    std::uint64_t order(const Matrix& x) const
    {
        const Matrix id = identity();
        Matrix p = x;
        std::uint64_t k = 1;
        while (p != id) {
            p = mul(p, x);
            ++k;
        }
        return k;
    }

    // Row-major entries as base-Q digits, first entry most significant, so
    // key order is the canonical matrix order.
    std::uint64_t key(const Matrix& x) const
    {
        std::uint64_t k = 0;
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                k = k * F_->order() + x(i, j);
        return k;
    }

private:
    Poly poly_det(const std::vector<Poly>& m, const std::vector<unsigned>& rows,
                  const std::vector<unsigned>& cols) const
    {
        if (rows.size() == 1)
            return m[rows[0] * n_ + cols[0]];
        Poly out;
        std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Poly& e = m[rows[0] * n_ + cols[c]];
            if (e.empty())
                continue;
            std::vector<unsigned> sub_cols;
            for (std::size_t t = 0; t < cols.size(); ++t)
                if (t != c)
                    sub_cols.push_back(cols[t]);
            Poly term = poly::mul(*F_, e, poly_det(m, sub_rows, sub_cols));
            out = c % 2 == 0 ? poly::add(*F_, out, term) : poly::sub(*F_, out, term);
        }
        return out;
    }

    FieldPtr F_;
    unsigned n_;
};

// Every element of the group, in canonical (key) order.
class Group {
public:
    Group(GroupSpec spec, SignedQ sq, std::vector<Matrix> elements)
        : spec_(spec), sq_(std::move(sq)), ring_(sq_.field_ptr(), spec.n), elements_(std::move(elements))
    {
        keys_.reserve(elements_.size());
        for (const auto& m : elements_)
            keys_.push_back(ring_.key(m));
    }

    const GroupSpec& spec() const noexcept { return spec_; }
    const SignedQ& signed_q() const noexcept { return sq_; }
    const MatrixRing& ring() const noexcept { return ring_; }
    const std::vector<Matrix>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    std::size_t index_of(const Matrix& m) const
    {
        auto k = ring_.key(m);
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k)
            throw std::logic_error("matrix is not a group element");
        return static_cast<std::size_t>(it - keys_.begin());
    }

    // Scalars z I in the group, as field elements z, listed as powers of the
    // canonical generator (center[0] = 1).
    std::vector<Elem> center() const
    {
        const Field& F = sq_.field();
        const std::int64_t full = sq_.center_order();
        std::int64_t m = full;
        if (spec_.special())
            m = std::gcd<std::int64_t>(full, spec_.n);
        std::vector<Elem> out;
        const Elem gen = F.pow(central_generator(sq_), full / m);
        Elem z = 1;
        for (std::int64_t j = 0; j < m; ++j) {
            out.push_back(z);
            z = F.mul(z, gen);
        }
        return out;
    }

private:
    GroupSpec spec_;
    SignedQ sq_;
    MatrixRing ring_;
    std::vector<Matrix> elements_;
    std::vector<std::uint64_t> keys_;
};

// Cap from LIE_CENSUS_MAX_ORDER when set, else `fallback`.
inline std::uint64_t max_order_from_env(std::uint64_t fallback = default_max_order)
{
    if (const char* v = std::getenv("LIE_CENSUS_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long long x = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && x > 0)
            return x;
        throw invalid_argument("LIE_CENSUS_MAX_ORDER must be a positive integer");
    }
    return fallback;
}

// Enumerates the group row by row: GL rows extend a linearly independent
// set; GU rows are orthonormal for the identity Hermitian form
// <u, v> = sum u_i v_i^q, i.e. g conj_transpose(g) = I.  SL/SU then keep det 1.
inline Group build_group(const GroupSpec& spec, std::uint64_t max_order = default_max_order)
{
    if (spec.n == 0 || spec.n > max_matrix_dim)
        throw invalid_argument("n must be in 1.." + std::to_string(max_matrix_dim));
    SignedQ sq = make_signed_q(spec.q, spec.epsilon());
    const std::uint64_t expected = closed_form_order(spec);
    if (expected > max_order)
        throw cap_exceeded(spec.name() + " has order " + std::to_string(expected) + " > cap "
                           + std::to_string(max_order));
    MatrixRing ring(sq.field_ptr(), spec.n);
    const Field& F = sq.field();
    const unsigned n = spec.n, Q = F.order();

    std::vector<std::vector<Elem>> vectors;
    {
        std::vector<Elem> v(n, 0);
        while (true) {
            vectors.push_back(v);
            std::size_t i = n;
            while (i-- > 0) {
                if (++v[i] < Q)
                    break;
                v[i] = 0;
            }
            if (i == std::size_t(-1))
                break;
        }
    }
    auto herm = [&](const std::vector<Elem>& u, const std::vector<Elem>& w) {
        Elem s = 0;
        for (unsigned i = 0; i < n; ++i)
            s = F.add(s, F.mul(u[i], F.pow(w[i], spec.q)));
        return s;
    };

    std::vector<Matrix> out;
    Matrix cur = ring.zero();
    std::vector<const std::vector<Elem>*> rows;
    // Echelon basis of the rows so far (GL independence test).
    auto independent = [&](const std::vector<Elem>& v) {
        Matrix m = ring.zero();
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (unsigned j = 0; j < n; ++j)
                m(static_cast<unsigned>(r), j) = (*rows[r])[j];
        for (unsigned j = 0; j < n; ++j)
            m(static_cast<unsigned>(rows.size()), j) = v[j];
        return ring.rank(m) == rows.size() + 1;
    };
    auto rec = [&](auto&& self, unsigned depth) -> void {
        if (depth == n) {
            if (!spec.special() || ring.det(cur) == 1)
                out.push_back(cur);
            return;
        }
        for (const auto& v : vectors) {
            if (spec.unitary()) {
                if (herm(v, v) != 1)
                    continue;
                bool ok = true;
                for (auto* r : rows)
                    if (herm(v, *r) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
            } else if (!independent(v)) {
                continue;
            }
            for (unsigned j = 0; j < n; ++j)
                cur(depth, j) = v[j];
            rows.push_back(&v);
            self(self, depth + 1);
            rows.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [&](const Matrix& a, const Matrix& b) { return ring.key(a) < ring.key(b); });
    if (out.size() != expected)
        throw std::logic_error(spec.name() + ": enumerated " + std::to_string(out.size())
                               + " elements, closed form gives " + std::to_string(expected));
    return Group(spec, std::move(sq), std::move(out));
}

struct ClassFlags {
    bool semisimple = false;
    bool regular_semisimple = false;
    bool strongly_regular = false;
    bool srs0 = false;

    friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

struct ConjugacyClass {
    Matrix representative; // least element of the class
    std::size_t rep_index = 0;
    std::uint64_t size = 0;
    std::uint64_t centralizer_order = 0;
    bool centralizer_enumerated = false;
    std::uint64_t element_order = 0;
    ClassFlags flags;
    std::optional<ClassLabel> label; // GL/GU only
};

struct ClassTable {
    GroupSpec spec;
    std::uint64_t group_order = 0;
    std::vector<ConjugacyClass> classes;      // ordered by representative
    std::vector<std::uint32_t> class_of;      // element index -> class index
    std::vector<Elem> center;                 // powers of the canonical central generator
    std::vector<std::vector<std::uint32_t>> central_action; // [j][c] = class of center[j] * C
};

enum class ClassMethod { generators, all_elements };

// Greedy generating set: scan elements in canonical order and add any
// element outside the subgroup generated so far.
inline std::vector<std::size_t> generating_set(const Group& G)
{
    const auto& ring = G.ring();
    std::vector<std::size_t> gens;
    std::vector<char> in_h(G.size(), 0);
    const std::size_t id = G.index_of(ring.identity());
    in_h[id] = 1;
    std::size_t h_size = 1;
    for (std::size_t cand = 0; cand < G.size() && h_size < G.size(); ++cand) {
        if (in_h[cand])
            continue;
        gens.push_back(cand);
        std::fill(in_h.begin(), in_h.end(), 0);
        std::vector<std::size_t> queue{id};
        in_h[id] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Matrix& x = G.elements()[queue[head]];
            for (auto g : gens) {
                std::size_t y = G.index_of(ring.mul(x, G.elements()[g]));
                if (!in_h[y]) {
                    in_h[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        h_size = queue.size();
    }
    return gens;
}

inline std::vector<std::size_t> explicit_centralizer(const Group& G, const Matrix& x)
{
    std::vector<std::size_t> out;
    const auto& ring = G.ring();
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Matrix& y = G.elements()[i];
        if (ring.mul(x, y) == ring.mul(y, x))
            out.push_back(i);
    }
    return out;
}

inline bool is_abelian(const Group& G, const std::vector<std::size_t>& elems)
{
    const auto& ring = G.ring();
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
            const Matrix& x = G.elements()[elems[a]];
            const Matrix& y = G.elements()[elems[b]];
            if (ring.mul(x, y) != ring.mul(y, x))
                return false;
        }
    return true;
}

// Recovers the class label of g in GL_n(eps q) from the elementary divisors
// of its characteristic polynomial: for each orbit Gamma with irreducible
// factor Delta of degree d, the number of parts >= j of lambda_Gamma is
// (dim ker Delta(g)^j - dim ker Delta(g)^{j-1}) / d.
class Labeler {
public:
    Labeler(const SignedQ& sq, unsigned n) : sq_(sq), ring_(sq.field_ptr(), n), gammas_(gamma_set(sq, n)) {}

    ClassLabel operator()(const Matrix& g) const
    {
        const Field& F = sq_.field();
        const unsigned n = ring_.dim();
        const Poly chi = ring_.charpoly(g);
        if (chi[0] == 0)
            throw invalid_argument("matrix is singular");
        std::vector<LabelEntry> entries;
        for (const auto& gamma : gammas_) {
            if (!poly::mod(F, chi, gamma.factor).empty())
                continue;
            const unsigned d = static_cast<unsigned>(gamma.factor.size() - 1);
            const Matrix D = ring_.eval(gamma.factor, g);
            std::vector<unsigned> at_least; // at_least[j-1] = #parts >= j
            Matrix P = ring_.identity();
            unsigned prev_kernel = 0;
            for (unsigned j = 1; j <= n; ++j) {
                P = ring_.mul(P, D);
                const unsigned kernel = n - ring_.rank(P);
                if (kernel == prev_kernel)
                    break;
                if ((kernel - prev_kernel) % d != 0)
                    throw std::logic_error("kernel dimension not a multiple of the factor degree");
                at_least.push_back((kernel - prev_kernel) / d);
                prev_kernel = kernel;
            }
            std::vector<unsigned> parts;
            for (std::size_t j = at_least.size(); j-- > 0;) {
                unsigned next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
                parts.insert(parts.end(), at_least[j] - next, static_cast<unsigned>(j + 1));
            }
            entries.push_back({gamma, Partition(std::move(parts))});
        }
        ClassLabel label(std::move(entries));
        if (label.size() != n)
            throw std::logic_error("label size does not match the matrix dimension");
        return label;
    }

private:
    SignedQ sq_;
    MatrixRing ring_;
    std::vector<GammaOrbit> gammas_;
};

inline ClassLabel label_of_element(const GroupSpec& spec, const Matrix& g)
{
    if (spec.special())
        throw invalid_argument("labels are defined for GL/GU only; SL/SU classes are finer");
    return Labeler(make_signed_q(spec.q, spec.epsilon()), spec.n)(g);
}

// Flags for one class.  `t` must already carry class_of, center and
// central_action.
inline ClassFlags classify_class(const Group& G, const ClassTable& t, std::size_t class_index)
{
    const auto& ring = G.ring();
    const auto& cls = t.classes[class_index];
    const Matrix& x = cls.representative;
    const Field& F = ring.field();
    ClassFlags f;
    const bool by_minpoly = poly::is_squarefree(F, ring.minpoly(x));
    const bool by_order = cls.element_order % F.characteristic() != 0;
    if (by_minpoly != by_order)
        throw std::logic_error("semisimplicity tests disagree for a class of " + G.spec().name());
    f.semisimple = by_minpoly;
    f.regular_semisimple = f.semisimple && poly::is_squarefree(F, ring.charpoly(x));
    if (f.semisimple)
        f.strongly_regular = is_abelian(G, explicit_centralizer(G, x));
    if (f.strongly_regular) {
        f.srs0 = true;
        for (std::size_t j = 1; j < t.center.size(); ++j)
            if (t.central_action[j][class_index] == class_index) {
                f.srs0 = false;
                break;
            }
    }
    return f;
}

inline ClassTable conjugacy_classes(const Group& G, ClassMethod method = ClassMethod::generators)
{
    const auto& ring = G.ring();
    if (method == ClassMethod::all_elements && G.size() > all_elements_limit)
        throw cap_exceeded("conjugation by all elements is limited to groups of order "
                           + std::to_string(all_elements_limit));
    std::vector<std::size_t> conj;
    if (method == ClassMethod::generators) {
        conj = generating_set(G);
    } else {
        for (std::size_t i = 0; i < G.size(); ++i)
            conj.push_back(i);
    }
    std::vector<Matrix> conj_m, conj_inv;
    for (auto i : conj) {
        conj_m.push_back(G.elements()[i]);
        conj_inv.push_back(ring.inverse(G.elements()[i]));
    }

    ClassTable t;
    t.spec = G.spec();
    t.group_order = G.size();
    constexpr auto none = std::uint32_t(-1);
    t.class_of.assign(G.size(), none);
    for (std::size_t start = 0; start < G.size(); ++start) {
        if (t.class_of[start] != none)
            continue;
        const auto c = static_cast<std::uint32_t>(t.classes.size());
        std::vector<std::size_t> queue{start};
        t.class_of[start] = c;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Matrix& x = G.elements()[queue[head]];
            for (std::size_t h = 0; h < conj_m.size(); ++h) {
                std::size_t y = G.index_of(ring.mul(ring.mul(conj_m[h], x), conj_inv[h]));
                if (t.class_of[y] == none) {
                    t.class_of[y] = c;
                    queue.push_back(y);
                }
            }
        }
        ConjugacyClass cls;
        cls.representative = G.elements()[start];
        cls.rep_index = start;
        cls.size = queue.size();
        cls.element_order = ring.order(cls.representative);
        t.classes.push_back(std::move(cls));
    }

    t.center = G.center();
    t.central_action.resize(t.center.size());
    for (std::size_t j = 0; j < t.center.size(); ++j) {
        const Matrix z = ring.scalar(t.center[j]);
        for (const auto& cls : t.classes)
            t.central_action[j].push_back(t.class_of[G.index_of(ring.mul(z, cls.representative))]);
    }

    std::optional<Labeler> labeler;
    if (!G.spec().special())
        labeler.emplace(G.signed_q(), G.spec().n);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        auto& cls = t.classes[c];
        if (G.size() % cls.size != 0)
            throw std::logic_error("class size does not divide the group order");
        if (G.size() <= explicit_centralizer_limit) {
            cls.centralizer_order = explicit_centralizer(G, cls.representative).size();
            cls.centralizer_enumerated = true;
        } else {
            cls.centralizer_order = G.size() / cls.size;
        }
        cls.flags = classify_class(G, t, c);
        if (labeler)
            cls.label = (*labeler)(cls.representative);
    }
    return t;
}

// Classes C with z_k C = C, z_k the canonical central element of order k.
inline std::int64_t central_fixed_classes(const ClassTable& t, unsigned k)
{
    const std::size_t m = t.center.size();
    if (k == 0 || m % k != 0)
        throw inadmissible("k = " + std::to_string(k) + " does not divide |Z(" + t.spec.name()
                           + ")| = " + std::to_string(m));
    const auto& perm = t.central_action[(m / k) % m];
    std::int64_t fixed = 0;
    for (std::size_t c = 0; c < perm.size(); ++c)
        fixed += perm[c] == c;
    return fixed;
}

struct OracleReport {
    GroupSpec spec;
    std::uint64_t order = 0;
    std::int64_t classes = 0;
    std::int64_t semisimple = 0;
    std::int64_t regular_semisimple = 0;
    std::int64_t strongly_regular = 0;
    std::int64_t srs0 = 0;
    std::map<unsigned, std::int64_t> fixed_classes; // k | |Z(G)| -> classes fixed by z_k
};

inline OracleReport summarize(const ClassTable& t)
{
    OracleReport r;
    r.spec = t.spec;
    r.order = t.group_order;
    r.classes = static_cast<std::int64_t>(t.classes.size());
    for (const auto& c : t.classes) {
        r.semisimple += c.flags.semisimple;
        r.regular_semisimple += c.flags.regular_semisimple;
        r.strongly_regular += c.flags.strongly_regular;
        r.srs0 += c.flags.srs0;
    }
    for (unsigned k = 1; k <= t.center.size(); ++k)
        if (t.center.size() % k == 0)
            r.fixed_classes[k] = central_fixed_classes(t, k);
    return r;
}

inline OracleReport oracle_report(const GroupSpec& spec, std::uint64_t max_order = default_max_order)
{
    return summarize(conjugacy_classes(build_group(spec, max_order)));
}

} // namespace liecensus

#endif
