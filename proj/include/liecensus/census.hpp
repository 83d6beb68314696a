#ifndef LIECENSUS_CENSUS_HPP
#define LIECENSUS_CENSUS_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "intpoly.hpp"
#include "label.hpp"
#include "partitions.hpp"
#include "polyspace.hpp"

namespace liecensus {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint64_t default_label_cap = 5'000'000;

enum class LabelKind {
    all,                // every class
    semisimple,         // every lambda_Gamma = (1^m)
    regular_semisimple, // every lambda_Gamma = (1)
};

namespace detail {

struct LabelEnumerator {
    const std::vector<GammaOrbit>& gammas;
    LabelKind kind;
    std::uint64_t cap;
    std::vector<ClassLabel>& out;
    std::vector<LabelEntry> cur{};

    void run(std::size_t i, unsigned remaining)
    {
        if (remaining == 0) {
            if (out.size() >= cap)
                throw cap_exceeded("class label enumeration exceeds cap " + std::to_string(cap));
            out.emplace_back(cur);
            return;
        }
        for (; i < gammas.size(); ++i) {
            const unsigned d = gammas[i].degree();
            if (d > remaining)
                return; // gammas are sorted by degree
            unsigned max_m = kind == LabelKind::regular_semisimple ? 1 : remaining / d;
            for (unsigned m = 1; m <= max_m; ++m) {
                std::vector<Partition> lambdas;
                if (kind == LabelKind::all)
                    lambdas = enum_partitions(m);
                else
                    lambdas = {Partition::column(m)};
                for (auto& lam : lambdas) {
                    cur.push_back({gammas[i], std::move(lam)});
                    run(i + 1, remaining - m * d);
                    cur.pop_back();
                }
            }
        }
    }
};

} // namespace detail

// Labels of size n over gamma_set(sq, n), in a deterministic order.
inline std::vector<ClassLabel> enumerate_labels(unsigned n, const SignedQ& sq, LabelKind kind,
                                                std::uint64_t cap = default_label_cap)
{
    const auto gammas = gamma_set(sq, n);
    std::vector<ClassLabel> out;
    detail::LabelEnumerator e{gammas, kind, cap, out};
    e.run(0, n);
    return out;
}

// One label per conjugacy class of GL_n(eps q).
inline std::vector<ClassLabel> enumerate_class_labels(unsigned n, const SignedQ& sq,
                                                      std::uint64_t cap = default_label_cap)
{
    return enumerate_labels(n, sq, LabelKind::all, cap);
}

// c_{nu,k}(q) = prod_{n_i > 0} (q^{n_i/k} - eps q^{n_i/k - 1}) when k | n_i for all i, else 0.
inline IntPoly c_nu_k(const TypeVector& nu, unsigned k, int epsilon)
{
    if (k == 0)
        throw invalid_argument("k must be >= 1");
    if (epsilon != 1 && epsilon != -1)
        throw invalid_argument("epsilon must be +1 or -1");
    IntPoly out = IntPoly::constant(1);
    for (unsigned ni : nu.counts()) {
        if (ni == 0)
            continue;
        if (ni % k != 0)
            return {};
        const unsigned m = ni / k;
        out *= IntPoly::monomial(1, m) - IntPoly::monomial(epsilon, m - 1);
    }
    return out;
}

// c_{n,k}(q) = sum over types nu of size n of c_{nu,k}(q).
inline IntPoly c_n_k(unsigned n, unsigned k, int epsilon)
{
    IntPoly out;
    for (const auto& nu : enum_partitions(n))
        out += c_nu_k(TypeVector::of(nu), k, epsilon);
    return out;
}

inline void require_admissible(unsigned k, const SignedQ& sq)
{
    if (k == 0 || sq.center_order() % k != 0)
        throw inadmissible("k = " + std::to_string(k) + " does not divide q - eps = "
                           + std::to_string(sq.center_order()));
}

// c_{n,k} at a concrete q; rejects k not dividing q - eps.
inline std::int64_t c_n_k_value(unsigned n, unsigned k, const SignedQ& sq)
{
    require_admissible(k, sq);
    return c_n_k(n, k, sq.epsilon).evaluate(sq.q);
}

// |Z(G)^{o F}| q^l = (q - eps) q^{n-1}, with l the semisimple rank.
inline IntPoly center_times_q_rank(unsigned n, int epsilon)
{
    if (n == 0)
        throw invalid_argument("n must be >= 1");
    return (IntPoly::q() - IntPoly::constant(epsilon)) * IntPoly::monomial(1, n - 1);
}

struct SemisimpleCount {
    std::int64_t count;  // enumerated
    IntPoly formula;     // (q - eps) q^{n-1}
    std::int64_t formula_value;
};

inline SemisimpleCount count_semisimple(unsigned n, const SignedQ& sq, std::uint64_t cap = default_label_cap)
{
    auto labels = enumerate_labels(n, sq, LabelKind::semisimple, cap);
    IntPoly f = center_times_q_rank(n, sq.epsilon);
    return {static_cast<std::int64_t>(labels.size()), f, f.evaluate(sq.q)};
}

inline std::int64_t count_regular_semisimple(unsigned n, const SignedQ& sq, std::uint64_t cap = default_label_cap)
{
    return static_cast<std::int64_t>(enumerate_labels(n, sq, LabelKind::regular_semisimple, cap).size());
}

// Coefficient of t^n in prod_d (1 + t^d)^{N_d}, N_d = number of degree-d orbits.
inline std::int64_t regular_semisimple_by_product(unsigned n, const SignedQ& sq)
{
    std::vector<std::int64_t> series(n + 1, 0);
    series[0] = 1;
    for (const auto& g : gamma_set(sq, n)) {
        const unsigned d = g.degree();
        for (unsigned i = n; i >= d && i > 0; --i)
            series[i] = checked_add(series[i], series[i - d]);
    }
    return series[n];
}

// Regular semisimple labels not fixed by any nontrivial central twist.
inline std::int64_t count_srs0(unsigned n, const SignedQ& sq, std::uint64_t cap = default_label_cap)
{
    const auto labels = enumerate_labels(n, sq, LabelKind::regular_semisimple, cap);
    const auto zorder = sq.center_order();
    std::vector<Elem> nontrivial;
    if (zorder > 1) {
        const Elem g = central_generator(sq);
        for (std::int64_t j = 1; j < zorder; ++j)
            nontrivial.push_back(sq.field().pow(g, j));
    }
    std::int64_t count = 0;
    for (const auto& lab : labels) {
        bool fixed = false;
        for (Elem z : nontrivial)
            if (twist_label(sq, z, lab) == lab) {
                fixed = true;
                break;
            }
        count += !fixed;
    }
    return count;
}

// |Irr_r(GL_n(eps q))| = |union_{prime l | gcd(n, q - eps)} Irr_l| by
// inclusion-exclusion over squarefree d > 1, using Irr_a cap Irr_b = Irr_lcm(a,b).
inline std::int64_t irr_r_count(unsigned n, const SignedQ& sq)
{
    const auto g = std::gcd<std::int64_t>(n, sq.center_order());
    const auto primes = prime_divisors(static_cast<std::uint64_t>(g));
    std::int64_t total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << primes.size()); ++mask) {
        std::uint64_t d = 1;
        int omega = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) {
                d *= primes[i];
                ++omega;
            }
        const std::int64_t term = c_n_k_value(n, static_cast<unsigned>(d), sq);
        total = checked_add(total, omega % 2 == 1 ? term : -term);
    }
    return total;
}

// Exact census ratios for GL_n(eps q).  Every ratio is oriented so that it
// lies in (0, 1] and tends to 1 as q grows.
struct RatioReport {
    int epsilon = 1;
    unsigned n = 0;
    unsigned q = 0;
    std::int64_t classes = 0;            // c_n(q) = |Irr| = |Cl|
    std::int64_t irr_r = 0;              // restriction to SL reducible
    std::int64_t semisimple = 0;         // |Cl_s|
    std::int64_t regular_semisimple = 0; // |Cl_rs|
    std::int64_t strongly_regular = 0;   // |Cl_srs|, equal to |Cl_rs| for GL/GU
    std::int64_t srs0 = 0;               // strongly regular, no central element fixes the class
    std::int64_t center_q_rank = 0;      // (q - eps) q^{n-1}

    Rational r_a{1};             // (classes - irr_r) / classes
    Rational r_b_semisimple{1};  // semisimple / center_q_rank
    Rational r_b_regular{1};     // regular_semisimple / center_q_rank
    Rational r_b_strongly{1};    // strongly_regular / center_q_rank
    Rational r_srs0{1};          // srs0 / center_q_rank
    Rational r_c{1};             // center_q_rank / classes
};

inline RatioReport ratio_report(unsigned n, const SignedQ& sq, std::uint64_t cap = default_label_cap)
{
    RatioReport r;
    r.epsilon = sq.epsilon;
    r.n = n;
    r.q = sq.q;
    r.classes = c_n_k(n, 1, sq.epsilon).evaluate(sq.q);
    r.irr_r = irr_r_count(n, sq);
    r.semisimple = count_semisimple(n, sq, cap).count;
    r.regular_semisimple = count_regular_semisimple(n, sq, cap);
    r.strongly_regular = r.regular_semisimple;
    r.srs0 = count_srs0(n, sq, cap);
    r.center_q_rank = center_times_q_rank(n, sq.epsilon).evaluate(sq.q);
    r.r_a = Rational(r.classes - r.irr_r, r.classes);
    r.r_b_semisimple = Rational(r.semisimple, r.center_q_rank);
    r.r_b_regular = Rational(r.regular_semisimple, r.center_q_rank);
    r.r_b_strongly = Rational(r.strongly_regular, r.center_q_rank);
    r.r_srs0 = Rational(r.srs0, r.center_q_rank);
    r.r_c = Rational(r.center_q_rank, r.classes);
    return r;
}

// Predicted |Irr(SL_l(eps q))| for a prime l dividing q - eps:
// (c_l(q) - (q - eps)) / (q - eps) + l^2.
inline std::int64_t sl_irr_prediction(unsigned l, const SignedQ& sq)
{
    if (!is_prime(l))
        throw invalid_argument("l must be prime, got " + std::to_string(l));
    const std::int64_t z = sq.center_order();
    if (z % l != 0)
        throw inadmissible("l = " + std::to_string(l) + " does not divide q - eps = " + std::to_string(z));
    const std::int64_t cl = c_n_k(l, 1, sq.epsilon).evaluate(sq.q);
    if ((cl - z) % z != 0)
        throw std::logic_error("c_l(q) - (q - eps) is not divisible by q - eps");
    return (cl - z) / z + static_cast<std::int64_t>(l) * l;
}

} // namespace liecensus

#endif
