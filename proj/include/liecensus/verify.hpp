#ifndef LIECENSUS_VERIFY_HPP
#define LIECENSUS_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "census.hpp"
#include "matgroup.hpp"
#include "series.hpp"

namespace liecensus {

// The end-to-end checks behind `verify all` and the acceptance suite.  Every
// comparison is exact; nothing here is tuned.

struct Check {
    std::string what;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return !checks.empty();
    }
};

// Builds each oracle group at most once.
class OracleCache {
public:
    explicit OracleCache(std::uint64_t max_order = default_max_order) : max_order_(max_order) {}

    const ClassTable& table(const GroupSpec& s)
    {
        auto key = s.name();
        auto it = tables_.find(key);
        if (it == tables_.end())
            it = tables_.emplace(key, conjugacy_classes(build_group(s, max_order_))).first;
        return it->second;
    }

    const std::map<std::string, ClassTable>& all() const noexcept { return tables_; }

private:
    std::uint64_t max_order_;
    std::map<std::string, ClassTable> tables_;
};

namespace detail {

template <class T>
std::string eq_text(const std::string& lhs, const T& a, const T& b)
{
    std::ostringstream os;
    os << lhs << ": " << a << (a == b ? " == " : " != ") << b;
    return os.str();
}

inline std::string rat(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline SignedQ sq_of(const GroupSpec& s) { return make_signed_q(s.q, s.epsilon()); }

} // namespace detail

// 1. |Cl(G)| from the oracle equals [t^n] c(t) at q.
inline CriterionResult criterion_class_counts(OracleCache& cache)
{
    CriterionResult r{1, "class counts: oracle vs generating function", {}};
    const std::vector<std::tuple<Family, unsigned, unsigned, std::int64_t>> cases{
        {Family::GL, 2, 2, 3}, {Family::GL, 2, 3, 8},  {Family::GL, 2, 5, 24}, {Family::GL, 3, 2, 6},
        {Family::GL, 3, 3, 24}, {Family::GU, 2, 2, 9}, {Family::GU, 2, 3, 16}};
    for (auto [f, n, q, expected] : cases) {
        GroupSpec s{f, n, q};
        const auto oracle = static_cast<std::int64_t>(cache.table(s).classes.size());
        const auto series = product_series(1, s.epsilon(), n).coefficient(n).evaluate(q);
        r.checks.push_back({detail::eq_text("|Cl(" + s.name() + ")| oracle vs expected", oracle, expected),
                            oracle == expected});
        r.checks.push_back({detail::eq_text("|Cl(" + s.name() + ")| oracle vs [t^n]c(t)", oracle, series),
                            oracle == series});
    }
    return r;
}

// 2. Semisimple classes number (q - eps) q^{n-1}.
inline CriterionResult criterion_semisimple(OracleCache& cache)
{
    CriterionResult r{2, "semisimple census equals |Z|q^l", {}};
    const std::vector<std::tuple<Family, unsigned, unsigned>> cases{
        {Family::GL, 2, 2}, {Family::GL, 2, 3}, {Family::GL, 2, 5},
        {Family::GL, 3, 2}, {Family::GU, 2, 2}, {Family::GU, 2, 3}};
    for (auto [f, n, q] : cases) {
        GroupSpec s{f, n, q};
        const auto rep = summarize(cache.table(s));
        const auto formula = center_times_q_rank(n, s.epsilon()).evaluate(q);
        const auto labels = count_semisimple(n, detail::sq_of(s)).count;
        r.checks.push_back({detail::eq_text("semisimple classes of " + s.name() + " vs (q-eps)q^(n-1)",
                                            rep.semisimple, formula),
                            rep.semisimple == formula});
        r.checks.push_back({detail::eq_text("semisimple labels of " + s.name() + " vs oracle", labels,
                                            rep.semisimple),
                            labels == rep.semisimple});
    }
    return r;
}

// 3. Classes fixed by z_k equal c_{n,k}(q).
inline CriterionResult criterion_fixed_classes(OracleCache& cache)
{
    CriterionResult r{3, "fixed-class / Irr_k bridge", {}};
    auto check = [&](const GroupSpec& s, unsigned k, std::optional<std::int64_t> expected) {
        const auto& t = cache.table(s);
        const auto fixed = central_fixed_classes(t, k);
        const auto formula = c_n_k_value(s.n, k, detail::sq_of(s));
        r.checks.push_back({detail::eq_text("fixed classes of " + s.name() + " under z_" + std::to_string(k)
                                                + " vs c_{n,k}(q)",
                                            fixed, formula),
                            fixed == formula});
        if (expected)
            r.checks.push_back({detail::eq_text("fixed classes of " + s.name() + " under z_" + std::to_string(k)
                                                    + " vs expected",
                                                fixed, *expected),
                                fixed == *expected});
    };
    check({Family::GL, 2, 3}, 2, 2);
    check({Family::GL, 2, 5}, 2, std::nullopt);
    check({Family::GL, 2, 5}, 4, std::nullopt);
    check({Family::GU, 2, 3}, 2, 4);
    check({Family::GU, 2, 3}, 4, std::nullopt);
    const IntPoly c33 = c_n_k(3, 3, 1);
    const IntPoly q_minus_1 = IntPoly::q() - IntPoly::constant(1);
    r.checks.push_back({"c_{3,3}(q) = " + c33.to_string() + " (eps=+1), expected q - 1", c33 == q_minus_1});
    const auto c33_at_4 = c_n_k_value(3, 3, make_signed_q(4, 1));
    r.checks.push_back({detail::eq_text<std::int64_t>("c_{3,3}(4) for GL_3(4)", c33_at_4, 3), c33_at_4 == 3});
    const GroupSpec gu32{Family::GU, 3, 2};
    const auto order = static_cast<std::int64_t>(cache.table(gu32).group_order);
    r.checks.push_back({detail::eq_text<std::int64_t>("|GU_3(2)|", order, 648), order == 648});
    check(gu32, 3, std::nullopt);
    return r;
}

// 4. Polynomial identities.
inline CriterionResult criterion_symbolic()
{
    CriterionResult r{4, "symbolic identities", {}};
    for (unsigned k : {1u, 2u, 3u})
        for (int eps : {1, -1}) {
            auto chk = verify_series_vs_census(k, eps, 8);
            r.checks.push_back({"series vs census k=" + std::to_string(k) + " eps=" + std::to_string(eps)
                                    + " N=8" + (chk.ok() ? "" : " first mismatch at n=" + std::to_string(*chk.first_mismatch)),
                                chk.ok()});
        }
    for (unsigned l : {2u, 3u, 5u})
        for (int eps : {1, -1}) {
            IntPoly c = c_n_k(l, l, eps);
            IntPoly expect = IntPoly::q() - IntPoly::constant(eps);
            r.checks.push_back({"c_{" + std::to_string(l) + "," + std::to_string(l) + "}(q) = " + c.to_string()
                                    + " vs " + expect.to_string() + " (eps=" + std::to_string(eps) + ")",
                                c == expect});
        }
    bool leading_ok = true;
    std::string first_bad;
    for (int eps : {1, -1})
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                if (n % k != 0)
                    continue;
                const int d = static_cast<int>(n / k);
                IntPoly rest = c_n_k(n, k, eps) - IntPoly::monomial(1, static_cast<unsigned>(d));
                if (rest.degree() >= d) {
                    leading_ok = false;
                    if (first_bad.empty())
                        first_bad = " (fails at n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
                }
            }
    r.checks.push_back({"deg(c_{n,k} - q^{n/k}) < n/k for n <= 8, k | n, both eps" + first_bad, leading_ok});
    return r;
}

// 5. Restriction statistics.
inline CriterionResult criterion_restriction(OracleCache& cache)
{
    CriterionResult r{5, "restriction statistics for GL_l(eps q)", {}};
    const std::vector<std::tuple<Family, unsigned, std::int64_t>> sl{
        {Family::SL, 3, 7}, {Family::SL, 5, 9}, {Family::SU, 3, 7}};
    for (auto [f, q, expected] : sl) {
        GroupSpec s{f, 2, q};
        const auto pred = sl_irr_prediction(2, detail::sq_of(s));
        const auto oracle = static_cast<std::int64_t>(cache.table(s).classes.size());
        r.checks.push_back({detail::eq_text("predicted |Irr(" + s.name() + ")| vs oracle |Cl|", pred, oracle),
                            pred == oracle});
        r.checks.push_back({detail::eq_text("oracle |Cl(" + s.name() + ")| vs expected", oracle, expected),
                            oracle == expected});
    }
    const std::vector<std::tuple<unsigned, unsigned, int, std::int64_t>> irr{
        {2, 3, 1, 2}, {2, 3, -1, 4}, {3, 3, 1, 0}};
    for (auto [n, q, eps, expected] : irr) {
        const auto v = irr_r_count(n, make_signed_q(q, eps));
        r.checks.push_back({detail::eq_text("irr_r_count(n=" + std::to_string(n) + ", q=" + std::to_string(q)
                                                + ", eps=" + std::to_string(eps) + ")",
                                            v, expected),
                            v == expected});
    }
    return r;
}

// 6. srs0 => strongly regular <=> regular semisimple => semisimple, classwise.
inline CriterionResult criterion_flags(OracleCache& cache)
{
    CriterionResult r{6, "strongly-regular flag chain", {}};
    for (const auto& [name, t] : cache.all()) {
        bool ok = true;
        for (const auto& c : t.classes) {
            const auto& f = c.flags;
            ok = ok && (!f.srs0 || f.strongly_regular) && (f.strongly_regular == f.regular_semisimple)
                 && (!f.regular_semisimple || f.semisimple);
        }
        r.checks.push_back({"flag chain holds on every class of " + name, ok});
    }
    const auto rep = summarize(cache.table({Family::GL, 2, 3}));
    const bool counts = rep.srs0 == 2 && rep.strongly_regular == 4 && rep.semisimple == 6 && rep.classes == 8;
    r.checks.push_back({"GL_2(3) {srs0, srs, ss, all} = {" + std::to_string(rep.srs0) + ", "
                            + std::to_string(rep.strongly_regular) + ", " + std::to_string(rep.semisimple) + ", "
                            + std::to_string(rep.classes) + "} vs {2, 4, 6, 8}",
                        counts});
    return r;
}

// 7. Census ratios at desk scale.
inline CriterionResult criterion_ratio_trend()
{
    CriterionResult r{7, "census ratio trend", {}};
    // rC = (q-1)q / c_2(q) equals q/(q+1)  <=>  (q-1)q (q+1) == q c_2(q).
    const IntPoly lhs = center_times_q_rank(2, 1) * (IntPoly::q() + IntPoly::constant(1));
    const IntPoly rhs = IntPoly::q() * c_n_k(2, 1, 1);
    r.checks.push_back({"GL_2: rC = q/(q+1) as rational functions", lhs == rhs});

    const std::vector<unsigned> qs{2, 3, 5, 7, 9};
    std::vector<RatioReport> reps;
    for (unsigned q : qs)
        reps.push_back(ratio_report(2, make_signed_q(q, 1)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& rep = reps[i];
        const Rational expect(rep.q, rep.q + 1);
        r.checks.push_back({"GL_2(" + std::to_string(rep.q) + ") rC = " + detail::rat(rep.r_c) + " vs q/(q+1)",
                            rep.r_c == expect});
    }
    using Getter = std::function<Rational(const RatioReport&)>;
    const std::vector<std::pair<std::string, Getter>> series{
        {"rA", [](const RatioReport& x) { return x.r_a; }},
        {"rB(semisimple)", [](const RatioReport& x) { return x.r_b_semisimple; }},
        {"rB(regular)", [](const RatioReport& x) { return x.r_b_regular; }},
        {"rB(strongly regular)", [](const RatioReport& x) { return x.r_b_strongly; }},
        {"rC", [](const RatioReport& x) { return x.r_c; }},
    };
    for (const auto& [name, get] : series) {
        std::string values;
        bool monotone = true;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            values += (i ? ", " : "") + detail::rat(get(reps[i]));
            if (i > 0 && get(reps[i]) < get(reps[i - 1]))
                monotone = false;
        }
        r.checks.push_back({"GL_2 " + name + " nondecreasing over q in {2,3,5,7,9}: [" + values + "]", monotone});
    }
    const Rational ra9 = reps.back().r_a;
    r.checks.push_back({"rA(GL_2(9)) = " + detail::rat(ra9) + " >= 9/10", ra9 >= Rational(9, 10)});
    for (unsigned q : {2u, 3u, 5u}) {
        const auto rep = ratio_report(3, make_signed_q(q, 1));
        r.checks.push_back({"GL_3(" + std::to_string(q) + ") rA = " + detail::rat(rep.r_a) + " (gcd(3, q-1) = 1)",
                            rep.r_a == Rational(1)});
    }
    return r;
}

// 8. label_of_element is a bijection from classes onto enumerated labels.
inline CriterionResult criterion_label_bijection(OracleCache& cache)
{
    CriterionResult r{8, "class label bijection", {}};
    for (GroupSpec s : {GroupSpec{Family::GL, 2, 3}, GroupSpec{Family::GL, 3, 2}, GroupSpec{Family::GU, 2, 2}}) {
        const auto& t = cache.table(s);
        const SignedQ sq = detail::sq_of(s);
        std::set<ClassLabel> from_classes;
        std::map<TypeVector, std::int64_t> per_type;
        for (const auto& c : t.classes) {
            from_classes.insert(*c.label);
            ++per_type[type_of(*c.label)];
        }
        const auto enumerated = enumerate_class_labels(s.n, sq);
        const std::set<ClassLabel> enum_set(enumerated.begin(), enumerated.end());
        const bool injective = from_classes.size() == t.classes.size();
        r.checks.push_back({s.name() + ": " + std::to_string(t.classes.size()) + " classes map to "
                                + std::to_string(from_classes.size()) + " distinct labels",
                            injective});
        r.checks.push_back({s.name() + ": class labels equal enumerate_class_labels (" + std::to_string(enum_set.size())
                                + " labels)",
                            from_classes == enum_set && enum_set.size() == enumerated.size()});
        bool types_ok = true;
        for (const auto& nu : enum_partitions(s.n)) {
            const auto tv = TypeVector::of(nu);
            const auto expect = c_nu_k(tv, 1, s.epsilon()).evaluate(s.q);
            const auto got = per_type.count(tv) ? per_type[tv] : 0;
            types_ok = types_ok && got == expect;
        }
        r.checks.push_back({s.name() + ": per-type class counts match c_{nu,1}(q)", types_ok});
    }
    return r;
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t max_order = default_max_order)
{
    OracleCache cache(max_order);
    std::vector<CriterionResult> out;
    out.push_back(criterion_class_counts(cache));
    out.push_back(criterion_semisimple(cache));
    out.push_back(criterion_fixed_classes(cache));
    out.push_back(criterion_symbolic());
    out.push_back(criterion_restriction(cache));
    out.push_back(criterion_ratio_trend());
    out.push_back(criterion_label_bijection(cache));
    // Flag chain last so it covers every group built above.
    out.push_back(criterion_flags(cache));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

} // namespace liecensus

#endif
