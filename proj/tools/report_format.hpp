#ifndef LIECENSUS_TOOLS_REPORT_FORMAT_HPP
#define LIECENSUS_TOOLS_REPORT_FORMAT_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecensus/census.hpp"
#include "liecensus/matgroup.hpp"
#include "liecensus/series.hpp"
#include "liecensus/verify.hpp"

namespace liecensus::report {

using Json = nlohmann::ordered_json;

// A report renders three ways: the JSON document, a CSV table, and the
// indented text view derived from the document.
struct Report {
    Json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline Json poly_json(const IntPoly& p)
{
    return Json{{"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

inline Json rational_json(const Rational& r)
{
    return Json{{"numerator", r.numerator()}, {"denominator", r.denominator()}};
}

inline std::string rational_text(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string family_name(int epsilon) { return epsilon == 1 ? "gl" : "gu"; }

inline Report census_count(unsigned n, const SignedQ& sq, unsigned k)
{
    const IntPoly c = c_n_k(n, k, sq.epsilon);
    const bool admissible = sq.center_order() % k == 0;
    Report r;
    r.doc = {{"report", "census_count"}, {"family", family_name(sq.epsilon)}, {"epsilon", sq.epsilon},
             {"n", n},                   {"q", sq.q},                         {"k", k},
             {"polynomial", poly_json(c)}, {"admissible", admissible}};
    r.doc["value"] = admissible ? Json(c.evaluate(sq.q)) : Json(nullptr);
    r.header = {"family", "n", "q", "k", "polynomial", "admissible", "value"};
    r.rows.push_back({family_name(sq.epsilon), std::to_string(n), std::to_string(sq.q), std::to_string(k),
                      c.to_string(), admissible ? "true" : "false",
                      admissible ? std::to_string(c.evaluate(sq.q)) : ""});
    return r;
}

inline Report census_labels(unsigned n, const SignedQ& sq, std::uint64_t cap)
{
    const auto labels = enumerate_class_labels(n, sq, cap);
    Report r;
    r.doc = {{"report", "census_labels"}, {"family", family_name(sq.epsilon)}, {"epsilon", sq.epsilon},
             {"n", n}, {"q", sq.q}, {"count", labels.size()}};

    std::map<TypeVector, std::int64_t> per_type;
    Json arr = Json::array();
    r.header = {"index", "label", "type", "semisimple", "regular_semisimple"};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& lab = labels[i];
        const auto type = type_of(lab);
        ++per_type[type];
        Json entries = Json::array();
        for (const auto& e : lab.entries())
            entries.push_back({{"family", to_string(e.gamma.family)},
                               {"gamma", e.gamma.poly},
                               {"gamma_text", poly::to_string(e.gamma.poly)},
                               {"lambda", e.lambda.parts()}});
        arr.push_back({{"label", lab.to_string()},
                       {"type", type.to_string()},
                       {"semisimple", lab.is_semisimple()},
                       {"regular_semisimple", lab.is_regular_semisimple()},
                       {"entries", entries}});
        r.rows.push_back({std::to_string(i), lab.to_string(), type.to_string(), lab.is_semisimple() ? "true" : "false",
                          lab.is_regular_semisimple() ? "true" : "false"});
    }
    Json types = Json::array();
    for (const auto& nu : enum_partitions(n)) {
        const auto tv = TypeVector::of(nu);
        const IntPoly f = c_nu_k(tv, 1, sq.epsilon);
        types.push_back({{"type", tv.to_string()},
                         {"count", per_type.count(tv) ? per_type[tv] : 0},
                         {"formula", poly_json(f)}});
    }
    r.doc["types"] = types;
    r.doc["labels"] = arr;
    return r;
}

inline Report census_ratios(unsigned n, const SignedQ& sq, std::uint64_t cap)
{
    const auto x = ratio_report(n, sq, cap);
    Report r;
    r.doc = {{"report", "census_ratios"},
             {"family", family_name(x.epsilon)},
             {"epsilon", x.epsilon},
             {"n", x.n},
             {"q", x.q},
             {"counts",
              {{"classes", x.classes},
               {"irr_r", x.irr_r},
               {"semisimple", x.semisimple},
               {"regular_semisimple", x.regular_semisimple},
               {"strongly_regular", x.strongly_regular},
               {"srs0", x.srs0},
               {"center_q_rank", x.center_q_rank}}},
             {"ratios",
              {{"r_a", rational_json(x.r_a)},
               {"r_b_semisimple", rational_json(x.r_b_semisimple)},
               {"r_b_regular", rational_json(x.r_b_regular)},
               {"r_b_strongly", rational_json(x.r_b_strongly)},
               {"r_srs0", rational_json(x.r_srs0)},
               {"r_c", rational_json(x.r_c)}}}};
    r.header = {"quantity", "value"};
    for (const auto& [key, val] : r.doc["counts"].items())
        r.rows.push_back({key, std::to_string(val.get<std::int64_t>())});
    const std::vector<std::pair<std::string, Rational>> ratios{
        {"r_a", x.r_a},     {"r_b_semisimple", x.r_b_semisimple}, {"r_b_regular", x.r_b_regular},
        {"r_b_strongly", x.r_b_strongly}, {"r_srs0", x.r_srs0},  {"r_c", x.r_c}};
    for (const auto& [key, val] : ratios)
        r.rows.push_back({key, rational_text(val)});
    return r;
}

inline Report series_coeffs(int epsilon, unsigned k, unsigned max_degree)
{
    const auto s = product_series(k, epsilon, max_degree);
    Report r;
    r.doc = {{"report", "series_coeffs"}, {"epsilon", epsilon}, {"k", k}, {"max_degree", max_degree}};
    Json arr = Json::array();
    r.header = {"degree", "polynomial", "coefficients"};
    for (unsigned d = 0; d <= max_degree; ++d) {
        const auto& c = s.coefficient(d);
        arr.push_back({{"degree", d}, {"polynomial", poly_json(c)}});
        std::string coeffs;
        for (std::size_t i = 0; i < c.coefficients().size(); ++i)
            coeffs += (i ? " " : "") + std::to_string(c.coefficients()[i]);
        r.rows.push_back({std::to_string(d), c.to_string(), coeffs});
    }
    r.doc["coefficients"] = arr;
    return r;
}

inline Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (unsigned i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.n; ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline std::string family_flag(Family f)
{
    switch (f) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::GU: return "gu";
    case Family::SU: return "su";
    }
    return "?";
}

inline Report oracle(const ClassTable& t)
{
    const auto s = summarize(t);
    Report r;
    Json fixed = Json::array();
    for (const auto& [k, v] : s.fixed_classes)
        fixed.push_back({{"k", k}, {"fixed_classes", v}});
    r.doc = {{"report", "oracle_report"},
             {"group", s.spec.name()},
             {"family", family_flag(s.spec.family)},
             {"n", s.spec.n},
             {"q", s.spec.q},
             {"order", s.order},
             {"counts",
              {{"classes", s.classes},
               {"semisimple", s.semisimple},
               {"regular_semisimple", s.regular_semisimple},
               {"strongly_regular", s.strongly_regular},
               {"srs0", s.srs0}}},
             {"center_order", t.center.size()},
             {"fixed_classes", fixed}};
    Json classes = Json::array();
    r.header = {"index",      "size",       "centralizer_order",  "element_order", "semisimple",
                "regular_semisimple", "strongly_regular", "srs0", "label"};
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        const auto& c = t.classes[i];
        Json cj = {{"index", i},
                   {"representative", matrix_json(c.representative)},
                   {"size", c.size},
                   {"centralizer_order", c.centralizer_order},
                   {"element_order", c.element_order},
                   {"flags",
                    {{"semisimple", c.flags.semisimple},
                     {"regular_semisimple", c.flags.regular_semisimple},
                     {"strongly_regular", c.flags.strongly_regular},
                     {"srs0", c.flags.srs0}}}};
        cj["label"] = c.label ? Json(c.label->to_string()) : Json(nullptr);
        classes.push_back(cj);
        r.rows.push_back({std::to_string(i), std::to_string(c.size), std::to_string(c.centralizer_order),
                          std::to_string(c.element_order), b(c.flags.semisimple), b(c.flags.regular_semisimple),
                          b(c.flags.strongly_regular), b(c.flags.srs0), c.label ? c.label->to_string() : ""});
    }
    r.doc["classes"] = classes;
    return r;
}

inline Report verify(const std::vector<CriterionResult>& results, std::uint64_t max_order)
{
    bool all = true;
    Json arr = Json::array();
    Report r;
    r.header = {"criterion", "title", "status", "check", "check_status"};
    for (const auto& c : results) {
        all = all && c.pass();
        Json checks = Json::array();
        for (const auto& ch : c.checks) {
            checks.push_back({{"check", ch.what}, {"pass", ch.pass}});
            r.rows.push_back({std::to_string(c.id), c.title, c.pass() ? "PASS" : "FAIL", ch.what,
                              ch.pass ? "PASS" : "FAIL"});
        }
        arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}});
    }
    r.doc = {{"report", "verify_all"}, {"max_order", max_order}, {"pass", all}, {"criteria", arr}};
    return r;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, const Report& r)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows)
        line(row);
}

inline std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

inline bool is_flat_array(const Json& v)
{
    if (!v.is_array())
        return false;
    for (const auto& x : v)
        if (x.is_structured())
            return false;
    return true;
}

inline void write_pretty_node(std::ostream& os, const Json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        // Polynomials and ratios print on one line.
        if (v.contains("text") && v.contains("coefficients")) {
            os << " " << v["text"].get<std::string>() << "\n";
            return;
        }
        if (v.size() == 2 && v.contains("numerator") && v.contains("denominator")) {
            os << " " << v["numerator"].dump() << "/" << v["denominator"].dump() << "\n";
            return;
        }
        if (indent > 0)
            os << "\n";
        for (const auto& [key, val] : v.items()) {
            os << pad << key << ":";
            if (val.is_structured() && !is_flat_array(val))
                write_pretty_node(os, val, indent + 2);
            else if (val.is_array())
                os << " " << val.dump() << "\n";
            else
                os << " " << scalar_text(val) << "\n";
        }
        return;
    }
    os << "\n";
    for (const auto& item : v) {
        os << pad << "-";
        if (item.is_object())
            write_pretty_node(os, item, indent + 2);
        else
            os << " " << scalar_text(item) << "\n";
    }
}

inline void write_pretty(std::ostream& os, const Report& r)
{
    if (r.doc.value("report", "") == "verify_all") {
        for (const auto& c : r.doc["criteria"]) {
            os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " criterion " << c["id"].dump() << ": "
               << c["title"].get<std::string>() << "\n";
            for (const auto& ch : c["checks"])
                os << "    " << (ch["pass"].get<bool>() ? "ok   " : "FAIL ") << ch["check"].get<std::string>() << "\n";
        }
        os << (r.doc["pass"].get<bool>() ? "all criteria passed" : "some criteria failed") << "\n";
        return;
    }
    write_pretty_node(os, r.doc, 0);
}

inline void write(std::ostream& os, const Report& r, const std::string& format)
{
    if (format == "json")
        os << r.doc.dump(2) << "\n";
    else if (format == "csv")
        write_csv(os, r);
    else
        write_pretty(os, r);
}

} // namespace liecensus::report

#endif
