#pragma once

// JSON, CSV and plain-text renderings of reports, coefficient tables and
// tableau listings.  JSON output uses insertion-ordered objects so that equal
// inputs give byte-identical text.

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>

#include "hecke/bases.hpp"
#include "hecke/verify.hpp"

namespace hecke {

using ojson = nlohmann::ordered_json;

inline ojson params_json(const Params& p) {
    ojson j;
    j["variant"] = to_string(p.variant());
    j["ell"] = p.level();
    j["n"] = p.n();
    if (p.is_degenerate()) {
        ojson u = ojson::array();
        for (const auto& x : p.degenerate().u) u.push_back(to_string(x));
        j["u"] = u;
    } else {
        j["q"] = to_string(p.nondegenerate().q);
        ojson Q = ojson::array();
        for (const auto& x : p.nondegenerate().Q) Q.push_back(to_string(x));
        j["Q"] = Q;
    }
    return j;
}

inline ojson suite_json(const SuiteReport& s) {
    ojson j;
    j["name"] = s.name;
    j["total"] = s.total();
    j["passed"] = s.passed();
    if (!s.skipped.empty()) j["skipped"] = s.skipped;
    ojson failures = ojson::array();
    for (const auto& r : s.results) {
        if (r.pass) continue;
        ojson f;
        f["instance"] = r.check + ": " + r.instance;
        f["expected"] = r.expected;
        f["actual"] = r.actual;
        failures.push_back(f);
    }
    j["failures"] = failures;
    return j;
}

/// {"params", "suites": [{"name","total","passed","failures"}], "elapsed_ms"}.
inline ojson report_json(const VerificationReport& r) {
    ojson j;
    j["params"] = params_json(r.params);
    ojson suites = ojson::array();
    for (const auto& s : r.suites) suites.push_back(suite_json(s));
    j["suites"] = suites;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

/// One line per suite, then the failures.
inline void write_report_text(std::ostream& os, const VerificationReport& r) {
    os << r.params.describe() << '\n';
    for (const auto& s : r.suites) {
        os << (s.ok() ? "PASS " : "FAIL ") << s.name << ' ' << s.passed() << '/' << s.total();
        if (!s.skipped.empty()) os << " (skipped: " << s.skipped << ')';
        os << '\n';
        for (const auto& c : s.results)
            if (!c.pass)
                os << "  " << c.check << ": " << c.instance << "\n    expected " << c.expected << "\n    actual   "
                   << c.actual << '\n';
    }
    os << "elapsed " << r.elapsed_ms << " ms\n";
}

/// suite,total,passed,failed
inline void write_report_csv(std::ostream& os, const VerificationReport& r) {
    os << "suite,total,passed,failed\n";
    for (const auto& s : r.suites)
        os << s.name << ',' << s.total() << ',' << s.passed() << ',' << (s.total() - s.passed()) << '\n';
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Columns lambda,tableau,value; tableau is the entry-ordered node list.
inline void write_table_csv(std::ostream& os, const CoefficientTable& t) {
    os << "lambda,tableau,value\n";
    for (const auto& tab : t.tableaux())
        os << csv_field(to_string(tab.shape())) << ',' << csv_field(positions_string(tab)) << ','
           << to_string(t.at(tab)) << '\n';
}

inline ojson table_json(const CoefficientTable& t, const Params& p) {
    ojson j;
    j["params"] = params_json(p);
    j["table"] = to_string(t.kind());
    ojson rows = ojson::array();
    for (const auto& tab : t.tableaux()) {
        ojson row;
        row["lambda"] = to_string(tab.shape());
        row["tableau"] = positions_string(tab);
        row["value"] = to_string(t.at(tab));
        rows.push_back(row);
    }
    j["values"] = rows;
    return j;
}

inline void write_table_text(std::ostream& os, const CoefficientTable& t) {
    for (const auto& tab : t.tableaux())
        os << to_string(tab.shape()) << "  " << to_string(tab) << "  " << to_string(t.at(tab)) << '\n';
}

/// P_n with counts, strict dominance, and optionally every tableau.
inline ojson tableaux_json(int level, int n, bool full) {
    TableauIndex idx(level, n);
    ojson j;
    j["ell"] = level;
    j["n"] = n;
    j["shapes_count"] = idx.num_blocks();
    j["sum_f_squared"] = idx.dimension();
    ojson shapes = ojson::array();
    for (std::size_t b = 0; b < idx.num_blocks(); ++b) {
        const auto& lam = idx.shape(b);
        ojson s;
        s["lambda"] = to_string(lam);
        s["count"] = idx.tableaux(b).size();
        ojson dom = ojson::array();
        for (const auto& mu : idx.shapes())
            if (mu != lam && dominates(lam, mu)) dom.push_back(to_string(mu));
        s["dominates"] = dom;
        if (full) {
            ojson ts = ojson::array();
            for (const auto& t : idx.tableaux(b)) ts.push_back(to_string(t));
            s["tableaux"] = ts;
        }
        shapes.push_back(s);
    }
    j["shapes"] = shapes;
    return j;
}

inline void write_tableaux_text(std::ostream& os, int level, int n, bool full) {
    TableauIndex idx(level, n);
    os << "ell=" << level << " n=" << n << ": " << idx.num_blocks() << " multipartitions, sum f^2 = " << idx.dimension()
       << '\n';
    for (std::size_t b = 0; b < idx.num_blocks(); ++b) {
        const auto& lam = idx.shape(b);
        os << to_string(lam) << "  f=" << idx.tableaux(b).size();
        std::string dom;
        for (const auto& mu : idx.shapes())
            if (mu != lam && dominates(lam, mu)) dom += (dom.empty() ? "" : " ") + to_string(mu);
        if (!dom.empty()) os << "  dominates " << dom;
        os << '\n';
        if (full)
            for (const auto& t : idx.tableaux(b)) os << "    " << to_string(t) << '\n';
    }
}

}  // namespace hecke
