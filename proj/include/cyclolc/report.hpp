#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclolc/common.hpp"
#include "cyclolc/lc.hpp"

namespace cyclolc {

inline std::string csv_header() { return "p,n,e,b,g,branch,predicted,bm,gcd,roots,zero_count,agree"; }

namespace detail {

inline std::string cell(const std::optional<u64>& v) { return v ? std::to_string(*v) : "NA"; }

inline std::optional<u64> parse_cell(const std::string& s) {
    if (s == "NA" || s == "SKIPPED") return std::nullopt;
    return std::stoull(s);
}

}  // namespace detail

inline std::string to_csv_row(const LcReport& r) {
    std::ostringstream os;
    os << r.params.p << ',' << r.params.n << ',' << r.params.e << ',' << r.params.b << ','
       << r.params.g << ',' << r.branch() << ',' << detail::cell(r.predicted) << ','
       << detail::cell(r.bm) << ',' << detail::cell(r.gcd) << ','
       << (r.roots ? std::to_string(*r.roots) : (r.roots_skipped ? "SKIPPED" : "NA")) << ','
       << detail::cell(r.zero_count) << ',' << (r.agree ? "true" : "false");
    return os.str();
}

inline std::string to_csv(const std::vector<LcReport>& rows) {
    std::ostringstream os;
    os << csv_header() << '\n';
    for (const auto& r : rows) os << to_csv_row(r) << '\n';
    return os.str();
}

// Parses one data row back into a report. The parameters are re-validated on
// the way in; a SKIPPED roots cell keeps only the fact of the skip.
inline LcReport from_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    if (cells.size() != 12) throw std::invalid_argument("malformed csv row");

    Caps wide;
    wide.period = kPeriodCapCeiling;
    LcReport r;
    r.params = CyclotomicParams::make(std::stoull(cells[0]),
                                      static_cast<unsigned>(std::stoul(cells[1])),
                                      std::stoull(cells[2]), std::stoull(cells[3]),
                                      std::stoull(cells[4]), wide);
    if (cells[5] == "2 in D0") {
        r.two_in_d0 = true;
    } else if (cells[5] == "2 not in D0") {
        r.two_in_d0 = false;
    } else {
        throw std::invalid_argument("malformed branch cell");
    }
    r.predicted = detail::parse_cell(cells[6]);
    r.bm = detail::parse_cell(cells[7]);
    r.gcd = detail::parse_cell(cells[8]);
    r.roots = detail::parse_cell(cells[9]);
    if (cells[9] == "SKIPPED") r.roots_skipped = "SKIPPED";
    r.zero_count = detail::parse_cell(cells[10]);
    if (cells[11] == "true") {
        r.agree = true;
    } else if (cells[11] == "false") {
        r.agree = false;
    } else {
        throw std::invalid_argument("malformed agree cell");
    }
    return r;
}

inline nlohmann::ordered_json to_json(const LcReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.params.p;
    j["n"] = r.params.n;
    j["e"] = r.params.e;
    j["b"] = r.params.b;
    j["g"] = r.params.g;
    j["branch"] = r.branch();
    auto put = [&](const char* key, const std::optional<u64>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("predicted", r.predicted);
    put("bm", r.bm);
    put("gcd", r.gcd);
    put("roots", r.roots);
    put("zero_count", r.zero_count);
    if (r.roots_skipped) j["roots_skipped"] = *r.roots_skipped;
    j["agree"] = r.agree;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<LcReport>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

inline LcReport from_json(const nlohmann::ordered_json& j) {
    Caps wide;
    wide.period = kPeriodCapCeiling;
    LcReport r;
    r.params = CyclotomicParams::make(j.at("p").get<u64>(), j.at("n").get<unsigned>(),
                                      j.at("e").get<u64>(), j.at("b").get<u64>(),
                                      j.at("g").get<u64>(), wide);
    r.two_in_d0 = j.at("branch").get<std::string>() == "2 in D0";
    auto get = [&](const char* key) -> std::optional<u64> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<u64>();
    };
    r.predicted = get("predicted");
    r.bm = get("bm");
    r.gcd = get("gcd");
    r.roots = get("roots");
    r.zero_count = get("zero_count");
    if (j.contains("roots_skipped") && !j.at("roots_skipped").is_null())
        r.roots_skipped = j.at("roots_skipped").get<std::string>();
    r.agree = j.at("agree").get<bool>();
    return r;
}

}  // namespace cyclolc
