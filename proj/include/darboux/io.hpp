#pragma once

// Serialization helpers shared by the CLI and the verification report:
// fixed-width scientific floats (12 significant digits, so identical inputs
// produce byte-identical tables), CSV emission, and JSON forms of the exact
// rational objects.

#include "darboux/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace darboux {

using json = nlohmann::json;

// 12 significant digits, scientific; the single float format of every table
inline std::string sci12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

inline std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

inline json poly_json(const Poly<Rat>& p) {
    json a = json::array();
    for (const auto& c : p.c) a.push_back(rat_string(c));
    return a;
}

inline json ratfn_json(const RatFn& f) {
    return json{{"p", poly_json(f.num)}, {"q", poly_json(f.den)}};
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os) const {
        for (size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "\n";
        }
    }

    json to_json() const {
        json rows_out = json::array();
        for (const auto& r : rows) {
            json obj;
            for (size_t i = 0; i < header.size() && i < r.size(); ++i)
                obj[header[i]] = r[i];
            rows_out.push_back(obj);
        }
        return rows_out;
    }
};

inline void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(path, std::ios::binary);
        f << text;
    }
}

}  // namespace darboux
