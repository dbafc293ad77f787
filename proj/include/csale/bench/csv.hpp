// csv.hpp - result rows to and from CSV
#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csale/bench/experiment.hpp"

namespace csale::bench {

inline constexpr const char* csv_header =
    "instance,algorithm,epsilon,run,samples,oracle_calls,time_ms,eps_optimal,accepted_early_frac";

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_g6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

inline std::string quote_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) throw CsvError("unterminated quote");
    return fields;
}

}  // namespace detail

inline void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << csv_header << '\n';
    for (const ResultRow& r : rows) {
        out << detail::quote_field(r.instance) << ',' << detail::quote_field(r.algorithm) << ','
            << detail::format_g6(r.epsilon) << ',' << r.run << ',';
        if (r.failed) {
            out << ",,,error,\n";
            continue;
        }
        out << r.samples << ',' << r.oracle_calls << ',' << detail::format_g6(r.time_ms) << ','
            << (r.eps_optimal ? "true" : "false") << ',' << detail::format_g6(r.accepted_early_frac)
            << '\n';
    }
}

inline void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CsvError("cannot open '" + path + "' for writing");
    write_csv(out, rows);
    out.flush();
    if (!out) throw CsvError("write to '" + path + "' failed");
}

inline std::vector<ResultRow> read_csv(std::istream& in, const std::string& origin = "<csv>") {
    std::string line;
    if (!std::getline(in, line)) throw CsvError(origin + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != csv_header) throw CsvError(origin + ": unexpected header");

    std::vector<ResultRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::string where = origin + ":" + std::to_string(line_no);
        std::vector<std::string> f;
        try {
            f = detail::split_csv_line(line);
        } catch (const CsvError& e) {
            throw CsvError(where + ": " + e.what());
        }
        if (f.size() != 9) throw CsvError(where + ": expected 9 fields, got " + std::to_string(f.size()));
        try {
            ResultRow r;
            r.instance = f[0];
            r.algorithm = f[1];
            r.epsilon = std::stod(f[2]);
            r.run = std::stoull(f[3]);
            if (f[7] == "error") {
                r.failed = true;
            } else {
                r.samples = std::stoull(f[4]);
                r.oracle_calls = std::stoull(f[5]);
                r.time_ms = std::stod(f[6]);
                if (f[7] != "true" && f[7] != "false") throw CsvError("bad eps_optimal '" + f[7] + "'");
                r.eps_optimal = f[7] == "true";
                r.accepted_early_frac = std::stod(f[8]);
            }
            rows.push_back(std::move(r));
        } catch (const CsvError& e) {
            throw CsvError(where + ": " + e.what());
        } catch (const std::exception&) {
            throw CsvError(where + ": malformed number");
        }
    }
    return rows;
}

inline std::vector<ResultRow> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot open '" + path + "'");
    return read_csv(in, path);
}

}  // namespace csale::bench
