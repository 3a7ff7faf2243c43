#include "grs/csv.hpp"
#include "grs/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace grs {

namespace {

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

int parse_int(const std::string& s, const std::string& path, int lineno)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": expected integer index, got \"" + s + "\"");
    }
    return v;
}

double parse_double(const std::string& s, const std::string& path, int lineno)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": expected finite value, got \"" + s + "\"");
    }
}

std::string strip_cr(std::string line)
{
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

} // namespace

SampleWindow1D load_samples_1d(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("sample file not readable: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "j,value") {
        throw ParseError(path + ": expected header \"j,value\"");
    }

    std::map<int, double> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split_line(line);
        if (fields.size() != 2) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 2 fields, got " + std::to_string(fields.size()));
        }
        const int j = parse_int(fields[0], path, lineno);
        if (!rows.emplace(j, parse_double(fields[1], path, lineno)).second) {
            throw ParseError(path + ": duplicate index j=" + std::to_string(j));
        }
    }
    if (rows.empty()) {
        throw ParseError(path + ": no sample rows");
    }

    const int n = rows.rbegin()->first;
    if (n < 2 || rows.begin()->first != -n + 1 ||
        rows.size() != static_cast<std::size_t>(2 * n)) {
        throw ParseError(path + ": indices must form exactly (-n, n] for some n >= 2");
    }
    std::vector<double> values;
    values.reserve(rows.size());
    int expect = -n + 1;
    for (const auto& [j, v] : rows) {
        if (j != expect) {
            throw ParseError(path + ": missing index j=" + std::to_string(expect));
        }
        values.push_back(v);
        ++expect;
    }
    return {n, std::move(values)};
}

void save_samples_1d(const SampleWindow1D& window, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open for writing: " + path);
    }
    out << "j,value\n";
    char buf[64];
    for (int j = -window.n() + 1; j <= window.n(); ++j) {
        std::snprintf(buf, sizeof buf, "%d,%.17g\n", j, window.value_at(j));
        out << buf;
    }
    if (!out) {
        throw ParseError("write failed: " + path);
    }
}

SampleWindowND load_samples_2d(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("sample file not readable: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "j1,j2,value") {
        throw ParseError(path + ": expected header \"j1,j2,value\"");
    }

    std::map<std::pair<int, int>, double> rows;
    int lineno = 1;
    int jmax = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split_line(line);
        if (fields.size() != 3) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 3 fields, got " + std::to_string(fields.size()));
        }
        const int j1 = parse_int(fields[0], path, lineno);
        const int j2 = parse_int(fields[1], path, lineno);
        if (!rows.emplace(std::make_pair(j1, j2), parse_double(fields[2], path, lineno))
                 .second) {
            throw ParseError(path + ": duplicate index (" + std::to_string(j1) + "," +
                             std::to_string(j2) + ")");
        }
        jmax = std::max(jmax, std::max(j1, j2));
    }

    const int n = jmax;
    if (n < 2 || rows.size() != static_cast<std::size_t>(2 * n) * (2 * n)) {
        throw ParseError(path + ": indices must cover exactly the lattice (-n, n]^2");
    }
    std::vector<double> values;
    values.reserve(rows.size());
    for (int j1 = -n + 1; j1 <= n; ++j1) {
        for (int j2 = -n + 1; j2 <= n; ++j2) {
            const auto it = rows.find({j1, j2});
            if (it == rows.end()) {
                throw ParseError(path + ": missing index (" + std::to_string(j1) + "," +
                                 std::to_string(j2) + ")");
            }
            values.push_back(it->second);
        }
    }
    return {2, n, std::move(values)};
}

void save_samples_2d(const SampleWindowND& window, const std::string& path)
{
    if (window.dim() != 2) {
        throw DomainError("save_samples_2d: window must be two-dimensional");
    }
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open for writing: " + path);
    }
    out << "j1,j2,value\n";
    char buf[96];
    const int n = window.n();
    std::size_t flat = 0;
    const std::vector<double>& v = window.values();
    for (int j1 = -n + 1; j1 <= n; ++j1) {
        for (int j2 = -n + 1; j2 <= n; ++j2, ++flat) {
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", j1, j2, v[flat]);
            out << buf;
        }
    }
    if (!out) {
        throw ParseError("write failed: " + path);
    }
}

} // namespace grs
