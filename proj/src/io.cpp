#include "pcgen/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pcgen {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

bool is_comment(std::string_view s) {
    const std::string_view t = trim(s);
    return !t.empty() && t.front() == '#';
}

double parse_double(std::string_view token, int line) {
    const std::string_view t = trim(token);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw ParseError(line, "line " + std::to_string(line) + ": not a number: '" +
                                   std::string(token) + "'");
    }
    return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(message), line_(line) {}

PCMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view cell =
                std::string_view(line).substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
            const double v = parse_double(cell, lineno);
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw ParseError(lineno, "line " + std::to_string(lineno) +
                                             ": matrix entry must be positive");
            }
            row.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(lineno,
                             "line " + std::to_string(lineno) + ": row length mismatch");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "empty matrix");
    if (rows.size() != rows.front().size()) {
        throw ParseError(lineno, "matrix is not square: " + std::to_string(rows.size()) +
                                     " rows of " + std::to_string(rows.front().size()) +
                                     " columns");
    }
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return PCMatrix(static_cast<int>(rows.size()), std::move(flat));
}

void write_matrix_csv(const PCMatrix& m, std::ostream& out) {
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j > 0) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

GeneratorSet read_generator_set(std::istream& in, int n) {
    GeneratorSet b(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || is_comment(line)) continue;
        std::istringstream fields{line};
        long long i = 0;
        long long j = 0;
        std::string value_token;
        std::string extra;
        if (!(fields >> i >> j >> value_token)) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": expected 'i j value', got '" + line + "'");
        }
        if (fields >> extra) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": trailing content '" + extra + "'");
        }
        const double value = parse_double(value_token, lineno);
        if (i < 1 || i > n || j < 1 || j > n) {
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": index out of range 1.." +
                                         std::to_string(n));
        }
        try {
            b.add(static_cast<int>(i) - 1, static_cast<int>(j) - 1, value);
        } catch (const std::domain_error& e) {
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return b;
}

void write_generator_set(const GeneratorSet& b, std::ostream& out) {
    for (const auto& e : b.entries()) {
        out << (e.i + 1) << ' ' << (e.j + 1) << ' ' << format_double(e.value) << '\n';
    }
}

std::vector<double> read_positive_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || is_comment(line)) continue;
        std::istringstream fields{line};
        std::string token;
        while (fields >> token) {
            const double v = parse_double(token, lineno);
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw ParseError(lineno,
                                 "line " + std::to_string(lineno) + ": value must be positive");
            }
            values.push_back(v);
        }
    }
    return values;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace pcgen
