// Reading groups from text files.  Three formats, selected by the header
// line:
//
//   perm <degree>      one generator per line, cycle notation, 1-based:
//                      (1 2 3)(4 5)
//   table <n>          n lines of n space-separated element indices (0-based)
//   mat <dim> <prime>  each generator as dim lines of dim integers,
//                      generators separated by blank lines
//
// Malformed input raises ParseError carrying the 1-based line and column.
#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"

namespace hs {

namespace detail {

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

inline bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

// One permutation in cycle notation -> 0-based image vector.
inline std::vector<Elem> parse_cycles(const std::string& line, int degree, int lineno) {
    std::vector<Elem> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = Elem(i);
    std::size_t i = 0, n = line.size();
    auto col = [&] { return int(i) + 1; };
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    std::vector<char> moved(static_cast<std::size_t>(degree), 0);
    while (i < n) {
        if (line[i] != '(')
            throw ParseError(lineno, col(), "expected '(' to open a cycle");
        ++i;
        any = true;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i < n && line[i] == ')') {
                ++i;
                break;
            }
            if (i >= n) throw ParseError(lineno, col(), "unclosed cycle");
            if (!std::isdigit(static_cast<unsigned char>(line[i])))
                throw ParseError(lineno, col(), "expected a point or ')'");
            int startcol = col();
            long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(line[i])))
                v = v * 10 + (line[i++] - '0');
            if (v < 1 || v > degree)
                throw ParseError(lineno, startcol,
                                 "point " + std::to_string(v) + " outside 1.." +
                                     std::to_string(degree));
            if (moved[static_cast<std::size_t>(v - 1)])
                throw ParseError(lineno, startcol,
                                 "point " + std::to_string(v) + " repeated");
            moved[static_cast<std::size_t>(v - 1)] = 1;
            cycle.push_back(int(v) - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[static_cast<std::size_t>(cycle[k])] = Elem(cycle[(k + 1) % cycle.size()]);
        skip_ws();
    }
    if (!any) throw ParseError(lineno, 1, "empty generator line");
    return img;
}

inline std::vector<std::int64_t> parse_ints(const std::string& line, int lineno) {
    std::vector<std::int64_t> out;
    std::size_t i = 0, n = line.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= n) break;
        int startcol = int(i) + 1;
        bool neg = false;
        if (line[i] == '-' || line[i] == '+') neg = line[i++] == '-';
        if (i >= n || !std::isdigit(static_cast<unsigned char>(line[i])))
            throw ParseError(lineno, startcol, "expected an integer");
        std::int64_t v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(line[i])))
            v = v * 10 + (line[i++] - '0');
        if (i < n && !std::isspace(static_cast<unsigned char>(line[i])))
            throw ParseError(lineno, int(i) + 1, "unexpected character in number");
        out.push_back(neg ? -v : v);
    }
    return out;
}

}  // namespace detail

inline Group read_group(std::istream& in, const Caps& caps = {}) {
    std::vector<std::string> lines = detail::read_lines(in);
    std::size_t first = 0;
    while (first < lines.size() && detail::blank(lines[first])) ++first;
    if (first == lines.size()) throw ParseError(1, 1, "empty input");
    std::istringstream head(lines[first]);
    std::string kind;
    head >> kind;
    int headline = int(first) + 1;

    if (kind == "perm") {
        long degree = -1;
        if (!(head >> degree) || degree < 1 || degree > 255)
            throw ParseError(headline, int(kind.size()) + 2,
                             "perm header needs a degree in 1..255");
        std::string extra;
        if (head >> extra)
            throw ParseError(headline, 1, "trailing text after perm header");
        std::vector<std::vector<Elem>> gens;
        for (std::size_t li = first + 1; li < lines.size(); ++li) {
            if (detail::blank(lines[li])) continue;
            gens.push_back(detail::parse_cycles(lines[li], int(degree), int(li) + 1));
        }
        return build_from_permutations(int(degree), gens, caps);
    }

    if (kind == "table") {
        long n = -1;
        if (!(head >> n) || n < 1)
            throw ParseError(headline, int(kind.size()) + 2,
                             "table header needs a positive size");
        std::string extra;
        if (head >> extra)
            throw ParseError(headline, 1, "trailing text after table header");
        std::vector<std::vector<Elem>> rows;
        std::size_t li = first + 1;
        while (li < lines.size() && std::int64_t(rows.size()) < n) {
            if (detail::blank(lines[li])) {
                ++li;
                continue;
            }
            std::vector<std::int64_t> vals = detail::parse_ints(lines[li], int(li) + 1);
            if (std::int64_t(vals.size()) != n)
                throw ParseError(int(li) + 1, 1,
                                 "expected " + std::to_string(n) + " entries, got " +
                                     std::to_string(vals.size()));
            std::vector<Elem> row;
            for (std::int64_t v : vals) {
                if (v < 0 || v >= n)
                    throw ParseError(int(li) + 1, 1,
                                     "entry " + std::to_string(v) + " outside 0.." +
                                         std::to_string(n - 1));
                row.push_back(Elem(v));
            }
            rows.push_back(std::move(row));
            ++li;
        }
        if (std::int64_t(rows.size()) != n)
            throw ParseError(int(lines.size()) + 1, 1,
                             "expected " + std::to_string(n) + " table rows, got " +
                                 std::to_string(rows.size()));
        for (; li < lines.size(); ++li)
            if (!detail::blank(lines[li]))
                throw ParseError(int(li) + 1, 1, "trailing text after table rows");
        return build_from_table(rows, {}, caps);
    }

    if (kind == "mat") {
        long dim = -1, p = -1;
        if (!(head >> dim >> p) || dim < 1 || dim > 16 || p < 2)
            throw ParseError(headline, int(kind.size()) + 2,
                             "mat header needs a dimension in 1..16 and a prime");
        std::string extra;
        if (head >> extra)
            throw ParseError(headline, 1, "trailing text after mat header");
        std::vector<std::vector<std::int64_t>> gens;
        std::vector<std::int64_t> current;
        int rows_in_current = 0;
        auto flush = [&](int lineno) {
            if (rows_in_current == 0) return;
            if (rows_in_current != dim)
                throw ParseError(lineno, 1,
                                 "generator has " + std::to_string(rows_in_current) +
                                     " row(s), expected " + std::to_string(dim));
            gens.push_back(current);
            current.clear();
            rows_in_current = 0;
        };
        for (std::size_t li = first + 1; li < lines.size(); ++li) {
            if (detail::blank(lines[li])) {
                flush(int(li) + 1);
                continue;
            }
            std::vector<std::int64_t> vals = detail::parse_ints(lines[li], int(li) + 1);
            if (std::int64_t(vals.size()) != dim)
                throw ParseError(int(li) + 1, 1,
                                 "expected " + std::to_string(dim) + " entries, got " +
                                     std::to_string(vals.size()));
            current.insert(current.end(), vals.begin(), vals.end());
            ++rows_in_current;
        }
        flush(int(lines.size()) + 1);
        return build_from_matrices(int(dim), p, gens, caps);
    }

    throw ParseError(headline, 1, "unknown format '" + kind + "'");
}

inline Group read_group_file(const std::string& path, const Caps& caps = {}) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_group(in, caps);
}

}  // namespace hs
