#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trop/errors.hpp"
#include "trop/matrix.hpp"

namespace trop {

/// Matrix text format: one row per line, whitespace-separated entries, no
/// header; shape is inferred. "-inf", "." and "@" denote the zero element.
/// Blank lines and "#" comments are ignored.
template <class S>
Matrix<S> parse_matrix(std::istream& in) {
    std::vector<std::vector<S>> rows;
    std::string line;
    int line_no = 0;
    int width = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<S> row;
        std::string token;
        while (ls >> token) {
            try {
                row.push_back(S::parse(token));
            } catch (const std::invalid_argument&) {
                throw ParseError("unparsable token '" + token + "'", line_no,
                                 static_cast<int>(row.size()) + 1);
            }
        }
        if (row.empty()) continue;
        if (width == -1) {
            width = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != width) {
            throw ParseError("ragged row", line_no);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix: no data rows");
    Matrix<S> m(static_cast<int>(rows.size()), width);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

template <class S>
Matrix<S> parse_matrix_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix<S>(in);
}

template <class S>
Matrix<S> load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    try {
        return parse_matrix<S>(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Canonical rendering: single-space separated entries, one row per line,
/// trailing newline. parse(write(m)) round-trips exactly in rational mode.
template <class S>
void write_matrix(std::ostream& os, const Matrix<S>& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j).str();
        }
        os << '\n';
    }
}

template <class S>
std::string matrix_text(const Matrix<S>& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace trop
