#pragma once

#include <stdexcept>
#include <string>

namespace trop {

/// Operands do not conform (unequal shapes, bad vector length, non-square input).
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation left the semifield domain (inverse of zero, divergent star, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed matrix text. line/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_no = 0, int column_no = 0)
        : std::runtime_error(compose(what, line_no, column_no)),
          line(line_no),
          column(column_no) {}

    int line;
    int column;

private:
    static std::string compose(const std::string& what, int line_no, int column_no) {
        std::string msg = what;
        if (line_no > 0) {
            msg += " at line " + std::to_string(line_no);
            if (column_no > 0) msg += ", column " + std::to_string(column_no);
        }
        return msg;
    }
};

/// Candidate enumeration exceeded the configured cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trop
