#pragma once

#include <string>
#include <vector>

namespace a2g::csv {

// Locale-independent rendering of a double: 6 significant digits, '.'
// decimal point, no grouping; ties round half-even through the C library's
// correctly rounded conversion. Infinities render as "inf"/"-inf".
std::string format_double(double v);

// A CSV document with a fixed header, comma separators, LF line endings.
class Table {
public:
    explicit Table(std::vector<std::string> header);

    // Cell count must match the header.
    void add_row(std::vector<std::string> cells);

    std::string to_string() const;

    // Writes atomically enough for our purposes: single write after all
    // computation, binary mode so line endings stay LF everywhere.
    void write_file(const std::string& path) const;

    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace a2g::csv
