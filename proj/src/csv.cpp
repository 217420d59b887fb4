#include "a2g/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "a2g/errors.hpp"

namespace a2g::csv {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::logic_error("csv row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

std::string Table::to_string() const {
    std::ostringstream out;
    const auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != 0) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return out.str();
}

void Table::write_file(const std::string& path) const {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw DomainError("cannot open output file: " + path);
    }
    const std::string text = to_string();
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) {
        throw DomainError("failed writing output file: " + path);
    }
}

}  // namespace a2g::csv
