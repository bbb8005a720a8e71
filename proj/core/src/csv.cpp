#include "sympath/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sympath {

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("csv row width does not match header");
    rows_.push_back(std::move(row));
}

namespace {

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); i++) {
        if (i) out << ',';
        out << escape(row[i]);
    }
    out << "\r\n";
}

}  // namespace

std::string CsvWriter::to_string() const {
    std::ostringstream out;
    write_row(out, header_);
    for (const auto& row : rows_) write_row(out, row);
    return out.str();
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_string();
}

}  // namespace sympath
