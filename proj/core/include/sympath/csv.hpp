#pragma once

#include <string>
#include <vector>

namespace sympath {

/// Minimal RFC-4180 writer: fields containing commas, quotes or newlines are
/// quoted, quotes doubled, rows end with "\r\n".
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    std::string to_string() const;
    void write_file(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace sympath
