#pragma once

#include <string>
#include <vector>

#include "superq/linalg.hpp"

namespace superq {

/// Fixed 12-significant-digit rendering for reproducible reports.
std::string format_double(double x);

/// Simple tab-separated table with a header row. Rows are rendered verbatim,
/// so callers control the exact byte content.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    std::string to_tsv() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace superq
