#include "superq/report.hpp"

#include <cstdio>
#include <fstream>

#include "superq/errors.hpp"

namespace superq {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw Error("table row width mismatch");
    rows_.push_back(std::move(row));
}

std::string Table::to_tsv() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += '\t';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error("failed writing '" + path + "'");
}

}  // namespace superq
