#include "povac/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace povac {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

std::string format_int(long long v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_int: to_chars failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::string& path, std::span<const std::string> header)
    : out_(path, std::ios::binary), n_cols_(header.size()) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(std::span<const std::string> cells) {
    if (cells.size() != n_cols_)
        throw std::runtime_error("CsvWriter: wrong column count");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

} // namespace povac
