#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace povac {

/// Shortest round-trip decimal representation of a double, locale-free.
/// All emitted files go through this so byte-identical output is a matter
/// of computing identical values, never of formatting state.
std::string format_double(double v);

std::string format_int(long long v);

/// Comma-separated, '.' decimal, LF line endings, header row.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::span<const std::string> header);

    void row(std::span<const std::string> cells);

private:
    std::ofstream out_;
    std::size_t n_cols_;
};

} // namespace povac
