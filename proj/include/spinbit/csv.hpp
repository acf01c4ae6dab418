// csv.hpp — deterministic CSV emission: one '#'-prefixed schema line, values
// at full round-trip precision, atomic write-then-rename
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace spinbit {
namespace csv {

using Cell = std::variant<double, long long, std::string>;

class Writer {
  public:
    Writer(std::filesystem::path path, std::vector<std::string> columns);

    void row(const std::vector<Cell>& cells);

    // Writes to a temporary file and renames onto the target.
    void commit();

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::vector<std::string> columns_;
    std::string body_;
    bool committed_ = false;
};

// Full round-trip formatting (17 significant digits).
std::string format_double(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Parses a file written by Writer and checks it against the declared schema.
Table read(const std::filesystem::path& path);

// FNV-1a 64-bit checksum of a file's bytes, as fixed-width hex.
std::string fnv1a_hex(const std::filesystem::path& path);

}  // namespace csv
}  // namespace spinbit
