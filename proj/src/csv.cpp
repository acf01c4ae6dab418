#include "spinbit/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinbit {
namespace csv {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Writer::Writer(std::filesystem::path path, std::vector<std::string> columns)
    : path_(std::move(path)), columns_(std::move(columns)) {
    body_ = "# ";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) body_ += ',';
        body_ += columns_[i];
    }
    body_ += '\n';
}

void Writer::row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_.size())
        throw std::invalid_argument("csv::Writer: row width does not match the schema");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) body_ += ',';
        if (const double* d = std::get_if<double>(&cells[i]))
            body_ += format_double(*d);
        else if (const long long* n = std::get_if<long long>(&cells[i]))
            body_ += std::to_string(*n);
        else
            body_ += std::get<std::string>(cells[i]);
    }
    body_ += '\n';
}

void Writer::commit() {
    if (committed_) return;
    const std::filesystem::path tmp = path_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out << body_;
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw IoError("rename failed: " + path_.string() + " (" + ec.message() + ")");
    committed_ = true;
}

Table read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("csv::read: missing schema line in " + path.string());

    Table table;
    std::stringstream header(line.substr(2));
    std::string col;
    while (std::getline(header, col, ',')) table.columns.push_back(col);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != table.columns.size())
            throw std::runtime_error("csv::read: row width mismatch in " + path.string());
        table.rows.push_back(std::move(cells));
    }
    return table;
}

std::string fnv1a_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::uint64_t hash = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace csv
}  // namespace spinbit
