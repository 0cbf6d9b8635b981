#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fraclap/errors.hpp"

namespace fraclap::io {

/// %.17g rendering: shortest text that round-trips a double.
inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

using MetaBlock = std::vector<std::pair<std::string, std::string>>;

struct Table {
    MetaBlock meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// CSV with '#'-prefixed metadata lines, a header row, comma separator.
/// Fixed ordering and %.17g floats upstream keep the output byte-stable.
inline void write_csv(std::ostream& os, const Table& table) {
    for (const auto& [k, v] : table.meta) os << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << (i ? "," : "") << table.header[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

/// JSON form: single object with "meta" and "data" members; data rows are
/// arrays in header order.
inline void write_json(std::ostream& os, const Table& table) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : table.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    j["columns"] = table.header;
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) data.push_back(row);
    j["data"] = std::move(data);
    os << j.dump(2) << "\n";
}

inline void write_table(const std::string& path, const Table& table, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    if (format == "csv")
        write_csv(out, table);
    else if (format == "json")
        write_json(out, table);
    else
        throw DomainError("unknown output format: " + format);
}

} // namespace fraclap::io
