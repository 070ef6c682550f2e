#include "lmoam/harness/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace lmoam::harness {

std::string format_real(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content)
{
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::hash<std::string>{}(content) & 0xffff);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingData("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t CsvTable::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw MissingData("CSV column '" + name + "' not found");
}

namespace {

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

} // namespace

CsvTable parse_csv(const std::string& text)
{
    CsvTable t;
    std::stringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (first) {
            t.header = split_line(line);
            first = false;
        } else {
            t.rows.push_back(split_line(line));
        }
    }
    return t;
}

CsvTable read_csv(const std::filesystem::path& path)
{
    return parse_csv(read_file(path));
}

std::string join(const std::vector<std::string>& cells, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += cells[i];
    }
    return out;
}

} // namespace lmoam::harness
