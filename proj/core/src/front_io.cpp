#include "lmoam/reference_front.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lmoam::lsmop {

void write_front_csv(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    const std::size_t m = points.empty() ? 0 : points.front().size();
    for (std::size_t i = 0; i < m; ++i) {
        out << (i ? "," : "") << 'f' << (i + 1);
    }
    out << '\n';
    char buf[64];
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.16e", p[i]);
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::vector<ObjectiveVector> read_front_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<ObjectiveVector> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        ObjectiveVector p;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str()) {
                numeric = false;
                break;
            }
            p.push_back(v);
        }
        if (!numeric) {
            if (points.empty() && line_no == 1) {
                continue;   // header
            }
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": non-numeric value");
        }
        if (!points.empty() && p.size() != points.front().size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": ragged row");
        }
        points.push_back(std::move(p));
    }
    return points;
}

} // namespace lmoam::lsmop
