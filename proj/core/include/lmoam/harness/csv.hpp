#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmoam::harness {

/// Startup/configuration problems (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Required input files or result cells are missing (CLI exit code 2).
class MissingData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scientific notation, 6 significant digits: 8.61000e-01.
std::string format_real(double v);

/// Writes `content` to a temporary sibling and renames it over `path`.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws MissingData when absent.
    std::size_t column(const std::string& name) const;
};

/// Comma-separated, header row required, no quoting.
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(const std::string& text);

std::string join(const std::vector<std::string>& cells, char sep = ',');

} // namespace lmoam::harness
