// Deterministic text I/O: shortest round-trip number formatting, CSV
// documents with `# key=value` metadata comments, contact-log ingestion, and
// output-directory resolution.
//
// Output bytes must not depend on locale, platform, or thread count, so all
// numbers go through std::to_chars and files are written in one shot with LF
// line endings.
#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "terrain.hpp"

namespace rugosim {

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// Fixed-point form with `digits` decimals (SVG coordinates and the like).
inline std::string format_fixed(double value, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

namespace detail {

inline void append_cell(std::string& line, const std::string& cell) { line += cell; }
inline void append_cell(std::string& line, const char* cell) { line += cell; }
inline void append_cell(std::string& line, double cell) { line += format_double(cell); }
inline void append_cell(std::string& line, int cell) { line += std::to_string(cell); }
inline void append_cell(std::string& line, long cell) { line += std::to_string(cell); }
inline void append_cell(std::string& line, unsigned long cell) { line += std::to_string(cell); }
inline void append_cell(std::string& line, unsigned long long cell) {
    line += std::to_string(cell);
}

} // namespace detail

/// Builder for a CSV document: `# key=value` comment lines, then a header
/// row, then data rows. Comma separators, LF endings, no quoting (cells must
/// not contain commas or newlines).
class CsvDoc {
public:
    template <typename V> void comment(std::string_view key, const V& value) {
        text_ += "# ";
        text_ += key;
        text_ += '=';
        detail::append_cell(text_, value);
        text_ += '\n';
    }

    template <typename... Cells> void row(const Cells&... cells) {
        bool first = true;
        (
            [&] {
                if (!first) text_ += ',';
                first = false;
                detail::append_cell(text_, cells);
            }(),
            ...);
        text_ += '\n';
    }

    void raw_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text_ += ',';
            text_ += cells[i];
        }
        text_ += '\n';
    }

    const std::string& str() const { return text_; }

private:
    std::string text_;
};

/// Write `content` to `path` byte for byte, creating parent directories.
inline void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace detail {

inline double parse_double(std::string_view text, const std::string& where) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc())
        throw std::runtime_error(where + ": cannot parse number from \"" + std::string(text) +
                                 "\"");
    return value;
}

} // namespace detail

/// Parse a contact log: `# tau=<value>` metadata comment, a `tau_u` header
/// row, then one duration per line.
inline ContactLog read_contact_log(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    ContactLog log;
    bool have_tau = false;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        if (line.front() == '#') {
            std::string_view body = line.substr(1);
            while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            const std::size_t eq = body.find('=');
            if (eq != std::string_view::npos && body.substr(0, eq) == "tau") {
                log.tau = detail::parse_double(body.substr(eq + 1), where);
                have_tau = true;
            }
            continue;
        }
        if (!have_header) {
            if (line != "tau_u")
                throw std::runtime_error(where + ": expected header row \"tau_u\", got \"" +
                                         std::string(line) + "\"");
            have_header = true;
            continue;
        }
        log.durations.push_back(detail::parse_double(line, where));
    }
    if (!have_tau)
        throw std::runtime_error(path.string() + ": missing \"# tau=<value>\" metadata line");
    if (!have_header)
        throw std::runtime_error(path.string() + ": missing \"tau_u\" header row");
    return log;
}

inline constexpr const char* kOutputDirEnvVar = "RUGOSIM_OUT_DIR";

/// Output directory precedence: explicit setting, then $RUGOSIM_OUT_DIR,
/// then ./rugosim_out.
inline std::filesystem::path resolve_output_dir(const std::optional<std::string>& configured) {
    if (configured && !configured->empty()) return *configured;
    if (const char* env = std::getenv(kOutputDirEnvVar); env && *env) return env;
    return "rugosim_out";
}

} // namespace rugosim
