#include "infoeff/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "infoeff/errors.hpp"

namespace infoeff {

CsvReader::CsvReader(const std::filesystem::path& path) : path_(path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    buffer_ = std::move(ss).str();
}

bool CsvReader::next(std::vector<std::string>& fields) {
    while (pos_ < buffer_.size()) {
        std::size_t end = buffer_.find('\n', pos_);
        if (end == std::string::npos) end = buffer_.size();
        std::string_view line(buffer_.data() + pos_, end - pos_);
        pos_ = end + 1;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!split_csv_record(line, fields))
            throw ValidationError(path_.string() + ":" + std::to_string(line_) + ": malformed quoted field");
        return true;
    }
    return false;
}

bool split_csv_record(std::string_view line, std::vector<std::string>& fields) {
    fields.clear();
    std::string current;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                current += c;
                ++i;
            }
        } else if (c == '"') {
            if (!current.empty()) return false;  // quote in the middle of a bare field
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
            ++i;
        } else {
            current += c;
            ++i;
        }
    }
    if (quoted) return false;
    fields.push_back(std::move(current));
    return true;
}

std::string format_g(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return buf;
}

std::optional<double> parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::optional<long long> parse_int(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

AtomicFile::AtomicFile(const std::filesystem::path& path)
    : final_path_(path), partial_path_(path.string() + ".partial") {
    file_ = std::fopen(partial_path_.c_str(), "wb");
    if (!file_) throw ValidationError("cannot open file for writing: " + partial_path_.string());
}

AtomicFile::~AtomicFile() {
    if (file_) std::fclose(file_);  // left as .partial on purpose
}

void AtomicFile::write(std::string_view text) {
    if (std::fwrite(text.data(), 1, text.size(), file_) != text.size())
        throw std::runtime_error("write failed: " + partial_path_.string());
}

void AtomicFile::commit() {
    if (std::fclose(file_) != 0) {
        file_ = nullptr;
        throw std::runtime_error("close failed: " + partial_path_.string());
    }
    file_ = nullptr;
    std::error_code ec;
    std::filesystem::rename(partial_path_, final_path_, ec);
    if (ec) throw std::runtime_error("rename failed: " + partial_path_.string() + " -> " + final_path_.string());
}

}  // namespace infoeff
