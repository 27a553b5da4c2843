#pragma once

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infoeff {

// Minimal RFC-4180 reader: double-quoted fields, CRLF tolerant, no embedded
// newlines inside quotes (the formats here never need them).
class CsvReader {
public:
    explicit CsvReader(const std::filesystem::path& path);

    // Returns false at EOF. Skips blank lines. Throws ValidationError on a
    // malformed quoted field, tagging the line number.
    bool next(std::vector<std::string>& fields);

    std::size_t line_number() const { return line_; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::string buffer_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

// Splits a single CSV record. Returns false on malformed quoting.
bool split_csv_record(std::string_view line, std::vector<std::string>& fields);

// Value formatted with %.*g — the fixed output precision used across all CSVs.
std::string format_g(double value, int significant = 6);

// Parses with std::from_chars (locale-independent); empty optional on failure.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

// Writes through "<path>.partial" and renames on commit(); a crashed or failed
// stage leaves only the .partial file behind.
class AtomicFile {
public:
    explicit AtomicFile(const std::filesystem::path& path);
    ~AtomicFile();
    AtomicFile(const AtomicFile&) = delete;
    AtomicFile& operator=(const AtomicFile&) = delete;

    void write(std::string_view text);
    void commit();

private:
    std::filesystem::path final_path_;
    std::filesystem::path partial_path_;
    std::FILE* file_ = nullptr;
};

}  // namespace infoeff
