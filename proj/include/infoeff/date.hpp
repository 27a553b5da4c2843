#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace infoeff {

// Calendar date stored as days since 1970-01-01 (proleptic Gregorian).
struct Date {
    std::int32_t serial = 0;

    auto operator<=>(const Date&) const = default;

    static Date from_civil(int year, unsigned month, unsigned day);
    void to_civil(int& year, unsigned& month, unsigned& day) const;

    // Strict ISO-8601 "YYYY-MM-DD"; rejects impossible dates like 2021-02-30.
    static std::optional<Date> parse(std::string_view text);
    std::string to_string() const;
};

}  // namespace infoeff
