#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace demofuse {

// Proleptic Gregorian calendar date. Construct through make() or parse_date()
// so only real calendar dates exist; the default value is 1970-01-01.
struct Date {
  std::int32_t year = 1970;
  std::uint8_t month = 1;
  std::uint8_t day = 1;

  static bool is_leap_year(std::int32_t y);
  static int days_in_month(std::int32_t y, int m);
  static std::optional<Date> make(std::int32_t y, int m, int d);

  // Days since 1970-01-01; negative before the epoch.
  std::int64_t serial() const;
  static Date from_serial(std::int64_t days);

  Date plus_days(std::int64_t n) const { return from_serial(serial() + n); }

  // Same calendar day n years earlier; Feb-29 clamps to Feb-28.
  Date minus_years(int n) const;

  std::string iso() const;  // YYYY-MM-DD

  friend auto operator<=>(const Date&, const Date&) = default;
};

// Parses text against a strftime-like format made of %Y, %m, %d and literal
// separators. %Y takes exactly four digits, %m and %d one or two. Returns
// nullopt on syntax errors, trailing garbage and impossible calendar dates.
std::optional<Date> parse_date(std::string_view text, std::string_view format);

// Completed years from birth to reference. Feb-29 birthdays fall on Mar-1 in
// non-leap years. Throws std::invalid_argument if birth is after reference.
int age_at(const Date& birth, const Date& reference);

}  // namespace demofuse
