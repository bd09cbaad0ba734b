#include "demofuse/date.hpp"

#include <cstdio>
#include <stdexcept>

namespace demofuse {

bool Date::is_leap_year(std::int32_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int Date::days_in_month(std::int32_t y, int m) {
  static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m < 1 || m > 12) return 0;
  if (m == 2 && is_leap_year(y)) return 29;
  return lengths[m - 1];
}

std::optional<Date> Date::make(std::int32_t y, int m, int d) {
  if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) return std::nullopt;
  Date out;
  out.year = y;
  out.month = static_cast<std::uint8_t>(m);
  out.day = static_cast<std::uint8_t>(d);
  return out;
}

// Civil-days conversion, Howard Hinnant's algorithm.
std::int64_t Date::serial() const {
  std::int64_t y = year;
  const int m = month;
  const int d = day;
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;
  const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

Date Date::from_serial(std::int64_t days) {
  std::int64_t z = days + 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const std::int64_t doe = z - era * 146097;
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = yoe + era * 400;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const std::int64_t mp = (5 * doy + 2) / 153;
  const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
  const std::int64_t m = mp + (mp < 10 ? 3 : -9);
  Date out;
  out.year = static_cast<std::int32_t>(y + (m <= 2));
  out.month = static_cast<std::uint8_t>(m);
  out.day = static_cast<std::uint8_t>(d);
  return out;
}

Date Date::minus_years(int n) const {
  const std::int32_t y = year - n;
  int d = day;
  const int dim = days_in_month(y, month);
  if (d > dim) d = dim;
  return *Date::make(y, month, d);
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

namespace {

bool take_digits(std::string_view& s, int min_len, int max_len, int& out) {
  int n = 0;
  int value = 0;
  while (n < max_len && n < static_cast<int>(s.size()) && s[n] >= '0' && s[n] <= '9') {
    value = value * 10 + (s[n] - '0');
    ++n;
  }
  if (n < min_len) return false;
  s.remove_prefix(n);
  out = value;
  return true;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text, std::string_view format) {
  int y = 0, m = 0, d = 0;
  bool have_y = false, have_m = false, have_d = false;
  std::string_view rest = text;
  for (std::size_t i = 0; i < format.size(); ++i) {
    if (format[i] == '%' && i + 1 < format.size()) {
      const char spec = format[++i];
      switch (spec) {
        case 'Y':
          if (!take_digits(rest, 4, 4, y)) return std::nullopt;
          have_y = true;
          break;
        case 'm':
          if (!take_digits(rest, 1, 2, m)) return std::nullopt;
          have_m = true;
          break;
        case 'd':
          if (!take_digits(rest, 1, 2, d)) return std::nullopt;
          have_d = true;
          break;
        case '%':
          if (rest.empty() || rest.front() != '%') return std::nullopt;
          rest.remove_prefix(1);
          break;
        default:
          return std::nullopt;  // unsupported conversion
      }
    } else {
      if (rest.empty() || rest.front() != format[i]) return std::nullopt;
      rest.remove_prefix(1);
    }
  }
  if (!rest.empty() || !have_y || !have_m || !have_d) return std::nullopt;
  return Date::make(y, m, d);
}

int age_at(const Date& birth, const Date& reference) {
  if (birth > reference)
    throw std::invalid_argument("age_at: birth date " + birth.iso() + " is after reference date " +
                                reference.iso());
  int bm = birth.month;
  int bd = birth.day;
  if (bm == 2 && bd == 29 && !Date::is_leap_year(reference.year)) {
    bm = 3;
    bd = 1;
  }
  int age = reference.year - birth.year;
  if (reference.month < bm || (reference.month == bm && reference.day < bd)) --age;
  return age;
}

}  // namespace demofuse
