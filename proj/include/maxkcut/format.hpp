#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace mkc {

/// Shortest decimal string that parses back to exactly `x`.
inline std::string format_real(double x) {
    if (x == 0.0) return "0";  // folds -0
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

/// Human-facing rendering rounded to 12 significant digits, so that values
/// like 5.000000000000001 print as 5.
inline std::string format_display(double x) {
    if (std::abs(x) < 1e-12) return "0";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
    return std::string(buf, end);
}

inline std::optional<double> parse_real(std::string_view s) {
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
    Int x{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

}  // namespace mkc
