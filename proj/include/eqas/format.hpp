#pragma once

#include <charconv>
#include <string>

namespace eqas {

/// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

} // namespace eqas
