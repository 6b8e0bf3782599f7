#include "monosize/caps.hpp"
#include "monosize/error.hpp"

#include <charconv>
#include <string>

namespace monosize {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument:
        return "invalid argument";
    case ErrorCode::syntax:
        return "syntax error";
    case ErrorCode::degenerate_ideal:
        return "degenerate ideal";
    case ErrorCode::cap_exceeded:
        return "cap exceeded";
    case ErrorCode::invalid_deformation:
        return "invalid deformation";
    case ErrorCode::internal:
        return "internal consistency error";
    }
    return "unknown error";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_positive(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || out == 0)
        throw Error(ErrorCode::invalid_argument,
                    "cap '" + std::string(key) + "' needs a positive integer, got '" +
                        std::string(value) + "'");
    return out;
}

} // namespace

Caps parse_caps(std::string_view text, Caps base) {
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::invalid_argument,
                        "cap override '" + std::string(item) + "' is not key=value");
        auto key = trim(item.substr(0, eq));
        auto value = parse_positive(key, trim(item.substr(eq + 1)));
        if (key == "components")
            base.max_components = value;
        else if (key == "exponent")
            base.max_exponent = static_cast<Exponent>(std::min<std::uint64_t>(value, UINT32_MAX));
        else if (key == "covers")
            base.max_cover_components = value;
        else if (key == "topbases")
            base.max_top_base_branches = value;
        else
            throw Error(ErrorCode::invalid_argument, "unknown cap '" + std::string(key) + "'");
    }
    return base;
}

} // namespace monosize
