#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace monosize {

using Exponent = std::uint32_t;

/// Resource limits shared by every exponential-time routine.
struct Caps {
    /// Irreducible components kept at any point of a decomposition.
    std::size_t max_components = 10'000;
    /// Largest exponent accepted from input.
    Exponent max_exponent = 1'000'000;
    /// Components allowed when enumerating the cover family exhaustively.
    std::size_t max_cover_components = 24;
    /// Leaves explored when enumerating every top base.
    std::size_t max_top_base_branches = 10'000;
};

inline const Caps &default_caps() {
    static const Caps caps{};
    return caps;
}

/// Applies `key=value` overrides separated by commas, e.g.
/// `components=500,exponent=20`. Recognised keys: components, exponent,
/// covers, topbases. Throws Error(invalid_argument) on anything else.
Caps parse_caps(std::string_view text, Caps base = {});

} // namespace monosize
