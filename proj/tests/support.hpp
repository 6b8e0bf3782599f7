#pragma once

#include "monosize/error.hpp"
#include "monosize/text.hpp"

#include <doctest.h>

#include <string>

namespace testing {

inline monosize::MonomialIdeal ideal(const std::string &text) { return monosize::parse_ideal(text); }

inline monosize::MonomialIdeal ideal(const std::string &text, std::size_t n) {
    return monosize::parse_ideal(text, n);
}

template <typename F>
monosize::ErrorCode error_code_of(F &&f) {
    try {
        f();
    } catch (const monosize::Error &e) {
        return e.code();
    }
    FAIL("no monosize::Error thrown");
    return monosize::ErrorCode::internal;
}

} // namespace testing
