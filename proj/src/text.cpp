#include "monosize/text.hpp"

#include "monosize/error.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace monosize {

namespace {

using RawMonomial = std::map<std::size_t, std::uint64_t>; // 0-indexed var -> exponent
using RawIdeal = std::vector<RawMonomial>;

class Parser {
  public:
    Parser(std::string_view text, const Caps &caps) : text_(text), caps_(caps) {}

    std::vector<RawIdeal> decomposition() {
        std::vector<RawIdeal> parts;
        parts.push_back(ideal());
        for (;;) {
            skip_space();
            if (at_end())
                break;
            if (peek() == '&') {
                advance();
            } else if (text_.substr(pos_).starts_with("∩")) {
                pos_ += 3;
                ++col_;
            } else {
                fail("expected '&', '∩' or end of input");
            }
            parts.push_back(ideal());
        }
        return parts;
    }

    RawMonomial lone_monomial() {
        auto m = monomial();
        skip_space();
        if (!at_end())
            fail("unexpected trailing input");
        return m;
    }

    std::size_t max_var() const { return max_var_; }

  private:
    RawIdeal ideal() {
        skip_space();
        expect('(');
        RawIdeal gens;
        skip_space();
        if (peek() == ')') {
            advance();
            return gens;
        }
        for (;;) {
            gens.push_back(monomial());
            skip_space();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(')');
            return gens;
        }
    }

    RawMonomial monomial() {
        skip_space();
        RawMonomial m;
        if (peek() == '1' ) {
            advance();
            return m;
        }
        for (;;) {
            skip_space();
            expect('x');
            const auto var_line = line_, var_col = col_;
            auto index = number("variable index");
            if (index == 0)
                fail_at(var_line, var_col, "variable indices start at x1");
            std::uint64_t e = 1;
            skip_space();
            if (peek() == '^') {
                advance();
                skip_space();
                const auto e_line = line_, e_col = col_;
                e = number("exponent");
                if (e == 0)
                    fail_at(e_line, e_col, "zero exponents are not allowed; omit the factor");
            }
            auto &slot = m[index - 1];
            slot += e;
            if (slot > caps_.max_exponent)
                throw Error(ErrorCode::cap_exceeded,
                            "exponent " + std::to_string(slot) + " exceeds the cap of " +
                                std::to_string(caps_.max_exponent));
            max_var_ = std::max<std::size_t>(max_var_, index);
            skip_space();
            if (peek() != '*')
                return m;
            advance();
        }
    }

    std::uint64_t number(const char *what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 1'000'000'000'000ULL)
                fail(std::string(what) + " is too large");
            advance();
        }
        return v;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string &msg) const { fail_at(line_, col_, msg); }
    [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string &msg) const {
        std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
        throw Error(ErrorCode::syntax, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + msg + " (found " +
                                           found + ")");
    }

    std::string_view text_;
    const Caps &caps_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::size_t max_var_ = 0;
};

Monomial materialize(const RawMonomial &raw, std::size_t n) {
    Monomial m(n);
    for (auto [var, e] : raw)
        m[var] = static_cast<Exponent>(e);
    return m;
}

std::size_t resolve_ambient(std::size_t mentioned, std::optional<std::size_t> vars) {
    if (!vars)
        return mentioned;
    if (*vars < mentioned)
        throw Error(ErrorCode::invalid_argument,
                    "input mentions x" + std::to_string(mentioned) + " but only " +
                        std::to_string(*vars) + " variables were requested");
    return *vars;
}

std::string join_factors(const Monomial &m, const auto &name) {
    std::string out;
    for (std::size_t k = 0; k < m.ambient(); ++k) {
        if (m[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += name(k);
        if (m[k] > 1)
            out += "^" + std::to_string(m[k]);
    }
    return out.empty() ? "1" : out;
}

} // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> vars,
                          const Caps &caps) {
    Parser parser(text, caps);
    auto parts = parser.decomposition();
    const std::size_t n = resolve_ambient(parser.max_var(), vars);
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (const auto &part : parts) {
        std::vector<Monomial> gens;
        for (const auto &raw : part)
            gens.push_back(materialize(raw, n));
        acc = intersect(acc, MonomialIdeal(n, std::move(gens)));
    }
    return acc;
}

Monomial parse_monomial(std::string_view text, std::size_t n, const Caps &caps) {
    Parser parser(text, caps);
    auto raw = parser.lone_monomial();
    return materialize(raw, resolve_ambient(parser.max_var(), n));
}

std::string render(const Monomial &m) {
    return join_factors(m, [](std::size_t k) { return "x" + std::to_string(k + 1); });
}

std::string render(const MonomialIdeal &ideal) {
    std::string out = "(";
    bool first = true;
    for (const auto &g : ideal.generators()) {
        if (!first)
            out += ", ";
        out += render(g);
        first = false;
    }
    return out + ")";
}

std::string render(const IrreducibleComponent &c) {
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < c.ambient(); ++k) {
        if (c[k] == 0)
            continue;
        if (!first)
            out += ", ";
        out += render(Monomial::pure_power(c.ambient(), k, c[k]));
        first = false;
    }
    return out + ")";
}

std::string render(const Decomposition &d, bool ascii) {
    std::string out;
    for (const auto &c : d.components()) {
        if (!out.empty())
            out += ascii ? " & " : " ∩ ";
        out += render(c);
    }
    return out;
}

std::string render_polarized(const Monomial &m, const PolarizationLayout &layout) {
    return join_factors(m, [&](std::size_t slot) { return layout.name(slot); });
}

std::string render_polarized(const MonomialIdeal &ideal, const PolarizationLayout &layout) {
    std::string out = "(";
    bool first = true;
    for (const auto &g : ideal.generators()) {
        if (!first)
            out += ", ";
        out += render_polarized(g, layout);
        first = false;
    }
    return out + ")";
}

std::string render_polarized(const IrreducibleComponent &c, const PolarizationLayout &layout) {
    std::string out = "(";
    bool first = true;
    for (std::size_t slot = 0; slot < c.ambient(); ++slot) {
        if (c[slot] == 0)
            continue;
        if (!first)
            out += ", ";
        out += layout.name(slot);
        first = false;
    }
    return out + ")";
}

} // namespace monosize
