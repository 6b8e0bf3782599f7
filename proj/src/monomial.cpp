#include "monosize/monomial.hpp"

#include "monosize/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monosize {

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const noexcept { return support_size() <= 1; }

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Exponent Monomial::max_exponent() const noexcept {
    return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

void require_same_ambient(const Monomial &m, const Monomial &m2) {
    if (m.ambient() != m2.ambient())
        throw Error(ErrorCode::invalid_argument,
                    "monomials live in rings with " + std::to_string(m.ambient()) + " and " +
                        std::to_string(m2.ambient()) + " variables");
}

bool divides(const Monomial &m, const Monomial &m2) {
    require_same_ambient(m, m2);
    for (std::size_t i = 0; i < m.ambient(); ++i)
        if (m[i] > m2[i])
            return false;
    return true;
}

bool strictly_divides(const Monomial &m, const Monomial &m2) {
    require_same_ambient(m, m2);
    Monomial lowered = m2;
    for (std::size_t i = 0; i < m2.ambient(); ++i) {
        if (m2[i] == 0)
            continue;
        --lowered[i];
        bool ok = divides(m, lowered);
        ++lowered[i];
        if (!ok)
            return false;
    }
    return true;
}

Monomial lcm(const Monomial &m, const Monomial &m2) {
    require_same_ambient(m, m2);
    Monomial out(m.ambient());
    for (std::size_t i = 0; i < m.ambient(); ++i)
        out[i] = std::max(m[i], m2[i]);
    return out;
}

} // namespace monosize
