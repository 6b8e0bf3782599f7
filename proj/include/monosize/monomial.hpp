#pragma once

#include "monosize/caps.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace monosize {

/// A monomial X_1^{e_1} ... X_n^{e_n}, stored as its exponent vector.
/// Variables are 0-indexed here; rendering uses x1..xn.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial pure_power(std::size_t n, std::size_t var, Exponent e) {
        Monomial m(n);
        m.exps_[var] = e;
        return m;
    }

    std::size_t ambient() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent &operator[](std::size_t i) { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;
    /// True if at most one variable occurs.
    bool is_pure_power() const noexcept;
    std::size_t support_size() const noexcept;
    std::uint64_t degree() const noexcept;
    Exponent max_exponent() const noexcept;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

  private:
    std::vector<Exponent> exps_;
};

/// Componentwise `m <= m2`.
bool divides(const Monomial &m, const Monomial &m2);

/// `m` divides `m2 / X_i` for every variable X_i occurring in `m2`.
bool strictly_divides(const Monomial &m, const Monomial &m2);

Monomial lcm(const Monomial &m, const Monomial &m2);

/// Throws Error(invalid_argument) unless both monomials live in the same ring.
void require_same_ambient(const Monomial &m, const Monomial &m2);

} // namespace monosize
