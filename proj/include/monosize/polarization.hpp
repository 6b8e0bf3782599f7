#pragma once

#include "monosize/caps.hpp"
#include "monosize/decomposition.hpp"
#include "monosize/size.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monosize {

/// X_{k,l}: variable `var` (0-indexed) at level `level` (1-indexed).
struct PolarizedVariable {
    std::size_t var = 0;
    Exponent level = 1;

    friend bool operator==(const PolarizedVariable &, const PolarizedVariable &) = default;
    friend auto operator<=>(const PolarizedVariable &, const PolarizedVariable &) = default;
};

/// Slot layout of the polarized ring: variable k occupies the block
/// offset(k) .. offset(k) + levels(k) - 1. Every variable keeps at least one
/// level, so a variable that never occurs survives as X_{k,1}.
class PolarizationLayout {
  public:
    PolarizationLayout() = default;
    explicit PolarizationLayout(const std::vector<Exponent> &bounds);

    std::size_t original_ambient() const noexcept { return levels_.size(); }
    std::size_t ambient() const noexcept { return total_; }
    Exponent levels(std::size_t var) const { return levels_[var]; }
    std::size_t slot(std::size_t var, Exponent level) const;
    PolarizedVariable variable(std::size_t slot) const;
    /// `x{k}_{l}` with 1-indexed k.
    std::string name(std::size_t slot) const;

    friend bool operator==(const PolarizationLayout &, const PolarizationLayout &) = default;

  private:
    std::vector<Exponent> levels_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

struct PolarizationResult {
    MonomialIdeal ideal_p;
    PolarizationLayout layout;
    /// a_k: largest exponent of X_k among the minimal generators.
    std::vector<Exponent> bounds;
    /// n' - n.
    std::size_t c = 0;
};

/// Replaces X_k^e by X_{k,1} ... X_{k,e} in every minimal generator.
/// Throws Error(degenerate_ideal) or Error(cap_exceeded).
PolarizationResult polarize(const MonomialIdeal &ideal, const Caps &caps = default_caps());

/// The components (X_{1,b_1}, ..., X_{n,b_n}), 1 <= b_k <= a_k over the
/// support of `component`, whose intersection is its polarization.
std::vector<IrreducibleComponent> polarize_component(const IrreducibleComponent &component,
                                                     const PolarizationLayout &layout,
                                                     const Caps &caps = default_caps());

/// r x n matrix of component exponents.
class PowerMatrix {
  public:
    PowerMatrix() = default;
    PowerMatrix(std::size_t rows, std::size_t cols, std::vector<Exponent> entries);
    explicit PowerMatrix(const std::vector<std::vector<Exponent>> &rows);
    static PowerMatrix of(const Decomposition &d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Exponent operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Exponent column_max(std::size_t j) const { return col_max_[j]; }
    /// Positive entry that is maximal in its column.
    bool is_top_power(std::size_t i, std::size_t j) const;
    /// Largest top power of row i over all columns, 0 if the row has none.
    Exponent max_top_power(std::size_t i) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Exponent> entries_;
    std::vector<Exponent> col_max_;
};

struct TopBaseEntry {
    Exponent value = 0;
    std::size_t row = 0;
    std::size_t column = 0;

    friend bool operator==(const TopBaseEntry &, const TopBaseEntry &) = default;
    friend auto operator<=>(const TopBaseEntry &, const TopBaseEntry &) = default;
};

/// One optional entry per matrix row; an empty entry means c_i = 0.
struct TopBase {
    std::vector<std::optional<TopBaseEntry>> entries;

    std::vector<Exponent> values() const;
    std::uint64_t sum() const;

    friend bool operator==(const TopBase &, const TopBase &) = default;
    friend auto operator<=>(const TopBase &, const TopBase &) = default;
};

/// Walks the rows in increasing order, taking in each row a column of the
/// largest top power still available (smallest such column on ties) and
/// removing that row and column.
TopBase build_top_base(const PowerMatrix &m);

/// Every top base reachable by varying the column chosen at each tie, in
/// ascending order. Throws Error(cap_exceeded) past caps.max_top_base_branches.
std::vector<TopBase> enumerate_top_bases(const PowerMatrix &m, const Caps &caps = default_caps());

/// Level-truncated copies (X_{1,min(j,a_1)}, ..., X_{n,min(j,a_n)}),
/// j = 1..c_i, of every component with c_i > 0. The list is not
/// irredundantized; its length is the sum of the c_i.
std::vector<IrreducibleComponent> bar_family(const Decomposition &d, const TopBase &base,
                                             const PolarizationLayout &layout);

struct PolarizationSizeReport {
    std::size_t n = 0;
    std::size_t n_prime = 0;
    std::size_t c = 0;
    std::size_t size_i = 0;
    /// Size of the polarization, from its own decomposition.
    std::size_t size_p = 0;
    /// Size of the bar family built from the deterministic top base.
    std::size_t size_p_bar = 0;
    TopBase top_base;
    bool bar_agrees = false;
    bool bound_holds = false;
};

/// Computes both routes and reports whether they agree and whether
/// size_p <= size_i + c. Never throws on a failed identity.
PolarizationSizeReport polarization_sizes(const MonomialIdeal &ideal,
                                          const Caps &caps = default_caps());

/// polarization_sizes, raising Error(internal) if the routes disagree or the
/// bound fails.
PolarizationSizeReport size_of_polarization(const MonomialIdeal &ideal,
                                            const Caps &caps = default_caps());

struct VariableSets {
    /// Components where X_k appears with exponent >= 2.
    std::vector<std::size_t> t;
    /// Components whose prime contains X_k.
    std::vector<std::size_t> l;
    /// Components containing X_k itself whose largest top power exceeds 1.
    std::vector<std::size_t> u;
};

VariableSets compute_tlu(const Decomposition &d, std::size_t var);

struct VariableVerdict {
    std::size_t var = 0;
    VariableSets sets;
    /// X_k lies in at least two associated primes; only then do the
    /// conditions apply.
    bool shared = false;
    bool condition_1 = false;
    bool condition_2a = false;
    bool condition_2b = false;
    bool holds = true;
};

struct EqualityVerdict {
    bool predicted = false;
    /// Every component has at most one exponent >= 2.
    bool shape_ok = false;
    std::vector<std::size_t> shape_violations;
    std::vector<VariableVerdict> per_variable;
    CoverFamily covers;
    std::optional<PolarizationSizeReport> actual;

    bool actual_equal() const {
        return actual && actual->size_p == actual->size_i + actual->c;
    }
    bool agree() const { return actual && predicted == actual_equal(); }
};

/// Decides size(I^p) == size(I) + c from the component shapes and the sets
/// T_k, L_k, U_k and the cover family alone; no top base is consulted.
EqualityVerdict predict_equality(const Decomposition &d, const Caps &caps = default_caps());

/// predict_equality plus the computed sizes.
EqualityVerdict verify_equality(const MonomialIdeal &ideal, const Caps &caps = default_caps());

} // namespace monosize
