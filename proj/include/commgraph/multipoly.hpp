#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commgraph/finfield.hpp"

namespace commgraph::ff {

/// Sparse polynomial in a fixed number of commuting indeterminates over a
/// finite field. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint16_t>;
    using Terms = std::map<Exponents, Value>;

    MultiPoly(FieldPtr field, std::size_t num_vars);

    static MultiPoly constant(FieldPtr field, std::size_t num_vars, Value c);
    static MultiPoly variable(FieldPtr field, std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(FieldPtr field, Exponents exps, Value c);

    const FieldPtr& field() const { return field_; }
    std::size_t num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term value if the polynomial has no other terms.
    std::optional<Value> constant_value() const;
    unsigned total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(Value c) const;
    MultiPoly& operator+=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Value evaluate(std::span<const Value> point) const;
    /// Replace variable `index` by `value` (a polynomial in the same ring).
    MultiPoly substitute(std::size_t index, const MultiPoly& value) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const MultiPoly& o) const;
    void add_term(const Exponents& e, Value c);

    FieldPtr field_;
    std::size_t num_vars_;
    Terms terms_;
};

/// Two-parameter instance used for the one-parameter-family commutator
/// certificate.
using BiPoly = MultiPoly;

inline BiPoly bipoly_variable(FieldPtr field, std::size_t index)
{
    return MultiPoly::variable(std::move(field), 2, index);
}

inline BiPoly bipoly_constant(FieldPtr field, Value c)
{
    return MultiPoly::constant(std::move(field), 2, c);
}

}  // namespace commgraph::ff
