#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "commgraph/finfield.hpp"

namespace commgraph::ff {

/// Dense square matrix over a FieldSpec, row-major packed values.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, unsigned dim);
    Matrix(FieldPtr field, unsigned dim, std::vector<Value> entries);

    static Matrix identity(FieldPtr field, unsigned dim);
    static Matrix diagonal(FieldPtr field, const std::vector<Value>& diag);
    /// Integer entries reduced into the prime subfield.
    static Matrix from_ints(FieldPtr field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const FieldPtr& field() const { return field_; }
    unsigned dim() const { return dim_; }
    const std::vector<Value>& entries() const { return entries_; }

    Value at(unsigned r, unsigned c) const { return entries_[r * dim_ + c]; }
    void set(unsigned r, unsigned c, Value v) { entries_[r * dim_ + c] = v; }

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    /// Throws DivisionByZero when singular.
    Matrix inverse() const;
    Value determinant() const;
    /// Frobenius map x -> x^(p^i) applied to every entry.
    Matrix frobenius(std::int64_t i) const;

    bool is_identity() const;
    bool is_diagonal() const;

    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldPtr field_;
    unsigned dim_ = 0;
    std::vector<Value> entries_;
};

}  // namespace commgraph::ff
