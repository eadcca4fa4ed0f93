#pragma once

#include <string>
#include <vector>

#include "commgraph/matrix.hpp"
#include "commgraph/multipoly.hpp"

namespace commgraph::ff {

/// Square matrix with MultiPoly entries, all in one polynomial ring.
class PolyMatrix {
public:
    PolyMatrix(FieldPtr field, unsigned dim, std::size_t num_vars);

    static PolyMatrix identity(FieldPtr field, unsigned dim, std::size_t num_vars);
    static PolyMatrix from_matrix(const Matrix& m, std::size_t num_vars);

    unsigned dim() const { return dim_; }
    std::size_t num_vars() const { return num_vars_; }
    const FieldPtr& field() const { return field_; }

    const MultiPoly& at(unsigned r, unsigned c) const { return entries_[r * dim_ + c]; }
    MultiPoly& at(unsigned r, unsigned c) { return entries_[r * dim_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    /// Inverse of I + N with N strictly lower triangular:
    /// I - N + N^2 - ... (finite since N is nilpotent).
    PolyMatrix unipotent_inverse() const;
    bool is_unipotent_lower() const;
    bool is_identity() const;
    bool operator==(const PolyMatrix& o) const { return entries_ == o.entries_; }

    /// Numeric specialisation at a point.
    Matrix evaluate(const std::vector<Value>& point) const;
    PolyMatrix substitute(std::size_t index, const MultiPoly& value) const;

private:
    FieldPtr field_;
    unsigned dim_;
    std::size_t num_vars_;
    std::vector<MultiPoly> entries_;
};

/// [a, b] = a^-1 b^-1 a b for unipotent lower triangular symbolic matrices.
PolyMatrix unipotent_commutator(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace commgraph::ff
