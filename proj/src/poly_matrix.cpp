#include "commgraph/poly_matrix.hpp"

#include "commgraph/error.hpp"

namespace commgraph::ff {

PolyMatrix::PolyMatrix(FieldPtr field, unsigned dim, std::size_t num_vars)
    : field_(field), dim_(dim), num_vars_(num_vars),
      entries_(std::size_t{dim} * dim, MultiPoly(field, num_vars))
{}

PolyMatrix PolyMatrix::identity(FieldPtr field, unsigned dim, std::size_t num_vars)
{
    PolyMatrix m(field, dim, num_vars);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = MultiPoly::constant(field, num_vars, 1);
    return m;
}

PolyMatrix PolyMatrix::from_matrix(const Matrix& src, std::size_t num_vars)
{
    PolyMatrix m(src.field(), src.dim(), num_vars);
    for (unsigned i = 0; i < src.dim(); ++i)
        for (unsigned j = 0; j < src.dim(); ++j) m.at(i, j) = MultiPoly::constant(src.field(), num_vars, src.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (dim_ != o.dim_) throw Error(ErrorCode::SpecMismatch, "matrix dimensions differ");
    PolyMatrix r(field_, dim_, num_vars_);
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned k = 0; k < dim_; ++k) {
            const MultiPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                const MultiPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const
{
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const
{
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = r.entries_[i] - o.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix r(field_, dim_, num_vars_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::is_unipotent_lower() const
{
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned j = i; j < dim_; ++j) {
            const auto c = at(i, j).constant_value();
            if (!c || *c != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

PolyMatrix PolyMatrix::unipotent_inverse() const
{
    if (!is_unipotent_lower()) throw Error(ErrorCode::SymbolicFailure, "matrix is not unipotent lower triangular");
    const PolyMatrix id = identity(field_, dim_, num_vars_);
    const PolyMatrix n = *this - id;
    PolyMatrix result = id;
    PolyMatrix power = id;
    for (unsigned k = 1; k < dim_; ++k) {
        power = power * n;
        result = (k % 2 == 1) ? result - power : result + power;
    }
    return result;
}

bool PolyMatrix::is_identity() const
{
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned j = 0; j < dim_; ++j) {
            const auto c = at(i, j).constant_value();
            if (!c || *c != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

Matrix PolyMatrix::evaluate(const std::vector<Value>& point) const
{
    Matrix m(field_, dim_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) m.set(i, j, at(i, j).evaluate(point));
    return m;
}

PolyMatrix PolyMatrix::substitute(std::size_t index, const MultiPoly& value) const
{
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e.substitute(index, value);
    return r;
}

PolyMatrix unipotent_commutator(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.unipotent_inverse() * b.unipotent_inverse() * a * b;
}

}  // namespace commgraph::ff
