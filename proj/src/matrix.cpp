#include "commgraph/matrix.hpp"

#include <sstream>

#include "commgraph/error.hpp"

namespace commgraph::ff {

Matrix::Matrix(FieldPtr field, unsigned dim)
    : field_(std::move(field)), dim_(dim), entries_(std::size_t{dim} * dim, 0)
{}

Matrix::Matrix(FieldPtr field, unsigned dim, std::vector<Value> entries)
    : field_(std::move(field)), dim_(dim), entries_(std::move(entries))
{
    if (entries_.size() != std::size_t{dim} * dim) {
        throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match dimension");
    }
    for (Value v : entries_) {
        if (v >= field_->size()) throw Error(ErrorCode::InvalidArgument, "matrix entry out of field range");
    }
}

Matrix Matrix::identity(FieldPtr field, unsigned dim)
{
    Matrix m(std::move(field), dim);
    for (unsigned i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::diagonal(FieldPtr field, const std::vector<Value>& diag)
{
    Matrix m(std::move(field), static_cast<unsigned>(diag.size()));
    for (unsigned i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    const auto dim = static_cast<unsigned>(rows.size());
    Matrix m(field, dim);
    unsigned r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
        unsigned c = 0;
        for (auto v : row) m.set(r, c++, field->from_int(v));
        ++r;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (dim_ != o.dim_) throw Error(ErrorCode::SpecMismatch, "matrix dimensions differ");
    const FieldSpec& f = *field_;
    Matrix r(field_, dim_);
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned k = 0; k < dim_; ++k) {
            const Value a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                const Value b = o.at(k, j);
                if (b == 0) continue;
                r.entries_[i * dim_ + j] = f.add(r.entries_[i * dim_ + j], f.mul(a, b));
            }
        }
    }
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix r(field_, dim_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::inverse() const
{
    const FieldSpec& f = *field_;
    Matrix a = *this;
    Matrix inv = identity(field_, dim_);
    for (unsigned col = 0; col < dim_; ++col) {
        unsigned pivot = col;
        while (pivot < dim_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == dim_) throw Error(ErrorCode::DivisionByZero, "singular matrix");
        if (pivot != col) {
            for (unsigned j = 0; j < dim_; ++j) {
                std::swap(a.entries_[pivot * dim_ + j], a.entries_[col * dim_ + j]);
                std::swap(inv.entries_[pivot * dim_ + j], inv.entries_[col * dim_ + j]);
            }
        }
        const Value s = f.inv(a.at(col, col));
        for (unsigned j = 0; j < dim_; ++j) {
            a.set(col, j, f.mul(a.at(col, j), s));
            inv.set(col, j, f.mul(inv.at(col, j), s));
        }
        for (unsigned r = 0; r < dim_; ++r) {
            if (r == col) continue;
            const Value factor = a.at(r, col);
            if (factor == 0) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
                inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j))));
            }
        }
    }
    return inv;
}

Value Matrix::determinant() const
{
    const FieldSpec& f = *field_;
    Matrix a = *this;
    Value det = 1;
    for (unsigned col = 0; col < dim_; ++col) {
        unsigned pivot = col;
        while (pivot < dim_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == dim_) return 0;
        if (pivot != col) {
            for (unsigned j = 0; j < dim_; ++j) std::swap(a.entries_[pivot * dim_ + j], a.entries_[col * dim_ + j]);
            det = f.neg(det);
        }
        const Value d = a.at(col, col);
        det = f.mul(det, d);
        const Value s = f.inv(d);
        for (unsigned r = col + 1; r < dim_; ++r) {
            const Value factor = f.mul(a.at(r, col), s);
            if (factor == 0) continue;
            for (unsigned j = col; j < dim_; ++j) a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
        }
    }
    return det;
}

Matrix Matrix::frobenius(std::int64_t i) const
{
    Matrix r = *this;
    for (auto& v : r.entries_) v = field_->frobenius(v, i);
    return r;
}

bool Matrix::is_identity() const
{
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_diagonal() const
{
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < dim_; ++i) {
        os << (i ? "," : "") << '[';
        for (unsigned j = 0; j < dim_; ++j) os << (j ? "," : "") << field_->element(at(i, j)).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace commgraph::ff
