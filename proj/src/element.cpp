#include "commgraph/element.hpp"

#include <sstream>

#include "commgraph/error.hpp"

namespace commgraph::grp {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw Error(ErrorCode::InvalidArgument, "image array is not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    Permutation p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles)
{
    std::vector<std::uint32_t> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] >= degree) throw Error(ErrorCode::InvalidArgument, "cycle point out of range");
            img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const
{
    if (degree() != o.degree()) throw Error(ErrorCode::SpecMismatch, "permutation degrees differ");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = o.images_[images_[i]];
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return r;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

MatrixAutElement::MatrixAutElement(ff::Matrix matrix, std::uint32_t twist)
    : matrix_(std::move(matrix)), twist_(twist % matrix_.field()->degree())
{}

MatrixAutElement MatrixAutElement::operator*(const MatrixAutElement& o) const
{
    if (dim() != o.dim() || !field()->same_as(*o.field())) {
        throw Error(ErrorCode::SpecMismatch, "matrix elements over different ambients");
    }
    const ff::Matrix rhs = twist_ == 0 ? o.matrix_ : o.matrix_.frobenius(-static_cast<std::int64_t>(twist_));
    return MatrixAutElement(matrix_ * rhs, (twist_ + o.twist_) % aut_order());
}

MatrixAutElement MatrixAutElement::inverse() const
{
    ff::Matrix inv = matrix_.inverse();
    if (twist_ != 0) inv = inv.frobenius(twist_);
    return MatrixAutElement(std::move(inv), (aut_order() - twist_) % aut_order());
}

bool MatrixAutElement::operator<(const MatrixAutElement& o) const
{
    if (twist_ != o.twist_) return twist_ < o.twist_;
    return matrix_.entries() < o.matrix_.entries();
}

Backend backend_of(const GroupElement& e)
{
    return std::holds_alternative<Permutation>(e) ? Backend::Permutation : Backend::Matrix;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b)
{
    if (a.index() != b.index()) throw Error(ErrorCode::SpecMismatch, "elements from different backends");
    if (auto pa = std::get_if<Permutation>(&a)) return *pa * std::get<Permutation>(b);
    return std::get<MatrixAutElement>(a) * std::get<MatrixAutElement>(b);
}

GroupElement inverse(const GroupElement& a)
{
    return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, a);
}

GroupElement identity_like(const GroupElement& a)
{
    if (auto p = std::get_if<Permutation>(&a)) return Permutation::identity(p->degree());
    const auto& m = std::get<MatrixAutElement>(a);
    return MatrixAutElement(ff::Matrix::identity(m.field(), m.dim()), 0);
}

bool is_identity(const GroupElement& a)
{
    return std::visit([](const auto& x) { return x.is_identity(); }, a);
}

bool same_ambient(const GroupElement& a, const GroupElement& b)
{
    if (a.index() != b.index()) return false;
    if (auto pa = std::get_if<Permutation>(&a)) return pa->degree() == std::get<Permutation>(b).degree();
    const auto& ma = std::get<MatrixAutElement>(a);
    const auto& mb = std::get<MatrixAutElement>(b);
    return ma.dim() == mb.dim() && ma.field()->same_as(*mb.field());
}

bool commute(const GroupElement& a, const GroupElement& b)
{
    return multiply(a, b) == multiply(b, a);
}

GroupElement power(const GroupElement& a, std::int64_t n)
{
    GroupElement base = n < 0 ? inverse(a) : a;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    GroupElement r = identity_like(a);
    while (e) {
        if (e & 1) r = multiply(r, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return r;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h)
{
    return multiply(multiply(inverse(h), g), h);
}

GroupElement commutator(const GroupElement& a, const GroupElement& b)
{
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::uint64_t element_order(const GroupElement& a)
{
    std::uint64_t n = 1;
    GroupElement x = a;
    while (!is_identity(x)) {
        x = multiply(x, a);
        ++n;
    }
    return n;
}

bool canonical_less(const GroupElement& a, const GroupElement& b)
{
    if (a.index() != b.index()) return a.index() < b.index();
    if (auto pa = std::get_if<Permutation>(&a)) return *pa < std::get<Permutation>(b);
    return std::get<MatrixAutElement>(a) < std::get<MatrixAutElement>(b);
}

std::size_t hash_value(const GroupElement& e)
{
    std::size_t h = 1469598103934665603ull ^ e.index();
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    if (auto p = std::get_if<Permutation>(&e)) {
        for (auto v : p->images()) mix(v);
    } else {
        const auto& m = std::get<MatrixAutElement>(e);
        mix(m.twist());
        for (auto v : m.matrix().entries()) mix(v);
    }
    return h;
}

nlohmann::json to_json(const GroupElement& e)
{
    if (auto p = std::get_if<Permutation>(&e)) return p->images();
    const auto& m = std::get<MatrixAutElement>(e);
    const auto& f = *m.field();
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned j = 0; j < m.dim(); ++j) {
            const ff::Value v = m.matrix().at(i, j);
            if (f.degree() == 1) {
                row.push_back(v);
            } else {
                row.push_back(f.coeffs(v));
            }
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"twist", m.twist()}, {"matrix", std::move(rows)}};
}

std::string to_string(const GroupElement& e)
{
    return to_json(e).dump();
}

}  // namespace commgraph::grp
