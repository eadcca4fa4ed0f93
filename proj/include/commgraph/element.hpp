#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "commgraph/matrix.hpp"

namespace commgraph::grp {

/// Permutation of {0..n-1} stored as its image array. Products compose left
/// to right: (a * b)(i) = b(a(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t degree);
    /// Disjoint cycles on {0..degree-1}, e.g. {{0,1},{2,3}}.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const { return images_.size(); }
    const std::vector<std::uint32_t>& images() const { return images_; }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

/// Element A * beta^twist of GL(d, GF(p^k)) extended by the Frobenius
/// automorphism beta: x -> x^p. Conjugating a matrix by beta applies beta to
/// its entries, beta^-1 B beta = beta(B), so
///   (A, i) * (B, j) = (A * beta^-i(B), i + j mod k).
class MatrixAutElement {
public:
    MatrixAutElement() = default;
    MatrixAutElement(ff::Matrix matrix, std::uint32_t twist);

    const ff::Matrix& matrix() const { return matrix_; }
    std::uint32_t twist() const { return twist_; }
    unsigned dim() const { return matrix_.dim(); }
    const ff::FieldPtr& field() const { return matrix_.field(); }
    std::uint32_t aut_order() const { return matrix_.field()->degree(); }

    MatrixAutElement operator*(const MatrixAutElement& o) const;
    MatrixAutElement inverse() const;
    bool is_identity() const { return twist_ == 0 && matrix_.is_identity(); }

    bool operator==(const MatrixAutElement& o) const
    {
        return twist_ == o.twist_ && matrix_ == o.matrix_;
    }
    /// Canonical order: twist first, then row-major entries.
    bool operator<(const MatrixAutElement& o) const;

private:
    ff::Matrix matrix_;
    std::uint32_t twist_ = 0;
};

using GroupElement = std::variant<Permutation, MatrixAutElement>;

enum class Backend { Permutation, Matrix };

Backend backend_of(const GroupElement& e);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement identity_like(const GroupElement& a);
bool is_identity(const GroupElement& a);
/// True when both elements live in the same ambient group (degree, or
/// dimension and field).
bool same_ambient(const GroupElement& a, const GroupElement& b);
bool commute(const GroupElement& a, const GroupElement& b);
GroupElement power(const GroupElement& a, std::int64_t n);
/// g^h = h^-1 g h.
GroupElement conjugate(const GroupElement& g, const GroupElement& h);
/// [a, b] = a^-1 b^-1 a b.
GroupElement commutator(const GroupElement& a, const GroupElement& b);
std::uint64_t element_order(const GroupElement& a);

/// Strict weak order on the canonical serialization; elements of different
/// backends order permutations first.
bool canonical_less(const GroupElement& a, const GroupElement& b);

std::size_t hash_value(const GroupElement& e);

struct ElementHash {
    std::size_t operator()(const GroupElement& e) const { return hash_value(e); }
};

/// Image array for permutations, {"twist": i, "matrix": [[coeffs...]]}
/// for matrix elements (entries as coefficient vectors, low degree first).
nlohmann::json to_json(const GroupElement& e);
std::string to_string(const GroupElement& e);

}  // namespace commgraph::grp
