#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commgraph/numtheory.hpp"

namespace commgraph::ff {

/// Packed field element: the coefficient vector c_0 + c_1 X + ... read as the
/// base-p integer sum c_i p^i. Packed order is the canonical element order
/// (coefficient vectors compared from the top degree down).
using Value = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 21;

struct FieldOptions {
    std::uint64_t cap = kDefaultFieldCap;
    /// Fields up to this size get discrete log/antilog tables for
    /// multiplication; larger ones multiply polynomials directly.
    std::uint64_t table_limit = kDefaultTableLimit;
};

class FieldElement;

/// GF(p^k) realised as GF(p)[X]/(m(X)) with m the least monic irreducible of
/// degree k in packed order. Immutable once created.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static std::shared_ptr<const FieldSpec> create(std::uint64_t p, unsigned k,
                                                   FieldOptions options = {});

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t size() const { return size_; }
    /// Monic modulus, low degree first, length k + 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !log_.empty(); }

    bool same_as(const FieldSpec& other) const;

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value from_int(std::int64_t n) const;
    Value from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Value v) const;

    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const;
    Value neg(Value a) const;
    Value mul(Value a, Value b) const;
    Value inv(Value a) const;
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    Value pow(Value a, std::int64_t e) const;
    Value pow(Value a, const BigInt& e) const;
    /// a^(p^i), i taken modulo k (negative i allowed).
    Value frobenius(Value a, std::int64_t i) const;

    std::uint64_t order_of(Value a) const;
    Value element_of_order(std::uint64_t n) const;
    /// Least primitive element in packed order.
    Value primitive() const { return primitive_; }
    /// Distinct primes dividing p^k - 1.
    const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }
    bool in_prime_subfield(Value a) const { return a < p_; }

    FieldElement element(Value v) const;
    FieldElement element_from_int(std::int64_t n) const;

    nlohmann::json to_json() const;
    static std::shared_ptr<const FieldSpec> from_json(const nlohmann::json& j, FieldOptions options = {});

private:
    FieldSpec() = default;
    Value mul_poly(Value a, Value b) const;
    Value pow_poly(Value a, std::uint64_t e) const;
    void check(Value v) const;

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> unit_primes_;
    Value primitive_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Value> exp_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Value type pairing a packed element with the field it lives in.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, Value v);

    const FieldPtr& field() const { return field_; }
    Value value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(const BigInt& e) const;
    FieldElement pow(std::int64_t e) const;
    FieldElement frobenius(std::int64_t i) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return value_ < o.value_; }

    /// Prime-subfield elements print as integers, others as coefficient lists
    /// (low degree first).
    std::string to_string() const;

private:
    const FieldSpec& same_field(const FieldElement& o) const;

    FieldPtr field_;
    Value value_ = 0;
};

FieldPtr field_create(std::uint64_t p, unsigned k, FieldOptions options = {});
std::uint64_t element_order(const FieldElement& a);
FieldElement element_of_order(const FieldPtr& field, std::uint64_t n);
FieldElement frobenius_map(const FieldElement& a, std::int64_t i);

}  // namespace commgraph::ff
