#include "commgraph/finfield.hpp"

#include <algorithm>
#include <sstream>

#include "commgraph/error.hpp"

namespace commgraph::ff {

namespace {

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t coef = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - coef) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p)
{
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// X^(p^n) mod m by repeated p-th powering.
Poly frobenius_power_of_x(unsigned n, const Poly& m, std::uint64_t p)
{
    Poly x{0, 1};
    Poly r = poly_mod(x, m, p);
    for (unsigned i = 0; i < n; ++i) r = poly_powmod(r, p, m, p);
    return r;
}

// Rabin's test.
bool is_irreducible(const Poly& m, std::uint64_t p)
{
    const unsigned k = static_cast<unsigned>(m.size() - 1);
    if (k == 1) return true;
    Poly x{0, 1};
    Poly full = frobenius_power_of_x(k, m, p);
    if (full != poly_mod(x, m, p)) return false;
    for (std::uint64_t s : nt::prime_divisors(k)) {
        Poly h = frobenius_power_of_x(k / static_cast<unsigned>(s), m, p);
        // h - X
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        Poly g = poly_gcd(m, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly least_irreducible(std::uint64_t p, unsigned k)
{
    // Lower coefficients enumerated as a base-p counter, c_0 least significant.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly m(k + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = c % p;
            c /= p;
        }
        m[k] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

FieldPtr FieldSpec::create(std::uint64_t p, unsigned k, FieldOptions options)
{
    if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (size > options.cap / p) {
            throw Error(ErrorCode::CapExceeded,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds field cap " +
                            std::to_string(options.cap));
        }
        size *= p;
    }
    if (size > std::uint64_t{1} << 31) throw Error(ErrorCode::CapExceeded, "field too large for packed values");

    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->p_ = p;
    f->k_ = k;
    f->size_ = size;
    Poly m = least_irreducible(p, k);
    f->modulus_.assign(m.begin(), m.end());
    f->unit_primes_ = nt::prime_divisors(size - 1);

    // Least primitive element; order is tested through the polynomial path
    // because the tables do not exist yet.
    const std::uint64_t n = size - 1;
    for (Value v = 1; v < size; ++v) {
        bool primitive = true;
        for (std::uint64_t q : f->unit_primes_) {
            if (f->pow_poly(v, n / q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            f->primitive_ = v;
            break;
        }
    }

    if (size <= options.table_limit) {
        f->exp_.resize(n);
        f->log_.assign(size, 0);
        Value acc = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            f->exp_[i] = acc;
            f->log_[acc] = static_cast<std::uint32_t>(i);
            acc = f->mul_poly(acc, f->primitive_);
        }
    }
    return f;
}

FieldPtr FieldSpec::from_json(const nlohmann::json& j, FieldOptions options)
{
    auto f = create(j.at("p").get<std::uint64_t>(), j.at("k").get<unsigned>(), options);
    if (j.contains("modulus")) {
        auto m = j.at("modulus").get<std::vector<std::uint32_t>>();
        if (m != f->modulus()) {
            throw Error(ErrorCode::SpecMismatch, "field modulus differs from the canonical choice");
        }
    }
    return f;
}

nlohmann::json FieldSpec::to_json() const
{
    return nlohmann::json{{"p", p_}, {"k", k_}, {"modulus", modulus_}};
}

bool FieldSpec::same_as(const FieldSpec& other) const
{
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

void FieldSpec::check(Value v) const
{
    if (v >= size_) throw Error(ErrorCode::InvalidArgument, "packed value out of range");
}

Value FieldSpec::from_int(std::int64_t n) const
{
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Value>(r);
}

Value FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() != k_) throw Error(ErrorCode::InvalidArgument, "coefficient vector must have length k");
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient not reduced modulo p");
        v = v * p_ + coeffs[i];
    }
    return static_cast<Value>(v);
}

std::vector<std::uint32_t> FieldSpec::coeffs(Value v) const
{
    std::vector<std::uint32_t> c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(v % p_);
        v = static_cast<Value>(v / p_);
    }
    return c;
}

Value FieldSpec::add(Value a, Value b) const
{
    if (k_ == 1) {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Value>(s >= p_ ? s - p_ : s);
    }
    std::uint64_t r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * place;
        place *= p_;
        a = static_cast<Value>(a / p_);
        b = static_cast<Value>(b / p_);
    }
    return static_cast<Value>(r);
}

Value FieldSpec::neg(Value a) const
{
    std::uint64_t r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
        a = static_cast<Value>(a / p_);
    }
    return static_cast<Value>(r);
}

Value FieldSpec::sub(Value a, Value b) const
{
    return add(a, neg(b));
}

Value FieldSpec::mul_poly(Value a, Value b) const
{
    if (a == 0 || b == 0) return 0;
    Poly pa, pb;
    for (auto c : coeffs(a)) pa.push_back(c);
    for (auto c : coeffs(b)) pb.push_back(c);
    trim(pa);
    trim(pb);
    Poly m(modulus_.begin(), modulus_.end());
    Poly r = poly_mulmod(pa, pb, m, p_);
    std::uint64_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
    return static_cast<Value>(v);
}

Value FieldSpec::pow_poly(Value a, std::uint64_t e) const
{
    Value r = 1;
    while (e) {
        if (e & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return r;
}

Value FieldSpec::mul(Value a, Value b) const
{
    if (a == 0 || b == 0) return 0;
    if (log_.empty()) return mul_poly(a, b);
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    const std::uint64_t n = size_ - 1;
    if (s >= n) s -= n;
    return exp_[s];
}

Value FieldSpec::inv(Value a) const
{
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint64_t n = size_ - 1;
    if (log_.empty()) return pow_poly(a, n - 1);
    return exp_[(n - log_[a]) % n];
}

Value FieldSpec::pow(Value a, std::int64_t e) const
{
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        return 0;
    }
    const std::int64_t n = static_cast<std::int64_t>(size_ - 1);
    std::int64_t r = e % n;
    if (r < 0) r += n;
    if (log_.empty()) return pow_poly(a, static_cast<std::uint64_t>(r));
    return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % size_t(n)];
}

Value FieldSpec::pow(Value a, const BigInt& e) const
{
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        return 0;
    }
    BigInt n(size_ - 1);
    BigInt r = e % n;
    if (r < 0) r += n;
    return pow(a, static_cast<std::int64_t>(r));
}

Value FieldSpec::frobenius(Value a, std::int64_t i) const
{
    std::int64_t s = i % static_cast<std::int64_t>(k_);
    if (s < 0) s += k_;
    if (s == 0 || a == 0) return a;
    std::uint64_t q = 1;
    for (std::int64_t j = 0; j < s; ++j) q *= p_;
    return pow(a, static_cast<std::int64_t>(q));
}

std::uint64_t FieldSpec::order_of(Value a) const
{
    if (a == 0) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
    std::uint64_t ord = size_ - 1;
    for (std::uint64_t q : unit_primes_) {
        while (ord % q == 0 && pow(a, static_cast<std::int64_t>(ord / q)) == 1) ord /= q;
    }
    return ord;
}

Value FieldSpec::element_of_order(std::uint64_t n) const
{
    if (n == 0 || (size_ - 1) % n != 0) {
        throw Error(ErrorCode::NoSuchOrder,
                    std::to_string(n) + " does not divide " + std::to_string(size_ - 1));
    }
    return pow(primitive_, static_cast<std::int64_t>((size_ - 1) / n));
}

FieldElement FieldSpec::element(Value v) const
{
    check(v);
    return FieldElement(shared_from_this(), v);
}

FieldElement FieldSpec::element_from_int(std::int64_t n) const
{
    return FieldElement(shared_from_this(), from_int(n));
}

FieldElement::FieldElement(FieldPtr field, Value v) : field_(std::move(field)), value_(v)
{
    if (!field_) throw Error(ErrorCode::InvalidArgument, "field element without field");
    if (v >= field_->size()) throw Error(ErrorCode::InvalidArgument, "packed value out of range");
}

const FieldSpec& FieldElement::same_field(const FieldElement& o) const
{
    if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
        throw Error(ErrorCode::SpecMismatch, "operands belong to different fields");
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    return {field_, same_field(o).add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
    return {field_, same_field(o).sub(value_, o.value_)};
}

FieldElement FieldElement::operator-() const
{
    return {field_, field_->neg(value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    return {field_, same_field(o).mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
    return {field_, same_field(o).div(value_, o.value_)};
}

FieldElement FieldElement::inv() const
{
    return {field_, field_->inv(value_)};
}

FieldElement FieldElement::pow(const BigInt& e) const
{
    return {field_, field_->pow(value_, e)};
}

FieldElement FieldElement::pow(std::int64_t e) const
{
    return {field_, field_->pow(value_, e)};
}

FieldElement FieldElement::frobenius(std::int64_t i) const
{
    return {field_, field_->frobenius(value_, i)};
}

bool FieldElement::operator==(const FieldElement& o) const
{
    return value_ == o.value_ && same_field(o).size() != 0;
}

std::string FieldElement::to_string() const
{
    std::ostringstream os;
    if (field_->in_prime_subfield(value_)) {
        os << value_;
        return os.str();
    }
    os << '[';
    auto c = coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

FieldPtr field_create(std::uint64_t p, unsigned k, FieldOptions options)
{
    return FieldSpec::create(p, k, options);
}

std::uint64_t element_order(const FieldElement& a)
{
    return a.field()->order_of(a.value());
}

FieldElement element_of_order(const FieldPtr& field, std::uint64_t n)
{
    return field->element(field->element_of_order(n));
}

FieldElement frobenius_map(const FieldElement& a, std::int64_t i)
{
    return a.frobenius(i);
}

}  // namespace commgraph::ff
