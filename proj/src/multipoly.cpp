#include "commgraph/multipoly.hpp"

#include <sstream>

#include "commgraph/error.hpp"

namespace commgraph::ff {

MultiPoly::MultiPoly(FieldPtr field, std::size_t num_vars) : field_(std::move(field)), num_vars_(num_vars)
{
    if (!field_) throw Error(ErrorCode::InvalidArgument, "polynomial without field");
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t num_vars, Value c)
{
    MultiPoly p(std::move(field), num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, std::size_t num_vars, std::size_t index)
{
    if (index >= num_vars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    MultiPoly p(std::move(field), num_vars);
    Exponents e(num_vars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(FieldPtr field, Exponents exps, Value c)
{
    MultiPoly p(std::move(field), exps.size());
    p.add_term(exps, c);
    return p;
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
    if (num_vars_ != o.num_vars_ || !field_->same_as(*o.field_)) {
        throw Error(ErrorCode::SpecMismatch, "polynomials over different rings");
    }
}

void MultiPoly::add_term(const Exponents& e, Value c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<Value> MultiPoly::constant_value() const
{
    if (terms_.empty()) return Value{0};
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (auto x : e) {
        if (x != 0) return std::nullopt;
    }
    return c;
}

unsigned MultiPoly::total_degree() const
{
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(field_, num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_compatible(o);
    MultiPoly r(field_, num_vars_);
    Exponents e(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < num_vars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, field_->mul(ca, cb));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(Value c) const
{
    MultiPoly r(field_, num_vars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_->mul(v, c));
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const
{
    check_compatible(o);
    return terms_ == o.terms_;
}

Value MultiPoly::evaluate(std::span<const Value> point) const
{
    if (point.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong arity");
    Value acc = 0;
    for (const auto& [e, c] : terms_) {
        Value t = c;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (e[i]) t = field_->mul(t, field_->pow(point[i], static_cast<std::int64_t>(e[i])));
        }
        acc = field_->add(acc, t);
    }
    return acc;
}

MultiPoly MultiPoly::substitute(std::size_t index, const MultiPoly& value) const
{
    check_compatible(value);
    MultiPoly r(field_, num_vars_);
    std::vector<MultiPoly> powers{constant(field_, num_vars_, 1)};
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[index]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[index] = 0;
        r += monomial(field_, rest, c) * powers[e[index]];
    }
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (!e[i]) continue;
            if (any) mono << '*';
            any = true;
            mono << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) mono << '^' << e[i];
        }
        if (!any) {
            os << field_->element(c).to_string();
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << field_->element(c).to_string() << '*' << mono.str();
        }
    }
    return os.str();
}

}  // namespace commgraph::ff
