#include "commgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "commgraph/error.hpp"
#include "commgraph/numtheory.hpp"

namespace commgraph::grp {

namespace {

// Groups up to this order get a full multiplication table.
constexpr std::size_t kTableLimit = 2048;

void check_ambient(const std::vector<GroupElement>& gens)
{
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "generator list is empty");
    for (const auto& g : gens) {
        if (!same_ambient(g, gens.front())) {
            throw Error(ErrorCode::SpecMismatch, "generators do not share an ambient group");
        }
    }
}

}  // namespace

std::vector<GroupElement> generate_elements(const std::vector<GroupElement>& gens, std::size_t cap)
{
    check_ambient(gens);
    std::vector<GroupElement> out;
    std::unordered_set<GroupElement, ElementHash> seen;
    out.push_back(identity_like(gens.front()));
    seen.insert(out.back());
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            GroupElement x = multiply(out[head], g);
            if (seen.contains(x)) continue;
            if (out.size() >= cap) {
                throw Error(ErrorCode::CapExceeded, "group closure exceeds cap of " + std::to_string(cap));
            }
            seen.insert(x);
            out.push_back(std::move(x));
        }
    }
    return out;
}

GroupPtr GroupHandle::from_generators(std::vector<GroupElement> gens, std::size_t cap)
{
    check_ambient(gens);
    auto g = std::shared_ptr<GroupHandle>(new GroupHandle());
    g->backend_ = backend_of(gens.front());
    g->gens_ = std::move(gens);
    g->cap_ = cap;
    return g;
}

GroupPtr GroupHandle::from_elements(std::vector<GroupElement> elements)
{
    check_ambient(elements);
    auto id_it = std::find_if(elements.begin(), elements.end(), [](const auto& e) { return is_identity(e); });
    if (id_it == elements.end()) throw Error(ErrorCode::InvalidArgument, "element list lacks the identity");
    std::rotate(elements.begin(), id_it, id_it + 1);

    auto g = std::shared_ptr<GroupHandle>(new GroupHandle());
    g->backend_ = backend_of(elements.front());
    g->cap_ = std::max(kDefaultElementCap, elements.size());

    std::unordered_map<GroupElement, std::uint32_t, ElementHash> index;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], i).second) {
            throw Error(ErrorCode::InvalidArgument, "element list has duplicates");
        }
    }
    // Greedy generating set; the closure must stay inside the list.
    std::vector<char> reached(elements.size(), 0);
    std::vector<std::uint32_t> gen_idx;
    reached[0] = 1;
    std::vector<std::uint32_t> reached_list{0};
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
        if (reached[i]) continue;
        gen_idx.push_back(i);
        // Rescan from the start so earlier elements meet the new generator.
        for (std::size_t head = 0; head < reached_list.size(); ++head) {
            for (auto gi : gen_idx) {
                GroupElement x = multiply(elements[reached_list[head]], elements[gi]);
                auto it = index.find(x);
                if (it == index.end()) throw Error(ErrorCode::InvalidArgument, "element list is not closed");
                if (!reached[it->second]) {
                    reached[it->second] = 1;
                    reached_list.push_back(it->second);
                }
            }
        }
    }
    if (gen_idx.empty()) gen_idx.push_back(0);
    for (auto gi : gen_idx) g->gens_.push_back(elements[gi]);

    std::call_once(g->materialize_once_, [&] {
        g->elements_ = std::move(elements);
        g->index_ = std::move(index);
        g->gen_indices_ = gen_idx;
    });
    return g;
}

void GroupHandle::materialize() const
{
    std::call_once(materialize_once_, [this] {
        elements_ = generate_elements(gens_, cap_);
        index_.reserve(elements_.size());
        for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
        gen_indices_.clear();
        for (const auto& g : gens_) gen_indices_.push_back(index_.at(g));
    });
}

const std::vector<GroupElement>& GroupHandle::elements() const
{
    materialize();
    return elements_;
}

std::optional<std::uint32_t> GroupHandle::index_of(const GroupElement& e) const
{
    materialize();
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t GroupHandle::require_index(const GroupElement& e) const
{
    auto idx = index_of(e);
    if (!idx) throw Error(ErrorCode::NotMember, "element is not in the group");
    return *idx;
}

const std::vector<std::uint32_t>& GroupHandle::generator_indices() const
{
    materialize();
    return gen_indices_;
}

void GroupHandle::build_table() const
{
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            table_[a * n + b] = index_.at(multiply(elements_[a], elements_[b]));
        }
    }
}

std::uint32_t GroupHandle::mul(std::uint32_t a, std::uint32_t b) const
{
    materialize();
    const std::size_t n = elements_.size();
    if (n <= kTableLimit) {
        std::call_once(table_once_, [this] { build_table(); });
        return table_[a * n + b];
    }
    return index_.at(multiply(elements_[a], elements_[b]));
}

void GroupHandle::build_inverses() const
{
    inverses_.resize(elements_.size());
    for (std::uint32_t i = 0; i < elements_.size(); ++i) inverses_[i] = index_.at(inverse(elements_[i]));
}

std::uint32_t GroupHandle::inv(std::uint32_t a) const
{
    materialize();
    std::call_once(inverse_once_, [this] { build_inverses(); });
    return inverses_[a];
}

std::uint64_t GroupHandle::element_order(std::uint32_t a) const
{
    std::uint64_t n = 1;
    for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++n;
    return n;
}

std::uint32_t GroupHandle::power(std::uint32_t a, std::uint64_t n) const
{
    std::uint32_t r = 0;
    std::uint32_t base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return r;
}

const std::vector<std::uint32_t>& GroupHandle::canonical_rank() const
{
    materialize();
    std::call_once(rank_once_, [this] {
        std::vector<std::uint32_t> order(elements_.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
            return canonical_less(elements_[a], elements_[b]);
        });
        rank_.resize(order.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos) rank_[order[pos]] = pos;
    });
    return rank_;
}

// ---------------------------------------------------------------------------

SubgroupHandle::SubgroupHandle(GroupPtr parent, std::vector<std::uint32_t> members)
    : parent_(std::move(parent)), members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
}

SubgroupHandle SubgroupHandle::trivial(const GroupPtr& parent)
{
    return SubgroupHandle(parent, {0});
}

SubgroupHandle SubgroupHandle::whole(const GroupPtr& parent)
{
    std::vector<std::uint32_t> all(parent->order());
    std::iota(all.begin(), all.end(), 0u);
    return SubgroupHandle(parent, std::move(all));
}

bool SubgroupHandle::contains(std::uint32_t index) const
{
    return std::binary_search(members_.begin(), members_.end(), index);
}

bool SubgroupHandle::contains(const GroupElement& e) const
{
    auto idx = parent_->index_of(e);
    return idx && contains(*idx);
}

bool SubgroupHandle::is_subset_of(const SubgroupHandle& other) const
{
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::vector<GroupElement> SubgroupHandle::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(members_.size());
    for (auto i : members_) out.push_back(parent_->element(i));
    return out;
}

GroupPtr SubgroupHandle::as_group() const
{
    return GroupHandle::from_elements(elements());
}

// ---------------------------------------------------------------------------

SubgroupHandle subgroup_generated(const GroupPtr& g, const std::vector<std::uint32_t>& gens)
{
    const std::size_t n = g->order();
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> list{0};
    in[0] = 1;
    for (std::size_t head = 0; head < list.size(); ++head) {
        for (auto s : gens) {
            const std::uint32_t x = g->mul(list[head], s);
            if (!in[x]) {
                in[x] = 1;
                list.push_back(x);
            }
        }
    }
    return SubgroupHandle(g, std::move(list));
}

SubgroupHandle normal_closure(const GroupPtr& g, const std::vector<std::uint32_t>& gens)
{
    std::vector<std::uint32_t> s;
    for (auto x : gens) {
        if (x != 0 && std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
    }
    SubgroupHandle h = subgroup_generated(g, s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (auto t : g->generator_indices()) {
            const std::uint32_t c = g->conj(s[i], t);
            if (!h.contains(c)) {
                s.push_back(c);
                h = subgroup_generated(g, s);
            }
        }
    }
    return h;
}

std::vector<std::uint32_t> generating_set(const SubgroupHandle& h)
{
    const GroupPtr& g = h.parent();
    std::vector<std::uint32_t> gens;
    SubgroupHandle cur = SubgroupHandle::trivial(g);
    for (auto x : h.members()) {
        if (cur.order() == h.order()) break;
        if (cur.contains(x)) continue;
        gens.push_back(x);
        cur = subgroup_generated(g, gens);
    }
    return gens;
}

bool is_normal(const SubgroupHandle& h)
{
    const GroupPtr& g = h.parent();
    for (auto s : generating_set(h)) {
        for (auto t : g->generator_indices()) {
            if (!h.contains(g->conj(s, t))) return false;
        }
    }
    return true;
}

SubgroupHandle normalizer(const SubgroupHandle& h)
{
    const GroupPtr& g = h.parent();
    const auto gens = generating_set(h);
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (auto s : gens) {
            if (!h.contains(g->conj(s, x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return SubgroupHandle(g, std::move(out));
}

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b)
{
    std::vector<std::uint32_t> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return SubgroupHandle(a.parent(), std::move(out));
}

SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b)
{
    auto gens = generating_set(a);
    for (auto x : generating_set(b)) gens.push_back(x);
    return subgroup_generated(a.parent(), gens);
}

SubgroupHandle centralizer(const GroupPtr& g, const GroupElement& x)
{
    return centralizer(g, g->require_index(x));
}

SubgroupHandle centralizer(const GroupPtr& g, std::uint32_t x)
{
    if (x >= g->order()) throw Error(ErrorCode::NotMember, "index outside the group");
    std::vector<std::uint32_t> out;
    for (std::uint32_t y = 0; y < g->order(); ++y) {
        if (g->commute(x, y)) out.push_back(y);
    }
    return SubgroupHandle(g, std::move(out));
}

SubgroupHandle center(const GroupPtr& g)
{
    const auto& gens = g->generator_indices();
    std::vector<std::uint32_t> out;
    for (std::uint32_t y = 0; y < g->order(); ++y) {
        bool central = std::all_of(gens.begin(), gens.end(), [&](std::uint32_t s) { return g->commute(s, y); });
        if (central) out.push_back(y);
    }
    return SubgroupHandle(g, std::move(out));
}

namespace {

SubgroupHandle commutator_of_normal(const GroupPtr& g, const std::vector<std::uint32_t>& left,
                                    const std::vector<std::uint32_t>& right)
{
    std::vector<std::uint32_t> comms;
    for (auto a : left) {
        for (auto b : right) {
            const std::uint32_t c = g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b));
            if (c != 0) comms.push_back(c);
        }
    }
    return normal_closure(g, comms);
}

}  // namespace

SubgroupHandle derived_subgroup(const GroupPtr& g)
{
    const auto& gens = g->generator_indices();
    return commutator_of_normal(g, gens, gens);
}

std::vector<SubgroupHandle> derived_series(const GroupPtr& g)
{
    std::vector<SubgroupHandle> series{SubgroupHandle::whole(g)};
    for (;;) {
        const auto gens = generating_set(series.back());
        SubgroupHandle next = commutator_of_normal(g, gens, gens);
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<SubgroupHandle> lower_central_series(const GroupPtr& g)
{
    std::vector<SubgroupHandle> series{SubgroupHandle::whole(g)};
    for (;;) {
        SubgroupHandle next = commutator_of_normal(g, generating_set(series.back()), g->generator_indices());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_abelian(const GroupPtr& g)
{
    const auto& gens = g->generator_indices();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!g->commute(gens[i], gens[j])) return false;
    return true;
}

bool is_soluble(const GroupPtr& g)
{
    return derived_series(g).back().is_trivial();
}

bool is_nilpotent(const GroupPtr& g)
{
    return lower_central_series(g).back().is_trivial();
}

bool is_cyclic(const GroupPtr& g)
{
    const std::uint64_t n = g->order();
    for (std::uint32_t x = 0; x < n; ++x) {
        if (g->element_order(x) == n) return true;
    }
    return false;
}

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

SubgroupHandle sylow_subgroup(const GroupPtr& g, std::uint64_t p)
{
    const std::uint64_t target = p_part(g->order(), p);
    SubgroupHandle sylow = SubgroupHandle::trivial(g);
    while (sylow.order() < target) {
        const SubgroupHandle n = normalizer(sylow);
        bool extended = false;
        for (auto x : n.members()) {
            if (sylow.contains(x) || !is_power_of(g->element_order(x), p)) continue;
            auto gens = generating_set(sylow);
            gens.push_back(x);
            sylow = subgroup_generated(g, gens);
            extended = true;
            break;
        }
        if (!extended) throw Error(ErrorCode::CheckFailed, "Sylow extension stalled");
    }
    return sylow;
}

SubgroupHandle p_core(const GroupPtr& g, std::uint64_t p)
{
    const SubgroupHandle sylow = sylow_subgroup(g, p);
    std::vector<std::uint32_t> out;
    for (auto y : sylow.members()) {
        bool all_in = true;
        for (std::uint32_t h = 0; h < g->order() && all_in; ++h) all_in = sylow.contains(g->conj(y, h));
        if (all_in) out.push_back(y);
    }
    return SubgroupHandle(g, std::move(out));
}

SubgroupHandle fitting_subgroup(const GroupPtr& g)
{
    SubgroupHandle f = SubgroupHandle::trivial(g);
    for (auto p : nt::prime_divisors(g->order())) f = join(f, p_core(g, p));
    return f;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const GroupPtr& g)
{
    std::vector<SubgroupHandle> closures;
    for (std::uint32_t x = 1; x < g->order(); ++x) {
        SubgroupHandle n = normal_closure(g, {x});
        if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
    }
    std::vector<SubgroupHandle> minimal;
    for (const auto& n : closures) {
        bool is_min = std::none_of(closures.begin(), closures.end(), [&](const SubgroupHandle& m) {
            return m.order() < n.order() && m.is_subset_of(n);
        });
        if (is_min) minimal.push_back(n);
    }
    std::sort(minimal.begin(), minimal.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
    });
    return minimal;
}

Quotient quotient_group(const SubgroupHandle& n)
{
    const GroupPtr& g = n.parent();
    if (!is_normal(n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
    const std::size_t size = g->order();
    const auto& rank = g->canonical_rank();
    std::vector<std::uint32_t> by_rank(size);
    for (std::uint32_t i = 0; i < size; ++i) by_rank[rank[i]] = i;

    constexpr std::uint32_t kUnset = ~0u;
    std::vector<std::uint32_t> label(size, kUnset);
    std::vector<std::uint32_t> rep;
    for (auto x : by_rank) {
        if (label[x] != kUnset) continue;
        const auto l = static_cast<std::uint32_t>(rep.size());
        rep.push_back(x);
        for (auto m : n.members()) label[g->mul(x, m)] = l;
    }
    const std::size_t cosets = rep.size();

    // Right action gN -> gsN (well defined because N is normal).
    std::vector<GroupElement> gens;
    for (auto s : g->generator_indices()) {
        std::vector<std::uint32_t> img(cosets);
        for (std::uint32_t l = 0; l < cosets; ++l) img[l] = label[g->mul(rep[l], s)];
        gens.emplace_back(Permutation(std::move(img)));
    }
    Quotient q;
    q.group = GroupHandle::from_generators(std::move(gens), std::max(g->cap(), cosets));
    q.coset_of = std::move(label);
    q.element_of_coset.assign(cosets, kUnset);
    const std::uint32_t base = q.coset_of[0];
    for (std::uint32_t e = 0; e < q.group->order(); ++e) {
        const auto& perm = std::get<Permutation>(q.group->element(e));
        q.element_of_coset[perm(base)] = e;
    }
    return q;
}

SubgroupHandle preimage(const GroupPtr& g, const Quotient& q, const SubgroupHandle& sub)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < g->order(); ++x) {
        if (sub.contains(q.element_of_coset[q.coset_of[x]])) out.push_back(x);
    }
    return SubgroupHandle(g, std::move(out));
}

bool is_generalized_quaternion(const GroupPtr& p)
{
    const std::uint64_t n = p->order();
    if (n < 8 || !is_power_of(n, 2)) return false;
    std::size_t involutions = 0;
    bool index_two_cyclic = false;
    for (std::uint32_t x = 1; x < n; ++x) {
        const auto o = p->element_order(x);
        if (o == 2) ++involutions;
        if (o == n / 2) index_two_cyclic = true;
    }
    return involutions == 1 && index_two_cyclic;
}

bool sylow_profile_cyclic_or_quaternion(const GroupPtr& h)
{
    for (auto p : nt::prime_divisors(h->order())) {
        const GroupPtr sylow = sylow_subgroup(h, p).as_group();
        if (is_cyclic(sylow)) continue;
        if (p == 2 && is_generalized_quaternion(sylow)) continue;
        return false;
    }
    return true;
}

bool sylow_profile_cyclic_or_quaternion(const SubgroupHandle& h)
{
    return sylow_profile_cyclic_or_quaternion(h.as_group());
}

bool is_metacyclic(const GroupPtr& g)
{
    const std::uint64_t n = g->order();
    std::vector<SubgroupHandle> seen;
    for (std::uint32_t x = 0; x < n; ++x) {
        SubgroupHandle c = subgroup_generated(g, {x});
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        if (!is_normal(c)) continue;
        const std::uint64_t index = n / c.order();
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint64_t k = 1;
            std::uint32_t acc = y;
            while (!c.contains(acc)) {
                acc = g->mul(acc, y);
                ++k;
            }
            if (k == index) return true;
        }
    }
    return false;
}

}  // namespace commgraph::grp
