#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "commgraph/element.hpp"

namespace commgraph::grp {

inline constexpr std::size_t kDefaultElementCap = 200'000;

class GroupHandle;
using GroupPtr = std::shared_ptr<const GroupHandle>;

/// Closure of `gens` under multiplication, breadth first from the identity,
/// right-multiplying by generators in the given order. Throws CapExceeded
/// once more than `cap` elements appear.
std::vector<GroupElement> generate_elements(const std::vector<GroupElement>& gens,
                                            std::size_t cap = kDefaultElementCap);

/// A finite group given by generators. The element list is produced on first
/// use (thread-safe, once); afterwards every query is read-only. Elements are
/// addressed by their index in the materialized list; index 0 is always the
/// identity.
class GroupHandle : public std::enable_shared_from_this<GroupHandle> {
public:
    static GroupPtr from_generators(std::vector<GroupElement> gens, std::size_t cap = kDefaultElementCap);
    /// Wraps an already closed element list (identity anywhere in it). Used
    /// for subgroups and quotients; closure is checked.
    static GroupPtr from_elements(std::vector<GroupElement> elements);

    Backend backend() const { return backend_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    std::size_t cap() const { return cap_; }

    void materialize() const;
    std::size_t order() const { return elements().size(); }
    const std::vector<GroupElement>& elements() const;
    const GroupElement& element(std::uint32_t i) const { return elements()[i]; }
    std::optional<std::uint32_t> index_of(const GroupElement& e) const;
    /// index_of or NotMember.
    std::uint32_t require_index(const GroupElement& e) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t conj(std::uint32_t g, std::uint32_t h) const { return mul(mul(inv(h), g), h); }
    bool commute(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }
    std::uint64_t element_order(std::uint32_t a) const;
    std::uint32_t power(std::uint32_t a, std::uint64_t n) const;

    /// Indices of the generators inside the element list.
    const std::vector<std::uint32_t>& generator_indices() const;
    /// rank[i] = position of element i in canonical order.
    const std::vector<std::uint32_t>& canonical_rank() const;

private:
    GroupHandle() = default;
    void build_inverses() const;
    void build_table() const;

    Backend backend_ = Backend::Permutation;
    std::vector<GroupElement> gens_;
    std::size_t cap_ = kDefaultElementCap;

    mutable std::once_flag materialize_once_;
    mutable std::vector<GroupElement> elements_;
    mutable std::unordered_map<GroupElement, std::uint32_t, ElementHash> index_;
    mutable std::vector<std::uint32_t> gen_indices_;

    mutable std::once_flag inverse_once_;
    mutable std::vector<std::uint32_t> inverses_;
    mutable std::once_flag table_once_;
    mutable std::vector<std::uint32_t> table_;
    mutable std::once_flag rank_once_;
    mutable std::vector<std::uint32_t> rank_;
};

/// Subset of a materialized parent group closed under products and inverses.
/// Members are parent indices in ascending order.
class SubgroupHandle {
public:
    SubgroupHandle() = default;
    SubgroupHandle(GroupPtr parent, std::vector<std::uint32_t> members);

    static SubgroupHandle trivial(const GroupPtr& parent);
    static SubgroupHandle whole(const GroupPtr& parent);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool is_trivial() const { return members_.size() == 1; }
    bool is_whole() const { return members_.size() == parent_->order(); }
    bool contains(std::uint32_t index) const;
    bool contains(const GroupElement& e) const;
    bool is_subset_of(const SubgroupHandle& other) const;
    std::vector<GroupElement> elements() const;
    /// The subgroup as a group in its own right, elements in parent order.
    GroupPtr as_group() const;

    bool operator==(const SubgroupHandle& o) const { return members_ == o.members_; }

private:
    GroupPtr parent_;
    std::vector<std::uint32_t> members_;
};

/// Quotient G/N as a permutation group on left cosets, with the projection.
struct Quotient {
    GroupPtr group;
    std::vector<std::uint32_t> coset_of;          // element of G -> coset label
    std::vector<std::uint32_t> element_of_coset;  // coset label -> element of group
};

// Generic algorithms. All require (and trigger) materialization.

SubgroupHandle subgroup_generated(const GroupPtr& g, const std::vector<std::uint32_t>& gens);
SubgroupHandle normal_closure(const GroupPtr& g, const std::vector<std::uint32_t>& gens);
/// Small generating set of a subgroup, chosen greedily in member order.
std::vector<std::uint32_t> generating_set(const SubgroupHandle& h);
bool is_normal(const SubgroupHandle& h);
SubgroupHandle normalizer(const SubgroupHandle& h);
SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b);
SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b);

SubgroupHandle centralizer(const GroupPtr& g, const GroupElement& x);
SubgroupHandle centralizer(const GroupPtr& g, std::uint32_t x);
SubgroupHandle center(const GroupPtr& g);
SubgroupHandle derived_subgroup(const GroupPtr& g);
std::vector<SubgroupHandle> derived_series(const GroupPtr& g);
std::vector<SubgroupHandle> lower_central_series(const GroupPtr& g);
bool is_abelian(const GroupPtr& g);
bool is_soluble(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_cyclic(const GroupPtr& g);

SubgroupHandle sylow_subgroup(const GroupPtr& g, std::uint64_t p);
SubgroupHandle p_core(const GroupPtr& g, std::uint64_t p);
SubgroupHandle fitting_subgroup(const GroupPtr& g);
std::vector<SubgroupHandle> minimal_normal_subgroups(const GroupPtr& g);

/// Throws NotNormal when `n` is not normal in its parent.
Quotient quotient_group(const SubgroupHandle& n);
/// Preimage in G of a subgroup of the quotient group.
SubgroupHandle preimage(const GroupPtr& g, const Quotient& q, const SubgroupHandle& sub);

/// True iff every Sylow subgroup is cyclic or generalized quaternion.
bool sylow_profile_cyclic_or_quaternion(const GroupPtr& h);
bool sylow_profile_cyclic_or_quaternion(const SubgroupHandle& h);
bool is_generalized_quaternion(const GroupPtr& p);
/// Has a cyclic normal subgroup with cyclic quotient.
bool is_metacyclic(const GroupPtr& g);

}  // namespace commgraph::grp
