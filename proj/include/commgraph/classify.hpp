#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "commgraph/commuting_graph.hpp"
#include "commgraph/group.hpp"

namespace commgraph::classify {

enum class VerdictKind { HasCentre, NotSoluble, Frobenius, TwoFrobenius, ConnectedDiameter, DisconnectedOther };

std::string_view to_string(VerdictKind kind);

struct ClassificationVerdict {
    VerdictKind kind = VerdictKind::HasCentre;
    std::uint64_t order = 0;
    std::optional<grp::SubgroupHandle> kernel;  // Frobenius
    std::optional<grp::SubgroupHandle> k;       // TwoFrobenius, lower
    std::optional<grp::SubgroupHandle> l;       // TwoFrobenius, upper
    std::optional<std::uint64_t> diameter;      // ConnectedDiameter
    std::optional<std::size_t> components;      // whenever the graph was built
    std::optional<bool> quotient_metacyclic;    // TwoFrobenius: G/K metacyclic (informational)
};

/// Kernel J = F(G) when 1 < J < G and C_G(j) <= J for every j in J#.
std::optional<grp::SubgroupHandle> is_frobenius(const grp::GroupPtr& g);

/// (K, L) with K = F(G), L the preimage of F(G/K), when L is Frobenius with
/// kernel K and G/K is Frobenius with kernel L/K.
std::optional<std::pair<grp::SubgroupHandle, grp::SubgroupHandle>> is_two_frobenius(const grp::GroupPtr& g);

/// Priority HasCentre > NotSoluble > Frobenius > TwoFrobenius > graph. For
/// the Frobenius and 2-Frobenius verdicts the graph is still built (when
/// `with_graph`) to report the component count.
ClassificationVerdict classify_group(const grp::GroupPtr& g, unsigned jobs = 1, bool with_graph = true);

/// A Frobenius complement of the detected kernel, searched only for groups
/// of order <= 500. Candidates are normalizers of prime-order subgroups
/// outside the kernel, kept when they meet the kernel trivially and have the
/// complementary order.
std::optional<grp::SubgroupHandle> frobenius_complement(const grp::GroupPtr& g, const grp::SubgroupHandle& kernel);

inline constexpr std::uint64_t kComplementSearchLimit = 500;

/// {"kind":..,"order":..,"kernel_order"?,"K_order"?,"L_order"?,"diameter"?,"components"?,...}
nlohmann::json to_json(const ClassificationVerdict& v);

}  // namespace commgraph::classify
