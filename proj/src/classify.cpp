#include "commgraph/classify.hpp"

#include "commgraph/error.hpp"
#include "commgraph/numtheory.hpp"

namespace commgraph::classify {

std::string_view to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::HasCentre: return "HasCentre";
    case VerdictKind::NotSoluble: return "NotSoluble";
    case VerdictKind::Frobenius: return "Frobenius";
    case VerdictKind::TwoFrobenius: return "TwoFrobenius";
    case VerdictKind::ConnectedDiameter: return "ConnectedDiameter";
    case VerdictKind::DisconnectedOther: return "DisconnectedOther";
    }
    return "?";
}

namespace {

// C_X(j) <= J for every j in J#, with J a subgroup of the group X.
bool centralizers_inside(const grp::GroupPtr& x, const grp::SubgroupHandle& j)
{
    for (auto e : j.members()) {
        if (e == 0) continue;
        for (std::uint32_t y = 0; y < x->order(); ++y) {
            if (!j.contains(y) && x->commute(e, y)) return false;
        }
    }
    return true;
}

bool proper_nontrivial(const grp::SubgroupHandle& h)
{
    return !h.is_trivial() && !h.is_whole();
}

}  // namespace

std::optional<grp::SubgroupHandle> is_frobenius(const grp::GroupPtr& g)
{
    if (g->order() <= 1) return std::nullopt;
    grp::SubgroupHandle j = grp::fitting_subgroup(g);
    if (!proper_nontrivial(j)) return std::nullopt;
    if (!centralizers_inside(g, j)) return std::nullopt;
    return j;
}

std::optional<std::pair<grp::SubgroupHandle, grp::SubgroupHandle>> is_two_frobenius(const grp::GroupPtr& g)
{
    if (g->order() <= 1) return std::nullopt;
    grp::SubgroupHandle k = grp::fitting_subgroup(g);
    if (!proper_nontrivial(k)) return std::nullopt;

    const grp::Quotient q = grp::quotient_group(k);
    const grp::SubgroupHandle fq = grp::fitting_subgroup(q.group);
    const grp::SubgroupHandle l = grp::preimage(g, q, fq);
    if (!proper_nontrivial(l) || l.order() == k.order()) return std::nullopt;

    // L Frobenius with kernel K: centralizers in L of K# stay inside K.
    for (auto e : k.members()) {
        if (e == 0) continue;
        for (auto y : l.members()) {
            if (!k.contains(y) && g->commute(e, y)) return std::nullopt;
        }
    }
    // G/K Frobenius with kernel L/K.
    if (!proper_nontrivial(fq) || !centralizers_inside(q.group, fq)) return std::nullopt;
    return std::make_pair(std::move(k), l);
}

ClassificationVerdict classify_group(const grp::GroupPtr& g, unsigned jobs, bool with_graph)
{
    ClassificationVerdict v;
    v.order = g->order();
    if (!grp::center(g).is_trivial()) {
        v.kind = VerdictKind::HasCentre;
        return v;
    }
    if (!grp::is_soluble(g)) {
        v.kind = VerdictKind::NotSoluble;
        return v;
    }

    auto summary_of = [&]() {
        return graph::diameter_and_components(graph::CommutingGraph::build(g), jobs);
    };

    if (auto kernel = is_frobenius(g)) {
        v.kind = VerdictKind::Frobenius;
        v.kernel = std::move(kernel);
        if (with_graph) v.components = summary_of().components.size();
        return v;
    }
    if (auto kl = is_two_frobenius(g)) {
        v.kind = VerdictKind::TwoFrobenius;
        v.quotient_metacyclic = grp::is_metacyclic(grp::quotient_group(kl->first).group);
        v.k = std::move(kl->first);
        v.l = std::move(kl->second);
        if (with_graph) v.components = summary_of().components.size();
        return v;
    }
    const auto summary = summary_of();
    v.components = summary.components.size();
    if (summary.diameter) {
        v.kind = VerdictKind::ConnectedDiameter;
        v.diameter = summary.diameter;
    } else {
        v.kind = VerdictKind::DisconnectedOther;
    }
    return v;
}

std::optional<grp::SubgroupHandle> frobenius_complement(const grp::GroupPtr& g, const grp::SubgroupHandle& kernel)
{
    if (g->order() > kComplementSearchLimit) return std::nullopt;
    const std::uint64_t want = g->order() / kernel.order();
    for (std::uint32_t x = 1; x < g->order(); ++x) {
        if (kernel.contains(x) || !nt::is_prime(g->element_order(x))) continue;
        grp::SubgroupHandle n = grp::normalizer(grp::subgroup_generated(g, {x}));
        if (n.order() == want && grp::intersection(n, kernel).is_trivial()) return n;
    }
    return std::nullopt;
}

nlohmann::json to_json(const ClassificationVerdict& v)
{
    nlohmann::json j{{"kind", to_string(v.kind)}, {"order", v.order}};
    if (v.kernel) j["kernel_order"] = v.kernel->order();
    if (v.k) j["K_order"] = v.k->order();
    if (v.l) j["L_order"] = v.l->order();
    if (v.diameter) j["diameter"] = *v.diameter;
    if (v.components) j["components"] = *v.components;
    if (v.quotient_metacyclic) j["quotient_metacyclic"] = *v.quotient_metacyclic;
    return j;
}

}  // namespace commgraph::classify
