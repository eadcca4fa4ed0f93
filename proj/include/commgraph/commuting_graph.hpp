#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "commgraph/group.hpp"

namespace commgraph::graph {

/// Non-central elements sharing one centralizer. Such elements commute
/// pairwise and have the same neighbours, so the class is a lossless
/// quotient vertex.
struct CentralizerClass {
    std::vector<std::uint32_t> members;  // group indices, ascending
    std::uint32_t rep = 0;               // least member in canonical order
};

/// Commuting graph of G on G \ Z(G), stored as its centralizer-class
/// quotient. Classes are numbered in canonical order of their
/// representatives; adjacency lists are ascending.
class CommutingGraph {
public:
    /// Throws EmptyGraph when G is abelian.
    static CommutingGraph build(const grp::GroupPtr& g);

    const grp::GroupPtr& group() const { return group_; }
    const std::vector<CentralizerClass>& classes() const { return classes_; }
    const std::vector<std::vector<std::uint32_t>>& class_adjacency() const { return adjacency_; }
    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const;

    bool is_vertex(std::uint32_t element) const { return class_of_[element] != kNoClass; }
    /// Class index of a vertex; NotAVertex for central elements.
    std::uint32_t class_of(std::uint32_t element) const;
    /// Adjacency of two vertices (distinct and commuting).
    bool adjacent(std::uint32_t a, std::uint32_t b) const;

private:
    static constexpr std::uint32_t kNoClass = ~0u;

    grp::GroupPtr group_;
    std::vector<CentralizerClass> classes_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::vector<std::uint32_t> class_of_;
    std::size_t vertex_count_ = 0;
};

struct DistanceReport {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::optional<std::uint64_t> distance;  // nullopt means unreachable
    std::vector<std::uint32_t> path;        // element indices, source..target
};

DistanceReport distance(const CommutingGraph& graph, std::uint32_t x, std::uint32_t y);
DistanceReport distance(const CommutingGraph& graph, const grp::GroupElement& x, const grp::GroupElement& y);

struct GraphSummary {
    std::vector<std::vector<std::uint32_t>> components;  // class indices per component
    std::optional<std::uint64_t> diameter;              // nullopt when disconnected
};

/// Eccentricities are computed by one BFS per class, spread over `jobs`
/// threads and merged by max.
GraphSummary diameter_and_components(const CommutingGraph& graph, unsigned jobs = 1);

/// {"classes":[{"size":n,"rep":...}],"edges":[[i,j]],"diameter":int|null,"components":int}
nlohmann::json export_json(const CommutingGraph& graph, const GraphSummary& summary);

}  // namespace commgraph::graph
