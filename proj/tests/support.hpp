#pragma once

// Independent oracles for the unit tests. Nothing here goes through the
// index tables or subgroup machinery of the library; only raw element
// multiplication is shared.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "commgraph/element.hpp"
#include "commgraph/group.hpp"
#include "commgraph/group_io.hpp"

namespace testsupport {

using commgraph::grp::GroupElement;
using commgraph::grp::GroupPtr;
using commgraph::grp::Permutation;

inline std::filesystem::path corpus_dir()
{
    return std::filesystem::path(COMMGRAPH_SOURCE_DIR) / "data" / "corpus";
}

inline GroupPtr corpus(const std::string& name)
{
    return commgraph::grp::load_group_file(corpus_dir() / (name + ".json"));
}

inline std::vector<std::filesystem::path> corpus_files()
{
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir())) {
        if (e.path().extension() == ".json") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Permutation perm(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles)
{
    return Permutation::from_cycles(n, cycles);
}

struct CanonLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const
    {
        return commgraph::grp::canonical_less(a, b);
    }
};
using ElementSet = std::set<GroupElement, CanonLess>;

/// Closure by repeated multiplication of every pair until nothing new appears.
inline ElementSet naive_closure(const std::vector<GroupElement>& gens)
{
    ElementSet s(gens.begin(), gens.end());
    s.insert(commgraph::grp::identity_like(gens.front()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GroupElement> cur(s.begin(), s.end());
        for (const auto& a : cur) {
            for (const auto& b : cur) {
                if (s.insert(commgraph::grp::multiply(a, b)).second) grew = true;
            }
        }
    }
    return s;
}

inline ElementSet naive_centralizer(const std::vector<GroupElement>& elements, const GroupElement& x)
{
    ElementSet out;
    for (const auto& g : elements) {
        if (commgraph::grp::multiply(g, x) == commgraph::grp::multiply(x, g)) out.insert(g);
    }
    return out;
}

inline ElementSet to_set(const std::vector<GroupElement>& v)
{
    return ElementSet(v.begin(), v.end());
}

/// Per-element commuting graph with plain BFS: returns, for vertex list V
/// (non-central elements in group order), the all-pairs distance matrix with
/// -1 for unreachable.
struct NaiveGraph {
    std::vector<std::uint32_t> vertices;  // indices into the group
    std::vector<std::vector<int>> dist;
};

inline NaiveGraph naive_graph(const GroupPtr& g)
{
    const auto& el = g->elements();
    const std::size_t n = el.size();
    std::vector<std::vector<char>> comm(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const bool c = commgraph::grp::multiply(el[i], el[j]) == commgraph::grp::multiply(el[j], el[i]);
            comm[i][j] = comm[j][i] = c;
        }
    }
    NaiveGraph out;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(comm[i].begin(), comm[i].end(), 0) != comm[i].end()) out.vertices.push_back(static_cast<std::uint32_t>(i));
    }
    const std::size_t v = out.vertices.size();
    out.dist.assign(v, std::vector<int>(v, -1));
    for (std::size_t s = 0; s < v; ++s) {
        auto& d = out.dist[s];
        d[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            const std::size_t a = q.front();
            q.pop_front();
            for (std::size_t b = 0; b < v; ++b) {
                if (d[b] < 0 && comm[out.vertices[a]][out.vertices[b]]) {
                    d[b] = d[a] + 1;
                    q.push_back(b);
                }
            }
        }
    }
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240607);
    return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

}  // namespace testsupport
