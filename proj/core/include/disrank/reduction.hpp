#ifndef DISRANK_REDUCTION_HPP
#define DISRANK_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "disrank/aaf.hpp"
#include "disrank/qautomaton.hpp"
#include "disrank/rational.hpp"

namespace disrank {

/// Outcome of the walk-count agreement question for two vertices.
struct WalkCountVerdict {
    bool agree;
    /// Smallest length with differing counts; present iff !agree, always
    /// <= 2|V| - 1.
    std::optional<std::size_t> first_differing_length;
    /// The two walk counts at that length.
    std::optional<std::pair<BigInt, BigInt>> counts;
};

/// Unary-alphabet automaton whose power series enumerates walks: states are
/// the vertices, every state has initial weight 1, transitions with weight 1
/// follow the edges, and v is the only state with final weight 1, so the
/// value of s^i is the number of length-i walks ending in v.
QAutomaton graph_to_automaton(const ArgFramework& g, const std::string& v);

/// Drops states with no directed path (through nonzero transitions) to a
/// state of nonzero final weight. Preserves state order and the power series.
QAutomaton coaccessible_part(const QAutomaton& a);

/// Decides whether v and u have the same number of walks ending in them at
/// every length, by testing equivalence of the two walk-counting automata
/// (each first restricted to its coaccessible part). A witness word s^i maps
/// to the first differing length i.
WalkCountVerdict equal_walk_count(const ArgFramework& g, const std::string& v,
                                  const std::string& u);

}  // namespace disrank

#endif
