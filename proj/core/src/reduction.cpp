#include "disrank/reduction.hpp"

#include <deque>
#include <vector>

namespace disrank {

QAutomaton graph_to_automaton(const ArgFramework& g, const std::string& v) {
    std::size_t target = g.index_of(v);
    QAutomaton a(g.arguments(), {"s"});
    for (const auto& q : g.arguments()) a.set_initial(q, 1);
    a.set_final(g.name_of(target), 1);
    for (const auto& [from, to] : g.attacks()) {
        a.set_transition(g.name_of(from), "s", g.name_of(to), 1);
    }
    return a;
}

QAutomaton coaccessible_part(const QAutomaton& a) {
    std::size_t n = a.num_states();
    std::vector<std::vector<std::size_t>> reverse_edges(n);
    for (const auto& [key, weight] : a.transitions()) {
        (void)weight;  // nonzero by the map invariant
        auto [from, symbol, to] = key;
        (void)symbol;
        reverse_edges[to].push_back(from);
    }
    std::vector<bool> keep(n, false);
    std::deque<std::size_t> frontier;
    for (std::size_t q = 0; q < n; ++q) {
        if (!a.final_weight(q).is_zero()) {
            keep[q] = true;
            frontier.push_back(q);
        }
    }
    while (!frontier.empty()) {
        std::size_t q = frontier.front();
        frontier.pop_front();
        for (std::size_t p : reverse_edges[q]) {
            if (!keep[p]) {
                keep[p] = true;
                frontier.push_back(p);
            }
        }
    }

    std::vector<std::string> kept_states;
    for (std::size_t q = 0; q < n; ++q) {
        if (keep[q]) kept_states.push_back(a.states()[q]);
    }
    QAutomaton out(kept_states, a.alphabet());
    for (const auto& q : kept_states) {
        std::size_t idx = a.state_index(q);
        out.set_initial(q, a.initial_weight(idx));
        out.set_final(q, a.final_weight(idx));
    }
    for (const auto& [key, weight] : a.transitions()) {
        auto [from, symbol, to] = key;
        if (keep[from] && keep[to]) {
            out.set_transition(a.states()[from], a.alphabet()[symbol], a.states()[to], weight);
        }
    }
    return out;
}

WalkCountVerdict equal_walk_count(const ArgFramework& g, const std::string& v,
                                  const std::string& u) {
    QAutomaton av = coaccessible_part(graph_to_automaton(g, v));
    QAutomaton au = coaccessible_part(graph_to_automaton(g, u));
    EquivalenceResult eq = equivalent(av, au);
    if (eq.equivalent) return {true, std::nullopt, std::nullopt};
    // Walk counts are integral, so both values have denominator 1.
    return {false, eq.witness->size(),
            std::make_pair(eq.values->first.numerator(), eq.values->second.numerator())};
}

}  // namespace disrank
