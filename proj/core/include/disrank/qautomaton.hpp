#ifndef DISRANK_QAUTOMATON_HPP
#define DISRANK_QAUTOMATON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disrank/errors.hpp"
#include "disrank/linalg.hpp"
#include "disrank/rational.hpp"

namespace disrank {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Symbols concatenated; the empty word gives "".
std::string word_to_string(const Word& w);

/// Weighted automaton over the rationals. Transition/initial/final weights
/// default to 0; setting a weight to 0 erases the stored entry, so the
/// transition map holds exactly the nonzero triples.
class QAutomaton {
public:
    QAutomaton() = default;
    QAutomaton(std::vector<std::string> states, std::vector<Symbol> alphabet);

    std::size_t num_states() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }

    std::size_t state_index(const std::string& name) const;
    std::size_t symbol_index(const Symbol& symbol) const;

    void set_initial(const std::string& state, const BigRational& w);
    void set_final(const std::string& state, const BigRational& w);
    void set_transition(const std::string& from, const Symbol& symbol,
                        const std::string& to, const BigRational& w);

    const BigRational& initial_weight(std::size_t state) const { return initial_.at(state); }
    const BigRational& final_weight(std::size_t state) const { return final_.at(state); }
    BigRational transition_weight(std::size_t from, std::size_t symbol, std::size_t to) const;

    /// Nonzero transitions keyed by (from, symbol, to) indices, sorted.
    const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigRational>&
    transitions() const {
        return transitions_;
    }

    friend bool operator==(const QAutomaton& a, const QAutomaton& b) {
        return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
               a.initial_ == b.initial_ && a.final_ == b.final_ &&
               a.transitions_ == b.transitions_;
    }

private:
    std::vector<std::string> states_;
    std::vector<Symbol> alphabet_;
    std::unordered_map<std::string, std::size_t> state_index_;
    std::unordered_map<Symbol, std::size_t> symbol_index_;
    std::vector<BigRational> initial_;
    std::vector<BigRational> final_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigRational> transitions_;
};

/// Matrix form <alpha, M, eta>: alpha[i] = I(q_i), M(a)[i,j] = delta(q_i,a,q_j),
/// eta[i] = F(q_i), all in declared state order.
struct LinearRep {
    RatVector alpha;                  // row, length n
    std::vector<Symbol> alphabet;
    std::vector<RatMatrix> matrices;  // one n-by-n matrix per alphabet symbol
    RatVector eta;                    // column, length n

    std::size_t dimension() const { return alpha.size(); }
    const RatMatrix& matrix(const Symbol& symbol) const;
};

/// Basis of the forward space span{ alpha * M(w) | w in Sigma* }, with the
/// generating word of each vector: vectors[j] == alpha * M(words[j]).
/// Vectors are stored raw (not row-reduced); |words[j]| <= size() - 1.
struct ForwardBasis {
    std::vector<RatVector> vectors;
    std::vector<Word> words;

    std::size_t size() const { return vectors.size(); }
};

struct EquivalenceResult {
    bool equivalent;
    /// Present iff not equivalent; |witness| <= |Q1| + |Q2| - 1.
    std::optional<Word> witness;
    /// The two differing power-series values at the witness.
    std::optional<std::pair<BigRational, BigRational>> values;
};

LinearRep to_linear_rep(const QAutomaton& a);

/// Power-series value alpha * M(w) * eta; the empty word gives alpha * eta.
BigRational eval_word(const LinearRep& r, const Word& w);

/// FIFO worklist seeded with the basis candidate alpha (word epsilon) and the
/// one-symbol words in alphabet order; each accepted vector enqueues its
/// one-symbol extensions. Candidates are grown incrementally as vector-matrix
/// products of the stored parent vector.
ForwardBasis forward_basis(const LinearRep& r);

/// True iff the power series is identically zero: every forward-basis vector
/// is orthogonal to eta.
bool is_empty(const LinearRep& r);

/// Parallel composition with the second automaton's initial weights negated:
/// alpha- = [alpha1 -alpha2], M-(a) = diag(M1(a), M2(a)), eta- = [eta1; eta2].
/// Requires identical (ordered) alphabets.
LinearRep difference(const LinearRep& r1, const LinearRep& r2);

/// Decides whether the two automata induce the same power series. On
/// non-equivalence the witness is the generating word of the first
/// forward-basis vector of the difference that is not orthogonal to eta-.
EquivalenceResult equivalent(const QAutomaton& a1, const QAutomaton& a2);
EquivalenceResult equivalent(const LinearRep& r1, const LinearRep& r2);

/// Text format: sections `states:`, `alphabet:`, `initial:`, `final:`,
/// `transitions:`; initial/final list (state, weight) pairs, transitions list
/// (from, symbol, to, weight) quadruples; weights are integers or `p/q`;
/// `#` starts a comment. parse_qautomaton(to_text(a)) == a.
QAutomaton parse_qautomaton(const std::string& text);
std::string to_text(const QAutomaton& a);

}  // namespace disrank

#endif
