#include "disrank/qautomaton.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace disrank {

std::string word_to_string(const Word& w) {
    std::string out;
    for (const Symbol& s : w) out += s;
    return out;
}

QAutomaton::QAutomaton(std::vector<std::string> states, std::vector<Symbol> alphabet)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (states_[i].empty()) throw std::invalid_argument("empty state name");
        if (!state_index_.emplace(states_[i], i).second) {
            throw std::invalid_argument("duplicate state '" + states_[i] + "'");
        }
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i].empty()) throw std::invalid_argument("empty alphabet symbol");
        if (!symbol_index_.emplace(alphabet_[i], i).second) {
            throw std::invalid_argument("duplicate symbol '" + alphabet_[i] + "'");
        }
    }
    initial_.assign(states_.size(), BigRational());
    final_.assign(states_.size(), BigRational());
}

std::size_t QAutomaton::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) throw UnknownNameError("unknown state '" + name + "'");
    return it->second;
}

std::size_t QAutomaton::symbol_index(const Symbol& symbol) const {
    auto it = symbol_index_.find(symbol);
    if (it == symbol_index_.end()) throw UnknownNameError("unknown symbol '" + symbol + "'");
    return it->second;
}

void QAutomaton::set_initial(const std::string& state, const BigRational& w) {
    initial_.at(state_index(state)) = w;
}

void QAutomaton::set_final(const std::string& state, const BigRational& w) {
    final_.at(state_index(state)) = w;
}

void QAutomaton::set_transition(const std::string& from, const Symbol& symbol,
                                const std::string& to, const BigRational& w) {
    auto key = std::make_tuple(state_index(from), symbol_index(symbol), state_index(to));
    if (w.is_zero()) {
        transitions_.erase(key);
    } else {
        transitions_[key] = w;
    }
}

BigRational QAutomaton::transition_weight(std::size_t from, std::size_t symbol,
                                          std::size_t to) const {
    auto it = transitions_.find({from, symbol, to});
    return it == transitions_.end() ? BigRational() : it->second;
}

const RatMatrix& LinearRep::matrix(const Symbol& symbol) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] == symbol) return matrices[i];
    }
    throw UnknownNameError("unknown symbol '" + symbol + "'");
}

LinearRep to_linear_rep(const QAutomaton& a) {
    std::size_t n = a.num_states();
    LinearRep r;
    r.alpha = RatVector(Orientation::row, n);
    r.eta = RatVector(Orientation::column, n);
    r.alphabet = a.alphabet();
    r.matrices.assign(a.alphabet().size(), RatMatrix(n, n));
    for (std::size_t i = 0; i < n; ++i) {
        r.alpha[i] = a.initial_weight(i);
        r.eta[i] = a.final_weight(i);
    }
    for (const auto& [key, weight] : a.transitions()) {
        auto [from, symbol, to] = key;
        r.matrices[symbol](from, to) = weight;
    }
    return r;
}

BigRational eval_word(const LinearRep& r, const Word& w) {
    RatVector v = r.alpha;
    for (const Symbol& symbol : w) v = mat_mul(v, r.matrix(symbol));
    return dot(v, r.eta);
}

namespace {

// Reduced copies of the accepted basis vectors, ordered by pivot column; a
// candidate is independent iff it has a nonzero residue after elimination.
class EchelonSpace {
public:
    // Reduces v in place and returns true (after inserting the reduced row)
    // iff v was independent of the rows seen so far.
    bool try_insert(RatVector v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            BigRational factor = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * row[j];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
        if (pivot == v.size()) return false;
        BigRational inv = BigRational(1) / v[pivot];
        for (std::size_t j = pivot; j < v.size(); ++j) v[j] *= inv;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

private:
    std::map<std::size_t, RatVector> rows_;
};

}  // namespace

ForwardBasis forward_basis(const LinearRep& r) {
    std::size_t n = r.dimension();
    ForwardBasis basis;
    EchelonSpace space;

    if (space.try_insert(r.alpha)) {
        basis.vectors.push_back(r.alpha);
        basis.words.push_back(Word{});
    }

    std::deque<std::pair<Word, RatVector>> worklist;
    for (std::size_t a = 0; a < r.alphabet.size(); ++a) {
        worklist.emplace_back(Word{r.alphabet[a]}, mat_mul(r.alpha, r.matrices[a]));
    }
    while (!worklist.empty() && basis.size() < n) {
        auto [word, vec] = std::move(worklist.front());
        worklist.pop_front();
        if (!space.try_insert(vec)) continue;
        for (std::size_t a = 0; a < r.alphabet.size(); ++a) {
            Word extended = word;
            extended.push_back(r.alphabet[a]);
            worklist.emplace_back(std::move(extended), mat_mul(vec, r.matrices[a]));
        }
        basis.vectors.push_back(std::move(vec));
        basis.words.push_back(std::move(word));
    }
    return basis;
}

bool is_empty(const LinearRep& r) {
    for (const RatVector& b : forward_basis(r).vectors) {
        if (!dot(b, r.eta).is_zero()) return false;
    }
    return true;
}

LinearRep difference(const LinearRep& r1, const LinearRep& r2) {
    if (r1.alphabet != r2.alphabet) {
        throw std::invalid_argument("difference: alphabets differ");
    }
    std::size_t n1 = r1.dimension(), n2 = r2.dimension(), n = n1 + n2;
    LinearRep d;
    d.alphabet = r1.alphabet;
    d.alpha = RatVector(Orientation::row, n);
    d.eta = RatVector(Orientation::column, n);
    for (std::size_t i = 0; i < n1; ++i) {
        d.alpha[i] = r1.alpha[i];
        d.eta[i] = r1.eta[i];
    }
    for (std::size_t i = 0; i < n2; ++i) {
        d.alpha[n1 + i] = -r2.alpha[i];
        d.eta[n1 + i] = r2.eta[i];
    }
    d.matrices.assign(d.alphabet.size(), RatMatrix(n, n));
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n1; ++j) d.matrices[a](i, j) = r1.matrices[a](i, j);
        }
        for (std::size_t i = 0; i < n2; ++i) {
            for (std::size_t j = 0; j < n2; ++j) {
                d.matrices[a](n1 + i, n1 + j) = r2.matrices[a](i, j);
            }
        }
    }
    return d;
}

EquivalenceResult equivalent(const LinearRep& r1, const LinearRep& r2) {
    LinearRep diff = difference(r1, r2);
    ForwardBasis basis = forward_basis(diff);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (dot(basis.vectors[j], diff.eta).is_zero()) continue;
        const Word& w = basis.words[j];
        return EquivalenceResult{false, w, std::make_pair(eval_word(r1, w), eval_word(r2, w))};
    }
    return EquivalenceResult{true, std::nullopt, std::nullopt};
}

EquivalenceResult equivalent(const QAutomaton& a1, const QAutomaton& a2) {
    if (a1.alphabet() != a2.alphabet()) {
        throw std::invalid_argument("equivalent: alphabets differ");
    }
    return equivalent(to_linear_rep(a1), to_linear_rep(a2));
}

namespace {

struct SectionToken {
    std::string text;
    std::size_t line;
};

}  // namespace

QAutomaton parse_qautomaton(const std::string& text) {
    static const std::vector<std::string> kFields = {"states", "alphabet", "initial",
                                                     "final", "transitions"};
    std::map<std::string, std::vector<SectionToken>> sections;
    std::string current;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) {
            bool is_header = false;
            if (tok.back() == ':') {
                std::string field = tok.substr(0, tok.size() - 1);
                for (const auto& f : kFields) {
                    if (field == f) {
                        current = field;
                        is_header = true;
                        break;
                    }
                }
                if (!is_header) {
                    throw ParseError(line_no, "unknown section '" + field + ":'");
                }
            }
            if (is_header) continue;
            if (current.empty()) {
                throw ParseError(line_no, "token '" + tok + "' before any section header");
            }
            sections[current].push_back({tok, line_no});
        }
    }

    auto names_of = [&](const std::string& field) {
        std::vector<std::string> out;
        for (const auto& t : sections[field]) out.push_back(t.text);
        return out;
    };
    QAutomaton a;
    try {
        a = QAutomaton(names_of("states"), names_of("alphabet"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, e.what());
    }

    auto weight_at = [](const SectionToken& t) {
        try {
            return BigRational::from_string(t.text);
        } catch (const std::invalid_argument&) {
            throw ParseError(t.line, "bad rational weight '" + t.text + "'");
        }
    };
    auto read_pairs = [&](const std::string& field, auto&& apply) {
        const auto& toks = sections[field];
        if (toks.size() % 2 != 0) {
            throw ParseError(toks.empty() ? 1 : toks.back().line,
                             "'" + field + ":' entries must be (state, weight) pairs");
        }
        for (std::size_t i = 0; i < toks.size(); i += 2) {
            try {
                apply(toks[i].text, weight_at(toks[i + 1]));
            } catch (const UnknownNameError& e) {
                throw ParseError(toks[i].line, e.what());
            }
        }
    };
    read_pairs("initial", [&](const std::string& q, const BigRational& w) { a.set_initial(q, w); });
    read_pairs("final", [&](const std::string& q, const BigRational& w) { a.set_final(q, w); });

    const auto& trans = sections["transitions"];
    if (trans.size() % 4 != 0) {
        throw ParseError(trans.empty() ? 1 : trans.back().line,
                         "'transitions:' entries must be (from, symbol, to, weight) quadruples");
    }
    for (std::size_t i = 0; i < trans.size(); i += 4) {
        try {
            a.set_transition(trans[i].text, trans[i + 1].text, trans[i + 2].text,
                             weight_at(trans[i + 3]));
        } catch (const UnknownNameError& e) {
            throw ParseError(trans[i].line, e.what());
        }
    }
    return a;
}

std::string to_text(const QAutomaton& a) {
    std::ostringstream os;
    os << "states:";
    for (const auto& q : a.states()) os << ' ' << q;
    os << "\nalphabet:";
    for (const auto& s : a.alphabet()) os << ' ' << s;
    os << "\ninitial:";
    for (std::size_t i = 0; i < a.num_states(); ++i) {
        if (!a.initial_weight(i).is_zero()) {
            os << ' ' << a.states()[i] << ' ' << a.initial_weight(i);
        }
    }
    os << "\nfinal:";
    for (std::size_t i = 0; i < a.num_states(); ++i) {
        if (!a.final_weight(i).is_zero()) {
            os << ' ' << a.states()[i] << ' ' << a.final_weight(i);
        }
    }
    os << "\ntransitions:\n";
    for (const auto& [key, weight] : a.transitions()) {
        auto [from, symbol, to] = key;
        os << a.states()[from] << ' ' << a.alphabet()[symbol] << ' ' << a.states()[to] << ' '
           << weight << '\n';
    }
    return os.str();
}

}  // namespace disrank
