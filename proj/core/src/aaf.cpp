#include "disrank/aaf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace disrank {

std::size_t ArgFramework::add_argument(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("argument name must be non-empty");
    if (index_.count(name)) {
        throw std::invalid_argument("duplicate argument '" + name + "'");
    }
    std::size_t idx = arguments_.size();
    arguments_.push_back(name);
    index_.emplace(name, idx);
    attackers_.emplace_back();
    return idx;
}

std::size_t ArgFramework::ensure_argument(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add_argument(name);
}

void ArgFramework::add_attack(const std::string& attacker, const std::string& target) {
    add_attack(index_of(attacker), index_of(target));
}

void ArgFramework::add_attack(std::size_t attacker, std::size_t target) {
    if (attacker >= size() || target >= size()) {
        throw std::out_of_range("attack endpoint index out of range");
    }
    if (!attacks_.emplace(attacker, target).second) return;
    auto& in = attackers_[target];
    in.insert(std::lower_bound(in.begin(), in.end(), attacker), attacker);
}

bool ArgFramework::has_argument(const std::string& name) const {
    return index_.count(name) != 0;
}

bool ArgFramework::has_attack(const std::string& attacker, const std::string& target) const {
    return attacks_.count({index_of(attacker), index_of(target)}) != 0;
}

std::size_t ArgFramework::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownNameError("unknown argument '" + name + "'");
    return it->second;
}

ArgIndex ArgFramework::arg_index(const std::string& name) const {
    return {name, index_of(name)};
}

namespace {

bool is_name_char(char c) {
    switch (c) {
        case ' ': case '\t': case '\r': case '\n':
        case '(': case ')': case ',': case '.': case '%':
            return false;
        default:
            return true;
    }
}

struct ApxScanner {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool at_end() const { return pos >= text.size(); }

    void advance() {
        if (text[pos] == '\n') ++line;
        ++pos;
    }

    void skip_blank() {
        while (!at_end()) {
            char c = text[pos];
            if (c == '%') {
                while (!at_end() && text[pos] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    char expect(char wanted, const char* what) {
        skip_blank();
        if (at_end() || text[pos] != wanted) {
            throw ParseError(line, std::string("expected '") + wanted + "' " + what);
        }
        char c = text[pos];
        advance();
        return c;
    }

    std::string name(const char* what) {
        skip_blank();
        std::size_t start = pos;
        while (!at_end() && is_name_char(text[pos])) advance();
        if (pos == start) throw ParseError(line, std::string("expected ") + what);
        return text.substr(start, pos - start);
    }
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ArgFramework parse_apx(const std::string& text) {
    ArgFramework f;
    ApxScanner s{text};
    for (;;) {
        s.skip_blank();
        if (s.at_end()) break;
        std::size_t fact_line = s.line;
        std::string head = s.name("'arg' or 'att' fact");
        if (head == "arg") {
            s.expect('(', "after 'arg'");
            std::string a = s.name("argument name");
            s.expect(')', "after argument name");
            s.expect('.', "to close the fact");
            if (f.has_argument(a)) {
                throw ParseError(fact_line, "duplicate argument '" + a + "'");
            }
            f.add_argument(a);
        } else if (head == "att") {
            s.expect('(', "after 'att'");
            std::string a = s.name("attacker name");
            s.expect(',', "between attack endpoints");
            std::string b = s.name("target name");
            s.expect(')', "after attack endpoints");
            s.expect('.', "to close the fact");
            if (!f.has_argument(a)) {
                throw ParseError(fact_line, "attack references undeclared argument '" + a + "'");
            }
            if (!f.has_argument(b)) {
                throw ParseError(fact_line, "attack references undeclared argument '" + b + "'");
            }
            f.add_attack(a, b);
        } else {
            throw ParseError(fact_line, "expected 'arg' or 'att', got '" + head + "'");
        }
    }
    return f;
}

ArgFramework parse_tgf(const std::string& text) {
    ArgFramework f;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool seen_separator = false;
    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = split_tokens(raw);
        if (tokens.empty()) continue;
        if (!seen_separator && tokens[0] == "#") {
            seen_separator = true;
            continue;
        }
        if (!seen_separator) {
            const std::string& id = tokens[0];  // rest of the line is a label
            if (f.has_argument(id)) {
                throw ParseError(line_no, "duplicate vertex id '" + id + "'");
            }
            f.add_argument(id);
        } else {
            if (tokens.size() < 2) {
                throw ParseError(line_no, "edge line needs two vertex ids");
            }
            for (int k = 0; k < 2; ++k) {
                if (!f.has_argument(tokens[k])) {
                    throw ParseError(line_no, "edge references unknown vertex id '" + tokens[k] + "'");
                }
            }
            f.add_attack(tokens[0], tokens[1]);
        }
    }
    if (!seen_separator) {
        throw ParseError(line_no + 1, "missing '#' separator");
    }
    return f;
}

std::string to_apx(const ArgFramework& f) {
    std::ostringstream os;
    for (const auto& a : f.arguments()) os << "arg(" << a << ").\n";
    for (const auto& [from, to] : f.attacks()) {
        os << "att(" << f.name_of(from) << "," << f.name_of(to) << ").\n";
    }
    return os.str();
}

ArgFramework frame_union(const ArgFramework& f1, const ArgFramework& f2) {
    ArgFramework out;
    for (const auto& a : f1.arguments()) out.add_argument(a);
    for (const auto& a : f2.arguments()) out.ensure_argument(a);
    for (const auto& [from, to] : f1.attacks()) {
        out.add_attack(f1.name_of(from), f1.name_of(to));
    }
    for (const auto& [from, to] : f2.attacks()) {
        out.add_attack(f2.name_of(from), f2.name_of(to));
    }
    return out;
}

std::vector<std::string> attackers(const ArgFramework& f, const std::string& x) {
    std::vector<std::string> out;
    for (std::size_t idx : f.attacker_indices(f.index_of(x))) {
        out.push_back(f.name_of(idx));
    }
    return out;
}

RatMatrix adjacency_matrix(const ArgFramework& f) {
    RatMatrix m(f.size(), f.size());
    for (const auto& [from, to] : f.attacks()) m(from, to) = 1;
    return m;
}

}  // namespace disrank
