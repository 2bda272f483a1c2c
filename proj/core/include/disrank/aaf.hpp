#ifndef DISRANK_AAF_HPP
#define DISRANK_AAF_HPP

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disrank/errors.hpp"
#include "disrank/linalg.hpp"

namespace disrank {

/// Name/position pair for one argument; the framework keeps the two in
/// bijection.
struct ArgIndex {
    std::string name;
    std::size_t index;
};

/// Finite directed attack graph over named arguments. Argument order is
/// first-insertion order and determines all matrix row/column indices.
/// Attacks have set semantics (duplicates collapse); self-attacks are fine.
/// Immutable in spirit: build it up, then share freely across threads.
class ArgFramework {
public:
    ArgFramework() = default;

    /// Throws std::invalid_argument on an empty or duplicate name.
    std::size_t add_argument(const std::string& name);

    /// Inserts if absent, returns the index either way.
    std::size_t ensure_argument(const std::string& name);

    /// Both endpoints must exist; duplicate attacks are dropped silently.
    void add_attack(const std::string& attacker, const std::string& target);
    void add_attack(std::size_t attacker, std::size_t target);

    std::size_t size() const { return arguments_.size(); }
    std::size_t attack_count() const { return attacks_.size(); }

    const std::vector<std::string>& arguments() const { return arguments_; }

    /// Attacks as index pairs, ordered by (attacker, target).
    const std::set<std::pair<std::size_t, std::size_t>>& attacks() const { return attacks_; }

    bool has_argument(const std::string& name) const;
    bool has_attack(const std::string& attacker, const std::string& target) const;

    /// Throws UnknownNameError.
    std::size_t index_of(const std::string& name) const;
    ArgIndex arg_index(const std::string& name) const;
    const std::string& name_of(std::size_t index) const { return arguments_.at(index); }

    /// In-neighbour indices of one argument, ascending.
    const std::vector<std::size_t>& attacker_indices(std::size_t target) const {
        return attackers_.at(target);
    }

    friend bool operator==(const ArgFramework& a, const ArgFramework& b) {
        return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<std::string> arguments_;
    std::unordered_map<std::string, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;  // in-neighbours, sorted
};

/// APX: `arg(<name>).` and `att(<a>,<b>).` facts, `%` comments,
/// whitespace-insensitive, several facts per line allowed. Arguments must be
/// declared before an attack uses them; redeclaring one is an error.
ArgFramework parse_apx(const std::string& text);

/// TGF: vertex-id lines, a `#` separator line, then `from to` edge lines.
/// Tokens past the id (labels) are ignored.
ArgFramework parse_tgf(const std::string& text);

/// Canonical APX serialization; parse_apx(to_apx(f)) == f.
std::string to_apx(const ArgFramework& f);

/// Name-union of arguments (f1's order first, then f2's new names) and union
/// of attacks. Identical names denote the same argument.
ArgFramework frame_union(const ArgFramework& f1, const ArgFramework& f2);

/// { y | (y, x) is an attack }, in stored argument order.
std::vector<std::string> attackers(const ArgFramework& f, const std::string& x);

/// 0/1 matrix in stored argument order; entry (i, j) = 1 iff i attacks j.
RatMatrix adjacency_matrix(const ArgFramework& f);

}  // namespace disrank

#endif
