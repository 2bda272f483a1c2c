#ifndef DISRANK_WALKS_HPP
#define DISRANK_WALKS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "disrank/aaf.hpp"
#include "disrank/rational.hpp"

namespace disrank {

/// A walk of length i is a sequence of i+1 vertices whose consecutive pairs
/// are attack edges; the last vertex is the endpoint. Vertices may repeat.
struct Walk {
    std::vector<std::string> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    friend bool operator==(const Walk& a, const Walk& b) { return a.vertices == b.vertices; }
};

/// count(v, i) = number of walks of length i ending in v, for 1 <= i <= k.
class WalkCountTable {
public:
    WalkCountTable(std::vector<std::string> names,
                   std::vector<std::vector<BigInt>> counts)
        : names_(std::move(names)), counts_(std::move(counts)) {}

    std::size_t max_length() const { return names_.empty() ? 0 : counts_.at(0).size(); }
    const std::vector<std::string>& argument_names() const { return names_; }

    const BigInt& count(std::size_t vertex, std::size_t length) const {
        return counts_.at(vertex).at(length - 1);
    }
    const BigInt& count(const std::string& vertex, std::size_t length) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<BigInt>> counts_;  // [vertex][length-1]
};

inline constexpr std::size_t kDefaultWalkCap = 1'000'000;

/// Materializes every walk of the given length ending in v, ordered by
/// depth-first extension over attackers in stored argument order. Throws
/// CapExceededError once the output list would pass `cap` walks — the list
/// grows exponentially, so this is a desk-scale instrument.
std::vector<Walk> enumerate_walks(const ArgFramework& f, const std::string& v,
                                  std::size_t length, std::size_t cap = kDefaultWalkCap);

/// Walk counts for every argument and every length 1..up_to, via the
/// in-neighbour sum recurrence (one count vector per level).
WalkCountTable count_recurrence(const ArgFramework& f, std::size_t up_to);

/// Walk count as the v-column sum of the length-th adjacency-matrix power.
BigInt count_matrix(const ArgFramework& f, const std::string& v, std::size_t length);

}  // namespace disrank

#endif
