#ifndef DISRANK_RANKING_HPP
#define DISRANK_RANKING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "disrank/aaf.hpp"
#include "disrank/rational.hpp"

namespace disrank {

/// Finite prefix of the discussion-count vector of one argument:
/// value(i) = -(walk count at length i) for odd i, +(walk count) for even i.
/// A prefix of length 2|A|-1 decides every comparison.
struct DisPrefix {
    std::string argument;
    std::vector<BigInt> values;  // values[i-1] holds Dis_i

    std::size_t length() const { return values.size(); }
    const BigInt& value(std::size_t i) const { return values.at(i - 1); }
};

enum class Relation { strictly_stronger, equivalent, strictly_weaker };

std::string to_string(Relation r);

struct CompareOutcome {
    Relation relation;
    /// Smallest length whose discussion counts differ; absent iff equivalent.
    std::optional<std::size_t> deciding_index;
};

/// Equivalence classes of equally strong arguments, strongest class first.
struct RankResult {
    std::vector<std::vector<std::string>> classes;
};

/// Prefix of length k for one argument, counts taken from column sums of
/// adjacency-matrix powers.
DisPrefix dis_prefix(const ArgFramework& f, const std::string& x, std::size_t k);

/// Prefixes of length k for every argument in stored order, from one
/// incremental column-sum vector per power.
std::vector<DisPrefix> dis_table(const ArgFramework& f, std::size_t k);

/// a is at least as strong as b: scan column sums of M^i for i up to
/// 2|A|-1; at the first difference an odd index favours the smaller sum and
/// an even index the larger; no difference means equivalent, hence true.
bool stronger_dis(const ArgFramework& f, const std::string& a, const std::string& b);

/// a and b are equally strong: column sums of M^i agree for all i <= 2|A|-1.
bool equiv_dis(const ArgFramework& f, const std::string& a, const std::string& b);

/// Three-way comparison in a single bounded scan.
CompareOutcome compare(const ArgFramework& f, const std::string& a, const std::string& b);

/// Total preorder over all arguments by descending lexicographic order of
/// their length-(2|A|-1) prefixes; equal prefixes share a class.
RankResult full_ranking(const ArgFramework& f);

}  // namespace disrank

#endif
