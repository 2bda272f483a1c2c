#include "disrank/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace disrank {

const BigInt& WalkCountTable::count(const std::string& vertex, std::size_t length) const {
    auto it = std::find(names_.begin(), names_.end(), vertex);
    if (it == names_.end()) throw UnknownNameError("unknown argument '" + vertex + "'");
    return count(static_cast<std::size_t>(it - names_.begin()), length);
}

namespace {

// Depth-first backwards extension: path_rev holds (v, y_1, y_2, ...) from the
// endpoint towards the walk's start; a completed path is reversed on output.
void extend_backwards(const ArgFramework& f, std::vector<std::size_t>& path_rev,
                      std::size_t remaining, std::vector<Walk>& out, std::size_t cap) {
    std::size_t current = path_rev.back();
    for (std::size_t y : f.attacker_indices(current)) {
        path_rev.push_back(y);
        if (remaining == 1) {
            if (out.size() >= cap) throw CapExceededError(cap);
            Walk w;
            w.vertices.reserve(path_rev.size());
            for (auto it = path_rev.rbegin(); it != path_rev.rend(); ++it) {
                w.vertices.push_back(f.name_of(*it));
            }
            out.push_back(std::move(w));
        } else {
            extend_backwards(f, path_rev, remaining - 1, out, cap);
        }
        path_rev.pop_back();
    }
}

}  // namespace

std::vector<Walk> enumerate_walks(const ArgFramework& f, const std::string& v,
                                  std::size_t length, std::size_t cap) {
    if (length < 1) throw std::invalid_argument("enumerate_walks: length must be >= 1");
    std::size_t target = f.index_of(v);
    std::vector<Walk> out;
    std::vector<std::size_t> path_rev{target};
    extend_backwards(f, path_rev, length, out, cap);
    return out;
}

WalkCountTable count_recurrence(const ArgFramework& f, std::size_t up_to) {
    if (up_to < 1) throw std::invalid_argument("count_recurrence: up_to must be >= 1");
    std::size_t n = f.size();
    std::vector<std::vector<BigInt>> counts(n);
    for (auto& per_vertex : counts) per_vertex.reserve(up_to);

    std::vector<BigInt> level(n);
    for (std::size_t v = 0; v < n; ++v) {
        level[v] = f.attacker_indices(v).size();
        counts[v].push_back(level[v]);
    }
    for (std::size_t i = 2; i <= up_to; ++i) {
        std::vector<BigInt> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t y : f.attacker_indices(v)) next[v] += level[y];
            counts[v].push_back(next[v]);
        }
        level = std::move(next);
    }
    return WalkCountTable(f.arguments(), std::move(counts));
}

BigInt count_matrix(const ArgFramework& f, const std::string& v, std::size_t length) {
    if (length < 1) throw std::invalid_argument("count_matrix: length must be >= 1");
    std::size_t col = f.index_of(v);
    RatMatrix m = adjacency_matrix(f);
    RatMatrix power = m;
    for (std::size_t i = 2; i <= length; ++i) power = mat_mul(power, m);
    return column_sum(power, col).numerator();  // powers of a 0/1 matrix are integral
}

}  // namespace disrank
