#pragma once

#include <utility>
#include <vector>

namespace gpm {

using EdgeList = std::vector<std::pair<int, int>>;

struct MatchingResult {
  int size = 0;
  EdgeList edges;
};

// Maximum cardinality matching in a general graph (blossom contraction),
// O(V^3). Guarded to nv <= 200: plenty for desk-scale instances.
MatchingResult maximum_matching(int nv, const EdgeList& edges);

// Maximal matching by scanning edges in canonical order; size >= maximum/2.
MatchingResult greedy_matching(int nv, const EdgeList& edges);

// Exhaustive maximum matching over vertex subsets, nv <= 16. Test oracle.
int brute_force_matching_size(int nv, const EdgeList& edges);

}  // namespace gpm
