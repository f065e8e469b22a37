#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/alignment.hpp"
#include "attralign/model.hpp"

namespace testing {

using namespace attralign;

// Builds a graph from 1-based labels as in the edge-list format: users are
// 1..n, attributes n+1..n+m.
inline AttributedGraph labeled_graph(std::size_t n, std::size_t m,
                                     std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(n, m);
  for (auto [s, t] : edges) {
    const auto su = static_cast<std::size_t>(s);
    const auto tu = static_cast<std::size_t>(t);
    if (su <= n && tu <= n) {
      b.add_user_edge(user(su - 1), user(tu - 1));
    } else if (su <= n) {
      b.add_attribute_edge(user(su - 1), attr(tu - n - 1));
    } else {
      b.add_attribute_edge(user(tu - 1), attr(su - n - 1));
    }
  }
  return b.build();
}

inline std::vector<UserId> users(std::initializer_list<int> labels) {
  std::vector<UserId> out;
  for (int l : labels) out.push_back(user(static_cast<std::size_t>(l - 1)));
  return out;
}

inline MatchedPair pair1(int a, int b) {
  return {user(static_cast<std::size_t>(a - 1)), user(static_cast<std::size_t>(b - 1))};
}

inline AttributedGraph random_graph(std::size_t n, std::size_t m, double p, double q,
                                    std::uint64_t seed) {
  Rng rng(seed);
  return sample_base_graph(ModelParams{n, m, p, q, 1.0, 1.0}, rng);
}

}  // namespace testing
