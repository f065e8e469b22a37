#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "attralign/ids.hpp"

namespace attralign {

/// Bijection on the user labels of one graph. Maps a user of G1 to the user of
/// G2' it is aligned with.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractViolation unless `image` hits every index in 0..size-1 exactly once.
  explicit Permutation(std::vector<UserId> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  UserId operator()(UserId u) const { return image_[index(u)]; }
  std::span<const UserId> image() const { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<UserId> image_;
};

/// Users 0..n-1 and attributes 0..m-1 with user-user and user-attribute edges.
/// There is no way to express an attribute-attribute edge. Neighbor lists are
/// sorted, and the graph is immutable once built.
class AttributedGraph {
 public:
  AttributedGraph() = default;

  std::size_t num_users() const { return num_users_; }
  std::size_t num_attributes() const { return num_attributes_; }
  std::size_t num_user_edges() const { return user_adj_.size() / 2; }
  std::size_t num_attribute_edges() const { return attr_adj_.size(); }

  std::span<const UserId> user_adjacent(UserId u) const {
    return {user_adj_.data() + user_off_[index(u)], user_adj_.data() + user_off_[index(u) + 1]};
  }
  std::span<const AttrId> attribute_adjacent(UserId u) const {
    return {attr_adj_.data() + attr_off_[index(u)], attr_adj_.data() + attr_off_[index(u) + 1]};
  }
  /// Users carrying attribute `a`, sorted.
  std::span<const UserId> attribute_members(AttrId a) const {
    return {member_adj_.data() + member_off_[index(a)],
            member_adj_.data() + member_off_[index(a) + 1]};
  }

  std::size_t user_degree(UserId u) const { return user_adjacent(u).size(); }

  bool has_user_edge(UserId u, UserId v) const;
  bool has_attribute_edge(UserId u, AttrId a) const;

  /// Each user-user edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<UserId, UserId>> user_edges() const;
  std::vector<std::pair<UserId, AttrId>> attribute_edges() const;

  /// The induced subgraph on the user vertices (same users, no attributes).
  AttributedGraph user_subgraph() const;

  friend bool operator==(const AttributedGraph&, const AttributedGraph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t num_users_ = 0;
  std::size_t num_attributes_ = 0;
  std::vector<std::size_t> user_off_{0};
  std::vector<UserId> user_adj_;
  std::vector<std::size_t> attr_off_{0};
  std::vector<AttrId> attr_adj_;
  std::vector<std::size_t> member_off_{0};
  std::vector<UserId> member_adj_;
};

/// Collects edges and produces an AttributedGraph. Duplicate edges collapse;
/// self-loops and out-of-range endpoints throw.
class GraphBuilder {
 public:
  GraphBuilder(std::size_t num_users, std::size_t num_attributes);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_attributes() const { return num_attributes_; }

  GraphBuilder& add_user_edge(UserId u, UserId v);
  GraphBuilder& add_attribute_edge(UserId u, AttrId a);
  void reserve(std::size_t user_edges, std::size_t attribute_edges);

  AttributedGraph build() const;

 private:
  std::size_t num_users_;
  std::size_t num_attributes_;
  std::vector<std::pair<UserId, UserId>> user_edges_;
  std::vector<std::pair<UserId, AttrId>> attr_edges_;
};

/// Attributes adjacent to `u`, ascending. Throws LabelOutOfRange for a bad label.
std::vector<AttrId> attribute_neighbors(const AttributedGraph& g, UserId u);

/// Users within `hops` user-user steps of `center` once the vertices in
/// `removed` are deleted from the graph. Includes `center` itself. Ascending.
/// Throws ContractViolation when `center` is among the removed vertices.
std::vector<UserId> user_neighbors_within(const AttributedGraph& g, UserId center, unsigned hops,
                                          std::span<const UserId> removed = {});

/// Relabels users: edge (u, v) becomes (pi(u), pi(v)) and (u, a) becomes (pi(u), a).
AttributedGraph apply_permutation(const AttributedGraph& g, const Permutation& pi);

/// Reusable BFS scratch for the counting kernels. Not thread-safe; use one per thread.
class BallWalker {
 public:
  explicit BallWalker(const AttributedGraph& g);

  /// Unordered list of users within `hops` of `center`, skipping `removed`.
  /// The reference stays valid until the next call.
  const std::vector<UserId>& ball(UserId center, unsigned hops,
                                  std::span<const UserId> removed = {});

 private:
  const AttributedGraph* graph_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> blocked_;
  std::uint32_t epoch_ = 0;
  std::vector<UserId> out_;
};

}  // namespace attralign
