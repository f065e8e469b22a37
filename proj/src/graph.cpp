#include "attralign/graph.hpp"

#include <algorithm>
#include <string>

#include "attralign/errors.hpp"

namespace attralign {

namespace {

void check_user(const AttributedGraph& g, UserId u) {
  if (index(u) >= g.num_users())
    throw LabelOutOfRange("user index " + std::to_string(index(u)) + " outside graph with " +
                          std::to_string(g.num_users()) + " users");
}

template <typename Pair>
void sort_unique(std::vector<Pair>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Permutation::Permutation(std::vector<UserId> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto u : image_) {
    if (index(u) >= image_.size() || hit[index(u)])
      throw ContractViolation("permutation image is not a bijection on 0.." +
                              std::to_string(image_.size()));
    hit[index(u)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<UserId> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = user(i);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<UserId> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[index(image_[i])] = user(i);
  return Permutation(std::move(inv));
}

bool AttributedGraph::has_user_edge(UserId u, UserId v) const {
  check_user(*this, u);
  check_user(*this, v);
  auto adj = user_adjacent(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool AttributedGraph::has_attribute_edge(UserId u, AttrId a) const {
  check_user(*this, u);
  auto adj = attribute_adjacent(u);
  return std::binary_search(adj.begin(), adj.end(), a);
}

std::vector<std::pair<UserId, UserId>> AttributedGraph::user_edges() const {
  std::vector<std::pair<UserId, UserId>> out;
  out.reserve(num_user_edges());
  for (std::size_t i = 0; i < num_users_; ++i)
    for (auto v : user_adjacent(user(i)))
      if (index(v) > i) out.emplace_back(user(i), v);
  return out;
}

std::vector<std::pair<UserId, AttrId>> AttributedGraph::attribute_edges() const {
  std::vector<std::pair<UserId, AttrId>> out;
  out.reserve(num_attribute_edges());
  for (std::size_t i = 0; i < num_users_; ++i)
    for (auto a : attribute_adjacent(user(i))) out.emplace_back(user(i), a);
  return out;
}

AttributedGraph AttributedGraph::user_subgraph() const {
  AttributedGraph g;
  g.num_users_ = num_users_;
  g.num_attributes_ = 0;
  g.user_off_ = user_off_;
  g.user_adj_ = user_adj_;
  g.attr_off_.assign(num_users_ + 1, 0);
  return g;
}

GraphBuilder::GraphBuilder(std::size_t num_users, std::size_t num_attributes)
    : num_users_(num_users), num_attributes_(num_attributes) {}

GraphBuilder& GraphBuilder::add_user_edge(UserId u, UserId v) {
  if (index(u) >= num_users_ || index(v) >= num_users_)
    throw LabelOutOfRange("user-user edge (" + std::to_string(index(u)) + ", " +
                          std::to_string(index(v)) + ") outside " + std::to_string(num_users_) +
                          " users");
  if (u == v) throw ContractViolation("self-loop on user " + std::to_string(index(u)));
  if (index(v) < index(u)) std::swap(u, v);
  user_edges_.emplace_back(u, v);
  return *this;
}

GraphBuilder& GraphBuilder::add_attribute_edge(UserId u, AttrId a) {
  if (index(u) >= num_users_ || index(a) >= num_attributes_)
    throw LabelOutOfRange("user-attribute edge (" + std::to_string(index(u)) + ", " +
                          std::to_string(index(a)) + ") outside graph");
  attr_edges_.emplace_back(u, a);
  return *this;
}

void GraphBuilder::reserve(std::size_t user_edges, std::size_t attribute_edges) {
  user_edges_.reserve(user_edges);
  attr_edges_.reserve(attribute_edges);
}

AttributedGraph GraphBuilder::build() const {
  auto ue = user_edges_;
  auto ae = attr_edges_;
  sort_unique(ue);
  sort_unique(ae);

  AttributedGraph g;
  g.num_users_ = num_users_;
  g.num_attributes_ = num_attributes_;

  // Counting sort into CSR; emitting (u,v) pairs in sorted order keeps every row sorted.
  g.user_off_.assign(num_users_ + 1, 0);
  for (auto [u, v] : ue) {
    ++g.user_off_[index(u) + 1];
    ++g.user_off_[index(v) + 1];
  }
  for (std::size_t i = 0; i < num_users_; ++i) g.user_off_[i + 1] += g.user_off_[i];
  g.user_adj_.resize(2 * ue.size());
  {
    std::vector<std::size_t> pos(g.user_off_.begin(), g.user_off_.end() - 1);
    // Lower neighbors of v arrive in ascending u order before any higher neighbor is
    // written, so a two-pass fill keeps rows sorted.
    for (auto [u, v] : ue) g.user_adj_[pos[index(v)]++] = u;
    for (auto [u, v] : ue) g.user_adj_[pos[index(u)]++] = v;
  }

  g.attr_off_.assign(num_users_ + 1, 0);
  g.member_off_.assign(num_attributes_ + 1, 0);
  for (auto [u, a] : ae) {
    ++g.attr_off_[index(u) + 1];
    ++g.member_off_[index(a) + 1];
  }
  for (std::size_t i = 0; i < num_users_; ++i) g.attr_off_[i + 1] += g.attr_off_[i];
  for (std::size_t a = 0; a < num_attributes_; ++a) g.member_off_[a + 1] += g.member_off_[a];
  g.attr_adj_.resize(ae.size());
  g.member_adj_.resize(ae.size());
  {
    std::vector<std::size_t> upos(g.attr_off_.begin(), g.attr_off_.end() - 1);
    std::vector<std::size_t> apos(g.member_off_.begin(), g.member_off_.end() - 1);
    for (auto [u, a] : ae) {
      g.attr_adj_[upos[index(u)]++] = a;
      g.member_adj_[apos[index(a)]++] = u;
    }
  }
  return g;
}

std::vector<AttrId> attribute_neighbors(const AttributedGraph& g, UserId u) {
  check_user(g, u);
  auto adj = g.attribute_adjacent(u);
  return {adj.begin(), adj.end()};
}

std::vector<UserId> user_neighbors_within(const AttributedGraph& g, UserId center, unsigned hops,
                                          std::span<const UserId> removed) {
  check_user(g, center);
  for (auto r : removed) check_user(g, r);
  BallWalker walker(g);
  auto out = walker.ball(center, hops, removed);
  std::sort(out.begin(), out.end());
  return out;
}

AttributedGraph apply_permutation(const AttributedGraph& g, const Permutation& pi) {
  if (pi.size() != g.num_users())
    throw ContractViolation("permutation of size " + std::to_string(pi.size()) +
                            " applied to graph with " + std::to_string(g.num_users()) + " users");
  GraphBuilder b(g.num_users(), g.num_attributes());
  b.reserve(g.num_user_edges(), g.num_attribute_edges());
  for (auto [u, v] : g.user_edges()) b.add_user_edge(pi(u), pi(v));
  for (auto [u, a] : g.attribute_edges()) b.add_attribute_edge(pi(u), a);
  return b.build();
}

BallWalker::BallWalker(const AttributedGraph& g)
    : graph_(&g), seen_(g.num_users(), 0), blocked_(g.num_users(), 0) {}

const std::vector<UserId>& BallWalker::ball(UserId center, unsigned hops,
                                            std::span<const UserId> removed) {
  if (++epoch_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(blocked_.begin(), blocked_.end(), 0);
    epoch_ = 1;
  }
  for (auto r : removed) blocked_[index(r)] = epoch_;
  if (blocked_[index(center)] == epoch_)
    throw ContractViolation("neighborhood center " + std::to_string(index(center)) +
                            " is in the removed set");

  out_.clear();
  out_.push_back(center);
  seen_[index(center)] = epoch_;
  std::size_t frontier_begin = 0;
  for (unsigned depth = 0; depth < hops; ++depth) {
    const std::size_t frontier_end = out_.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (auto w : graph_->user_adjacent(out_[k])) {
        const auto wi = index(w);
        if (seen_[wi] == epoch_ || blocked_[wi] == epoch_) continue;
        seen_[wi] = epoch_;
        out_.push_back(w);
      }
    }
    frontier_begin = frontier_end;
  }
  return out_;
}

}  // namespace attralign
