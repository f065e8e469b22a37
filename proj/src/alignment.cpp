#include "attralign/alignment.hpp"

#include <algorithm>
#include <tuple>

#include "attralign/errors.hpp"

namespace attralign {

std::optional<std::string> find_conflict(std::span<const MatchedPair> pairs) {
  std::vector<MatchedPair> by_first(pairs.begin(), pairs.end());
  std::sort(by_first.begin(), by_first.end());
  by_first.erase(std::unique(by_first.begin(), by_first.end()), by_first.end());
  for (std::size_t k = 1; k < by_first.size(); ++k)
    if (by_first[k].in_g1 == by_first[k - 1].in_g1)
      return "G1 user " + std::to_string(user_label(by_first[k].in_g1)) + " paired with " +
             std::to_string(user_label(by_first[k - 1].in_g2)) + " and " +
             std::to_string(user_label(by_first[k].in_g2));

  std::sort(by_first.begin(), by_first.end(), [](const MatchedPair& a, const MatchedPair& b) {
    return std::tie(a.in_g2, a.in_g1) < std::tie(b.in_g2, b.in_g1);
  });
  for (std::size_t k = 1; k < by_first.size(); ++k)
    if (by_first[k].in_g2 == by_first[k - 1].in_g2)
      return "G2' user " + std::to_string(user_label(by_first[k].in_g2)) + " paired with " +
             std::to_string(user_label(by_first[k - 1].in_g1)) + " and " +
             std::to_string(user_label(by_first[k].in_g1));
  return std::nullopt;
}

AnchorSet::AnchorSet(std::vector<MatchedPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  if (auto c = find_conflict(pairs_)) throw ContractViolation("conflicting pairs: " + *c);
}

bool AnchorSet::contains(MatchedPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::vector<std::optional<UserId>> AnchorSet::forward_map(std::size_t n) const {
  std::vector<std::optional<UserId>> out(n);
  for (auto [a, b] : pairs_) {
    if (index(a) >= n || index(b) >= n)
      throw LabelOutOfRange("anchor pair outside graph with " + std::to_string(n) + " users");
    out[index(a)] = b;
  }
  return out;
}

std::vector<std::optional<UserId>> AnchorSet::backward_map(std::size_t n) const {
  std::vector<std::optional<UserId>> out(n);
  for (auto [a, b] : pairs_) {
    if (index(a) >= n || index(b) >= n)
      throw LabelOutOfRange("anchor pair outside graph with " + std::to_string(n) + " users");
    out[index(b)] = a;
  }
  return out;
}

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::AnchorConflict:
      return "AnchorConflict";
    case FailureKind::NonUniqueMatch:
      return "NonUniqueMatch";
    case FailureKind::NotBijection:
      return "NotBijection";
  }
  return "Unknown";
}

AlignmentResult finalize_assignment(std::span<const std::optional<UserId>> assignment,
                                    std::string_view note) {
  const auto n = assignment.size();
  std::vector<UserId> image(n);
  std::vector<std::size_t> owner(n, n);
  auto fail = [&](std::string why) {
    if (!note.empty()) why += "; " + std::string(note);
    return AlignmentResult::failure(FailureKind::NotBijection, std::move(why));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!assignment[i]) return fail("user " + std::to_string(i + 1) + " is unassigned");
    const auto t = index(*assignment[i]);
    if (t >= n) return fail("user " + std::to_string(i + 1) + " assigned outside range");
    if (owner[t] != n)
      return fail("users " + std::to_string(owner[t] + 1) + " and " + std::to_string(i + 1) +
                  " both map to " + std::to_string(t + 1));
    owner[t] = i;
    image[i] = *assignment[i];
  }
  return Permutation(std::move(image));
}

bool recovers(const AlignmentResult& result, const Permutation& truth) {
  if (!result.ok()) return false;
  const auto& pi = result.permutation();
  if (pi.size() != truth.size()) return false;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi(user(i)) != truth(user(i))) return false;
  return true;
}

}  // namespace attralign
