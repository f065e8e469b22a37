#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "attralign/graph.hpp"

namespace attralign {

/// A user of G1 paired with a user of G2'.
struct MatchedPair {
  UserId in_g1;
  UserId in_g2;

  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Describes the first pair of entries sharing a coordinate, if any.
std::optional<std::string> find_conflict(std::span<const MatchedPair> pairs);

/// Conflict-free set of matched pairs: anchors from attribute counting, seed
/// sets handed to the seeded subroutines, and the high-degree set built by the
/// sparse subroutine. Kept sorted by the G1 coordinate.
class AnchorSet {
 public:
  AnchorSet() = default;
  /// Throws ContractViolation if two pairs share a coordinate.
  explicit AnchorSet(std::vector<MatchedPair> pairs);

  std::span<const MatchedPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(MatchedPair p) const;

  /// partner[i] is the G2' user paired with G1 user i, for a graph with n users.
  std::vector<std::optional<UserId>> forward_map(std::size_t n) const;
  std::vector<std::optional<UserId>> backward_map(std::size_t n) const;

  friend bool operator==(const AnchorSet&, const AnchorSet&) = default;

 private:
  std::vector<MatchedPair> pairs_;
};

enum class FailureKind { AnchorConflict, NonUniqueMatch, NotBijection };

std::string_view to_string(FailureKind kind);

struct Failure {
  FailureKind kind;
  std::string context;
};

/// Either a recovered permutation or a typed failure.
class AlignmentResult {
 public:
  AlignmentResult(Permutation pi) : value_(std::move(pi)) {}
  AlignmentResult(Failure f) : value_(std::move(f)) {}

  static AlignmentResult failure(FailureKind kind, std::string context) {
    return Failure{kind, std::move(context)};
  }

  bool ok() const { return std::holds_alternative<Permutation>(value_); }
  explicit operator bool() const { return ok(); }

  /// Throws std::bad_variant_access on a failure.
  const Permutation& permutation() const { return std::get<Permutation>(value_); }
  const Failure& failure() const { return std::get<Failure>(value_); }

 private:
  std::variant<Permutation, Failure> value_;
};

/// Turns a per-user assignment into a permutation, or NotBijection when a user
/// is unassigned or two users share a target.
AlignmentResult finalize_assignment(std::span<const std::optional<UserId>> assignment,
                                    std::string_view note = {});

/// True iff the result is a success whose permutation equals `truth` coordinate-wise.
bool recovers(const AlignmentResult& result, const Permutation& truth);

}  // namespace attralign
