#pragma once

#include <cstdint>
#include <cstddef>

namespace attralign {

// Users are indexed 0..n-1 and attributes 0..m-1 inside the library. The text
// formats use the 1-based labels where users are 1..n and attributes n+1..n+m.
enum class UserId : std::uint32_t {};
enum class AttrId : std::uint32_t {};

constexpr std::size_t index(UserId u) { return static_cast<std::size_t>(u); }
constexpr std::size_t index(AttrId a) { return static_cast<std::size_t>(a); }

constexpr UserId user(std::size_t i) { return static_cast<UserId>(i); }
constexpr AttrId attr(std::size_t a) { return static_cast<AttrId>(a); }

constexpr std::uint64_t user_label(UserId u) { return index(u) + 1; }
constexpr std::uint64_t attr_label(AttrId a, std::size_t n) { return n + index(a) + 1; }

}  // namespace attralign
