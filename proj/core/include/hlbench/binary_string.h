#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hlbench {

// Largest supported tree depth D. Nodes of 2^{<D} have length at most D - 1.
inline constexpr int kMaxDepth = 64;

// A node of the binary tree: a finite 0/1 string of length <= kMaxDepth.
//
// Bits are packed so that the first bit is the most significant one of
// value(); for equal lengths numeric order is lexicographic order. The
// default ordering is length-lexicographic.
class BinaryString {
 public:
  constexpr BinaryString() = default;

  // Throws Errc::kRange if length > kMaxDepth or value has bits above length.
  BinaryString(std::uint64_t value, int length);

  // Parses "0110"; "" and "-" both denote the empty string.
  static BinaryString parse(std::string_view text);

  // All strings of the given length in lexicographic order.
  static std::vector<BinaryString> level(int length);

  constexpr int length() const { return length_; }
  constexpr std::uint64_t value() const { return value_; }
  bool empty() const { return length_ == 0; }

  // i-th bit, 0-based from the root.
  int bit(int i) const;
  int last_bit() const { return bit(length_ - 1); }

  // Restriction t|n; requires n <= length().
  BinaryString prefix(int n) const;
  // t concatenated with one bit; throws Errc::kRange at kMaxDepth.
  BinaryString child(int b) const;
  BinaryString parent() const { return prefix(length_ - 1); }

  // this is an initial segment of other (not necessarily proper).
  bool is_prefix_of(const BinaryString& other) const;
  bool compatible_with(const BinaryString& other) const {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }
  // Longest common prefix.
  BinaryString meet(const BinaryString& other) const;

  // Index in length-lexicographic enumeration of 2^{<omega}: 2^len - 1 + value.
  std::uint64_t rank() const;

  // Bit string; the empty string prints as "" (use to_token() for files).
  std::string to_string() const;
  // Same as to_string() but the empty string prints as "-".
  std::string to_token() const;

  friend constexpr bool operator==(const BinaryString&, const BinaryString&) = default;
  friend constexpr std::strong_ordering operator<=>(const BinaryString& a, const BinaryString& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  int length_ = 0;
};

// Lexicographic (not length-first) comparison: prefixes sort first.
bool lex_less(const BinaryString& a, const BinaryString& b);

}  // namespace hlbench

template <>
struct std::hash<hlbench::BinaryString> {
  std::size_t operator()(const hlbench::BinaryString& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.value() * 131u + static_cast<std::uint64_t>(s.length()));
  }
};
