#include "hlbench/binary_string.h"

#include <algorithm>

#include "hlbench/error.h"

namespace hlbench {
namespace {

constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

BinaryString::BinaryString(std::uint64_t value, int length) : value_(value), length_(length) {
  if (length < 0 || length > kMaxDepth) {
    throw Error(Errc::kRange, "string length " + std::to_string(length) + " outside [0, " +
                                  std::to_string(kMaxDepth) + "]");
  }
  if ((value & ~low_mask(length)) != 0) {
    throw Error(Errc::kRange, "value has bits above length " + std::to_string(length));
  }
}

BinaryString BinaryString::parse(std::string_view text) {
  if (text == "-") return {};
  if (text.size() > static_cast<std::size_t>(kMaxDepth)) {
    throw Error(Errc::kRange, "bit string longer than " + std::to_string(kMaxDepth));
  }
  std::uint64_t v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(Errc::kParse, "invalid bit character '" + std::string(1, ch) + "'");
    }
    v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return BinaryString(v, static_cast<int>(text.size()));
}

std::vector<BinaryString> BinaryString::level(int length) {
  if (length < 0 || length > 30) {
    throw Error(Errc::kRange, "refusing to enumerate level " + std::to_string(length));
  }
  std::vector<BinaryString> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) out.emplace_back(v, length);
  return out;
}

int BinaryString::bit(int i) const {
  if (i < 0 || i >= length_) throw Error(Errc::kRange, "bit index out of range");
  return static_cast<int>((value_ >> (length_ - 1 - i)) & 1u);
}

BinaryString BinaryString::prefix(int n) const {
  if (n < 0 || n > length_) throw Error(Errc::kRange, "prefix length out of range");
  BinaryString out;
  out.length_ = n;
  out.value_ = n == 0 ? 0 : (value_ >> (length_ - n));
  return out;
}

BinaryString BinaryString::child(int b) const {
  if (length_ >= kMaxDepth) throw Error(Errc::kRange, "child would exceed maximum depth");
  BinaryString out;
  out.length_ = length_ + 1;
  out.value_ = (value_ << 1) | static_cast<std::uint64_t>(b & 1);
  return out;
}

bool BinaryString::is_prefix_of(const BinaryString& other) const {
  if (length_ > other.length_) return false;
  if (length_ == 0) return true;
  return (other.value_ >> (other.length_ - length_)) == value_;
}

BinaryString BinaryString::meet(const BinaryString& other) const {
  int n = std::min(length_, other.length_);
  BinaryString a = prefix(n);
  BinaryString b = other.prefix(n);
  std::uint64_t diff = a.value_ ^ b.value_;
  while (diff != 0) {
    diff >>= 1;
    --n;
    a.value_ >>= 1;
  }
  a.length_ = n;
  return a;
}

std::uint64_t BinaryString::rank() const {
  if (length_ >= 64) throw Error(Errc::kRange, "rank undefined at length 64");
  return (std::uint64_t{1} << length_) - 1 + value_;
}

std::string BinaryString::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string BinaryString::to_token() const { return length_ == 0 ? "-" : to_string(); }

bool lex_less(const BinaryString& a, const BinaryString& b) {
  int n = std::min(a.length(), b.length());
  auto pa = a.prefix(n).value();
  auto pb = b.prefix(n).value();
  if (pa != pb) return pa < pb;
  return a.length() < b.length();
}

}  // namespace hlbench
