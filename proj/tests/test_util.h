#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <string>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/coloring.h"
#include "hlbench/error.h"
#include "hlbench/level_tree.h"

#define EXPECT_ERRC(stmt, errc)                                              \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << #stmt " did not throw";                               \
    } catch (const ::hlbench::Error& e) {                                    \
      EXPECT_EQ(e.code(), errc) << e.what();                                 \
    }                                                                        \
  } while (0)

namespace testing_util {

inline hlbench::BinaryString bs(const std::string& s) { return hlbench::BinaryString::parse(s); }

inline std::vector<hlbench::BinaryString> bss(const std::vector<std::string>& v) {
  std::vector<hlbench::BinaryString> out;
  for (const auto& s : v) out.push_back(bs(s));
  return out;
}

inline std::vector<std::string> strs(const std::vector<hlbench::BinaryString>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline hlbench::Coloring last_bit_coloring(int depth) {
  hlbench::Coloring c(depth, 0);
  for (int n = 1; n < depth; ++n) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); v += 2) c.set(hlbench::BinaryString(v, n), 1);
  }
  return c;
}

// Adapts a library coloring for the string-based oracles.
inline std::function<int(const std::string&)> as_oracle(const hlbench::Coloring& c) {
  return [&c](const std::string& s) { return c.color(hlbench::BinaryString::parse(s)); };
}


inline std::vector<std::size_t> widths(const hlbench::LevelTree& t) {
  std::vector<std::size_t> out;
  for (int n = 0; n < t.depth(); ++n) out.push_back(t.width(n));
  return out;
}

}  // namespace testing_util
