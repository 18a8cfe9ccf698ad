#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlbench/rational.h"

namespace hlbench {

enum class GroundKind { kInterval, kGrid, kNodes };

const char* ground_name(GroundKind kind);
GroundKind parse_ground(const std::string& name);

// The finite ground set of a presentation. Points are coded as naturals:
// n for [0,N), col*N + row for [0,N)^2, and the length-lex rank for 2^{<D}.
struct Ground {
  GroundKind kind = GroundKind::kInterval;
  std::uint64_t bound = 0;  // N, or D for node grounds

  std::uint64_t size() const;
  std::string format_point(std::uint64_t code) const;
  // Errc::kParse on malformed text, Errc::kRange outside the ground.
  std::uint64_t parse_point(const std::string& text) const;

  friend bool operator==(const Ground&, const Ground&) = default;
};

// Finite stand-in for ideal membership. Supported names and parameters:
//   cardinality        m        |X| <= m
//   dyadic_density     eps, n0  d_n(X) <= eps on every window with n >= n0
//   summable           bound    sum of 1/(x+1) <= bound
//   column_count       m, j     at most j columns hold more than m points
//   phi_tail           n0, eps  phi(X minus 2^{<n0}) <= eps
//   union_of_generators j       X lies in a union of <= j generators
struct Surrogate {
  std::string name;
  std::map<std::string, Rational> params;

  std::string describe() const;  // "dyadic_density(eps=1/24, n0=5/1)"
};

struct FiniteIdealPresentation {
  Ground ground;
  std::vector<std::vector<std::uint64_t>> generators;  // sorted point codes
  std::vector<std::string> labels;                     // one per generator
  Surrogate surrogate;
};

struct SurrogateVerdict {
  bool accepted = false;
  std::string value;  // the statistic the verdict is based on
};

// Evaluates the presentation's surrogate on a subset of its ground.
// Errc::kArgument for unknown surrogates, missing parameters or a surrogate
// that does not fit the ground kind.
SurrogateVerdict evaluate_surrogate(const FiniteIdealPresentation& p, const std::vector<std::uint64_t>& set);

// f maps the target ground (of J) to the source ground (of I).
struct MorphismSpec {
  // "identity", "project_col" (grid -> interval), "project_row", or "table".
  std::string formula = "identity";
  std::map<std::uint64_t, std::uint64_t> table;

  // One-point mutation: f(y) := x. Turns formulas into tables.
  MorphismSpec with_point(const Ground& target, const Ground& source, std::uint64_t y, std::uint64_t x) const;
};

struct MorphismViolation {
  std::size_t generator = 0;
  std::string label;
  std::size_t preimage_size = 0;
  std::string value;
};

struct MorphismReport {
  bool pass = false;
  std::string surrogate;
  std::map<std::string, std::string> parameters;
  std::size_t generators_checked = 0;
  std::vector<MorphismViolation> violations;
  std::string scope;
};

// Fixed scope statement carried by every report.
extern const char* const kMorphismScope;

// Checks f^{-1}[A] against J's surrogate for every generator A of I.
// Errc::kDomain if f is not total on J's ground, Errc::kShape if f's values
// or formula do not fit the grounds.
MorphismReport check_morphism(const MorphismSpec& f, const FiniteIdealPresentation& source,
                              const FiniteIdealPresentation& target);

struct BuiltinWitness {
  MorphismSpec morphism;
  FiniteIdealPresentation source;  // I
  FiniteIdealPresentation target;  // J
};

std::vector<std::string> builtin_witness_names();
// Errc::kNotFound for unknown names.
BuiltinWitness builtin_witness(const std::string& name);

// fin_to_z_identity with f(33) := 32; the preimage of {32} becomes {32, 33}
// with density 1/16 > 1/24 on the window [32, 64).
BuiltinWitness mutated_fin_to_z();

}  // namespace hlbench
