#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlbench/binary_string.h"
#include "hlbench/coloring.h"
#include "hlbench/ideals.h"

namespace hlbench {

// One round of the evasion game: player I names a finite set, player II
// answers with a number outside it.
struct Round {
  NatSet move_one;
  std::uint64_t move_two = 0;

  friend bool operator==(const Round&, const Round&) = default;
};

struct GameFlags {
  bool completed = false;            // all `horizon` rounds were played
  bool player_one_stuck = false;     // tree builder could not extend its tree
  bool player_two_exhausted = false; // no legal answer inside the window
  bool repeated_k = false;           // player II answered a value twice

  friend bool operator==(const GameFlags&, const GameFlags&) = default;
};

struct GameTranscript {
  int horizon = 0;
  std::uint64_t window = 0;
  std::vector<Round> rounds;
  NatSet outcome;  // K
  GameFlags flags;

  friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

// "name" or "name:key=value,key=value".
struct StrategyId {
  std::string name;
  std::map<std::string, std::string> params;

  static StrategyId parse(const std::string& text);
  std::string to_string() const;
};

class PlayerOne {
 public:
  virtual ~PlayerOne() = default;
  virtual std::string name() const = 0;
  // Must return a subset of [0, window) with bound == window.
  virtual NatSet move(std::span<const Round> history, std::uint64_t window) = 0;
  // Called after player II answered.
  virtual void observe(std::uint64_t /*k*/) {}
  virtual bool stuck() const { return false; }
};

class PlayerTwo {
 public:
  virtual ~PlayerTwo() = default;
  virtual std::string name() const = 0;
  // nullopt when the strategy has no answer inside the window.
  virtual std::optional<std::uint64_t> respond(std::span<const Round> history, const NatSet& move,
                                               std::uint64_t window) = 0;
};

// Player I's tree-building strategy against a fixed coloring. Generation g
// holds the nodes s(t) for t in 2^g, in lexicographic order of t; every
// generation after the first lies on the level player II last named.
class TreeBuilder {
 public:
  explicit TreeBuilder(Coloring c);

  // Union of I(s(t)) over the current generation, clipped to [0, window).
  NatSet next_move(std::uint64_t window) const;
  // Extends every s(t) to two distinct color-0 nodes on level k, or marks
  // the builder stuck when that is impossible.
  void receive(std::uint64_t k);

  bool stuck() const { return stuck_; }
  const Coloring& coloring() const { return coloring_; }
  const std::vector<std::vector<BinaryString>>& generations() const { return generations_; }

 private:
  Coloring coloring_;
  std::vector<std::vector<BinaryString>> generations_;
  bool stuck_ = false;
};

struct TreeBuilderMove {
  NatSet move;
  std::vector<std::vector<BinaryString>> snapshot;
  bool stuck = false;
};

// Replays `history` with a fresh builder and returns its next move.
// Errc::kProtocol if a recorded player I move differs from the replay.
TreeBuilderMove tree_builder_move(const Coloring& c, std::span<const Round> history, std::uint64_t window);

struct StrategyContext {
  std::uint64_t seed = 0;
  // Coloring for the tree builder; when absent it is built from the strategy
  // parameters (coloring=zero|one|lastbit|random, depth=D).
  std::optional<Coloring> coloring;
};

// Errc::kNotFound for an unknown strategy name, Errc::kArgument for bad
// parameters.
std::unique_ptr<PlayerOne> make_player_one(const StrategyId& id, const StrategyContext& ctx);
std::unique_ptr<PlayerTwo> make_player_two(const StrategyId& id, const StrategyContext& ctx);

std::vector<std::string> player_one_strategies();
std::vector<std::string> player_two_strategies();

// Runs up to `horizon` rounds inside [0, window). Illegal moves raise
// Errc::kProtocol naming the strategy and round.
GameTranscript play(int horizon, PlayerOne& one, PlayerTwo& two, std::uint64_t window);

// Builds both strategies from the registry. Each player draws from its own
// splitmix64 stream: the first and second outputs of splitmix64(seed).
GameTranscript play(int horizon, const StrategyId& one, const StrategyId& two, std::uint64_t window,
                    std::uint64_t seed, const std::optional<Coloring>& coloring = std::nullopt);

struct GameSpec {
  int horizon = 1;
  StrategyId one;
  StrategyId two;
  std::uint64_t window = 0;
  std::uint64_t seed = 0;
};

// Independent games, possibly on several threads; results are in spec order.
std::vector<GameTranscript> play_many(const std::vector<GameSpec>& specs, int workers);

}  // namespace hlbench
