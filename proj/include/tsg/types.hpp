#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsg {

/// A vertex is identified by the round it joined: streaming churn admits
/// exactly one join per round, so the birth round is a collision-free,
/// order-preserving id. 0 is reserved as "no vertex" (rounds start at 1).
using VertexId = std::uint64_t;
inline constexpr VertexId kNoVertex = 0;

struct RequestId {
  VertexId owner = kNoVertex;
  std::uint32_t index = 0;

  friend bool operator==(const RequestId&, const RequestId&) = default;
  friend auto operator<=>(const RequestId&, const RequestId&) = default;
};

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration or malformed input file. Maps to exit 2.
class ConfigError : public SimError {
 public:
  using SimError::SimError;
};

/// Internal consistency violation; never expected on a healthy build.
class InvariantError : public SimError {
 public:
  using SimError::SimError;
};

/// An operation was invoked out of its required order.
class SequencingError : public SimError {
 public:
  using SimError::SimError;
};

/// Parameters of one simulation: the (n, d, c) triple plus run controls.
struct SimConfig {
  std::uint64_t n = 0;            ///< stable population size
  std::uint32_t d = 0;            ///< out-degree target per vertex
  std::uint32_t c = 0;            ///< in-degree cap multiplier (cap = c*d)
  std::uint64_t horizon = 0;      ///< rounds to simulate
  std::uint64_t master_seed = 0;
  std::uint32_t trial_count = 1;

  std::uint32_t in_cap() const { return c * d; }

  /// Throws ConfigError unless n >= 3, d >= 1, c >= 2, horizon >= 1,
  /// trial_count >= 1.
  void validate() const;

  /// Parameter choices outside the regime the analysis assumes. The engine
  /// still runs; callers surface these as warnings.
  std::vector<std::string> constant_warnings() const;

  /// Stable-regime metrics exist only when the run reaches round 2n.
  bool horizon_reaches_stable() const { return horizon >= 2 * n; }
};

struct ChurnEvent {
  std::uint64_t round = 0;
  VertexId joined = kNoVertex;
  VertexId departed = kNoVertex;  ///< kNoVertex before round n+1
};

/// Everything observable about one completed round. Queue and message counts
/// are measured mid-round (after churn/cleanup, before resolution); the
/// full-node and edge counts describe the finished snapshot G_t.
struct RoundReport {
  std::uint64_t round = 0;
  VertexId joined = kNoVertex;
  VertexId departed = kNoVertex;
  std::uint64_t queue_size_before = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  std::uint64_t full_node_count = 0;
  std::uint64_t message_count = 0;  ///< 2 per pending request: request + reply
  std::uint64_t edge_count = 0;

  friend bool operator==(const RoundReport&, const RoundReport&) = default;
};

}  // namespace tsg
