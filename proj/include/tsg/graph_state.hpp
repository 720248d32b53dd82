#pragma once

#include <cstdint>
#include <vector>

#include "tsg/types.hpp"

namespace tsg {

struct SnapshotVertex {
  VertexId id = kNoVertex;
  std::uint64_t age = 0;

  friend bool operator==(const SnapshotVertex&, const SnapshotVertex&) = default;
};

struct SnapshotEdge {
  VertexId owner = kNoVertex;
  std::uint32_t index = 0;
  VertexId target = kNoVertex;

  friend bool operator==(const SnapshotEdge&, const SnapshotEdge&) = default;
};

/// Immutable frozen copy of one snapshot G_t: edge multiset (parallel edges
/// carry distinct request indices), vertex ages, pending request set.
struct SnapshotExport {
  std::uint64_t round = 0;
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t c = 0;
  std::vector<SnapshotVertex> vertices;  ///< ascending id
  std::vector<SnapshotEdge> edges;       ///< ascending (owner, index)
  std::vector<RequestId> pending;        ///< ascending (owner, index)

  friend bool operator==(const SnapshotExport&, const SnapshotExport&) = default;
};

/// Live graph snapshot under single-owner mutation. Vertices occupy a ring of
/// n slots keyed by birth round mod n; because exactly one vertex joins per
/// round and lives exactly n rounds, the live set is always the contiguous id
/// range [oldest_live, round].
///
/// The low-level mutators keep the derived counters (edge count, full-node
/// count) and the reciprocal owner/target bookkeeping consistent; engines
/// compose them and never touch the internals directly.
class GraphState {
 public:
  GraphState(std::uint64_t n, std::uint32_t d, std::uint32_t c);

  std::uint64_t round() const { return round_; }
  std::uint64_t n() const { return n_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t c() const { return c_; }
  std::uint32_t in_cap() const { return c_ * d_; }

  std::uint64_t live_count() const { return round_ < n_ ? round_ : n_; }
  VertexId oldest_live() const { return round_ <= n_ ? 1 : round_ - n_ + 1; }
  bool is_live(VertexId v) const {
    return v >= 1 && v <= round_ && v + n_ > round_;
  }

  std::uint32_t out_degree(VertexId v) const { return rec(v).out_degree; }
  std::uint32_t in_degree(VertexId v) const {
    return static_cast<std::uint32_t>(rec(v).in_edges.size());
  }
  std::uint32_t pending_count(VertexId v) const { return d_ - rec(v).out_degree; }
  bool is_full(VertexId v) const { return in_degree(v) == in_cap(); }

  /// Target of request (v, index); kNoVertex when the request is pending.
  VertexId request_target(VertexId v, std::uint32_t index) const {
    return rec(v).requests[index].target;
  }

  /// Requests currently connected to v, i.e. v's incoming edges.
  const std::vector<RequestId>& in_edges(VertexId v) const { return rec(v).in_edges; }

  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t full_count() const { return full_count_; }

  // -- mutation building blocks ------------------------------------------

  /// Moves the clock to `round` (must be round()+1) without touching slots.
  void advance_round(std::uint64_t round);

  /// Installs the newborn vertex (id == current round) with d pending requests.
  void init_vertex(VertexId v);

  /// Clears a departed vertex's slot. All its requests must already be
  /// disconnected and its in-edge list empty.
  void clear_slot(VertexId v);

  /// Activates the edge for a pending request. The caller has already applied
  /// the acceptance rule; the mutator still refuses cap or liveness breaches.
  void connect(RequestId request, VertexId target);

  /// Returns a connected request to the pending state and unlinks the edge.
  void disconnect(RequestId request);

  /// Full consistency audit; throws InvariantError naming the violated
  /// invariant. O(n*d).
  void audit() const;

  /// Deep-audits the state, then returns an immutable export of G_t.
  SnapshotExport freeze() const;

 private:
  struct RequestSlot {
    VertexId target = kNoVertex;
    std::uint32_t pos_in_target = 0;  ///< index into target's in_edges
  };

  struct VertexRec {
    VertexId birth = kNoVertex;
    std::vector<RequestSlot> requests;
    std::vector<RequestId> in_edges;
    std::uint32_t out_degree = 0;
  };

  std::size_t slot(VertexId v) const { return static_cast<std::size_t>(v % n_); }
  const VertexRec& rec(VertexId v) const { return ring_[slot(v)]; }
  VertexRec& rec(VertexId v) { return ring_[slot(v)]; }

  std::uint64_t n_;
  std::uint32_t d_;
  std::uint32_t c_;
  std::uint64_t round_ = 0;
  std::uint64_t edge_count_ = 0;
  std::uint64_t full_count_ = 0;
  std::vector<VertexRec> ring_;
};

}  // namespace tsg
