#include "tsg/graph_state.hpp"

#include <algorithm>
#include <string>

namespace tsg {

namespace {

[[noreturn]] void fail(const std::string& invariant) {
  throw InvariantError("graph state invariant violated: " + invariant);
}

}  // namespace

void SimConfig::validate() const {
  if (n < 3) throw ConfigError("n must be >= 3");
  if (d < 1) throw ConfigError("d must be >= 1");
  if (c < 2) throw ConfigError("c must be >= 2");
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (trial_count < 1) throw ConfigError("trial_count must be >= 1");
}

std::vector<std::string> SimConfig::constant_warnings() const {
  // The analysis fixes its constants only for c and d "sufficiently large";
  // the concrete floors used in the proofs are c >= 16 and d >= 3.
  std::vector<std::string> warnings;
  if (c < 16) warnings.push_back("c < 16: below the regime the analysis constants assume");
  if (d < 3) warnings.push_back("d < 3: below the regime the analysis constants assume");
  if (!horizon_reaches_stable())
    warnings.push_back("horizon < 2n: run never reaches the stable regime");
  return warnings;
}

GraphState::GraphState(std::uint64_t n, std::uint32_t d, std::uint32_t c)
    : n_(n), d_(d), c_(c), ring_(n) {
  SimConfig probe{.n = n, .d = d, .c = c, .horizon = 1, .trial_count = 1};
  probe.validate();
}

void GraphState::advance_round(std::uint64_t round) {
  if (round != round_ + 1)
    throw SequencingError("advance_round called out of order: state at round " +
                          std::to_string(round_) + ", requested " + std::to_string(round));
  round_ = round;
}

void GraphState::init_vertex(VertexId v) {
  if (v != round_) throw SequencingError("init_vertex: newborn id must equal current round");
  VertexRec& r = rec(v);
  if (r.birth != kNoVertex) fail("newborn slot not cleared before reuse");
  r.birth = v;
  r.requests.assign(d_, RequestSlot{});
  r.in_edges.clear();
  r.out_degree = 0;
}

void GraphState::clear_slot(VertexId v) {
  VertexRec& r = rec(v);
  if (r.out_degree != 0) fail("clearing slot with connected requests");
  if (!r.in_edges.empty()) fail("clearing slot with live in-edges");
  r = VertexRec{};
}

void GraphState::connect(RequestId request, VertexId target) {
  if (!is_live(request.owner) || !is_live(target)) fail("connect endpoints must be live");
  if (target == request.owner) fail("self-loop forbidden");
  VertexRec& owner = rec(request.owner);
  RequestSlot& slot = owner.requests[request.index];
  if (slot.target != kNoVertex) fail("connect on a non-pending request");
  VertexRec& dst = rec(target);
  if (dst.in_edges.size() >= in_cap()) fail("connect past the in-degree cap");

  slot.target = target;
  slot.pos_in_target = static_cast<std::uint32_t>(dst.in_edges.size());
  dst.in_edges.push_back(request);
  ++owner.out_degree;
  ++edge_count_;
  if (dst.in_edges.size() == in_cap()) ++full_count_;
}

void GraphState::disconnect(RequestId request) {
  VertexRec& owner = rec(request.owner);
  RequestSlot& slot = owner.requests[request.index];
  if (slot.target == kNoVertex) fail("disconnect on a pending request");
  VertexRec& dst = rec(slot.target);
  if (dst.in_edges.size() == in_cap()) --full_count_;

  // Swap-remove from the target's in-edge list, fixing the moved backref.
  const std::uint32_t pos = slot.pos_in_target;
  const RequestId moved = dst.in_edges.back();
  dst.in_edges[pos] = moved;
  dst.in_edges.pop_back();
  if (moved != request) rec(moved.owner).requests[moved.index].pos_in_target = pos;

  slot.target = kNoVertex;
  slot.pos_in_target = 0;
  --owner.out_degree;
  --edge_count_;
}

void GraphState::audit() const {
  const std::uint64_t live = live_count();
  std::uint64_t out_sum = 0;
  std::uint64_t full_seen = 0;

  for (std::uint64_t i = 0; i < n_; ++i) {
    const VertexRec& r = ring_[i];
    if (r.birth == kNoVertex) continue;
    if (!is_live(r.birth)) fail("occupied slot holds a non-live vertex");
  }
  for (VertexId v = oldest_live(); v <= round_ && round_ >= 1; ++v) {
    const VertexRec& r = rec(v);
    if (r.birth != v) fail("live vertex missing from its ring slot");
    if (r.requests.size() != d_) fail("live vertex does not own exactly d requests");
    std::uint32_t connected = 0;
    for (std::uint32_t i = 0; i < d_; ++i) {
      const RequestSlot& s = r.requests[i];
      if (s.target == kNoVertex) continue;
      ++connected;
      if (!is_live(s.target)) fail("request connected to a departed vertex");
      if (s.target == v) fail("request connected to its own owner");
      const VertexRec& dst = rec(s.target);
      if (s.pos_in_target >= dst.in_edges.size() ||
          dst.in_edges[s.pos_in_target] != RequestId{v, i})
        fail("owner/target backref out of sync");
    }
    if (connected != r.out_degree) fail("cached out-degree differs from connected requests");
    if (r.out_degree > d_) fail("out-degree above d");
    if (r.in_edges.size() > in_cap()) fail("in-degree above c*d");
    for (const RequestId& e : r.in_edges) {
      if (!is_live(e.owner)) fail("in-edge from a departed owner");
      if (rec(e.owner).requests[e.index].target != v) fail("in-edge not mirrored by its owner");
    }
    out_sum += r.out_degree;
    if (r.in_edges.size() == in_cap()) ++full_seen;
  }

  if (out_sum != edge_count_) fail("cached edge count differs from sum of out-degrees");
  if (full_seen != full_count_) fail("cached full-node count differs from scan");
  if (edge_count_ > n_ * d_) fail("edge count above n*d");
  if (full_count_ * c_ > n_) fail("full-node count above n/c");
  if (round_ >= 1 && live != (round_ < n_ ? round_ : n_)) fail("live count differs from min(t, n)");
}

SnapshotExport GraphState::freeze() const {
  audit();
  SnapshotExport out;
  out.round = round_;
  out.n = n_;
  out.d = d_;
  out.c = c_;
  if (round_ == 0) return out;
  out.vertices.reserve(live_count());
  for (VertexId v = oldest_live(); v <= round_; ++v) {
    out.vertices.push_back({v, round_ - v});
    const VertexRec& r = rec(v);
    for (std::uint32_t i = 0; i < d_; ++i) {
      if (r.requests[i].target != kNoVertex)
        out.edges.push_back({v, i, r.requests[i].target});
      else
        out.pending.push_back({v, i});
    }
  }
  return out;
}

}  // namespace tsg
