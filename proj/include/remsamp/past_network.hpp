// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "remsamp/errors.hpp"
#include "remsamp/ingest.hpp"

namespace remsamp {

// Exponential decay with halflife T: a weight shrinks by 2^(-dt/T).
// An edge whose decayed weight falls below prune_epsilon counts as zero and
// is removed from the network at the exact crossing instant.
struct DecayConfig {
  std::int64_t halflife = 2'592'000;  // 30 days in seconds
  double prune_epsilon = 0.01;

  void validate() const {
    if (halflife <= 0) throw ValidationError("halflife must be positive");
    if (!(prune_epsilon > 0.0 && prune_epsilon < 1.0))
      throw ValidationError("prune_epsilon must lie in (0,1)");
  }

  double factor(double dt) const {
    return std::exp2(-dt / static_cast<double>(halflife));
  }
};

// Decays `value` from time `from` to time `to` (no threshold applied).
double decay_to(double value, std::int64_t from, std::int64_t to,
                const DecayConfig& cfg);

// Stored weight at the time of the last touch.
struct EdgeState {
  double value = 0.0;
  std::int64_t last_touch = 0;
  std::uint64_t generation = 0;
  std::uint32_t pos_in_user = 0;     // index into the user adjacency list
  std::uint32_t pos_in_article = 0;  // index into the article adjacency list
};

// Decayed weighted two-mode network of past events with lazy per-edge decay,
// exact epsilon-pruning via a crossing-time heap, and O(1) weighted degree
// aggregates. Queries are const and never mutate state, so results do not
// depend on which other queries ran before them; all mutation happens in
// apply()/advance() at event times and canonical crossing times.
class PastEventNetwork {
 public:
  using DyadKey = std::uint64_t;
  // Called just before an edge is removed, with the network still intact.
  // `when` is the (fractional) crossing time, `residual` the edge weight
  // at that instant (equal to prune_epsilon up to roundoff).
  using PruneListener =
      std::function<void(std::uint32_t user, std::uint32_t article, double when,
                         double residual)>;

  explicit PastEventNetwork(DecayConfig cfg) : cfg_(cfg) { cfg_.validate(); }

  static DyadKey key(std::uint32_t user, std::uint32_t article) {
    return (static_cast<std::uint64_t>(user) << 32) | article;
  }

  const DecayConfig& config() const { return cfg_; }
  std::int64_t clock() const { return clock_; }

  // Removes every edge whose decayed weight crosses below epsilon strictly
  // before t; aggregates are corrected at the exact crossing instants.
  void advance(std::int64_t t);

  // advance(e.time) plus a unit increment on the event's dyad.
  void apply_event(const Event& e) { apply(e.source, e.target, e.time); }
  void apply(std::uint32_t user, std::uint32_t article, std::int64_t t);

  // Point queries, valid at t >= clock(); exact at t == clock() (callers
  // advance first, as replay does).
  double weight(std::uint32_t user, std::uint32_t article, std::int64_t t) const;
  double weighted_in(std::uint32_t article, std::int64_t t) const;
  double weighted_out(std::uint32_t user, std::int64_t t) const;

  std::uint32_t degree_user(std::uint32_t user) const {
    return user < user_adj_.size()
               ? static_cast<std::uint32_t>(user_adj_[user].size())
               : 0;
  }
  std::uint32_t degree_article(std::uint32_t article) const {
    return article < article_adj_.size()
               ? static_cast<std::uint32_t>(article_adj_[article].size())
               : 0;
  }

  // Live incident edges (non-pruned only). fn(other_node, decayed_weight).
  template <class F>
  void for_each_article_of(std::uint32_t user, std::int64_t t, F&& fn) const {
    if (user >= user_adj_.size()) return;
    for (std::uint32_t article : user_adj_[user]) {
      const EdgeState& e = edges_.find(key(user, article))->second;
      fn(article, e.value * cfg_.factor(static_cast<double>(t - e.last_touch)));
    }
  }
  template <class F>
  void for_each_user_of(std::uint32_t article, std::int64_t t, F&& fn) const {
    if (article >= article_adj_.size()) return;
    for (std::uint32_t user : article_adj_[article]) {
      const EdgeState& e = edges_.find(key(user, article))->second;
      fn(user, e.value * cfg_.factor(static_cast<double>(t - e.last_touch)));
    }
  }

  std::span<const std::uint32_t> articles_of(std::uint32_t user) const {
    if (user >= user_adj_.size()) return {};
    return user_adj_[user];
  }
  std::span<const std::uint32_t> users_of(std::uint32_t article) const {
    if (article >= article_adj_.size()) return {};
    return article_adj_[article];
  }

  std::size_t live_edge_count() const { return edges_.size(); }

  void set_prune_listener(PruneListener listener) {
    prune_listener_ = std::move(listener);
  }

  // Debug snapshot: `user,article,value,last_touch` per live edge.
  void dump(std::ostream& out, char delimiter = ',') const;

 private:
  struct Lazy {
    double value = 0.0;
    double last = 0.0;
  };
  struct HeapEntry {
    double crossing;
    DyadKey dyad;
    std::uint64_t generation;
    bool operator>(const HeapEntry& o) const {
      if (crossing != o.crossing) return crossing > o.crossing;
      return dyad > o.dyad;
    }
  };

  double crossing_time(const EdgeState& e) const {
    return static_cast<double>(e.last_touch) +
           static_cast<double>(cfg_.halflife) *
               std::log2(e.value / cfg_.prune_epsilon);
  }

  double lazy_read(const Lazy& cell, double t) const {
    return cell.value == 0.0 ? 0.0 : cell.value * cfg_.factor(t - cell.last);
  }
  void lazy_add(Lazy& cell, double t, double delta) {
    cell.value = lazy_read(cell, t) + delta;
    cell.last = t;
  }

  void remove_edge(DyadKey dyad, const EdgeState& e);

  DecayConfig cfg_;
  std::int64_t clock_ = std::numeric_limits<std::int64_t>::min();
  std::unordered_map<DyadKey, EdgeState> edges_;
  std::vector<std::vector<std::uint32_t>> user_adj_;
  std::vector<std::vector<std::uint32_t>> article_adj_;
  std::vector<Lazy> out_sum_;  // per user
  std::vector<Lazy> in_sum_;   // per article
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>
      heap_;
  std::uint64_t generation_counter_ = 0;
  PruneListener prune_listener_;
};

}  // namespace remsamp
