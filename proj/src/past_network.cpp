// Apache License, Version 2.0, refer to LICENSE.txt
#include "remsamp/past_network.hpp"

#include <ostream>

#include "remsamp/text.hpp"

namespace remsamp {

double decay_to(double value, std::int64_t from, std::int64_t to,
                const DecayConfig& cfg) {
  if (to < from) throw TimeOrderError("decay_to: time cannot run backwards");
  return value * cfg.factor(static_cast<double>(to - from));
}

void PastEventNetwork::advance(std::int64_t t) {
  if (t < clock_) throw TimeOrderError("advance: time cannot run backwards");
  const auto bound = static_cast<double>(t);
  while (!heap_.empty() && heap_.top().crossing < bound) {
    const HeapEntry entry = heap_.top();
    heap_.pop();
    auto it = edges_.find(entry.dyad);
    if (it == edges_.end() || it->second.generation != entry.generation) {
      continue;  // stale entry from a later touch
    }
    const EdgeState& e = it->second;
    const auto user = static_cast<std::uint32_t>(entry.dyad >> 32);
    const auto article = static_cast<std::uint32_t>(entry.dyad & 0xFFFFFFFFu);
    const double when = entry.crossing;
    const double residual =
        e.value * cfg_.factor(when - static_cast<double>(e.last_touch));
    if (prune_listener_) prune_listener_(user, article, when, residual);
    lazy_add(out_sum_[user], when, -residual);
    lazy_add(in_sum_[article], when, -residual);
    remove_edge(entry.dyad, e);
    edges_.erase(it);
  }
  clock_ = t;
}

void PastEventNetwork::remove_edge(DyadKey dyad, const EdgeState& e) {
  const auto user = static_cast<std::uint32_t>(dyad >> 32);
  const auto article = static_cast<std::uint32_t>(dyad & 0xFFFFFFFFu);

  auto& ua = user_adj_[user];
  const std::uint32_t moved_article = ua.back();
  ua[e.pos_in_user] = moved_article;
  ua.pop_back();
  if (moved_article != article) {
    edges_.find(key(user, moved_article))->second.pos_in_user = e.pos_in_user;
  }

  auto& aa = article_adj_[article];
  const std::uint32_t moved_user = aa.back();
  aa[e.pos_in_article] = moved_user;
  aa.pop_back();
  if (moved_user != user) {
    edges_.find(key(moved_user, article))->second.pos_in_article =
        e.pos_in_article;
  }
}

void PastEventNetwork::apply(std::uint32_t user, std::uint32_t article,
                             std::int64_t t) {
  if (clock_ != std::numeric_limits<std::int64_t>::min() && t < clock_) {
    throw TimeOrderError("apply: event time before network clock");
  }
  advance(t);
  if (user >= user_adj_.size()) {
    user_adj_.resize(user + 1);
    out_sum_.resize(user + 1);
  }
  if (article >= article_adj_.size()) {
    article_adj_.resize(article + 1);
    in_sum_.resize(article + 1);
  }

  const DyadKey dyad = key(user, article);
  auto [it, inserted] = edges_.try_emplace(dyad);
  EdgeState& e = it->second;
  if (inserted) {
    e.value = 1.0;
    e.pos_in_user = static_cast<std::uint32_t>(user_adj_[user].size());
    e.pos_in_article = static_cast<std::uint32_t>(article_adj_[article].size());
    user_adj_[user].push_back(article);
    article_adj_[article].push_back(user);
  } else {
    e.value = e.value * cfg_.factor(static_cast<double>(t - e.last_touch)) + 1.0;
  }
  e.last_touch = t;
  e.generation = ++generation_counter_;
  heap_.push({crossing_time(e), dyad, e.generation});

  lazy_add(out_sum_[user], static_cast<double>(t), 1.0);
  lazy_add(in_sum_[article], static_cast<double>(t), 1.0);
}

double PastEventNetwork::weight(std::uint32_t user, std::uint32_t article,
                                std::int64_t t) const {
  auto it = edges_.find(key(user, article));
  if (it == edges_.end()) return 0.0;
  const EdgeState& e = it->second;
  return e.value * cfg_.factor(static_cast<double>(t - e.last_touch));
}

double PastEventNetwork::weighted_in(std::uint32_t article, std::int64_t t) const {
  if (article >= in_sum_.size()) return 0.0;
  return lazy_read(in_sum_[article], static_cast<double>(t));
}

double PastEventNetwork::weighted_out(std::uint32_t user, std::int64_t t) const {
  if (user >= out_sum_.size()) return 0.0;
  return lazy_read(out_sum_[user], static_cast<double>(t));
}

void PastEventNetwork::dump(std::ostream& out, char delimiter) const {
  out << "user" << delimiter << "article" << delimiter << "value" << delimiter
      << "last_touch" << '\n';
  for (const auto& [dyad, e] : edges_) {
    out << (dyad >> 32) << delimiter << (dyad & 0xFFFFFFFFu) << delimiter
        << format_double(e.value) << delimiter << e.last_touch << '\n';
  }
}

}  // namespace remsamp
