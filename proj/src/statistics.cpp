// Apache License, Version 2.0, refer to LICENSE.txt
#include "remsamp/statistics.hpp"

#include <algorithm>
#include <cmath>

namespace remsamp {

double repetition(const PastEventNetwork& net, std::uint32_t user,
                  std::uint32_t article, std::int64_t t) {
  return std::log1p(net.weight(user, article, t));
}

double popularity(const PastEventNetwork& net, std::uint32_t /*user*/,
                  std::uint32_t article, std::int64_t t) {
  return std::log1p(net.weighted_in(article, t));
}

double activity(const PastEventNetwork& net, std::uint32_t user,
                std::uint32_t /*article*/, std::int64_t t) {
  return std::log1p(net.weighted_out(user, t));
}

namespace {

// Sum over user pairs u' != u and article pairs a' != a of
// min(w(u,a'), w(u',a'), w(u',a)). A term is non-zero only when all three
// edges are live, so it is enough to enumerate along any two of them and
// look the third one up.

// (i) neighbor-pair order: a' from u's edges, u' from a's edges.
double strategy_pairs(const PastEventNetwork& net, std::uint32_t user,
                      std::uint32_t article, std::int64_t t) {
  double sum = 0.0;
  net.for_each_article_of(user, t, [&](std::uint32_t a2, double w_u_a2) {
    if (a2 == article) return;
    net.for_each_user_of(article, t, [&](std::uint32_t u2, double w_u2_a) {
      if (u2 == user) return;
      const double w_u2_a2 = net.weight(u2, a2, t);
      if (w_u2_a2 == 0.0) return;
      sum += std::min({w_u_a2, w_u2_a2, w_u2_a});
    });
  });
  return sum;
}

// (ii) two-path order through u: a' from u's edges, u' from a''s edges.
double strategy_via_user(const PastEventNetwork& net, std::uint32_t user,
                         std::uint32_t article, std::int64_t t) {
  double sum = 0.0;
  net.for_each_article_of(user, t, [&](std::uint32_t a2, double w_u_a2) {
    if (a2 == article) return;
    net.for_each_user_of(a2, t, [&](std::uint32_t u2, double w_u2_a2) {
      if (u2 == user) return;
      const double w_u2_a = net.weight(u2, article, t);
      if (w_u2_a == 0.0) return;
      sum += std::min({w_u_a2, w_u2_a2, w_u2_a});
    });
  });
  return sum;
}

// (iii) two-path order through a: u' from a's edges, a' from u''s edges.
double strategy_via_article(const PastEventNetwork& net, std::uint32_t user,
                            std::uint32_t article, std::int64_t t) {
  double sum = 0.0;
  net.for_each_user_of(article, t, [&](std::uint32_t u2, double w_u2_a) {
    if (u2 == user) return;
    net.for_each_article_of(u2, t, [&](std::uint32_t a2, double w_u2_a2) {
      if (a2 == article) return;
      const double w_u_a2 = net.weight(user, a2, t);
      if (w_u_a2 == 0.0) return;
      sum += std::min({w_u_a2, w_u2_a2, w_u2_a});
    });
  });
  return sum;
}

}  // namespace

double four_cycle_raw_strategy(const PastEventNetwork& net, std::uint32_t user,
                               std::uint32_t article, std::int64_t t,
                               int strategy) {
  switch (strategy) {
    case 1: return strategy_pairs(net, user, article, t);
    case 2: return strategy_via_user(net, user, article, t);
    default: return strategy_via_article(net, user, article, t);
  }
}

double four_cycle_raw(const PastEventNetwork& net, std::uint32_t user,
                      std::uint32_t article, std::int64_t t,
                      const StatOptions& options) {
  const double du = net.degree_user(user);
  const double da = net.degree_article(article);
  if (du == 0.0 || da == 0.0) return 0.0;
  const double pair_cost = du * da;
  if (pair_cost <= options.four_cycle_cutoff) {
    return strategy_pairs(net, user, article, t);
  }
  double via_user_cost = 0.0;
  for (std::uint32_t a2 : net.articles_of(user)) {
    via_user_cost += net.degree_article(a2);
  }
  double via_article_cost = 0.0;
  for (std::uint32_t u2 : net.users_of(article)) {
    via_article_cost += net.degree_user(u2);
  }
  if (pair_cost <= via_user_cost && pair_cost <= via_article_cost) {
    return strategy_pairs(net, user, article, t);
  }
  if (via_user_cost <= via_article_cost) {
    return strategy_via_user(net, user, article, t);
  }
  return strategy_via_article(net, user, article, t);
}

double four_cycle(const PastEventNetwork& net, std::uint32_t user,
                  std::uint32_t article, std::int64_t t,
                  const StatOptions& options) {
  return std::log1p(four_cycle_raw(net, user, article, t, options));
}

double assortativity(const PastEventNetwork& net, std::uint32_t user,
                     std::uint32_t article, std::int64_t t) {
  return popularity(net, user, article, t) * activity(net, user, article, t);
}

StatVector stat_vector(const PastEventNetwork& net, std::uint32_t user,
                       std::uint32_t article, std::int64_t t,
                       const StatOptions& options) {
  StatVector s;
  s.repetition = repetition(net, user, article, t);
  s.popularity = popularity(net, user, article, t);
  s.activity = activity(net, user, article, t);
  s.four_cycle = four_cycle(net, user, article, t, options);
  s.assortativity = s.popularity * s.activity;
  return s;
}

}  // namespace remsamp
