#pragma once

// Brute-force conjugacy search used to cross-check the summit machinery on
// small instances. States are canonical forms; edges conjugate by a single
// generator. The window keeps the search finite, so a miss is only
// conclusive for elements whose whole class fits inside the window.

#include <deque>
#include <optional>
#include <set>

#include "braidtk/braid.hpp"
#include "braidtk/garside.hpp"

namespace braidtk::testing {

struct ExploreResult {
  std::optional<bool> found;  // target reached; nullopt when the cap was hit
  int max_inf;                // extremes over every conjugate explored
  int min_sup;
  std::size_t explored = 0;
};

inline ExploreResult explore_conjugates(const BraidWord& a, const BraidWord* target,
                                        int slack = 2, std::size_t max_states = 60000) {
  const int n = a.strands;
  const NormalForm na = normal_form(a);
  std::optional<NormalForm> nb;
  if (target) nb = normal_form(*target);
  int lo = na.inf - slack, hi = na.sup() + slack;
  if (nb) {
    lo = std::min(lo, nb->inf - slack);
    hi = std::max(hi, nb->sup() + slack);
  }
  std::set<NormalForm> seen{na};
  std::deque<NormalForm> queue{na};
  ExploreResult r{std::optional<bool>(false), na.inf, na.sup(), 0};
  while (!queue.empty()) {
    NormalForm cur = std::move(queue.front());
    queue.pop_front();
    ++r.explored;
    r.max_inf = std::max(r.max_inf, cur.inf);
    r.min_sup = std::min(r.min_sup, cur.sup());
    if (nb && cur == *nb) {
      r.found = true;
      return r;
    }
    const BraidWord w = cur.to_word();
    for (int g = 1; g < n; ++g) {
      for (int sign : {1, -1}) {
        const BraidWord c(n, {sign * g});
        NormalForm nxt = normal_form(conjugated(w, c));
        if (nxt.inf < lo || nxt.sup() > hi) continue;
        if (!seen.insert(nxt).second) continue;
        if (seen.size() > max_states) {
          r.found = std::nullopt;
          return r;
        }
        queue.push_back(std::move(nxt));
      }
    }
  }
  return r;
}

/// All conjugates of a reachable inside the window, as canonical forms.
inline std::set<NormalForm> conjugate_closure(const BraidWord& a, int slack = 2,
                                              std::size_t max_states = 60000) {
  const int n = a.strands;
  const NormalForm na = normal_form(a);
  const int lo = na.inf - slack, hi = na.sup() + slack;
  std::set<NormalForm> seen{na};
  std::deque<NormalForm> queue{na};
  while (!queue.empty()) {
    NormalForm cur = std::move(queue.front());
    queue.pop_front();
    const BraidWord w = cur.to_word();
    for (int g = 1; g < n; ++g) {
      for (int sign : {1, -1}) {
        const BraidWord c(n, {sign * g});
        NormalForm nxt = normal_form(conjugated(w, c));
        if (nxt.inf < lo || nxt.sup() > hi) continue;
        if (!seen.insert(nxt).second) continue;
        if (seen.size() > max_states) throw std::runtime_error("closure cap hit");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return seen;
}

}  // namespace braidtk::testing
