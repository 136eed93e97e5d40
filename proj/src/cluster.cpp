#include "friezekit/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace friezekit {

Seed Seed::base(const Quiver& q) {
  Seed s{q, {}, {}};
  for (std::size_t i = 0; i < q.size(); ++i) {
    s.vars.push_back(LaurentPolynomial::variable(q.size(), i));
  }
  return s;
}

ClusterKey cluster_key(const Seed& s) {
  ClusterKey key;
  key.reserve(s.vars.size());
  for (const auto& v : s.vars) key.push_back(v.to_string());
  std::sort(key.begin(), key.end());
  return key;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  if (k >= s.rank()) throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  const std::size_t n = s.rank();
  auto binomial = exchange_binomial(s.quiver, k, s.vars, LaurentPolynomial::constant(n, 1));
  auto fresh = laurent_exact_div(binomial, s.vars[k]);
  if (!fresh) throw InvariantViolation("exchange relation is not Laurent at direction " + std::to_string(k));
  Seed out{mutate_quiver(s.quiver, k), s.vars, s.path};
  out.vars[k] = std::move(*fresh);
  out.path.push_back(k);
  return out;
}

Seed mutate_along(Seed s, const std::vector<std::size_t>& path) {
  for (auto k : path) s = mutate_seed(s, k);
  return s;
}

std::vector<LaurentPolynomial> expand_base_in_current(const Seed& s) {
  Seed t = Seed::base(s.quiver);
  for (auto it = s.path.rbegin(); it != s.path.rend(); ++it) t = mutate_seed(t, *it);
  return t.vars;
}

namespace {

[[noreturn]] void over_budget(std::size_t limit) {
  throw DomainError("not finite type within budget (" + std::to_string(limit) + " clusters)");
}

}  // namespace

ClusterSearch explore_clusters(const Seed& base, std::size_t limit) {
  if (limit == 0) throw DomainError("cluster limit must be >= 1");
  ClusterSearch out;
  auto& found = out.seeds;
  found.push_back(base);
  std::set<ClusterKey> seen{cluster_key(base)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < base.rank(); ++k) {
      Seed next = mutate_seed(found[cur], k);
      if (!seen.insert(cluster_key(next)).second) continue;
      if (found.size() == limit) return out;
      found.push_back(std::move(next));
      queue.push_back(found.size() - 1);
    }
  }
  out.complete = true;
  return out;
}

std::vector<Seed> enumerate_clusters(const Seed& base, std::size_t limit) {
  auto search = explore_clusters(base, limit);
  if (!search.complete) over_budget(limit);
  return std::move(search.seeds);
}

std::vector<Seed> enumerate_clusters_parallel(const Seed& base, std::size_t limit) {
  if (limit == 0) throw DomainError("cluster limit must be >= 1");
  const std::size_t n = base.rank();
  std::vector<Seed> found{base};
  std::set<ClusterKey> seen{cluster_key(base)};
  std::size_t level_begin = 0;
  while (level_begin < found.size()) {
    const std::size_t level_end = found.size();
    const std::size_t jobs = (level_end - level_begin) * n;
    std::vector<Seed> children(jobs, base);
    std::vector<ClusterKey> keys(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t job = 0; job < jobs; ++job) {
      children[job] = mutate_seed(found[level_begin + job / n], job % n);
      keys[job] = cluster_key(children[job]);
    }
    // Merge in (parent, direction) order, which is exactly the FIFO order.
    for (std::size_t job = 0; job < jobs; ++job) {
      if (!seen.insert(keys[job]).second) continue;
      if (found.size() == limit) over_budget(limit);
      found.push_back(std::move(children[job]));
    }
    level_begin = level_end;
  }
  return found;
}

std::vector<LaurentPolynomial> distinct_cluster_variables(const std::vector<Seed>& seeds) {
  std::map<std::string, LaurentPolynomial> all;
  for (const auto& s : seeds) {
    for (const auto& v : s.vars) all.emplace(v.to_string(), v);
  }
  std::vector<LaurentPolynomial> out;
  for (auto& [k, v] : all) out.push_back(v);
  return out;
}

}  // namespace friezekit
