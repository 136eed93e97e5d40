#include "friezekit/quiver.hpp"

#include <set>
#include <string>

#include "friezekit/rings.hpp"

namespace friezekit {

Quiver::Quiver(std::size_t n) : n_(n), b_(n * n, 0) {
  if (n == 0) throw DomainError("quiver needs at least one vertex");
}

Quiver Quiver::from_matrix(std::vector<std::vector<int>> b) {
  Quiver q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].size() != b.size()) throw DomainError("exchange matrix is not square");
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[i][j] != -b[j][i]) throw DomainError("exchange matrix is not skew-symmetric");
      q.b_[i * q.n_ + j] = b[i][j];
    }
  }
  return q;
}

Quiver Quiver::from_arrows(std::size_t n, const std::vector<Arrow>& arrows) {
  Quiver q(n);
  for (const auto& a : arrows) {
    if (a.source >= n || a.target >= n) throw DomainError("arrow endpoint out of range");
    if (a.source == a.target) throw DomainError("loops are not allowed");
    if (a.multiplicity < 1) throw DomainError("arrow multiplicity must be >= 1");
    q.add(a.source, a.target, a.multiplicity);
  }
  return q;
}

void Quiver::add(std::size_t i, std::size_t j, int m) {
  b_[i * n_ + j] += m;
  b_[j * n_ + i] -= m;
}

std::vector<Quiver::Arrow> Quiver::arrow_list() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (b(i, j) > 0) out.push_back({i, j, b(i, j)});
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quiver& q) {
  os << "Quiver(" << q.size() << ";";
  for (const auto& a : q.arrow_list()) {
    os << ' ' << a.source << "->" << a.target;
    if (a.multiplicity > 1) os << 'x' << a.multiplicity;
  }
  return os << ')';
}

Quiver mutate_quiver(const Quiver& q, std::size_t k) {
  const std::size_t n = q.size();
  if (k >= n) throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  std::vector<std::vector<int>> b(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        b[i][j] = -q.b(i, j);
      } else {
        const int bik = q.b(i, k);
        const int sign = (bik > 0) - (bik < 0);
        const int prod = bik * q.b(k, j);
        b[i][j] = q.b(i, j) + sign * (prod > 0 ? prod : 0);
      }
    }
  }
  return Quiver::from_matrix(std::move(b));
}

namespace {

// Kahn's algorithm; returns fewer than n vertices iff there is a cycle.
std::vector<std::size_t> kahn(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (q.b(i, j) > 0) ++indeg[j];
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.insert(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (std::size_t j = 0; j < n; ++j) {
      if (q.b(v, j) > 0 && --indeg[j] == 0) ready.insert(j);
    }
  }
  return order;
}

}  // namespace

bool is_acyclic(const Quiver& q) { return kahn(q).size() == q.size(); }

std::vector<std::size_t> source_order(const Quiver& q) {
  auto order = kahn(q);
  if (order.size() != q.size()) throw DomainError("quiver has an oriented cycle");
  return order;
}

bool is_source(const Quiver& q, std::size_t k) {
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q.b(k, j) < 0) return false;
  }
  return true;
}

bool is_sink(const Quiver& q, std::size_t k) {
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q.b(k, j) > 0) return false;
  }
  return true;
}

}  // namespace friezekit
