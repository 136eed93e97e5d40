#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

namespace friezekit {

/// A quiver without loops and 2-cycles, stored as its skew-symmetric exchange
/// matrix: b(i, j) = #arrows i->j minus #arrows j->i.
class Quiver {
 public:
  explicit Quiver(std::size_t n);
  /// Throws DomainError unless the matrix is square, skew-symmetric and n >= 1.
  static Quiver from_matrix(std::vector<std::vector<int>> b);
  /// Arrows as (source, target, multiplicity) with multiplicity >= 1.
  struct Arrow {
    std::size_t source, target;
    int multiplicity;
  };
  static Quiver from_arrows(std::size_t n, const std::vector<Arrow>& arrows);

  std::size_t size() const { return n_; }
  int b(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
  /// Number of arrows i -> j (zero when they point the other way).
  int arrows(std::size_t i, std::size_t j) const { return b(i, j) > 0 ? b(i, j) : 0; }
  std::vector<Arrow> arrow_list() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  void add(std::size_t i, std::size_t j, int m);

  std::size_t n_;
  std::vector<int> b_;
};

std::ostream& operator<<(std::ostream& os, const Quiver& q);

/// Fomin-Zelevinsky matrix mutation at k. Involutive.
Quiver mutate_quiver(const Quiver& q, std::size_t k);

bool is_acyclic(const Quiver& q);

/// Topological order (every vertex before the targets of its arrows), lowest
/// index first among ready vertices. Throws DomainError on a cyclic quiver.
std::vector<std::size_t> source_order(const Quiver& q);

bool is_source(const Quiver& q, std::size_t k);
bool is_sink(const Quiver& q, std::size_t k);

}  // namespace friezekit
