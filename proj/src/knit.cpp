#include "friezekit/knit.hpp"

#include <algorithm>
#include <sstream>

namespace friezekit {

FriezeArray knit_values(const Quiver& q, const std::vector<RingElement>& start, std::size_t forward,
                        std::size_t backward) {
  if (start.empty()) throw DomainError("empty start column");
  for (const auto& v : start) {
    if (v.kind() != start.front().kind()) throw DomainError("start values from different rings");
    if (v.is_zero()) throw DomainError("start values must be non-zero");
  }
  return knit(q, start, forward, backward, RingElement::one(start.front().kind()));
}

SymbolicFriezeArray knit_symbolic(const Quiver& q, std::size_t forward, std::size_t backward) {
  return knit(q, Seed::base(q).vars, forward, backward, LaurentPolynomial::constant(q.size(), 1));
}

FriezeArray specialize(const SymbolicFriezeArray& a, const std::vector<RingElement>& start) {
  FriezeArray out{a.quiver, a.first_column, {}};
  for (const auto& col : a.columns) {
    std::vector<RingElement> vals;
    for (const auto& p : col) {
      auto v = specialize(p, start);
      if (!v) throw DomainError("frieze value leaves the ring: " + p.to_string());
      vals.push_back(std::move(*v));
    }
    out.columns.push_back(std::move(vals));
  }
  return out;
}

FriezeArray knit_frieze(const Quiver& q, const std::vector<RingElement>& start, std::size_t forward,
                        std::size_t backward) {
  try {
    return knit_values(q, start, forward, backward);
  } catch (const KnitZeroDivisor&) {
    return specialize(knit_symbolic(q, forward, backward), start);
  }
}

std::vector<std::size_t> slice_levels(const Quiver& q) {
  std::vector<std::size_t> level(q.size(), 0);
  for (auto k : source_order(q)) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.arrows(k, j) > 0) level[j] = std::max(level[j], level[k] + 1);
    }
  }
  return level;
}

namespace {

template <class T, class Show>
std::string render(const BasicFriezeArray<T>& a, Show show) {
  const auto level = slice_levels(a.quiver);
  const std::size_t depth = *std::max_element(level.begin(), level.end()) + 1;
  std::size_t width = 1;
  for (const auto& col : a.columns) {
    for (const auto& v : col) width = std::max(width, show(v).size());
  }
  width += 2;
  const std::size_t slots = a.columns.size() * depth;
  std::ostringstream os;
  for (std::size_t k = 0; k < a.quiver.size(); ++k) {
    std::vector<std::string> row(slots, std::string(width, ' '));
    for (long c = a.first_column; c <= a.last_column(); ++c) {
      const auto slot = static_cast<std::size_t>(a.last_column() - c) * depth + (depth - 1 - level[k]);
      auto text = show(a.column(c)[k]);
      row[slot] = std::string(width - text.size(), ' ') + text;
    }
    std::string line;
    for (const auto& cell : row) line += cell;
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_frieze_text(const FriezeArray& a) {
  return render(a, [](const RingElement& v) { return v.to_string(); });
}

std::string render_frieze_text(const SymbolicFriezeArray& a) {
  return render(a, [](const LaurentPolynomial& p) { return p.to_string(); });
}

std::optional<long> translation_period(const FriezeArray& a) {
  const long n = static_cast<long>(a.columns.size());
  for (long p = 1; p < n; ++p) {
    bool ok = true;
    for (long c = 0; c + p < n && ok; ++c) ok = a.columns[static_cast<std::size_t>(c)] == a.columns[static_cast<std::size_t>(c + p)];
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace friezekit
