#include "phk/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace phk {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

IntRow to_integer_row(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) l = lcm(l, Integer(v.get_den()));
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
  make_primitive(out);
  return out;
}

/// a·r − b·p, merged by column.
IntRow combine(const IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
  IntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t exact_rank(std::vector<SparseRow> rows) {
  std::vector<IntRow> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (!r.empty()) work.push_back(to_integer_row(r));
  }
  std::stable_sort(work.begin(), work.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  std::unordered_map<std::size_t, IntRow> pivots;
  for (auto& r : work) {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        std::size_t col = r.front().first;
        pivots.emplace(col, std::move(r));
        break;
      }
      const IntRow& p = it->second;
      Integer g = gcd(p.front().second, r.front().second);
      Integer a = p.front().second / g;
      Integer b = r.front().second / g;
      r = combine(r, a, p, b);
      make_primitive(r);
    }
  }
  return pivots.size();
}

}  // namespace phk
