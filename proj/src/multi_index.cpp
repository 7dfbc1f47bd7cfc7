#include "trigsamp/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace trigsamp {

namespace {

constexpr int kMaxLevel = 30;
constexpr long long kMaxSetSize = 20'000'000;

void check_dim(int d) {
  if (d <= 0) throw std::invalid_argument("dimension must be positive");
}

// Frequencies of one coordinate at dyadic level s, ascending.
std::vector<int> level_values(int s) {
  if (s < 0) throw std::invalid_argument("dyadic level must be nonnegative");
  if (s > kMaxLevel) throw std::invalid_argument("dyadic level too large");
  if (s == 0) return {0};
  int lo = 1 << (s - 1), hi = 1 << s;
  std::vector<int> out;
  out.reserve(2 * (hi - lo));
  for (int k = -hi + 1; k <= -lo; ++k) out.push_back(k);
  for (int k = lo; k < hi; ++k) out.push_back(k);
  return out;
}

void cartesian_append(const std::vector<std::vector<int>>& per_axis,
                      std::vector<MultiIndex>& out) {
  long long total = 1;
  for (const auto& v : per_axis) {
    total *= static_cast<long long>(v.size());
    if (total > kMaxSetSize) throw std::invalid_argument("index set too large");
  }
  int d = static_cast<int>(per_axis.size());
  MultiIndex k(d, 0);
  std::vector<std::size_t> pos(d, 0);
  for (long long i = 0; i < total; ++i) {
    for (int j = 0; j < d; ++j) k[j] = per_axis[j][pos[j]];
    out.push_back(k);
    for (int j = d - 1; j >= 0; --j) {
      if (++pos[j] < per_axis[j].size()) break;
      pos[j] = 0;
    }
  }
}

// All s in N_0^d with ||s||_1 = j, lexicographic.
void for_each_composition(int j, int d,
                          const std::function<void(const DyadicVector&)>& fn) {
  DyadicVector s(d, 0);
  // Recursive descent without recursion: place coordinates left to right.
  std::function<void(int, int)> place = [&](int axis, int rest) {
    if (axis == d - 1) {
      s[axis] = rest;
      fn(s);
      return;
    }
    for (int val = 0; val <= rest; ++val) {
      s[axis] = val;
      place(axis + 1, rest - val);
    }
  };
  place(0, j);
}

}  // namespace

int dyadic_level(int k) {
  if (k == 0) return 0;
  unsigned a = static_cast<unsigned>(k < 0 ? -(long long)k : k);
  int s = 0;
  while (a) {
    ++s;
    a >>= 1;
  }
  return s;  // floor(log2|k|) + 1
}

DyadicVector dyadic_levels(const MultiIndex& k) {
  DyadicVector s(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) s[j] = dyadic_level(k[j]);
  return s;
}

int layer_of(const MultiIndex& k) {
  int j = 0;
  for (int c : k) j += dyadic_level(c);
  return j;
}

int shell_of(const MultiIndex& k) {
  int m = 0;
  for (int c : k) m = std::max(m, c < 0 ? -c : c);
  return dyadic_level(m);
}

IndexSet IndexSet::from_members(int dim, std::vector<MultiIndex> members,
                                std::string label) {
  check_dim(dim);
  for (const auto& k : members)
    if (static_cast<int>(k.size()) != dim)
      throw std::invalid_argument("member dimension mismatch");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IndexSet s;
  s.dim_ = dim;
  s.members_ = std::move(members);
  s.label_ = std::move(label);
  return s;
}

bool IndexSet::contains(const MultiIndex& k) const {
  return std::binary_search(members_.begin(), members_.end(), k);
}

int IndexSet::max_abs_coordinate() const {
  int m = 0;
  for (const auto& k : members_)
    for (int c : k) m = std::max(m, c < 0 ? -c : c);
  return m;
}

IndexSet dyadic_block(const DyadicVector& s) {
  check_dim(static_cast<int>(s.size()));
  std::vector<std::vector<int>> per_axis;
  per_axis.reserve(s.size());
  for (int sj : s) per_axis.push_back(level_values(sj));
  std::vector<MultiIndex> members;
  cartesian_append(per_axis, members);
  std::ostringstream label;
  label << "block(";
  for (std::size_t j = 0; j < s.size(); ++j)
    label << (j ? "," : "") << s[j];
  label << ")";
  return IndexSet::from_members(static_cast<int>(s.size()), std::move(members),
                                label.str());
}

IndexSet layer(int j, int d) {
  check_dim(d);
  if (j < 0) throw std::invalid_argument("layer index must be nonnegative");
  std::vector<MultiIndex> members;
  for_each_composition(j, d, [&](const DyadicVector& s) {
    std::vector<std::vector<int>> per_axis;
    per_axis.reserve(s.size());
    for (int sj : s) per_axis.push_back(level_values(sj));
    cartesian_append(per_axis, members);
  });
  return IndexSet::from_members(
      d, std::move(members), "layer(" + std::to_string(j) + ")");
}

IndexSet hyperbolic_cross(int n, int d) {
  check_dim(d);
  if (n < 0) throw std::invalid_argument("cross level must be nonnegative");
  std::vector<MultiIndex> members;
  for (int j = 0; j <= n; ++j) {
    for_each_composition(j, d, [&](const DyadicVector& s) {
      std::vector<std::vector<int>> per_axis;
      per_axis.reserve(s.size());
      for (int sj : s) per_axis.push_back(level_values(sj));
      cartesian_append(per_axis, members);
    });
  }
  return IndexSet::from_members(
      d, std::move(members), "cross(" + std::to_string(n) + ")");
}

IndexSet full_cube(int M, int d) {
  check_dim(d);
  if (M < 0) throw std::invalid_argument("cube radius must be nonnegative");
  std::vector<int> axis;
  axis.reserve(2 * M + 1);
  for (int k = -M; k <= M; ++k) axis.push_back(k);
  std::vector<std::vector<int>> per_axis(d, axis);
  std::vector<MultiIndex> members;
  cartesian_append(per_axis, members);
  return IndexSet::from_members(
      d, std::move(members), "cube(" + std::to_string(M) + ")");
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<MultiIndex> members = a.members();
  members.insert(members.end(), b.members().begin(), b.members().end());
  return IndexSet::from_members(a.dim(), std::move(members),
                                a.label() + "|" + b.label());
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<MultiIndex> members;
  for (const auto& k : a)
    if (!b.contains(k)) members.push_back(k);
  return IndexSet::from_members(a.dim(), std::move(members),
                                a.label() + "\\" + b.label());
}

std::string to_text(const IndexSet& s) {
  std::ostringstream out;
  for (const auto& k : s) {
    for (std::size_t j = 0; j < k.size(); ++j)
      out << (j ? " " : "") << k[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace trigsamp
