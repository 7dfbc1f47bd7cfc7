#pragma once

#include <string>
#include <vector>

namespace trigsamp {

// Frequency vector k in Z^d. std::vector comparison is lexicographic, which is
// the canonical ordering everywhere in this library.
using MultiIndex = std::vector<int>;

// Dyadic level vector s in N_0^d.
using DyadicVector = std::vector<int>;

// Dyadic level of a single frequency component: 0 for k=0, floor(log2|k|)+1
// otherwise. The block for level s covers [2^{s-1}] <= |k| < 2^s, with the
// integer part making the s=0 block equal to {0}.
int dyadic_level(int k);

DyadicVector dyadic_levels(const MultiIndex& k);

// Sum of per-coordinate dyadic levels; the index of the layer containing k.
int layer_of(const MultiIndex& k);

// Level of ||k||_inf, used by the l_inf-shell function class.
int shell_of(const MultiIndex& k);

// Finite duplicate-free set of frequencies in lexicographic order.
class IndexSet {
 public:
  IndexSet() = default;

  // Sorts and deduplicates. All members must have length dim.
  static IndexSet from_members(int dim, std::vector<MultiIndex> members,
                               std::string label = "");

  int dim() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const MultiIndex& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<MultiIndex>& members() const { return members_; }
  const std::string& label() const { return label_; }

  bool contains(const MultiIndex& k) const;

  // Largest |k_j| over all members and coordinates; 0 for the empty set.
  int max_abs_coordinate() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  int dim_ = 0;
  std::vector<MultiIndex> members_;
  std::string label_;
};

// Dyadic block rho(s) = {k : [2^{s_j-1}] <= |k_j| < 2^{s_j} for all j}.
IndexSet dyadic_block(const DyadicVector& s);

// Layer = union of rho(s) over ||s||_1 = j, dimension d.
IndexSet layer(int j, int d);

// Hyperbolic cross Q_n = union of rho(s) over ||s||_1 <= n.
IndexSet hyperbolic_cross(int n, int d);

// Cube [-M, M]^d.
IndexSet full_cube(int M, int d);

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

// One tuple per line, coordinates space-separated.
std::string to_text(const IndexSet& s);

}  // namespace trigsamp
