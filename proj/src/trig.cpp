#include "trigsamp/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trigsamp {

namespace {

constexpr long long kMaxGridNodes = 50'000'000;

using Term = std::pair<const MultiIndex*, Complex>;

std::vector<Term> flatten(const SparseCoefFn& f) {
  std::vector<Term> terms;
  terms.reserve(f.support_size());
  for (const auto& [k, c] : f.terms()) terms.push_back({&k, c});
  return terms;  // map iteration is already lexicographic
}

// out[g*sub_n + r] += phase(k_axis, g) * sub[r] for the axis' G nodes.
// Node phases e^{i k 2pi g / G} advance by one complex multiply per node.
void accumulate_axis(int k_axis, int nodes, double step_angle,
                     const std::vector<Complex>& sub, std::vector<Complex>& out) {
  const std::size_t sub_n = sub.size();
  const Complex step = std::polar(1.0, step_angle * k_axis);
  Complex w{1.0, 0.0};
  for (int g = 0; g < nodes; ++g) {
    Complex* dst = out.data() + static_cast<std::size_t>(g) * sub_n;
    for (std::size_t r = 0; r < sub_n; ++r) dst[r] += w * sub[r];
    w *= step;
  }
}

std::vector<Complex> eval_grid_rec(const Term* begin, const Term* end, int axis,
                                   int d, int nodes, double step_angle) {
  if (axis == d) {
    // A single fully resolved term.
    return {begin->second};
  }
  long long sub_count = 1;
  for (int a = axis + 1; a < d; ++a) sub_count *= nodes;
  std::vector<Complex> out(static_cast<std::size_t>(nodes) * sub_count,
                           Complex{0.0, 0.0});
  const Term* it = begin;
  while (it != end) {
    int k_axis = (*it->first)[axis];
    const Term* run = it;
    while (run != end && (*run->first)[axis] == k_axis) ++run;
    if (axis == d - 1) {
      // Terms are unique, so the run is a single coefficient.
      std::vector<Complex> sub{it->second};
      accumulate_axis(k_axis, nodes, step_angle, sub, out);
    } else {
      auto sub = eval_grid_rec(it, run, axis + 1, d, nodes, step_angle);
      accumulate_axis(k_axis, nodes, step_angle, sub, out);
    }
    it = run;
  }
  return out;
}

bool grid_adequate(const QuadratureGrid& g, int max_freq, double p,
                   int oversample_required) {
  if (p == 2.0) return g.nodes_per_axis >= 2 * max_freq + 1;
  return g.nodes_per_axis >= oversample_required * max_freq + 1;
}

double finite_p_norm(const std::vector<Complex>& values, double weight,
                     double p) {
  long double acc = 0.0L;
  if (p == 2.0) {
    for (const Complex& z : values) acc += (long double)std::norm(z);
  } else {
    for (const Complex& z : values) acc += (long double)std::pow(std::abs(z), p);
  }
  return std::pow(static_cast<double>(acc) * weight, 1.0 / p);
}

double sup_norm(const std::vector<Complex>& values) {
  double m = 0.0;
  for (const Complex& z : values) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

SparseCoefFn::SparseCoefFn(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
}

void SparseCoefFn::set(const MultiIndex& k, Complex c) {
  if (static_cast<int>(k.size()) != dim_)
    throw std::invalid_argument("frequency dimension mismatch");
  if (c == Complex{0.0, 0.0})
    terms_.erase(k);
  else
    terms_[k] = c;
}

void SparseCoefFn::add(const MultiIndex& k, Complex c) {
  if (static_cast<int>(k.size()) != dim_)
    throw std::invalid_argument("frequency dimension mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (c != Complex{0.0, 0.0}) terms_[k] = c;
    return;
  }
  it->second += c;
  if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

Complex SparseCoefFn::coef(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

int SparseCoefFn::max_abs_frequency() const {
  int m = 0;
  for (const auto& [k, c] : terms_)
    for (int kj : k) m = std::max(m, kj < 0 ? -kj : kj);
  return m;
}

double SparseCoefFn::l1() const {
  long double acc = 0.0L;
  for (const auto& [k, c] : terms_) acc += (long double)std::abs(c);
  return static_cast<double>(acc);
}

double SparseCoefFn::l2() const {
  long double acc = 0.0L;
  for (const auto& [k, c] : terms_) acc += (long double)std::norm(c);
  return std::sqrt(static_cast<double>(acc));
}

SparseCoefFn SparseCoefFn::restricted(const IndexSet& s) const {
  SparseCoefFn out(dim_);
  for (const auto& [k, c] : terms_)
    if (s.contains(k)) out.terms_[k] = c;
  return out;
}

IndexSet SparseCoefFn::support() const {
  std::vector<MultiIndex> members;
  members.reserve(terms_.size());
  for (const auto& [k, c] : terms_) members.push_back(k);
  return IndexSet::from_members(dim_, std::move(members), "support");
}

void SparseCoefFn::scale(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    terms_.clear();
    return;
  }
  for (auto& [k, c] : terms_) c *= z;
}

SparseCoefFn operator+(const SparseCoefFn& a, const SparseCoefFn& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  SparseCoefFn out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, c);
  return out;
}

SparseCoefFn operator-(const SparseCoefFn& a, const SparseCoefFn& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  SparseCoefFn out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, -c);
  return out;
}

long long QuadratureGrid::node_count() const {
  if (dim <= 0 || nodes_per_axis <= 0)
    throw std::invalid_argument("invalid grid");
  long long total = 1;
  for (int a = 0; a < dim; ++a) {
    total *= nodes_per_axis;
    if (total > kMaxGridNodes) throw std::invalid_argument("grid too large");
  }
  return total;
}

QuadratureGrid QuadratureGrid::for_max_frequency(int dim, int max_freq,
                                                 int oversample) {
  if (max_freq < 0 || oversample < 1)
    throw std::invalid_argument("invalid grid request");
  QuadratureGrid g;
  g.dim = dim;
  g.nodes_per_axis = oversample * max_freq + 1;
  g.node_count();  // size guard
  return g;
}

Complex eval(const SparseCoefFn& f, const double* x) {
  const int d = f.dim();
  if (d == 0) return {0.0, 0.0};
  const double x_last = x[d - 1];
  const Complex z_last = std::polar(1.0, x_last);
  Complex sum{0.0, 0.0};
  const MultiIndex* prev = nullptr;
  double prefix_angle = 0.0;
  Complex cur{0.0, 0.0};

  for (const auto& [k, c] : f.terms()) {
    bool same_prefix = prev != nullptr;
    if (same_prefix)
      for (int j = 0; j + 1 < d; ++j)
        if ((*prev)[j] != k[j]) {
          same_prefix = false;
          break;
        }
    if (!same_prefix) {
      prefix_angle = 0.0;
      for (int j = 0; j + 1 < d; ++j) prefix_angle += k[j] * x[j];
      cur = std::polar(1.0, prefix_angle + k[d - 1] * x_last);
    } else {
      int gap = k[d - 1] - (*prev)[d - 1];
      if (gap <= 24) {
        for (int s = 0; s < gap; ++s) cur *= z_last;
      } else {
        cur = std::polar(1.0, prefix_angle + k[d - 1] * x_last);
      }
    }
    sum += c * cur;
    prev = &k;
  }
  return sum;
}

std::vector<Complex> eval_at_points(const SparseCoefFn& f, const PointSet& xi) {
  if (xi.dim != f.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> out(xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) out[j] = eval(f, xi.point(j));
  return out;
}

std::vector<Complex> eval_on_grid(const SparseCoefFn& f,
                                  const QuadratureGrid& grid) {
  if (grid.dim != f.dim()) throw std::invalid_argument("dimension mismatch");
  const long long total = grid.node_count();
  if (f.support_size() == 0)
    return std::vector<Complex>(static_cast<std::size_t>(total),
                                Complex{0.0, 0.0});
  auto terms = flatten(f);
  const double step_angle = kTwoPi / grid.nodes_per_axis;
  return eval_grid_rec(terms.data(), terms.data() + terms.size(), 0, grid.dim,
                       grid.nodes_per_axis, step_angle);
}

NormResult lp_norm_mu(const SparseCoefFn& f, double p, const QuadratureGrid& g,
                      int oversample_required) {
  if (p < 1.0) throw std::invalid_argument("p must be at least 1");
  NormResult res;
  res.grid_warning =
      !grid_adequate(g, f.max_abs_frequency(), p, oversample_required);
  auto values = eval_on_grid(f, g);
  if (is_inf(p)) {
    res.value = sup_norm(values);
  } else {
    res.value = finite_p_norm(values, 1.0 / static_cast<double>(g.node_count()),
                              p);
  }
  return res;
}

double lp_norm_discrete(const std::vector<Complex>& samples, double p) {
  if (p < 1.0) throw std::invalid_argument("p must be at least 1");
  if (samples.empty()) throw std::invalid_argument("empty sample vector");
  if (is_inf(p)) return sup_norm(samples);
  return finite_p_norm(samples, 1.0 / static_cast<double>(samples.size()), p);
}

double lp_norm_discrete(const SparseCoefFn& f, double p, const PointSet& xi) {
  if (xi.size() == 0) throw std::invalid_argument("empty point set");
  return lp_norm_discrete(eval_at_points(f, xi), p);
}

NormResult lp_norm_mixed(const SparseCoefFn& f, double p, const PointSet& xi,
                         const QuadratureGrid& g, int oversample_required) {
  NormResult cont = lp_norm_mu(f, p, g, oversample_required);
  double disc = lp_norm_discrete(f, p, xi);
  NormResult res;
  res.grid_warning = cont.grid_warning;
  if (is_inf(p)) {
    res.value = std::max(cont.value, disc);
    return res;
  }
  double m = std::max(cont.value, disc);
  if (m == 0.0) {
    res.value = 0.0;
    return res;
  }
  // Scale by the max so large p cannot overflow.
  double ra = cont.value / m, rb = disc / m;
  res.value =
      m * std::pow((std::pow(ra, p) + std::pow(rb, p)) / 2.0, 1.0 / p);
  return res;
}

Complex inner_product_discrete(const std::vector<Complex>& u,
                               const std::vector<Complex>& v) {
  if (u.empty() || u.size() != v.size())
    throw std::invalid_argument("sample vectors must be nonempty and equal");
  long double re = 0.0L, im = 0.0L;
  for (std::size_t j = 0; j < u.size(); ++j) {
    Complex t = u[j] * std::conj(v[j]);
    re += (long double)t.real();
    im += (long double)t.imag();
  }
  double m = static_cast<double>(u.size());
  return {static_cast<double>(re) / m, static_cast<double>(im) / m};
}

}  // namespace trigsamp
