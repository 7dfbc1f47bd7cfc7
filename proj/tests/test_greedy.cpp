#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "trigsamp/function_classes.hpp"
#include "trigsamp/greedy.hpp"
#include "trigsamp/rng.hpp"

using namespace trigsamp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PointSet equispaced(int m) {
  PointSet xi;
  xi.dim = 1;
  for (int j = 0; j < m; ++j)
    xi.coords.push_back(kTwoPi * static_cast<double>(j) / m);
  return xi;
}

// Columns sqrt(m) * e_i are orthonormal in the discrete L_2(mu_m).
DictionaryOnPoints canonical_dict(int m, int n) {
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(m, n);
  for (int i = 0; i < n; ++i)
    values(i, i) = std::sqrt(static_cast<double>(m));
  std::vector<MultiIndex> labels;
  for (int i = 0; i < n; ++i) labels.push_back({i});
  return DictionaryOnPoints::from_values(values,
                                         IndexSet::from_members(1, labels));
}

IndexSet positive_range(int lo, int hi) {
  std::vector<MultiIndex> members;
  for (int k = lo; k <= hi; ++k) members.push_back({k});
  return IndexSet::from_members(1, members);
}

double disc_norm(const Eigen::VectorXcd& x) {
  return x.norm() / std::sqrt(static_cast<double>(x.size()));
}

double disc_ip_abs(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::abs(a.dot(b)) / static_cast<double>(a.size());
}

}  // namespace

TEST_CASE("pursuit recovers a single dictionary column in one step") {
  DictionaryOnPoints dict =
      DictionaryOnPoints::trig(full_cube(2, 1), equispaced(11));
  const Complex c{0.3, -1.2};
  Eigen::VectorXcd f0 = c * dict.values.col(3);  // column of k=1

  WompTrace trace = womp(f0, dict, 1.0, 3);
  REQUIRE(trace.iterations_done == 1);
  REQUIRE(trace.picks.size() == 1);
  CHECK(trace.picks[0] == 3);
  REQUIRE(trace.residual_norms.size() == 2);
  CHECK(trace.residual_norms[0] == doctest::Approx(std::abs(c)).epsilon(1e-12));
  CHECK(trace.residual_norms[1] < 1e-12);
  REQUIRE(trace.coefficients.support_size() == 1);
  CHECK(std::abs(trace.coefficients.coef({1}) - c) < 1e-12);
}

TEST_CASE("pursuit on orthonormal columns peels correlations in order") {
  DictionaryOnPoints dict = canonical_dict(5, 3);
  Eigen::VectorXcd f0 =
      0.8 * dict.values.col(0) + 0.6 * dict.values.col(1);

  SUBCASE("plain matching pursuit, t = 1") {
    WompTrace trace = womp(f0, dict, 1.0, 3);
    REQUIRE(trace.picks.size() == 2);
    CHECK(trace.picks[0] == 0);
    CHECK(trace.picks[1] == 1);
    REQUIRE(trace.residual_norms.size() == 3);
    CHECK(trace.residual_norms[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace.residual_norms[1] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(trace.residual_norms[2] < 1e-12);
  }

  SUBCASE("weak selection accepts the same argmax trajectory") {
    // With t = 0.7 both columns are admissible first picks (0.6 >= 0.7 * 0.8);
    // the implementation always takes the argmax, so the trace matches t = 1
    // and still satisfies the weaker threshold.
    WompTrace trace = womp(f0, dict, 0.7, 3);
    CHECK(trace.t == 0.7);
    REQUIRE(trace.picks.size() == 2);
    CHECK(trace.picks[0] == 0);
    CHECK(trace.residual_norms.back() < 1e-12);
  }

  SUBCASE("equal correlations break to the earlier column") {
    Eigen::VectorXcd tied =
        0.5 * dict.values.col(0) + 0.5 * dict.values.col(2);
    WompTrace trace = womp(tied, dict, 1.0, 2);
    REQUIRE(trace.picks.size() == 2);
    CHECK(trace.picks[0] == 0);
    CHECK(trace.picks[1] == 2);
  }
}

TEST_CASE("pursuit rejects bad arguments") {
  DictionaryOnPoints dict = canonical_dict(4, 3);
  Eigen::VectorXcd f0 = Eigen::VectorXcd::Ones(4);
  CHECK_THROWS_AS(womp(f0, dict, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(womp(f0, dict, -0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(womp(f0, dict, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(womp(f0, dict, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(womp(f0, dict, 1.0, 4), std::invalid_argument);  // > n
  DictionaryOnPoints wide = canonical_dict(2, 2);
  Eigen::VectorXcd short_f = Eigen::VectorXcd::Ones(2);
  CHECK_THROWS_AS(womp(short_f, wide, 1.0, 3), std::invalid_argument);  // > m
  CHECK_THROWS_AS(womp(f0, wide, 1.0, 1), std::invalid_argument);  // length
}

TEST_CASE("pursuit residuals shrink and end orthogonal to the picked span") {
  const int m = 40;
  DictionaryOnPoints dict =
      DictionaryOnPoints::trig(full_cube(6, 1), draw_points(m, 1, 31));
  RngStream rng(derive_seed(31, 77));
  Eigen::VectorXcd f0(m);
  for (int j = 0; j < m; ++j) f0(j) = rng.complex_normal();

  WompTrace trace = womp(f0, dict, 1.0, 8);
  REQUIRE(trace.iterations_done == 8);
  for (std::size_t i = 1; i < trace.residual_norms.size(); ++i)
    CHECK(trace.residual_norms[i] <= trace.residual_norms[i - 1] + 1e-12);

  // Reconstruct the residual from the reported coefficients; its norm must
  // match the trace and it must be orthogonal to every picked column.
  Eigen::VectorXcd approx = Eigen::VectorXcd::Zero(m);
  for (const auto& [k, c] : trace.coefficients.terms()) {
    bool found = false;
    for (int col = 0; col < dict.n_cols(); ++col) {
      if (dict.indices[col] == k) {
        approx += c * dict.values.col(col);
        found = true;
      }
    }
    CHECK(found);
  }
  Eigen::VectorXcd residual = f0 - approx;
  CHECK(disc_norm(residual) ==
        doctest::Approx(trace.residual_norms.back()).epsilon(1e-9));
  for (int pick : trace.picks)
    CHECK(disc_ip_abs(residual, dict.values.col(pick)) < 1e-8);
}

TEST_CASE("pursuit survives a numerically singular span") {
  Eigen::MatrixXcd values(3, 2);
  values.col(0) << 1.0, 1.0, 0.0;
  values.col(1) << 1.0, 1.0, 1e-17;  // parallel to column 0 at double precision
  DictionaryOnPoints dict = DictionaryOnPoints::from_values(
      values, IndexSet::from_members(1, {{0}, {1}}));

  Eigen::VectorXcd f0(3);
  f0 << 1.0, 0.0, 1e-8;
  WompTrace trace = womp(f0, dict, 1.0, 2);
  REQUIRE(trace.iterations_done == 2);
  CHECK(trace.singular_projection);
  // The minimum-norm solve cannot do worse than the rank-1 projection.
  CHECK(trace.residual_norms.back() <= trace.residual_norms[1] + 1e-12);
}

TEST_CASE("pursuit never selects a zero column") {
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(4, 2);
  values.col(1) = Eigen::VectorXcd::Ones(4);
  DictionaryOnPoints dict = DictionaryOnPoints::from_values(
      values, IndexSet::from_members(1, {{0}, {1}}));
  CHECK(dict.degenerate[0] == 1);
  CHECK(dict.degenerate[1] == 0);

  Eigen::VectorXcd f0 = Eigen::VectorXcd::Ones(4);
  WompTrace trace = womp(f0, dict, 1.0, 2);
  REQUIRE(trace.picks.size() == 1);
  CHECK(trace.picks[0] == 1);
  CHECK(trace.residual_norms.back() < 1e-12);
}

TEST_CASE("exhaustive best subset approximation") {
  // Frequencies {0,1,2} on 7 equispaced points are discrete-orthonormal, so
  // the best v-term error is the l_2 tail of the coefficients.
  DictionaryOnPoints dict =
      DictionaryOnPoints::trig(positive_range(0, 2), equispaced(7));
  Eigen::VectorXcd f0 = dict.values.col(0) + 0.5 * dict.values.col(1) +
                        0.25 * dict.values.col(2);

  SUBCASE("tail errors against hand-computed values") {
    BestTermResult b1 = best_v_term_discrete(f0, dict, 1);
    CHECK(b1.error == doctest::Approx(0.5590169943749475).epsilon(1e-12));
    REQUIRE(b1.subset == std::vector<int>{0});
    CHECK(std::abs(b1.approx.coef({0}) - Complex{1.0, 0.0}) < 1e-10);

    BestTermResult b2 = best_v_term_discrete(f0, dict, 2);
    CHECK(b2.error == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(b2.subset == std::vector<int>{0, 1});

    BestTermResult b3 = best_v_term_discrete(f0, dict, 3);
    CHECK(b3.error < 1e-12);
  }

  SUBCASE("ties resolve to the first subset in enumeration order") {
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(7);
    BestTermResult b = best_v_term_discrete(zero, dict, 2);
    CHECK(b.error < 1e-15);
    CHECK(b.subset == std::vector<int>{0, 1});
  }

  SUBCASE("oracle never loses to the pursuit at the same term count") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RngStream rng(derive_seed(900, seed));
      Eigen::MatrixXcd values(10, 8);
      for (int j = 0; j < 10; ++j)
        for (int c = 0; c < 8; ++c) values(j, c) = rng.complex_normal();
      std::vector<MultiIndex> labels;
      for (int c = 0; c < 8; ++c) labels.push_back({c});
      DictionaryOnPoints rand_dict = DictionaryOnPoints::from_values(
          values, IndexSet::from_members(1, labels));
      Eigen::VectorXcd target(10);
      for (int j = 0; j < 10; ++j) target(j) = rng.complex_normal();

      BestTermResult oracle = best_v_term_discrete(target, rand_dict, 2);
      WompTrace greedy = womp(target, rand_dict, 1.0, 2);
      CHECK(oracle.error <= greedy.residual_norms.back() + 1e-12);
    }
  }

  SUBCASE("guards") {
    CHECK_THROWS_AS(best_v_term_discrete(f0, dict, 0), std::invalid_argument);
    CHECK_THROWS_AS(best_v_term_discrete(f0, dict, 4), std::invalid_argument);
    CHECK_THROWS_AS(best_v_term_discrete(f0, dict, 1, 4.0),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(best_v_term_discrete(f0, dict, 2, 2.0, 2),
                         doctest::Contains("cap"), std::invalid_argument);
  }
}

TEST_CASE("thresholding keeps the largest magnitudes") {
  SparseCoefFn f(1);
  f.set({0}, {0.4, 0.0});
  f.set({1}, {-0.3, 0.0});
  f.set({2}, {0.0, 0.2});
  f.set({3}, {0.1, 0.0});

  SUBCASE("tails at each cut") {
    ThresholdResult r2 = threshold_v(f, 2);
    REQUIRE(r2.kept.support_size() == 2);
    CHECK(std::abs(r2.kept.coef({0}) - Complex{0.4, 0.0}) < 1e-15);
    CHECK(std::abs(r2.kept.coef({1}) - Complex{-0.3, 0.0}) < 1e-15);
    CHECK(r2.tail_l1 == doctest::Approx(0.3).epsilon(1e-14));

    ThresholdResult r0 = threshold_v(f, 0);
    CHECK(r0.kept.support_size() == 0);
    CHECK(r0.tail_l1 == doctest::Approx(1.0).epsilon(1e-14));

    ThresholdResult r9 = threshold_v(f, 9);
    CHECK(r9.kept.support_size() == 4);
    CHECK(r9.tail_l1 == 0.0);

    CHECK_THROWS_AS(threshold_v(f, -1), std::invalid_argument);
  }

  SUBCASE("equal magnitudes keep the lexicographically smallest frequencies") {
    SparseCoefFn tied(1);
    tied.set({3}, {0.5, 0.0});
    tied.set({1}, {0.0, 0.5});
    tied.set({2}, {-0.5, 0.0});
    ThresholdResult r = threshold_v(tied, 2);
    REQUIRE(r.kept.support_size() == 2);
    CHECK(std::abs(r.kept.coef({1})) == doctest::Approx(0.5));
    CHECK(std::abs(r.kept.coef({2})) == doctest::Approx(0.5));
    CHECK(r.tail_l1 == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("threshold tails obey the summability bound") {
  // For coefficients with (sum |c|^beta)^{1/beta} = B and any cut v, the
  // decreasing rearrangement gives tail_v <= (v+1)^{1-1/beta} * B.
  SUBCASE("frozen instance") {
    SparseCoefFn f(1);
    f.set({0}, {0.4, 0.0});
    f.set({1}, {0.3, 0.0});
    f.set({2}, {0.2, 0.0});
    f.set({3}, {0.1, 0.0});
    const double norm_half = a_beta_norm(f, 0.5);
    CHECK(norm_half == doctest::Approx(3.7776565705218186).epsilon(1e-12));
    const double bound = std::pow(3.0, 1.0 - 2.0) * norm_half;
    CHECK(bound == doctest::Approx(1.2592188568406062).epsilon(1e-12));
    CHECK(threshold_v(f, 2).tail_l1 <= bound);
  }

  SUBCASE("random draws never violate the bound") {
    const double betas[] = {0.25, 0.5, 1.0};
    const int cuts[] = {0, 1, 2, 5, 11};
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
      RngStream rng(derive_seed(4242, trial));
      SparseCoefFn f(1);
      const int support = 1 + static_cast<int>(rng.below(24));
      for (int i = 0; i < support; ++i) {
        int k = static_cast<int>(rng.below(41)) - 20;
        f.set({k}, rng.complex_normal());
      }
      for (double beta : betas) {
        const double norm = a_beta_norm(f, beta);
        for (int v : cuts) {
          const double bound =
              std::pow(static_cast<double>(v + 1), 1.0 - 1.0 / beta) * norm;
          CHECK(threshold_v(f, v).tail_l1 <= bound * (1.0 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("incremental greedy reproduces simple targets") {
  const IndexSet dict = full_cube(8, 1);
  const QuadratureGrid grid = QuadratureGrid::for_max_frequency(1, 8);

  SUBCASE("single term, p = 2") {
    SparseCoefFn target(1);
    target.set({3}, {0.7, -0.2});
    SparseCoefFn g = greedy_a1_lp(target, dict, 1, 2.0, grid);
    REQUIRE(g.support_size() == 1);
    CHECK(std::abs(g.coef({3}) - Complex{0.7, -0.2}) < 1e-8);
    CHECK(lp_norm_mu(target - g, 2.0, grid).value < 1e-8);
  }

  SUBCASE("single term, p away from 2") {
    SparseCoefFn target(1);
    target.set({-2}, {0.5, 0.9});
    for (double p : {1.5, 3.0}) {
      SparseCoefFn g = greedy_a1_lp(target, dict, 1, p, grid);
      CHECK(lp_norm_mu(target - g, p, grid).value < 1e-6);
    }
  }

  SUBCASE("guards") {
    SparseCoefFn target(1);
    target.set({0}, {1.0, 0.0});
    CHECK_THROWS_AS(greedy_a1_lp(target, dict, 1, 1.0, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(greedy_a1_lp(target, dict, 1, kInf, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(greedy_a1_lp(target, dict, 0, 2.0, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(greedy_a1_lp(target, IndexSet(), 1, 2.0, grid),
                    std::invalid_argument);
    SparseCoefFn planar(2);
    planar.set({1, 0}, {1.0, 0.0});
    CHECK_THROWS_AS(greedy_a1_lp(planar, dict, 1, 2.0, grid),
                    std::invalid_argument);
  }
}

TEST_CASE("incremental greedy matches the tail error on a flat target") {
  // Equal coefficients 1/16 on k = 1..16: unit l_1 mass, best v-term error
  // sqrt(16-v)/16 in L_2. The greedy picks one fresh frequency per step with
  // the exact coefficient, so it lands on the tail error.
  SparseCoefFn target(1);
  for (int k = 1; k <= 16; ++k) target.set({k}, {1.0 / 16.0, 0.0});
  const IndexSet dict = positive_range(1, 16);
  const QuadratureGrid grid = QuadratureGrid::for_max_frequency(1, 16);

  double previous = 2.0;
  for (int v : {1, 2, 4, 8, 12}) {
    SparseCoefFn g = greedy_a1_lp(target, dict, v, 2.0, grid);
    CHECK(static_cast<int>(g.support_size()) <= v);
    const double err = lp_norm_mu(target - g, 2.0, grid).value;
    const double tail = std::sqrt(16.0 - v) / 16.0;
    CHECK(err == doctest::Approx(tail).epsilon(1e-9));
    CHECK(err <= std::pow(v + 1.0, -0.5) + 1e-9);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(std::sqrt(12.0) / 16.0 ==
        doctest::Approx(0.21650635094610965).epsilon(1e-12));

  SUBCASE("budget beyond the support recovers the target") {
    SparseCoefFn g = greedy_a1_lp(target, dict, 20, 2.0, grid);
    CHECK(lp_norm_mu(target - g, 2.0, grid).value < 1e-8);
  }

  SUBCASE("p = 2.5 still drives a two-term target to zero") {
    SparseCoefFn two(1);
    two.set({1}, {0.6, 0.0});
    two.set({5}, {0.0, -0.4});
    SparseCoefFn g =
        greedy_a1_lp(two, positive_range(1, 8), 2, 2.5,
                     QuadratureGrid::for_max_frequency(1, 8));
    CHECK(lp_norm_mu(two - g, 2.5, QuadratureGrid::for_max_frequency(1, 8))
              .value < 1e-4);
  }
}

TEST_CASE("span separation constant") {
  SUBCASE("orthonormal exact system sits at 1") {
    DictionaryOnPoints dict =
        DictionaryOnPoints::trig(full_cube(2, 1), equispaced(11));
    UpEstimate est = up_constant(dict, 1, 3);
    CHECK(est.mode == UdMode::exhaustive);
    CHECK_FALSE(est.unbounded);
    CHECK(est.u_value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(est.pairs_checked == 5 * 6);  // C(5,1) * C(4,2)
  }

  SUBCASE("touching spans flag unbounded") {
    Eigen::MatrixXcd values(4, 3);
    values.col(0) = Eigen::VectorXcd::Ones(4);
    values.col(1) = Eigen::VectorXcd::Ones(4);
    values.col(2) << 1.0, -1.0, 1.0, -1.0;
    DictionaryOnPoints dict = DictionaryOnPoints::from_values(
        values, IndexSet::from_members(1, {{0}, {1}, {2}}));
    UpEstimate est = up_constant(dict, 1, 2);
    CHECK(est.unbounded);
    CHECK(est.u_value == kInf);
  }

  SUBCASE("no room for a second span gives the trivial constant") {
    DictionaryOnPoints dict = canonical_dict(4, 3);
    UpEstimate est = up_constant(dict, 3, 3);
    CHECK(est.u_value == 1.0);
    CHECK(est.pairs_checked == 0);
  }

  SUBCASE("generic dictionaries stay at or above 1 and sample determinism") {
    DictionaryOnPoints dict =
        DictionaryOnPoints::trig(full_cube(4, 1), draw_points(30, 1, 8));
    UpEstimate a = up_constant(dict, 2, 4, 200, 99);
    CHECK(a.mode == UdMode::sampled);
    CHECK(a.pairs_checked == 200);
    CHECK(a.u_value >= 1.0);
    UpEstimate b = up_constant(dict, 2, 4, 200, 99);
    CHECK(a.u_value == b.u_value);
  }

  SUBCASE("guards") {
    DictionaryOnPoints dict = canonical_dict(4, 3);
    CHECK_THROWS_AS(up_constant(dict, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(up_constant(dict, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(up_constant(dict, 2, 1), std::invalid_argument);
  }
}

TEST_CASE("worst p-to-2 ratio over sparse draws") {
  const IndexSet pool = positive_range(1, 8);
  const QuadratureGrid grid = QuadratureGrid::for_max_frequency(1, 8);

  SUBCASE("one term is flat, so every p gives ratio 1") {
    for (double p : {2.0, 4.0, kInf})
      CHECK(nikolskii_worst_ratio(pool, 1, p, 20, 3, grid) ==
            doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("p = 2 is the identity ratio at any sparsity") {
    CHECK(nikolskii_worst_ratio(pool, 3, 2.0, 50, 4, grid) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("sparsity bound u^{1/2 - 1/p} holds on every draw") {
    double worst_inf = nikolskii_worst_ratio(pool, 4, kInf, 200, 5, grid);
    CHECK(worst_inf >= 1.0);
    CHECK(worst_inf <= 2.0 + 1e-9);

    double worst_4 = nikolskii_worst_ratio(pool, 4, 4.0, 300, 6, grid);
    CHECK(worst_4 <= std::sqrt(2.0) + 1e-9);
  }

  SUBCASE("equal coefficients attain the sup-norm bound exactly") {
    SparseCoefFn dirichlet(1);
    for (int k = 1; k <= 4; ++k) dirichlet.set({k}, {1.0, 0.0});
    const double sup = lp_norm_mu(dirichlet, kInf, grid).value;
    const double l2 = lp_norm_mu(dirichlet, 2.0, grid).value;
    CHECK(sup / l2 == doctest::Approx(2.0).epsilon(1e-9));
  }

  SUBCASE("guards") {
    CHECK_THROWS_AS(nikolskii_worst_ratio(pool, 0, 4.0, 5, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(nikolskii_worst_ratio(pool, 9, 4.0, 5, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(nikolskii_worst_ratio(pool, 2, 1.5, 5, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(nikolskii_worst_ratio(pool, 2, 4.0, 0, 1, grid),
                    std::invalid_argument);
  }
}

TEST_CASE("norm equivalence ratios") {
  SUBCASE("the exact system on an adequate grid is a perfect basis") {
    RieszBessel rb = riesz_bessel_exact(full_cube(3, 1), 50, 11,
                                        QuadratureGrid::for_max_frequency(1, 3, 2));
    CHECK(rb.r1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rb.r2 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rb.k == doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("orthonormal raw columns are a perfect discrete basis") {
    RieszBessel rb = riesz_bessel_discrete(canonical_dict(6, 6), 40, 12);
    CHECK(rb.r1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rb.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rb.k == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("duplicated columns destroy the lower ratio") {
    Eigen::MatrixXcd values = Eigen::MatrixXcd::Ones(1, 2);
    DictionaryOnPoints dict = DictionaryOnPoints::from_values(
        values, IndexSet::from_members(1, {{0}, {1}}));
    RieszBessel rb = riesz_bessel_discrete(dict, 500, 5);
    CHECK(rb.r1 < 0.3);               // near-cancelling coefficient draws
    CHECK(rb.r2 > 1.3);               // near-aligned draws approach sqrt(2)
    CHECK(rb.k == doctest::Approx(1.0 / (rb.r1 * rb.r1)).epsilon(1e-9));
  }

  SUBCASE("guards") {
    QuadratureGrid grid = QuadratureGrid::for_max_frequency(1, 2);
    CHECK_THROWS_AS(riesz_bessel_exact(IndexSet(), 5, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(riesz_bessel_exact(full_cube(1, 1), 0, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(riesz_bessel_discrete(canonical_dict(3, 3), 0, 1),
                    std::invalid_argument);
  }
}
