#pragma once

#include <cstdint>

#include "trigsamp/trig.hpp"

namespace trigsamp {

// Layer-decay class: the A_beta quasi-norm of the layer-j part is bounded by
// 2^{-a*j} * max(j,1)^{(d-1)*b}.
struct ClassParamsW {
  double a = 1.0;
  double b = 0.0;
  double beta = 1.0;
};

// l_inf-shell decay class: shell-j quasi-norm bounded by 2^{-r*j}.
struct ClassParamsA {
  double r = 1.0;
  double beta = 1.0;
};

// Restriction of f to the dyadic block rho(s).
SparseCoefFn delta_s(const SparseCoefFn& f, const DyadicVector& s);

// Restriction of f to layer j (union of blocks with ||s||_1 = j).
SparseCoefFn layer_part(const SparseCoefFn& f, int j);

// Restriction of f to the l_inf shell j.
SparseCoefFn shell_part(const SparseCoefFn& f, int j);

// (sum |a_k|^beta)^{1/beta}, beta in (0,1]. beta=1 is the l_1 norm.
double a_beta_norm(const SparseCoefFn& f, double beta);

struct MembershipReport {
  bool member = true;
  int first_violation = -1;     // smallest violating layer, -1 if none
  double worst_excess = 0.0;    // max over layers of norm/bound
};

// Checks the per-layer bounds with a small relative slack for saturating
// members built in floating point.
MembershipReport membership_W(const SparseCoefFn& f, const ClassParamsW& p,
                              double rel_tol = 1e-9);
MembershipReport membership_A(const SparseCoefFn& f, const ClassParamsA& p,
                              double rel_tol = 1e-9);

enum class Profile {
  saturating_spiky,   // one index per layer carries the whole budget
  saturating_spread,  // budget spread evenly over the whole layer
  random_sparse,      // random sub-support, bound scaled by U(0,1]
};

Profile profile_from_string(const std::string& s);
std::string to_string(Profile p);

// 12 for d=1, 8 for d=2, 5 beyond (desk scale).
int default_j_max(int d);

// Seeded members. Saturating profiles meet the layer bound with equality
// (random unimodular phases); random_sparse stays strictly inside.
SparseCoefFn generate_W(const ClassParamsW& p, int d, int j_max,
                        std::uint64_t seed, Profile profile);
SparseCoefFn generate_A(const ClassParamsA& p, int d, int j_max,
                        std::uint64_t seed, Profile profile);

}  // namespace trigsamp
