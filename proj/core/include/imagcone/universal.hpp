#pragma once

#include "imagcone/imagcone.hpp"

namespace imagcone {

/// True when all pairwise simple products are < -1 and the rank is >= 2.
bool validate_generic_universal(const BasedRootSystem& sys);

/// u(a,b) = e^l a + b with e^l = -c + sqrt(c^2-1), c = <a,b> = -cosh l.
/// Throws SqrtNotInField when e^l leaves the field.
Vec u_vec(const BasedRootSystem& sys, std::size_t a, std::size_t b);

/// u'(a,b) = (cosh l) a + b = -c a + b, always exact.
Vec uprime_vec(const BasedRootSystem& sys, std::size_t a, std::size_t b);

/// K+ = cone{u(a,b) : a != b} and D_a = cone({a} ∪ {u(a,b)}).
PolyCone k_plus(const BasedRootSystem& sys);
PolyCone d_cone(const BasedRootSystem& sys, std::size_t alpha);

enum class LocateStatus { InZ, InD, Zero, Inconclusive };

struct LocateResult {
    LocateStatus status = LocateStatus::Inconclusive;
    Word applied;              // InZ: reflections applied to reach K
    std::size_t d_index = 0;   // InD: the unique alpha with <v, alpha> > 0
    std::size_t steps = 0;
    bool anomaly = false;      // descent left the positive cone (logged)
};

/// Decides where v in R>=0 Pi sits: Z, some D_alpha, or zero
/// (norm > 0 and isotropic nonzero go to D; negative norm descends).
LocateResult locate(const BasedRootSystem& sys, const Vec& v, std::size_t budget);

/// The forced itinerary: at each step the unique simple with positive
/// pairing; stops early on entering K.
struct Itinerary {
    std::vector<std::size_t> prefix; // consecutive entries distinct
    bool terminated = false;         // reached K
    std::size_t steps = 0;
};

Itinerary itinerary(const BasedRootSystem& sys, const Vec& v, std::size_t max_steps);

/// beta'_i = s_{b0} ... s_{b_{i-1}} (b_i) for a valid prefix; each entry
/// dominates its predecessor.
std::vector<Root> beta_prime_roots(const BasedRootSystem& sys,
                                   const std::vector<std::size_t>& prefix, std::size_t n);

/// Separation constant of the D-cones: min over generators u of the D
/// cones and simples b of |<u, b-check>| / <rho, u>.
Scalar separation_constant(const BasedRootSystem& sys);

} // namespace imagcone
