#pragma once

#include "imagcone/rootsys.hpp"

namespace imagcone {

/// A point of the affine slice P = {<rho, v> = 1}, exact or float.
struct NormalizedPoint {
    bool exact = true;
    Vec vector;                  // exact mode
    std::vector<double> approx;  // float mode
    double height = 0;           // source height (float mode)
};

/// Exact normalization v / <rho, v> (throws NonpositiveHeight).
NormalizedPoint normalize(const BasedRootSystem& sys, const Vec& v);

std::vector<double> normalize_float(const BasedRootSystem& sys, const Vec& v);

/// Set of limit rays, exact generators where representable, float
/// directions otherwise.
struct RaySet {
    std::vector<Vec> exact_rays;              // canonical generators
    std::vector<std::vector<double>> approx;  // unit-ish float directions
    bool exact_complete = true;               // false when sqrt left the field
};

/// The one or two limit rays of the infinite dihedral subgroup <s_a, s_b>:
/// {a + b} when <a,b> = -1, else {e^l a + b, a + e^l b} with
/// e^l = -c + sqrt(c^2 - 1) (float fallback when the sqrt leaves the field).
/// Throws NotInfiniteDihedral when <a,b> > -1.
RaySet dihedral_limit_rays(const BasedRootSystem& sys, const Root& a, const Root& b);

struct Cluster {
    std::vector<double> centroid;
    std::size_t count = 0;
};

/// Numeric limit-ray proxy: normalize all roots up to the height bound, keep
/// the top-height decile, single-linkage cluster at eps.
std::vector<Cluster> approx_limit_rays(const BasedRootSystem& sys, const Scalar& height,
                                       double eps = 1e-4);

/// Union of dihedral limit rays over the pairs (simple, enumerated root)
/// with pairing <= -1, deduplicated.
RaySet dihedral_ray_union(const BasedRootSystem& sys, const Scalar& height);

/// CSV rows "x0,x1,...,height,cluster" for normalized roots up to the
/// height bound, clustered at eps.
std::string normalized_roots_csv(const BasedRootSystem& sys, const Scalar& height, double eps);

} // namespace imagcone
