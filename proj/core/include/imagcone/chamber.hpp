#pragma once

#include "imagcone/rootsys.hpp"

namespace imagcone {

/// A facial subset of the simple roots: Pi ∩ v-perp for a chamber point v.
struct FacialSubset {
    std::vector<std::size_t> indices; // sorted
    Vec witness;                      // v in C with Pi ∩ v-perp = Pi_I
    bool special = false;             // no finite-type component
};

enum class DescentStatus { InChamber, Inconclusive };

/// Result of descending a vector into the fundamental chamber. `applied`
/// lists the simple reflections in the order they were applied, so
/// final = s_{applied.back()} ( ... s_{applied.front()} (input) ).
struct DescentResult {
    DescentStatus status = DescentStatus::Inconclusive;
    Word applied;
    Vec final;

    /// The group element g with g(input) = final, as a left-to-right word.
    Word group_word() const { return Word(applied.rbegin(), applied.rend()); }
};

/// The fundamental chamber {v : <v, alpha> >= 0 for all simple alpha}.
PolyCone chamber_cone(const BasedRootSystem& sys);

/// Greedy descent by the smallest-index negative pairing; a semi-decision
/// (terminates exactly on the Tits cone).
DescentResult descend_to_chamber(const BasedRootSystem& sys, const Vec& v, std::size_t budget);

/// Facial subset attached to a chamber point (throws NotInChamber).
FacialSubset stabilizer_facial_subset(const BasedRootSystem& sys, const Vec& v);

/// All facial subsets = faces of the positive root cone, each with a
/// strictly supporting chamber witness (sum of tight facet normals).
std::vector<FacialSubset> facial_subsets(const BasedRootSystem& sys);

bool is_facial(const BasedRootSystem& sys, const std::vector<std::size_t>& indices);

/// The maximal support of v in R>=0 Pi: extreme rays of the minimal face
/// containing v (throws PointNotInCone).
std::vector<std::size_t> facial_support(const BasedRootSystem& sys, const Vec& v);

struct SupportComponent {
    std::vector<std::size_t> simples;
    Vec part;           // the summand carried by this component
    ComponentType type; // Affine or Indefinite for K-points
};

/// Decomposition of a K-point over the components of its facial support
/// (throws NotInK when v is not in R>=0 Pi ∩ -C).
std::vector<SupportComponent> support_components(const BasedRootSystem& sys, const Vec& v);

/// Smallest facial subset containing the given simple indices.
FacialSubset facial_hull(const BasedRootSystem& sys, const std::vector<std::size_t>& delta);

/// Reflection subgroup with roots Phi ∩ R·Pi_W' for finite-type W'
/// (throws NotFiniteType unless the gram of Pi_W' is positive definite).
ReflectionSubgroup finite_parabolic_closure(const BasedRootSystem& sys,
                                            const ReflectionSubgroup& sub);

/// Convenience: the facial subset object for given indices (must be facial).
FacialSubset facial_subset_for(const BasedRootSystem& sys,
                               const std::vector<std::size_t>& indices);

} // namespace imagcone
