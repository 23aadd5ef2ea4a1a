#pragma once

#include "imagcone/chamber.hpp"

namespace imagcone {

enum class ZStatus { InZ, NotInZ, Inconclusive };
enum class ZCertificate { None, NotInPositiveCone, OrbitLeftPositiveCone, PositiveNorm };

/// Semi-decision for membership in the imaginary cone Z = W K.
/// On InZ, `applied` lists the simple reflections applied to v (in order)
/// to land at k in K; read left-to-right it is the word of the group
/// element x with v in x K (x = applied product, since each s is an
/// involution and the applied composite maps v to k).
struct ZMembership {
    ZStatus status = ZStatus::Inconclusive;
    ZCertificate certificate = ZCertificate::None;
    Word applied;
    Vec k;
    std::size_t steps = 0;
};

/// A face of Z encoded as (word x, special facial subset I): the face is
/// Z restricted to x W_I x^{-1}; `k_cone_standard` is K_I.
struct ZFace {
    Word word;
    std::vector<std::size_t> indices;
    PolyCone k_cone_standard;
};

/// K = R>=0 Pi ∩ -C, the fundamental domain of the imaginary cone.
PolyCone k_cone(const BasedRootSystem& sys);

/// K of the reflection subgroup with the given canonical simples,
/// computed inside the ambient space.
PolyCone k_cone_of_subgroup(const BasedRootSystem& sys, const ReflectionSubgroup& sub);

/// H-description of K for irreducible indefinite systems: -C ∩ R·Pi cut by
/// the witnesses of the maximal proper facial subsets with all components
/// indefinite (throws NotIrreducibleIndefinite otherwise).
PolyCone k_cone_via_facials(const BasedRootSystem& sys);

ZMembership z_membership(const BasedRootSystem& sys, const Vec& v, std::size_t budget);

/// The face of Z with v in its relative interior, from an InZ certificate.
ZFace z_face_minimal(const BasedRootSystem& sys, const Vec& v, std::size_t budget);

/// The lattice of standard special facial subsets (faces of Z over W_I).
class ZFaceLattice {
public:
    explicit ZFaceLattice(const BasedRootSystem& sys);

    std::size_t size() const { return nodes_.size(); }
    const FacialSubset& node(std::size_t i) const { return nodes_[i]; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    bool leq(std::size_t a, std::size_t b) const;
    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> find(const std::vector<std::size_t>& indices) const;

private:
    const BasedRootSystem& sys_;
    std::vector<FacialSubset> nodes_;
    std::size_t bottom_ = 0, top_ = 0;
};

/// A point of the relative interior of Z_W' (sum of the K_W' generators);
/// throws FiniteSubgroup when K_W' = 0.
Vec z_interior_point(const BasedRootSystem& sys, const ReflectionSubgroup& sub);

/// Facial closure of a finitely generated reflection subgroup, as
/// (word x, facial subset I ∪ J) with closure = x W_{I∪J} x^{-1}.
struct FacialClosureResult {
    bool conclusive = false;
    Word word;
    std::vector<std::size_t> indices;
    std::size_t steps = 0;
};

FacialClosureResult facial_closure(const BasedRootSystem& sys, const ReflectionSubgroup& sub,
                                   std::size_t budget);

/// Images of the K generators under all words of length <= length,
/// deduplicated and sorted.
std::vector<Vec> z_sample(const BasedRootSystem& sys, std::size_t length);

} // namespace imagcone
