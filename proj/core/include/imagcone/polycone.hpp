#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "imagcone/linalg.hpp"

namespace imagcone {

/// Canonical ray scaling: clear denominators, divide by the gcd of the
/// numerators, make the first nonzero coordinate positive.
Vec canonical_ray(const Vec& v);
Vec canonical_line(const Vec& v);

struct DDResult {
    std::vector<Vec> rays;      // extreme rays (canonical, pointed part)
    std::vector<Vec> lineality; // basis of the lineality space
};

/// Extreme rays and lineality of {x : a.x >= 0 for a in inequalities,
/// e.x = 0 for e in equations} via incremental double description.
/// Insertion order is the input order (determinism contract).
DDResult double_description(const Field& f, std::size_t dim,
                            const std::vector<Vec>& inequalities,
                            const std::vector<Vec>& equations);

class FaceLattice;

/// Exact polyhedral cone, carrying both generator and inequality
/// descriptions (computed from each other on construction). Inequalities
/// are dot-product functionals; the optional symmetric form is used only
/// as the pairing of dual().
class PolyCone {
public:
    PolyCone() = default;

    static PolyCone from_generators(const Field& f, std::size_t dim,
                                    const std::vector<Vec>& generators,
                                    std::shared_ptr<const Mat> form = nullptr);
    static PolyCone from_inequalities(const Field& f, std::size_t dim,
                                      const std::vector<Vec>& normals,
                                      const std::vector<Vec>& equations = {},
                                      std::shared_ptr<const Mat> form = nullptr);
    /// Trusted V-rep (rays already extreme, lineality a basis); H-rep recomputed.
    static PolyCone from_vrep(const Field& f, std::size_t dim, std::vector<Vec> rays,
                              std::vector<Vec> lineality,
                              std::shared_ptr<const Mat> form = nullptr);

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vec>& rays() const { return rays_; }
    const std::vector<Vec>& lineality() const { return lineality_; }
    const std::vector<Vec>& inequalities() const { return ineqs_; }
    const std::vector<Vec>& equations() const { return eqs_; }
    const std::shared_ptr<const Mat>& form() const { return form_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero_cone() const { return rays_.empty() && lineality_.empty(); }
    std::size_t dim() const; // dimension of the cone's span

    bool contains(const Vec& v, bool strict = false) const;

    PolyCone dual() const; // pairing = attached form (dot if none)
    PolyCone intersect(const PolyCone& other) const;

    FaceLattice faces() const;
    PolyCone minimal_face_containing(const Vec& v) const;
    Vec relative_interior_point() const;

    /// Face spanned by the rays with the given indices (plus lineality).
    PolyCone face_from_ray_indices(const std::vector<std::size_t>& idx) const;

    bool operator==(const PolyCone& other) const;
    bool operator!=(const PolyCone& other) const { return !(*this == other); }

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Vec> rays_;
    std::vector<Vec> lineality_;
    std::vector<Vec> ineqs_;
    std::vector<Vec> eqs_;
    std::shared_ptr<const Mat> form_;
};

/// Complete face lattice of a polyhedral cone; faces are keyed by the set of
/// extreme rays of the cone they contain.
class FaceLattice {
public:
    struct Node {
        std::vector<std::size_t> ray_indices; // sorted key
        PolyCone cone;
    };

    explicit FaceLattice(const PolyCone& cone);

    std::size_t size() const { return nodes_.size(); }
    const Node& node(std::size_t i) const { return nodes_[i]; }
    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }

    bool leq(std::size_t a, std::size_t b) const; // inclusion
    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    std::optional<std::size_t> find_by_key(const std::vector<std::size_t>& key) const;

private:
    std::vector<Node> nodes_;
    std::map<std::vector<std::size_t>, std::size_t> by_key_;
    std::size_t top_ = 0, bottom_ = 0;
};

} // namespace imagcone
