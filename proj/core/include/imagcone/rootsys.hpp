#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "imagcone/polycone.hpp"

namespace imagcone {

class BasedRootSystem;

/// A positive root: coefficients over the simple roots, ambient vector,
/// depth (d with reflection length 2d-1) and a witness word
/// root = s_{w[0]} ... s_{w[d-2]} (alpha_{w[d-1]}).
struct Root {
    Vec coeffs;
    Vec vector;
    std::size_t depth = 0;
    std::vector<std::size_t> word;

    bool operator==(const Root& other) const { return vector == other.vector; }
};

enum class ComponentType { Finite, Affine, Indefinite };

struct ComponentInfo {
    std::vector<std::size_t> simples; // indices into Pi
    ComponentType type = ComponentType::Finite;
    std::optional<Vec> delta;         // isotropic ray representative, affine only
};

/// A reflection subgroup given by its canonical simple system.
struct ReflectionSubgroup {
    std::vector<Root> simples;                       // canonical Pi_{W'}
    std::vector<std::vector<std::size_t>> components; // index partition
    std::vector<ComponentType> types;
};

/// A group element as a word in the simple reflections,
/// w = s_{word[0]} s_{word[1]} ... (product left to right).
using Word = std::vector<std::size_t>;

/// Based root system with unit-norm simple roots, pairwise products in
/// (-inf,-1] or -cos(pi/m), in a finite-dimensional nonsingular quadratic
/// space; immutable after construction.
class BasedRootSystem {
public:
    /// Simple roots = standard basis, form = gram; if gram is singular the
    /// space is extended by one coordinate per radical dimension so the full
    /// form is nonsingular.
    static BasedRootSystem from_gram(const Field& f, const Mat& gram);
    /// Explicit simple root vectors in a quadratic space with the given
    /// (nonsingular) form.
    static BasedRootSystem from_vectors(const Field& f, const Mat& form,
                                        const std::vector<Vec>& simples);
    /// Coxeter labels m_ij (0 = infinite bond with c = -1); field inferred.
    static BasedRootSystem from_labels(const std::vector<std::vector<int>>& labels);

    const Field& field() const { return field_; }
    std::size_t rank() const { return simples_.size(); }
    std::size_t ambient_dim() const { return form_.rows(); }
    const Mat& form() const { return form_; }
    const std::vector<Vec>& simples() const { return simples_; }
    const Mat& gram() const { return gram_; }
    const Vec& rho() const { return rho_; }
    const std::vector<ComponentInfo>& components() const { return components_; }

    /// <u, v> under the ambient bilinear form.
    Scalar pair(const Vec& u, const Vec& v) const;
    Scalar height(const Vec& v) const { return pair(rho_, v); }

    /// s_beta(v) = v - 2<v,beta> beta (beta unit norm).
    Vec reflect_by(const Vec& beta, const Vec& v) const;
    Vec reflect_simple(std::size_t i, const Vec& v) const { return reflect_by(simples_[i], v); }
    Vec apply_word(const Word& w, const Vec& v) const;  // left-to-right product action
    Vec apply_word_inverse(const Word& w, const Vec& v) const;

    /// All positive roots of height <= h, ordered by (height, coeffs).
    std::vector<Root> positive_roots_up_to_height(const Scalar& h) const;

    /// Word for the reflection s_r = s_{i1}..s_{id-1} s_{id} s_{id-1}..s_{i1}
    /// built from the root's witness word (reduced, length 2 depth - 1).
    Word reflection_word(const Root& r) const;

    /// Positive roots of the reflection subgroup generated by the given
    /// canonical simples, up to the given ambient height (closure with
    /// height pruning; complete since subgroup descents lower height).
    std::vector<Vec> subgroup_roots_up_to(const std::vector<Root>& simples,
                                          const Scalar& h) const;

    /// Oracle check N(s_gamma) ∩ W' = {s_gamma} for each canonical simple;
    /// throws AlgorithmInvariantViolated on failure.
    void verify_canonical_system(const std::vector<Root>& simples) const;

    /// Positive-root test by bounded enumeration; works for +/- roots.
    std::optional<Root> is_root(const Vec& v) const;
    bool is_positive_root_vector(const Vec& v) const;

    ComponentInfo classify_component(const std::vector<std::size_t>& simple_indices) const;

    /// Canonical simple pair of the dihedral reflection subgroup <s_b1, s_b2>.
    std::pair<Root, Root> dihedral_canonical_pair(const Root& b1, const Root& b2) const;

    /// Canonical simple system of the reflection subgroup generated by the
    /// reflections in the given roots.
    ReflectionSubgroup canonical_simples(std::vector<Root> roots) const;

    /// Subgroup structure (components/types) for an already-canonical set.
    ReflectionSubgroup subgroup_from_canonical(std::vector<Root> simples) const;

    /// Dominance order alpha <= beta: <alpha,beta> >= 1 and l(s_a) <= l(s_b).
    bool dominates(const Root& alpha, const Root& beta) const;

    /// Inversion roots of a word (Phi+ ∩ w(-Phi+)) and its reduced length.
    std::vector<Root> inversion_roots(const Word& w) const;
    std::size_t word_length(const Word& w) const;
    Word reduced_word(const Word& w) const;

    /// The positive root cone R>=0 Pi as a polyhedral cone (dot H-rep in V).
    const PolyCone& positive_cone() const { return positive_cone_; }

    /// Smallest eps with height(beta) >= eps * l(s_beta) per the finite-label
    /// pair bound: eps = min_alpha height(alpha) * eps0 / 2 where eps0 is the
    /// minimum |<alpha, beta-check>| over non-orthogonal root pairs.
    Scalar height_length_epsilon() const;

    /// True when the support of v (as a coefficient vector index set) is
    /// connected in the Coxeter graph.
    bool support_connected(const std::vector<std::size_t>& support) const;

    std::vector<std::vector<std::size_t>> split_components(
        const std::vector<std::size_t>& simple_indices) const;

private:
    BasedRootSystem() = default;
    void finish_setup(); // gram, labels, rho, components, positive cone
    void validate_gram_entries() const;
    std::vector<Root> enumerate_up_to(const Scalar& h) const;

    Field field_;
    Mat form_;
    std::vector<Vec> simples_;
    Mat gram_;
    Vec rho_;
    std::vector<ComponentInfo> components_;
    PolyCone positive_cone_;
    mutable std::optional<Scalar> epsilon_;

    struct RootCache;
    std::shared_ptr<RootCache> cache_;
};

/// Components/types for a set of roots under the pairwise-product graph.
std::vector<std::vector<std::size_t>> components_of_gram(const Mat& gram);

} // namespace imagcone
