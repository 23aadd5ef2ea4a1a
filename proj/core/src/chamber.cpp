#include "imagcone/chamber.hpp"

#include <algorithm>
#include <set>

namespace imagcone {

namespace {

// Map each extreme ray of the positive root cone to the simple spanning it.
std::vector<std::size_t> ray_to_simple(const BasedRootSystem& sys, const PolyCone& cone) {
    std::vector<std::size_t> map(cone.rays().size());
    for (std::size_t r = 0; r < cone.rays().size(); ++r) {
        bool found = false;
        for (std::size_t i = 0; i < sys.rank(); ++i) {
            if (canonical_ray(sys.simples()[i]) == cone.rays()[r]) {
                map[r] = i;
                found = true;
                break;
            }
        }
        if (!found)
            throw AlgorithmInvariantViolated("positive cone ray is not a simple root");
    }
    return map;
}

bool subset_is_special(const BasedRootSystem& sys, const std::vector<std::size_t>& indices) {
    for (const auto& comp : sys.split_components(indices))
        if (sys.classify_component(comp).type == ComponentType::Finite) return false;
    return true;
}

// Witness for the face spanned by the given simples: inverse-form image of
// the sum of all facet normals of the positive cone vanishing on the face.
Vec witness_for(const BasedRootSystem& sys, const std::vector<std::size_t>& indices) {
    const PolyCone& cone = sys.positive_cone();
    Vec sum(sys.field(), sys.ambient_dim());
    for (const Vec& h : cone.inequalities()) {
        bool tight = true;
        for (std::size_t i : indices)
            if (dot(h, sys.simples()[i]).sign() != 0) { tight = false; break; }
        if (tight) sum += h;
    }
    Mat inv = *inverse(sys.form());
    Vec witness = inv.apply(sum);
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        const int s = sys.pair(witness, sys.simples()[i]).sign();
        const bool in_face = std::binary_search(indices.begin(), indices.end(), i);
        if (in_face ? s != 0 : s <= 0)
            throw AlgorithmInvariantViolated("facial witness fails strict support");
    }
    return witness;
}

FacialSubset make_facial(const BasedRootSystem& sys, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    FacialSubset f;
    f.witness = witness_for(sys, indices);
    f.special = subset_is_special(sys, indices);
    f.indices = std::move(indices);
    return f;
}

} // namespace

PolyCone chamber_cone(const BasedRootSystem& sys) {
    std::vector<Vec> normals;
    for (const Vec& a : sys.simples()) normals.push_back(sys.form().apply(a));
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_inequalities(sys.field(), sys.ambient_dim(), normals, {}, form);
}

DescentResult descend_to_chamber(const BasedRootSystem& sys, const Vec& v, std::size_t budget) {
    DescentResult res;
    res.final = v;
    for (std::size_t step = 0; step <= budget; ++step) {
        std::size_t neg = sys.rank();
        for (std::size_t i = 0; i < sys.rank(); ++i)
            if (sys.pair(res.final, sys.simples()[i]).sign() < 0) { neg = i; break; }
        if (neg == sys.rank()) {
            res.status = DescentStatus::InChamber;
            return res;
        }
        if (step == budget) break;
        res.final = sys.reflect_simple(neg, res.final);
        res.applied.push_back(neg);
    }
    res.status = DescentStatus::Inconclusive;
    return res;
}

FacialSubset stabilizer_facial_subset(const BasedRootSystem& sys, const Vec& v) {
    FacialSubset f;
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        const int s = sys.pair(v, sys.simples()[i]).sign();
        if (s < 0) throw NotInChamber();
        if (s == 0) f.indices.push_back(i);
    }
    f.witness = v;
    f.special = subset_is_special(sys, f.indices);
    return f;
}

std::vector<FacialSubset> facial_subsets(const BasedRootSystem& sys) {
    const PolyCone& cone = sys.positive_cone();
    FaceLattice lattice = cone.faces();
    std::vector<std::size_t> map = ray_to_simple(sys, cone);
    std::vector<FacialSubset> out;
    for (std::size_t n = 0; n < lattice.size(); ++n) {
        std::vector<std::size_t> indices;
        for (std::size_t r : lattice.node(n).ray_indices) indices.push_back(map[r]);
        out.push_back(make_facial(sys, std::move(indices)));
    }
    std::sort(out.begin(), out.end(), [](const FacialSubset& a, const FacialSubset& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
    return out;
}

bool is_facial(const BasedRootSystem& sys, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (const FacialSubset& f : facial_subsets(sys))
        if (f.indices == sorted) return true;
    return false;
}

FacialSubset facial_subset_for(const BasedRootSystem& sys,
                               const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (!is_facial(sys, sorted)) throw AlgorithmInvariantViolated("subset is not facial");
    return make_facial(sys, sorted);
}

std::vector<std::size_t> facial_support(const BasedRootSystem& sys, const Vec& v) {
    const PolyCone& cone = sys.positive_cone();
    PolyCone face = cone.minimal_face_containing(v); // throws PointNotInCone
    std::vector<std::size_t> map = ray_to_simple(sys, cone);
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < cone.rays().size(); ++r)
        if (face.contains(cone.rays()[r])) out.push_back(map[r]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SupportComponent> support_components(const BasedRootSystem& sys, const Vec& v) {
    if (!sys.positive_cone().contains(v)) throw NotInK("not in the positive root cone");
    for (std::size_t i = 0; i < sys.rank(); ++i)
        if (sys.pair(v, sys.simples()[i]).sign() > 0) throw NotInK("not in -C");
    if (v.is_zero()) return {};

    std::vector<std::size_t> delta = facial_support(sys, v);
    // strictly positive coefficients over delta: relative interior point of
    // the homogenized solution cone {(c, t) : sum c_j alpha_j = t v, c,t >= 0}
    const std::size_t m = delta.size();
    const Field& f = sys.field();
    std::vector<Vec> eqs;
    for (std::size_t coord = 0; coord < sys.ambient_dim(); ++coord) {
        Vec eq(f, m + 1);
        for (std::size_t j = 0; j < m; ++j) eq[j] = sys.simples()[delta[j]][coord];
        eq[m] = -v[coord];
        eqs.push_back(std::move(eq));
    }
    std::vector<Vec> ineqs;
    for (std::size_t j = 0; j <= m; ++j) {
        Vec e(f, m + 1);
        e[j] = Scalar(f, 1, 1);
        ineqs.push_back(std::move(e));
    }
    PolyCone sol = PolyCone::from_inequalities(f, m + 1, ineqs, eqs);
    Vec p = sol.relative_interior_point();
    if (p[m].sign() <= 0)
        throw AlgorithmInvariantViolated("no strictly positive support representation");
    std::vector<Scalar> coeff(m, Scalar(f));
    for (std::size_t j = 0; j < m; ++j) {
        coeff[j] = p[j] / p[m];
        if (coeff[j].sign() <= 0)
            throw AlgorithmInvariantViolated("facial support coefficient not positive");
    }

    std::vector<SupportComponent> out;
    for (const auto& comp : sys.split_components(delta)) {
        SupportComponent sc;
        sc.simples = comp;
        sc.part = Vec(f, sys.ambient_dim());
        for (std::size_t j = 0; j < m; ++j)
            if (std::binary_search(comp.begin(), comp.end(), delta[j]))
                sc.part += coeff[j] * sys.simples()[delta[j]];
        sc.type = sys.classify_component(comp).type;
        if (sc.type == ComponentType::Finite)
            throw AlgorithmInvariantViolated("finite-type component in a K-point support");
        out.push_back(std::move(sc));
    }
    return out;
}

FacialSubset facial_hull(const BasedRootSystem& sys, const std::vector<std::size_t>& delta) {
    Vec p(sys.field(), sys.ambient_dim());
    for (std::size_t i : delta) p += sys.simples()[i];
    PolyCone face = sys.positive_cone().minimal_face_containing(p);
    std::vector<std::size_t> map = ray_to_simple(sys, sys.positive_cone());
    std::vector<std::size_t> indices;
    for (std::size_t r = 0; r < sys.positive_cone().rays().size(); ++r)
        if (face.contains(sys.positive_cone().rays()[r])) indices.push_back(map[r]);
    return make_facial(sys, std::move(indices));
}

ReflectionSubgroup finite_parabolic_closure(const BasedRootSystem& sys,
                                            const ReflectionSubgroup& sub) {
    const Field& f = sys.field();
    const std::size_t m = sub.simples.size();
    Mat g(f, m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            g.at(a, b) = sys.pair(sub.simples[a].vector, sub.simples[b].vector);
    Signature sig = signature(g);
    if (sig.negative != 0 || sig.zero != 0)
        throw NotFiniteType("gram of the subgroup simples is not positive definite");

    // Projection rho_s of rho onto the (positive definite) span; every root in
    // the span has height <= sqrt(<rho_s, rho_s>) by Cauchy-Schwarz.
    Vec rhs(f, m);
    for (std::size_t a = 0; a < m; ++a) rhs[a] = sys.pair(sys.rho(), sub.simples[a].vector);
    Vec x = solve(g, rhs).value();
    Scalar q(f);
    for (std::size_t a = 0; a < m; ++a) q += x[a] * rhs[a]; // <rho_s, rho_s>
    Scalar bound(f, 1, 1);
    while ((bound * bound - q).sign() < 0) bound += bound;

    // All ambient positive roots in the span, complete up to the bound.
    std::vector<Vec> span_cols;
    for (const Root& s : sub.simples) span_cols.push_back(s.vector);
    Mat a_mat(f, sys.ambient_dim(), m);
    for (std::size_t r = 0; r < sys.ambient_dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) a_mat.at(r, c) = span_cols[c][r];
    std::vector<Root> found;
    for (const Root& r : sys.positive_roots_up_to_height(bound))
        if (solve(a_mat, r.vector)) found.push_back(r);
    if (found.size() > 10000) throw ClosureBoundExceeded();
    return sys.canonical_simples(std::move(found));
}

} // namespace imagcone
