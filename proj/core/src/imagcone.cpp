#include "imagcone/imagcone.hpp"

#include <algorithm>
#include <set>

namespace imagcone {

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return Vec::compare(a, b) < 0; }
};

std::vector<Vec> minus_chamber_normals(const BasedRootSystem& sys) {
    std::vector<Vec> normals;
    for (const Vec& a : sys.simples()) normals.push_back(-sys.form().apply(a));
    return normals;
}

} // namespace

PolyCone k_cone(const BasedRootSystem& sys) {
    const PolyCone& pos = sys.positive_cone();
    std::vector<Vec> ineqs = pos.inequalities();
    for (const Vec& h : minus_chamber_normals(sys)) ineqs.push_back(h);
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_inequalities(sys.field(), sys.ambient_dim(), ineqs, pos.equations(),
                                       form);
}

PolyCone k_cone_of_subgroup(const BasedRootSystem& sys, const ReflectionSubgroup& sub) {
    std::vector<Vec> gens;
    for (const Root& r : sub.simples) gens.push_back(r.vector);
    PolyCone pos = PolyCone::from_generators(sys.field(), sys.ambient_dim(), gens);
    std::vector<Vec> ineqs = pos.inequalities();
    for (const Root& r : sub.simples) ineqs.push_back(-sys.form().apply(r.vector));
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_inequalities(sys.field(), sys.ambient_dim(), ineqs, pos.equations(),
                                       form);
}

PolyCone k_cone_via_facials(const BasedRootSystem& sys) {
    if (sys.components().size() != 1 ||
        sys.components()[0].type != ComponentType::Indefinite)
        throw NotIrreducibleIndefinite();

    auto subsets = facial_subsets(sys);
    std::vector<FacialSubset> m_ind;
    for (const FacialSubset& f : subsets) {
        if (f.indices.size() == sys.rank()) continue; // proper only
        bool maximal = true;
        for (const FacialSubset& g : subsets) {
            if (g.indices.size() == sys.rank() || g.indices.size() <= f.indices.size())
                continue;
            if (std::includes(g.indices.begin(), g.indices.end(), f.indices.begin(),
                              f.indices.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        bool all_indefinite = !f.indices.empty();
        for (const auto& comp : sys.split_components(f.indices))
            if (sys.classify_component(comp).type != ComponentType::Indefinite)
                all_indefinite = false;
        if (all_indefinite) m_ind.push_back(f);
    }

    std::vector<Vec> ineqs = minus_chamber_normals(sys);
    for (const FacialSubset& f : m_ind) ineqs.push_back(sys.form().apply(f.witness));
    // equations carving out the span of Pi: kernel of the row system
    // (f . alpha_i = 0 for all i)
    Mat m(sys.field(), sys.rank(), sys.ambient_dim());
    for (std::size_t i = 0; i < sys.rank(); ++i)
        for (std::size_t c = 0; c < sys.ambient_dim(); ++c) m.at(i, c) = sys.simples()[i][c];
    std::vector<Vec> eqs = kernel_basis(m);
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_inequalities(sys.field(), sys.ambient_dim(), ineqs, eqs, form);
}

ZMembership z_membership(const BasedRootSystem& sys, const Vec& v, std::size_t budget) {
    ZMembership out;
    if (!sys.positive_cone().contains(v)) {
        out.status = ZStatus::NotInZ;
        out.certificate = ZCertificate::NotInPositiveCone;
        return out;
    }
    if (sys.pair(v, v).sign() > 0) {
        out.status = ZStatus::NotInZ;
        out.certificate = ZCertificate::PositiveNorm;
        return out;
    }
    Vec u = -v;
    for (std::size_t step = 0; step <= budget; ++step) {
        std::size_t neg = sys.rank();
        for (std::size_t i = 0; i < sys.rank(); ++i)
            if (sys.pair(u, sys.simples()[i]).sign() < 0) { neg = i; break; }
        if (neg == sys.rank()) {
            out.status = ZStatus::InZ;
            out.k = -u;
            out.steps = step;
            return out;
        }
        if (step == budget) break;
        u = sys.reflect_simple(neg, u);
        out.applied.push_back(neg);
        out.steps = step + 1;
        if (!sys.positive_cone().contains(-u)) {
            out.status = ZStatus::NotInZ;
            out.certificate = ZCertificate::OrbitLeftPositiveCone;
            return out;
        }
    }
    out.status = ZStatus::Inconclusive;
    out.steps = budget;
    return out;
}

ZFace z_face_minimal(const BasedRootSystem& sys, const Vec& v, std::size_t budget) {
    ZMembership zm = z_membership(sys, v, budget);
    if (zm.status != ZStatus::InZ)
        throw AlgorithmInvariantViolated("z_face_minimal needs an InZ certificate");
    ZFace face;
    face.word = zm.applied; // left-to-right word of x = w^{-1}, face = x W_I x^{-1}
    face.indices = facial_support(sys, zm.k);
    for (const auto& comp : sys.split_components(face.indices))
        if (sys.classify_component(comp).type == ComponentType::Finite)
            throw AlgorithmInvariantViolated("facial support of a K point not special");
    // K_I of the standard representative
    std::vector<Vec> gens;
    std::vector<Vec> ineqs;
    for (std::size_t i : face.indices) gens.push_back(sys.simples()[i]);
    PolyCone pos = PolyCone::from_generators(sys.field(), sys.ambient_dim(), gens);
    ineqs = pos.inequalities();
    for (std::size_t i : face.indices) ineqs.push_back(-sys.form().apply(sys.simples()[i]));
    face.k_cone_standard = PolyCone::from_inequalities(sys.field(), sys.ambient_dim(), ineqs,
                                                       pos.equations());
    return face;
}

// ---------------------------------------------------------------------------

ZFaceLattice::ZFaceLattice(const BasedRootSystem& sys) : sys_(sys) {
    for (FacialSubset& f : facial_subsets(sys))
        if (f.special) nodes_.push_back(std::move(f));
    std::sort(nodes_.begin(), nodes_.end(), [](const FacialSubset& a, const FacialSubset& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
    bottom_ = 0;
    if (nodes_.empty() || !nodes_[0].indices.empty())
        throw AlgorithmInvariantViolated("empty facial subset missing from the Z lattice");
    // top: the union of infinite-type components of S
    std::vector<std::size_t> all(sys.rank());
    for (std::size_t i = 0; i < sys.rank(); ++i) all[i] = i;
    std::vector<std::size_t> special_part;
    for (const auto& comp : sys.split_components(all))
        if (sys.classify_component(comp).type != ComponentType::Finite)
            special_part.insert(special_part.end(), comp.begin(), comp.end());
    std::sort(special_part.begin(), special_part.end());
    auto t = find(special_part);
    if (!t) throw AlgorithmInvariantViolated("special part of S is not a lattice node");
    top_ = *t;
}

std::optional<std::size_t> ZFaceLattice::find(const std::vector<std::size_t>& indices) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].indices == indices) return i;
    return std::nullopt;
}

bool ZFaceLattice::leq(std::size_t a, std::size_t b) const {
    return std::includes(nodes_[b].indices.begin(), nodes_[b].indices.end(),
                         nodes_[a].indices.begin(), nodes_[a].indices.end());
}

std::size_t ZFaceLattice::meet(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> inter;
    std::set_intersection(nodes_[a].indices.begin(), nodes_[a].indices.end(),
                          nodes_[b].indices.begin(), nodes_[b].indices.end(),
                          std::back_inserter(inter));
    // union of the infinite-type components of the facial subset I ∩ J
    std::vector<std::size_t> result;
    for (const auto& comp : sys_.split_components(inter))
        if (sys_.classify_component(comp).type != ComponentType::Finite)
            result.insert(result.end(), comp.begin(), comp.end());
    std::sort(result.begin(), result.end());
    auto n = find(result);
    if (!n) throw AlgorithmInvariantViolated("meet is not a lattice node");
    return *n;
}

std::size_t ZFaceLattice::join(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> uni;
    std::set_union(nodes_[a].indices.begin(), nodes_[a].indices.end(),
                   nodes_[b].indices.begin(), nodes_[b].indices.end(),
                   std::back_inserter(uni));
    FacialSubset hull = facial_hull(sys_, uni);
    if (!hull.special)
        throw AlgorithmInvariantViolated("join of special facial subsets not special");
    auto n = find(hull.indices);
    if (!n) throw AlgorithmInvariantViolated("join is not a lattice node");
    return *n;
}

// ---------------------------------------------------------------------------

Vec z_interior_point(const BasedRootSystem& sys, const ReflectionSubgroup& sub) {
    PolyCone k = k_cone_of_subgroup(sys, sub);
    if (k.is_zero_cone()) throw FiniteSubgroup();
    Vec p(sys.field(), sys.ambient_dim());
    for (const Vec& r : k.rays()) p += r;
    return p;
}

namespace {

// Minimal coset representative: append letters from the allowed set while
// some allowed simple is sent negative.
Word reduce_word_mod(const BasedRootSystem& sys, Word w,
                     const std::vector<std::size_t>& allowed) {
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 100000)
            throw AlgorithmInvariantViolated("coset reduction did not terminate");
        std::size_t pick = sys.rank();
        for (std::size_t i : allowed) {
            if (sys.height(sys.apply_word(w, sys.simples()[i])).sign() < 0) { pick = i; break; }
        }
        if (pick == sys.rank()) break;
        w.push_back(pick);
    }
    return sys.reduced_word(w);
}

std::vector<std::size_t> perp_of(const BasedRootSystem& sys,
                                 const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> perp;
    for (std::size_t r = 0; r < sys.rank(); ++r) {
        if (std::binary_search(indices.begin(), indices.end(), r)) continue;
        bool ortho = true;
        for (std::size_t i : indices)
            if (sys.gram().at(r, i).sign() != 0) { ortho = false; break; }
        if (ortho) perp.push_back(r);
    }
    return perp;
}

} // namespace

FacialClosureResult facial_closure(const BasedRootSystem& sys, const ReflectionSubgroup& sub,
                                   std::size_t budget) {
    FacialClosureResult res;

    std::vector<Root> infinite_part, finite_part;
    for (std::size_t c = 0; c < sub.components.size(); ++c)
        for (std::size_t j : sub.components[c])
            (sub.types[c] == ComponentType::Finite ? finite_part : infinite_part)
                .push_back(sub.simples[j]);

    // (1)-(2): minimal Z-face above the infinite part via descent of an
    // interior point of its K.
    Word x_word;
    std::vector<std::size_t> big_i;
    if (!infinite_part.empty()) {
        ReflectionSubgroup inf_sub = sys.subgroup_from_canonical(infinite_part);
        Vec p = z_interior_point(sys, inf_sub);
        ZMembership zm = z_membership(sys, p, budget);
        if (zm.status == ZStatus::Inconclusive) {
            res.steps = zm.steps;
            return res; // inconclusive
        }
        if (zm.status != ZStatus::InZ)
            throw AlgorithmInvariantViolated("interior point of a subgroup Z not in Z");
        res.steps = zm.steps;
        x_word = zm.applied;
        big_i = facial_support(sys, zm.k);
    }

    // (3): reduce x to the minimal representative of x W_{I ∪ I-perp}
    std::vector<std::size_t> i_perp = perp_of(sys, big_i);
    std::vector<std::size_t> stab = big_i;
    stab.insert(stab.end(), i_perp.begin(), i_perp.end());
    std::sort(stab.begin(), stab.end());
    x_word = reduce_word_mod(sys, std::move(x_word), stab);
    std::vector<Vec> pi_u; // x(Pi_I), the simples of U'
    for (std::size_t i : big_i) {
        Vec img = sys.apply_word(x_word, sys.simples()[i]);
        if (sys.height(img).sign() <= 0)
            throw AlgorithmInvariantViolated("reduced conjugator sends Pi_I negative");
        pi_u.push_back(std::move(img));
    }

    // (4): Delta = Pi_W' ∩ Pi_U'-perp
    std::vector<Root> delta;
    for (const Root& g : sub.simples) {
        bool ortho = true;
        for (const Vec& u : pi_u)
            if (sys.pair(g.vector, u).sign() != 0) { ortho = false; break; }
        if (ortho) delta.push_back(g);
    }

    // (5): conjugate into W_{I-perp} territory and close
    Word x_inv(x_word.rbegin(), x_word.rend());
    std::vector<std::size_t> j_set;
    Word x2_word;
    if (!delta.empty()) {
        std::vector<Root> delta_conj;
        for (const Root& g : delta) {
            Vec img = sys.apply_word(x_inv, g.vector);
            if (sys.height(img).sign() <= 0)
                throw AlgorithmInvariantViolated("conjugated Delta root not positive");
            auto r = sys.is_root(img);
            if (!r) throw AlgorithmInvariantViolated("conjugated Delta image not a root");
            for (std::size_t i : big_i)
                if (sys.pair(img, sys.simples()[i]).sign() != 0)
                    throw AlgorithmInvariantViolated("conjugated Delta not orthogonal to Pi_I");
            delta_conj.push_back(*r);
        }
        ReflectionSubgroup w_c =
            finite_parabolic_closure(sys, sys.subgroup_from_canonical(delta_conj));

        // (5b): express W_c as x2 W_J x2^{-1} with J ⊆ I-perp standard. The
        // orbit sum of a chamber-interior point p over W_c lies in X and is
        // fixed exactly by W_c unless p is non-generic (the sum is |W_c|
        // times the projection of p onto the fixed space); retry over
        // perturbed base points and verify the result exactly.
        std::set<Vec, VecLess> expected;
        for (const Root& g : w_c.simples) expected.insert(g.vector);
        Mat form_inv = *inverse(sys.form());

        bool standardized = false;
        for (std::size_t attempt = 0; attempt <= sys.ambient_dim() && !standardized;
             ++attempt) {
            Vec p = sys.rho();
            if (attempt > 0) {
                Vec dir(sys.field(), sys.ambient_dim());
                dir[attempt - 1] = Scalar(sys.field(), 1, 1);
                Vec u = form_inv.apply(dir);
                Scalar t(sys.field(), 1, 1);
                for (int halving = 0; halving < 200; ++halving) {
                    bool interior = true;
                    Vec cand = p + t * u;
                    for (std::size_t i = 0; i < sys.rank() && interior; ++i)
                        if (sys.pair(cand, sys.simples()[i]).sign() <= 0) interior = false;
                    if (interior) { p = cand; break; }
                    t = t / Scalar(sys.field(), 2, 1);
                }
            }

            std::vector<Vec> orbit{p};
            std::set<Vec, VecLess> seen{p};
            for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
                for (const Root& g : w_c.simples) {
                    Vec img = sys.reflect_by(g.vector, orbit[qi]);
                    if (seen.insert(img).second) orbit.push_back(img);
                }
                if (orbit.size() > 20000)
                    throw AlgorithmInvariantViolated("finite subgroup orbit did not close");
            }
            Vec v_c(sys.field(), sys.ambient_dim());
            for (const Vec& o : orbit) v_c += o;

            // descend inside W_{I-perp} (v_c lies in X, so this terminates)
            Word applied;
            Vec cur = v_c;
            for (std::size_t guard = 0;; ++guard) {
                if (guard > 100000)
                    throw AlgorithmInvariantViolated("stabilizer descent did not terminate");
                std::size_t pick = sys.rank();
                for (std::size_t i : i_perp)
                    if (sys.pair(cur, sys.simples()[i]).sign() < 0) { pick = i; break; }
                if (pick == sys.rank()) break;
                cur = sys.reflect_simple(pick, cur);
                applied.push_back(pick);
            }
            std::vector<std::size_t> j_cand;
            for (std::size_t i : i_perp)
                if (sys.pair(cur, sys.simples()[i]).sign() == 0) j_cand.push_back(i);
            if (j_cand.size() != w_c.simples.size()) continue; // non-generic base point
            Word x2_cand = reduce_word_mod(sys, Word(applied), j_cand);
            std::set<Vec, VecLess> got;
            for (std::size_t j : j_cand) {
                Vec img = sys.apply_word(x2_cand, sys.simples()[j]);
                if (sys.height(img).sign() < 0) img = -img;
                got.insert(img);
            }
            if (got != expected) continue;
            j_set = std::move(j_cand);
            x2_word = std::move(x2_cand);
            standardized = true;
        }
        if (!standardized)
            throw AlgorithmInvariantViolated(
                "could not standardize the finite closure from any base point");
    }

    // (6): assemble x * x2 and I ∪ J
    Word word = x_word;
    word.insert(word.end(), x2_word.begin(), x2_word.end());
    word = sys.reduced_word(word);
    std::vector<std::size_t> indices = big_i;
    indices.insert(indices.end(), j_set.begin(), j_set.end());
    std::sort(indices.begin(), indices.end());
    if (!is_facial(sys, indices))
        throw AlgorithmInvariantViolated("facial closure output is not facial");

    // the closure contains W': each generator conjugates into Phi_{I∪J}
    Word word_inv(word.rbegin(), word.rend());
    std::vector<Vec> span_cols;
    for (std::size_t i : indices) span_cols.push_back(sys.simples()[i]);
    for (const Root& g : sub.simples) {
        Vec img = sys.apply_word(word_inv, g.vector);
        if (sys.height(img).sign() < 0) img = -img;
        if (!span_cols.empty()) {
            Mat a(sys.field(), sys.ambient_dim(), span_cols.size());
            for (std::size_t r = 0; r < sys.ambient_dim(); ++r)
                for (std::size_t c = 0; c < span_cols.size(); ++c)
                    a.at(r, c) = span_cols[c][r];
            if (!solve(a, img))
                throw AlgorithmInvariantViolated("facial closure misses a generator");
        } else if (!img.is_zero()) {
            throw AlgorithmInvariantViolated("facial closure misses a generator");
        }
    }

    res.conclusive = true;
    res.word = std::move(word);
    res.indices = std::move(indices);
    return res;
}

std::vector<Vec> z_sample(const BasedRootSystem& sys, std::size_t length) {
    std::set<Vec, VecLess> all;
    std::vector<Vec> frontier = k_cone(sys).rays();
    for (const Vec& g : frontier) all.insert(g);
    for (std::size_t level = 0; level < length; ++level) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (std::size_t i = 0; i < sys.rank(); ++i) {
                Vec w = sys.reflect_simple(i, v);
                if (all.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return std::vector<Vec>(all.begin(), all.end());
}

} // namespace imagcone
