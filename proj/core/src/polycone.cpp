#include "imagcone/polycone.hpp"

#include <algorithm>

namespace imagcone {

Vec canonical_ray(const Vec& v) {
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& s : v.entries()) {
        for (const auto& q : s.coeffs()) {
            if (q == 0) continue;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            den_lcm = l;
        }
    }
    for (const auto& s : v.entries()) {
        for (const auto& q : s.coeffs()) {
            if (q == 0) continue;
            mpz_class scaled_num = q.get_num() * (den_lcm / q.get_den());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
            num_gcd = g;
        }
    }
    if (num_gcd == 0) return v; // zero vector
    Vec out = v;
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    Scalar fs(out[0].field(), factor);
    out *= fs;
    return out;
}

Vec canonical_line(const Vec& v) {
    Vec out = canonical_ray(v);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int s = out[i].sign();
        if (s == 0) continue;
        if (s < 0) out = -out;
        break;
    }
    return out;
}

namespace {

struct DDRay {
    Vec v;
    std::vector<bool> tight; // over processed inequalities, by index
};

bool adjacent(const std::vector<DDRay>& rays, std::size_t a, std::size_t b) {
    const auto& za = rays[a].tight;
    const auto& zb = rays[b].tight;
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == a || r == b) continue;
        const auto& zr = rays[r].tight;
        bool superset = true;
        for (std::size_t i = 0; i < za.size() && superset; ++i)
            if (za[i] && zb[i] && !zr[i]) superset = false;
        if (superset) return false;
    }
    return true;
}

} // namespace

DDResult double_description(const Field& f, std::size_t dim,
                            const std::vector<Vec>& inequalities,
                            const std::vector<Vec>& equations) {
    std::vector<Vec> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(f, dim);
        e[i] = Scalar(f, 1, 1);
        lineality.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    // Equations first: each either pivots away a lineality direction or is
    // implied by earlier ones. Rays do not exist yet at this stage.
    for (const Vec& e : equations) {
        if (e.size() != dim) throw DimensionMismatch();
        if (e.is_zero()) continue;
        std::size_t piv = lineality.size();
        Scalar pd;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            pd = dot(e, lineality[i]);
            if (pd.sign() != 0) { piv = i; break; }
        }
        if (piv == lineality.size()) continue;
        const Vec l = lineality[piv];
        lineality.erase(lineality.begin() + piv);
        for (auto& l2 : lineality) l2 -= (dot(e, l2) / pd) * l;
        for (auto& r : rays) r.v -= (dot(e, r.v) / pd) * l;
    }

    auto dedupe = [](std::vector<DDRay>& rs) {
        std::vector<DDRay> unique_rays;
        for (auto& r : rs) {
            if (r.v.is_zero()) continue;
            bool seen = false;
            for (const auto& u : unique_rays)
                if (Vec::compare(u.v, r.v) == 0) { seen = true; break; }
            if (!seen) unique_rays.push_back(std::move(r));
        }
        rs = std::move(unique_rays);
    };

    std::size_t processed = 0;
    for (const Vec& a : inequalities) {
        if (a.size() != dim) throw DimensionMismatch();
        if (a.is_zero()) continue;
        // Pivot a lineality direction if the hyperplane cuts one.
        std::size_t piv = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]).sign() != 0) { piv = i; break; }
        if (piv != lineality.size()) {
            Vec l = lineality[piv];
            lineality.erase(lineality.begin() + piv);
            Scalar pd = dot(a, l);
            if (pd.sign() < 0) { l = -l; pd = -pd; }
            for (auto& l2 : lineality) l2 -= (dot(a, l2) / pd) * l;
            for (auto& r : rays) {
                r.v -= (dot(a, r.v) / pd) * l;
                r.v = canonical_ray(r.v);
                r.tight.push_back(true);
            }
            DDRay nr;
            nr.v = canonical_ray(l);
            nr.tight.assign(processed, true); // a line is orthogonal to all processed
            nr.tight.push_back(false);
            rays.push_back(std::move(nr));
            dedupe(rays);
            ++processed;
            continue;
        }
        std::vector<std::size_t> pos, neg;
        std::vector<int> sign_of(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            sign_of[i] = dot(a, rays[i].v).sign();
            if (sign_of[i] > 0) pos.push_back(i);
            else if (sign_of[i] < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].tight.push_back(sign_of[i] == 0);
            ++processed;
            continue;
        }
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sign_of[i] < 0) continue;
            DDRay r = rays[i];
            r.tight.push_back(sign_of[i] == 0);
            next.push_back(std::move(r));
        }
        for (std::size_t ip : pos) {
            for (std::size_t in : neg) {
                if (!adjacent(rays, ip, in)) continue;
                const Scalar sp = dot(a, rays[ip].v);
                const Scalar sn = dot(a, rays[in].v);
                DDRay nr;
                nr.v = canonical_ray(sp * rays[in].v - sn * rays[ip].v);
                nr.tight.resize(processed + 1);
                for (std::size_t k = 0; k < processed; ++k)
                    nr.tight[k] = rays[ip].tight[k] && rays[in].tight[k];
                nr.tight[processed] = true;
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        dedupe(rays);
        ++processed;
    }

    DDResult out;
    for (auto& r : rays) out.rays.push_back(canonical_ray(r.v));
    std::sort(out.rays.begin(), out.rays.end(),
              [](const Vec& x, const Vec& y) { return Vec::compare(x, y) < 0; });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lineality = canonical_span_basis(lineality, f, dim);
    for (auto& l : out.lineality) l = canonical_line(l);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Functionals whose nonnegativity (resp. vanishing) carves out the dual of
// the cone generated by rays and lineality, in dot semantics.
void vrep_to_hrep(const Field& f, std::size_t dim, const std::vector<Vec>& rays,
                  const std::vector<Vec>& lineality, std::vector<Vec>& ineqs,
                  std::vector<Vec>& eqs) {
    DDResult dual = double_description(f, dim, rays, lineality);
    ineqs = dual.rays;
    eqs = dual.lineality;
}

} // namespace

PolyCone PolyCone::from_generators(const Field& f, std::size_t dim,
                                   const std::vector<Vec>& generators,
                                   std::shared_ptr<const Mat> form) {
    PolyCone c;
    c.field_ = f;
    c.dim_ = dim;
    c.form_ = std::move(form);
    for (const auto& g : generators)
        if (g.size() != dim) throw DimensionMismatch();
    std::vector<Vec> gens;
    for (const auto& g : generators)
        if (!g.is_zero()) gens.push_back(g);
    vrep_to_hrep(f, dim, gens, {}, c.ineqs_, c.eqs_);
    DDResult vr = double_description(f, dim, c.ineqs_, c.eqs_);
    c.rays_ = std::move(vr.rays);
    c.lineality_ = std::move(vr.lineality);
    return c;
}

PolyCone PolyCone::from_inequalities(const Field& f, std::size_t dim,
                                     const std::vector<Vec>& normals,
                                     const std::vector<Vec>& equations,
                                     std::shared_ptr<const Mat> form) {
    PolyCone c;
    c.field_ = f;
    c.dim_ = dim;
    c.form_ = std::move(form);
    DDResult vr = double_description(f, dim, normals, equations);
    c.rays_ = std::move(vr.rays);
    c.lineality_ = std::move(vr.lineality);
    // Minimal H-rep from the V-rep.
    vrep_to_hrep(f, dim, c.rays_, c.lineality_, c.ineqs_, c.eqs_);
    return c;
}

PolyCone PolyCone::from_vrep(const Field& f, std::size_t dim, std::vector<Vec> rays,
                             std::vector<Vec> lineality, std::shared_ptr<const Mat> form) {
    PolyCone c;
    c.field_ = f;
    c.dim_ = dim;
    c.form_ = std::move(form);
    for (auto& r : rays) r = canonical_ray(r);
    std::sort(rays.begin(), rays.end(),
              [](const Vec& x, const Vec& y) { return Vec::compare(x, y) < 0; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    c.rays_ = std::move(rays);
    c.lineality_ = canonical_span_basis(lineality, f, dim);
    for (auto& l : c.lineality_) l = canonical_line(l);
    vrep_to_hrep(f, dim, c.rays_, c.lineality_, c.ineqs_, c.eqs_);
    return c;
}

std::size_t PolyCone::dim() const {
    std::vector<Vec> all = rays_;
    all.insert(all.end(), lineality_.begin(), lineality_.end());
    if (all.empty()) return 0;
    return imagcone::rank(Mat::from_rows(all));
}

bool PolyCone::contains(const Vec& v, bool strict) const {
    if (v.size() != dim_) throw DimensionMismatch();
    for (const auto& e : eqs_)
        if (dot(e, v).sign() != 0) return false;
    for (const auto& h : ineqs_) {
        const int s = dot(h, v).sign();
        if (s < 0 || (strict && s == 0)) return false;
    }
    return true;
}

PolyCone PolyCone::dual() const {
    std::vector<Vec> ineqs, eqs;
    auto pair_with = [&](const Vec& g) {
        if (!form_) return g;
        if (form_->rows() != dim_ || form_->cols() != dim_) throw DimensionMismatch();
        return form_->apply(g);
    };
    if (form_) {
        Mat m = *form_;
        if (!inverse(m)) throw SingularFormForDual();
    }
    for (const auto& g : rays_) ineqs.push_back(pair_with(g));
    for (const auto& l : lineality_) eqs.push_back(pair_with(l));
    return from_inequalities(field_, dim_, ineqs, eqs, form_);
}

PolyCone PolyCone::intersect(const PolyCone& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch();
    std::vector<Vec> ineqs = ineqs_;
    ineqs.insert(ineqs.end(), other.ineqs_.begin(), other.ineqs_.end());
    std::vector<Vec> eqs = eqs_;
    eqs.insert(eqs.end(), other.eqs_.begin(), other.eqs_.end());
    return from_inequalities(field_, dim_, ineqs, eqs, form_);
}

PolyCone PolyCone::face_from_ray_indices(const std::vector<std::size_t>& idx) const {
    std::vector<Vec> rays;
    for (std::size_t i : idx) rays.push_back(rays_[i]);
    return from_vrep(field_, dim_, std::move(rays), lineality_, form_);
}

FaceLattice PolyCone::faces() const { return FaceLattice(*this); }

PolyCone PolyCone::minimal_face_containing(const Vec& v) const {
    if (!contains(v)) throw PointNotInCone();
    std::vector<Vec> tight;
    for (const auto& h : ineqs_)
        if (dot(h, v).sign() == 0) tight.push_back(h);
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        bool in_face = true;
        for (const auto& h : tight)
            if (dot(h, rays_[i]).sign() != 0) { in_face = false; break; }
        if (in_face) key.push_back(i);
    }
    return face_from_ray_indices(key);
}

Vec PolyCone::relative_interior_point() const {
    Vec p(field_, dim_);
    for (const auto& r : rays_) p += r;
    for (const auto& h : ineqs_) {
        if (dot(h, p).sign() <= 0 && !rays_.empty())
            throw AlgorithmInvariantViolated("interior point not strict on a facet");
    }
    return p;
}

bool PolyCone::operator==(const PolyCone& other) const {
    return dim_ == other.dim_ && rays_ == other.rays_ && lineality_ == other.lineality_;
}

// ---------------------------------------------------------------------------

FaceLattice::FaceLattice(const PolyCone& cone) {
    const auto& rays = cone.rays();
    std::vector<std::size_t> full_key(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) full_key[i] = i;

    std::vector<std::vector<std::size_t>> queue{full_key};
    by_key_[full_key] = 0;
    nodes_.push_back(Node{full_key, cone});

    // Tightness pattern of each ray against each facet normal, precomputed.
    const auto& hs = cone.inequalities();
    std::vector<std::vector<bool>> ray_tight(rays.size(), std::vector<bool>(hs.size()));
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < hs.size(); ++j)
            ray_tight[i][j] = dot(hs[j], rays[i]).sign() == 0;

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::vector<std::size_t> key = queue[qi];
        for (std::size_t j = 0; j < hs.size(); ++j) {
            std::vector<std::size_t> sub;
            for (std::size_t i : key)
                if (ray_tight[i][j]) sub.push_back(i);
            if (sub == key) continue;
            if (by_key_.count(sub)) continue;
            by_key_[sub] = nodes_.size();
            nodes_.push_back(Node{sub, cone.face_from_ray_indices(sub)});
            queue.push_back(sub);
        }
    }
    // The minimal face (lineality space / origin) carries no rays; sequential
    // facet intersection must have reached it whenever rays exist.
    if (!rays.empty() && !by_key_.count({}))
        throw AlgorithmInvariantViolated("face lattice missing its bottom");

    std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) {
        if (a.ray_indices.size() != b.ray_indices.size())
            return a.ray_indices.size() < b.ray_indices.size();
        return a.ray_indices < b.ray_indices;
    });
    by_key_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) by_key_[nodes_[i].ray_indices] = i;
    bottom_ = 0;
    top_ = nodes_.size() - 1;
}

bool FaceLattice::leq(std::size_t a, std::size_t b) const {
    return std::includes(nodes_[b].ray_indices.begin(), nodes_[b].ray_indices.end(),
                         nodes_[a].ray_indices.begin(), nodes_[a].ray_indices.end());
}

std::size_t FaceLattice::meet(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> key;
    std::set_intersection(nodes_[a].ray_indices.begin(), nodes_[a].ray_indices.end(),
                          nodes_[b].ray_indices.begin(), nodes_[b].ray_indices.end(),
                          std::back_inserter(key));
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    // Intersection of faces is a face; its key must be a registered one.
    throw AlgorithmInvariantViolated("face lattice not meet-closed");
}

std::size_t FaceLattice::join(std::size_t a, std::size_t b) const {
    std::size_t best = top_;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (leq(a, i) && leq(b, i) && nodes_[i].ray_indices.size() < nodes_[best].ray_indices.size())
            best = i;
    return best;
}

std::vector<std::pair<std::size_t, std::size_t>> FaceLattice::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < nodes_.size(); ++a)
        for (std::size_t b = 0; b < nodes_.size(); ++b) {
            if (a == b || !leq(a, b)) continue;
            bool is_cover = true;
            for (std::size_t c = 0; c < nodes_.size() && is_cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) is_cover = false;
            if (is_cover) out.emplace_back(a, b);
        }
    return out;
}

std::optional<std::size_t> FaceLattice::find_by_key(const std::vector<std::size_t>& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

} // namespace imagcone
