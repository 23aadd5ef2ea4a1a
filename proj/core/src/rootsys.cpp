#include "imagcone/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace imagcone {

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return Vec::compare(a, b) < 0; }
};

} // namespace

struct BasedRootSystem::RootCache {
    std::mutex mutex;
    std::optional<Scalar> bound;
    std::vector<Root> roots; // sorted by (height, coeffs)
};

std::vector<std::vector<std::size_t>> components_of_gram(const Mat& gram) {
    const std::size_t n = gram.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> comp{i};
        seen[i] = true;
        for (std::size_t qi = 0; qi < comp.size(); ++qi) {
            for (std::size_t j = 0; j < n; ++j) {
                if (seen[j] || comp[qi] == j || gram.at(comp[qi], j).sign() == 0) continue;
                seen[j] = true;
                comp.push_back(j);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// ---------------------------------------------------------------------------

BasedRootSystem BasedRootSystem::from_gram(const Field& f, const Mat& gram) {
    if (!gram.is_symmetric()) throw InvalidGram("gram matrix must be symmetric");
    const std::size_t n = gram.rows();
    BasedRootSystem sys;
    sys.field_ = f;

    std::vector<Vec> kernel = kernel_basis(gram);
    const std::size_t k = kernel.size();
    const std::size_t dim = n + k;
    Mat form(f, dim, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form.at(i, j) = gram.at(i, j);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            form.at(n + r, j) = kernel[r][j];
            form.at(j, n + r) = kernel[r][j];
        }
    if (!inverse(form))
        throw ExtensionSingular("ample extension by the kernel pairing is singular");
    sys.form_ = std::move(form);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(f, dim);
        e[i] = Scalar(f, 1, 1);
        sys.simples_.push_back(std::move(e));
    }
    sys.finish_setup();
    return sys;
}

BasedRootSystem BasedRootSystem::from_vectors(const Field& f, const Mat& form,
                                              const std::vector<Vec>& simples) {
    if (!form.is_symmetric()) throw FormSingular("form must be symmetric");
    if (!inverse(form)) throw FormSingular("form must be nonsingular");
    BasedRootSystem sys;
    sys.field_ = f;
    sys.form_ = form;
    sys.simples_ = simples;
    for (const auto& a : simples)
        if (a.size() != form.rows()) throw DimensionMismatch();

    // Positive independence: {c >= 0 : sum c_i alpha_i = 0} must be {0}.
    const std::size_t n = simples.size();
    std::vector<Vec> eqs;
    for (std::size_t coord = 0; coord < form.rows(); ++coord) {
        Vec eq(f, n);
        for (std::size_t j = 0; j < n; ++j) eq[j] = simples[j][coord];
        eqs.push_back(std::move(eq));
    }
    std::vector<Vec> orthant;
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(f, n);
        e[j] = Scalar(f, 1, 1);
        orthant.push_back(std::move(e));
    }
    PolyCone relations = PolyCone::from_inequalities(f, n, orthant, eqs);
    if (!relations.is_zero_cone()) throw NotPositivelyIndependent();

    sys.finish_setup();
    return sys;
}

BasedRootSystem BasedRootSystem::from_labels(const std::vector<std::vector<int>>& labels) {
    const std::size_t n = labels.size();
    std::vector<long> radicands;
    auto need = [&](long d) {
        if (std::find(radicands.begin(), radicands.end(), d) == radicands.end())
            radicands.push_back(d);
    };
    for (const auto& row : labels)
        for (int m : row) {
            if (m == 4) need(2);
            if (m == 5) need(5);
            if (m == 6) need(3);
            if (m == 12) { need(2); need(3); }
        }
    Field f(radicands);
    Mat gram(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i].size() != n) throw InputError("label matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (labels[i][j] != 1) throw InvalidGram("diagonal labels must be 1");
                gram.at(i, j) = Scalar(f, 1, 1);
            } else if (labels[i][j] == 0) {
                gram.at(i, j) = Scalar(f, -1, 1); // infinite bond, affine default
            } else {
                gram.at(i, j) = coxeter_cosine(f, labels[i][j]);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i][j] != labels[j][i]) throw InvalidGram("label matrix must be symmetric");
    return from_gram(f, gram);
}

void BasedRootSystem::validate_gram_entries() const {
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_.at(i, i) != Scalar(field_, 1, 1))
            throw InvalidGram("simple roots must have norm 1");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!label_of_gram_entry(gram_.at(i, j)))
                throw InvalidGram("off-diagonal entry " + gram_.at(i, j).str() +
                                  " is neither <= -1 nor -cos(pi/m)");
    }
}

void BasedRootSystem::finish_setup() {
    const std::size_t n = rank();
    gram_ = Mat(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram_.at(i, j) = pair(simples_[i], simples_[j]);
    validate_gram_entries();

    // rho with <rho, alpha_i> = 1 for all i; if that linear system is
    // inconsistent (possible for dependent simples), fall back to an interior
    // point of the chamber cone.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(form_.apply(simples_[i]));
    Mat m = Mat::from_rows(rows);
    Vec ones(field_, n);
    for (std::size_t i = 0; i < n; ++i) ones[i] = Scalar(field_, 1, 1);
    if (auto sol = solve(m, ones)) {
        rho_ = std::move(*sol);
    } else {
        PolyCone chamber = PolyCone::from_inequalities(field_, ambient_dim(), rows, {});
        rho_ = chamber.relative_interior_point();
        for (std::size_t i = 0; i < n; ++i)
            if (pair(rho_, simples_[i]).sign() <= 0)
                throw AlgorithmInvariantViolated("chamber interior fallback for rho failed");
    }

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (const auto& comp : split_components(all)) components_.push_back(classify_component(comp));
    positive_cone_ = PolyCone::from_generators(field_, ambient_dim(), simples_);
    cache_ = std::make_shared<RootCache>();
}

std::vector<std::vector<std::size_t>> BasedRootSystem::split_components(
    const std::vector<std::size_t>& simple_indices) const {
    const auto& idx = simple_indices;
    Mat sub(field_, idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub.at(a, b) = gram_.at(idx[a], idx[b]);
    auto comps = components_of_gram(sub);
    for (auto& comp : comps)
        for (auto& c : comp) c = idx[c];
    return comps;
}

ComponentInfo BasedRootSystem::classify_component(const std::vector<std::size_t>& s) const {
    ComponentInfo info;
    info.simples = s;
    Mat sub(field_, s.size(), s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) sub.at(a, b) = gram_.at(s[a], s[b]);
    Signature sig = signature(sub);
    if (sig.negative == 0 && sig.zero == 0) {
        info.type = ComponentType::Finite;
    } else if (sig.negative == 0 && sig.zero == 1) {
        info.type = ComponentType::Affine;
        auto ker = kernel_basis(sub);
        if (ker.size() != 1)
            throw AlgorithmInvariantViolated("affine component with corank != 1");
        Vec coeffs = canonical_ray(ker[0]);
        int sgn = 0;
        for (std::size_t i = 0; i < coeffs.size() && sgn == 0; ++i) sgn = coeffs[i].sign();
        if (sgn < 0) coeffs = -coeffs;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i].sign() <= 0)
                throw AlgorithmInvariantViolated("affine kernel not strictly positive");
        Vec delta(field_, ambient_dim());
        for (std::size_t i = 0; i < s.size(); ++i) delta += coeffs[i] * simples_[s[i]];
        info.delta = std::move(delta);
    } else {
        info.type = ComponentType::Indefinite;
    }
    return info;
}

Scalar BasedRootSystem::pair(const Vec& u, const Vec& v) const {
    return dot(u, form_.apply(v));
}

Vec BasedRootSystem::reflect_by(const Vec& beta, const Vec& v) const {
    Scalar c = pair(v, beta);
    c += c;
    return v - c * beta;
}

Vec BasedRootSystem::apply_word(const Word& w, const Vec& v) const {
    Vec out = v;
    for (std::size_t i = w.size(); i-- > 0;) out = reflect_simple(w[i], out);
    return out;
}

Vec BasedRootSystem::apply_word_inverse(const Word& w, const Vec& v) const {
    Vec out = v;
    for (std::size_t i = 0; i < w.size(); ++i) out = reflect_simple(w[i], out);
    return out;
}

std::vector<Root> BasedRootSystem::positive_roots_up_to_height(const Scalar& h) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->bound || (h - *cache_->bound).sign() > 0) {
        cache_->roots = enumerate_up_to(h);
        cache_->bound = h;
    }
    std::vector<Root> out;
    for (const Root& r : cache_->roots) {
        if ((height(r.vector) - h).sign() > 0) break;
        out.push_back(r);
    }
    return out;
}

std::vector<Root> BasedRootSystem::enumerate_up_to(const Scalar& h) const {
    struct Pending {
        Vec coeffs;
        std::size_t depth;
        Word word;
        Scalar height;
    };
    std::map<Vec, Pending, VecLess> pending;
    std::map<Vec, Root, VecLess> done;
    auto key_less = [](const std::pair<Scalar, Vec>& a, const std::pair<Scalar, Vec>& b) {
        const int s = (a.first - b.first).sign();
        if (s != 0) return s < 0;
        return Vec::compare(a.second, b.second) < 0;
    };
    std::set<std::pair<Scalar, Vec>, decltype(key_less)> queue(key_less);

    for (std::size_t i = 0; i < rank(); ++i) {
        const Scalar hi = height(simples_[i]);
        if ((hi - h).sign() > 0) continue;
        if (pending.count(simples_[i])) continue;
        Vec coeffs(field_, rank());
        coeffs[i] = Scalar(field_, 1, 1);
        pending.emplace(simples_[i], Pending{std::move(coeffs), 1, {i}, hi});
        queue.insert({hi, simples_[i]});
    }

    while (!queue.empty()) {
        auto top = *queue.begin();
        queue.erase(queue.begin());
        Vec v = top.second;
        Pending rec = pending.at(v);
        pending.erase(v);
        done.emplace(v, Root{rec.coeffs, v, rec.depth, rec.word});

        for (std::size_t i = 0; i < rank(); ++i) {
            if (v == simples_[i]) continue; // the only reflection into a negative root
            Scalar c = pair(v, simples_[i]);
            if (c.sign() == 0) continue;
            c += c;
            Vec w = v - c * simples_[i];
            Scalar hw = rec.height - c * height(simples_[i]);
            if ((hw - h).sign() > 0) continue;
            if (done.count(w)) continue;
            Vec coeffs = rec.coeffs;
            coeffs[i] -= c;
            Word word;
            word.reserve(rec.word.size() + 1);
            word.push_back(i);
            word.insert(word.end(), rec.word.begin(), rec.word.end());
            auto it = pending.find(w);
            if (it == pending.end()) {
                pending.emplace(w, Pending{std::move(coeffs), rec.depth + 1, std::move(word), hw});
                queue.insert({hw, w});
            } else if (rec.depth + 1 < it->second.depth) {
                it->second.depth = rec.depth + 1;
                it->second.word = std::move(word);
                it->second.coeffs = std::move(coeffs);
            }
        }
    }

    std::vector<Root> out;
    out.reserve(done.size());
    for (auto& [v, r] : done) out.push_back(r);
    std::sort(out.begin(), out.end(), [this](const Root& a, const Root& b) {
        const int hs = (height(a.vector) - height(b.vector)).sign();
        if (hs != 0) return hs < 0;
        const int cc = Vec::compare(a.coeffs, b.coeffs);
        if (cc != 0) return cc < 0;
        return Vec::compare(a.vector, b.vector) < 0;
    });
    return out;
}

std::optional<Root> BasedRootSystem::is_root(const Vec& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch();
    if ((pair(v, v) - Scalar(field_, 1, 1)).sign() != 0) return std::nullopt;
    const Scalar hv = height(v);
    const int s = hv.sign();
    if (s == 0) return std::nullopt;
    Vec u = s > 0 ? v : -v;
    for (const Root& r : positive_roots_up_to_height(s > 0 ? hv : -hv))
        if (r.vector == u) return r;
    return std::nullopt;
}

bool BasedRootSystem::is_positive_root_vector(const Vec& v) const {
    if (height(v).sign() <= 0) return false;
    return is_root(v).has_value();
}

// ---------------------------------------------------------------------------

namespace {

bool canonical_pair_value(const Scalar& c) { return label_of_gram_entry(c).has_value(); }

} // namespace

std::pair<Root, Root> BasedRootSystem::dihedral_canonical_pair(const Root& b1,
                                                               const Root& b2) const {
    if (b1.vector == b2.vector) throw NotDistinctReflections();
    Vec u = b1.vector, v = b2.vector;
    const Scalar one(field_, 1, 1);

    for (int guard = 0;; ++guard) {
        if (guard > 100000)
            throw AlgorithmInvariantViolated("dihedral reduction did not terminate");
        Scalar c = pair(u, v);
        if (canonical_pair_value(c)) break;
        if ((c * c - one).sign() < 0) {
            // |c| < 1: finite dihedral; close the orbit under the two
            // generating reflections and take the extreme rays of its span.
            std::vector<Vec> roots{u, v};
            std::set<Vec, VecLess> seen{u, v};
            const Vec g1 = u, g2 = v;
            for (std::size_t qi = 0; qi < roots.size(); ++qi) {
                Vec cur = roots[qi];
                for (const Vec* g : {&g1, &g2}) {
                    Vec w = reflect_by(*g, cur);
                    if (height(w).sign() < 0) w = -w;
                    if (seen.insert(w).second) roots.push_back(w);
                }
                if (roots.size() > 200)
                    throw AlgorithmInvariantViolated(
                        "finite dihedral closure did not terminate");
            }
            PolyCone cone = PolyCone::from_generators(field_, ambient_dim(), roots);
            if (cone.rays().size() != 2)
                throw AlgorithmInvariantViolated("dihedral cone with != 2 extreme rays");
            std::vector<Vec> ends;
            for (const Vec& ray : cone.rays())
                for (const Vec& r : roots)
                    if (canonical_ray(r) == ray) { ends.push_back(r); break; }
            if (ends.size() != 2)
                throw AlgorithmInvariantViolated("extreme rays of dihedral cone not roots");
            u = ends[0];
            v = ends[1];
            break;
        }
        // c >= 1: same-chain pair of an infinite dihedral; reflecting the
        // taller root in the shorter strictly decreases total height.
        const int hs = (height(u) - height(v)).sign();
        const bool u_high = hs > 0 || (hs == 0 && Vec::compare(u, v) > 0);
        Vec& high = u_high ? u : v;
        const Vec& low = u_high ? v : u;
        Vec w = reflect_by(low, high);
        if (height(w).sign() < 0) w = -w;
        high = w;
    }

    if (!canonical_pair_value(pair(u, v)))
        throw AlgorithmInvariantViolated("dihedral reduction did not reach a canonical pair");
    const int hs = (height(u) - height(v)).sign();
    if (hs > 0 || (hs == 0 && Vec::compare(u, v) > 0)) std::swap(u, v);
    auto r1 = is_root(u), r2 = is_root(v);
    if (!r1 || !r2) throw AlgorithmInvariantViolated("canonical pair member is not a root");
    return {*r1, *r2};
}

ReflectionSubgroup BasedRootSystem::canonical_simples(std::vector<Root> roots) const {
    auto by_vec = [](const Root& a, const Root& b) {
        return Vec::compare(a.vector, b.vector) < 0;
    };
    std::sort(roots.begin(), roots.end(), by_vec);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    while (true) {
        std::optional<std::pair<std::size_t, std::size_t>> pick;
        Scalar best_h;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (canonical_pair_value(pair(roots[i].vector, roots[j].vector))) continue;
                Scalar h = height(roots[i].vector) + height(roots[j].vector);
                if (!pick || (h - best_h).sign() < 0) {
                    pick = {i, j};
                    best_h = h;
                }
            }
        if (!pick) break;
        auto [i, j] = *pick;
        auto [n1, n2] = dihedral_canonical_pair(roots[i], roots[j]);
        roots.erase(roots.begin() + j);
        roots.erase(roots.begin() + i);
        roots.push_back(n1);
        roots.push_back(n2);
        std::sort(roots.begin(), roots.end(), by_vec);
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    verify_canonical_system(roots);
    return subgroup_from_canonical(std::move(roots));
}

ReflectionSubgroup BasedRootSystem::subgroup_from_canonical(std::vector<Root> simples) const {
    std::sort(simples.begin(), simples.end(), [this](const Root& a, const Root& b) {
        const int hs = (height(a.vector) - height(b.vector)).sign();
        if (hs != 0) return hs < 0;
        return Vec::compare(a.vector, b.vector) < 0;
    });
    ReflectionSubgroup sub;
    sub.simples = std::move(simples);
    Mat g(field_, sub.simples.size(), sub.simples.size());
    for (std::size_t a = 0; a < sub.simples.size(); ++a)
        for (std::size_t b = 0; b < sub.simples.size(); ++b)
            g.at(a, b) = pair(sub.simples[a].vector, sub.simples[b].vector);
    sub.components = components_of_gram(g);
    for (const auto& comp : sub.components) {
        Mat cg(field_, comp.size(), comp.size());
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = 0; b < comp.size(); ++b) cg.at(a, b) = g.at(comp[a], comp[b]);
        Signature sig = signature(cg);
        if (sig.negative == 0 && sig.zero == 0)
            sub.types.push_back(ComponentType::Finite);
        else if (sig.negative == 0 && sig.zero == 1)
            sub.types.push_back(ComponentType::Affine);
        else
            sub.types.push_back(ComponentType::Indefinite);
    }
    return sub;
}

bool BasedRootSystem::dominates(const Root& alpha, const Root& beta) const {
    if ((pair(alpha.vector, beta.vector) - Scalar(field_, 1, 1)).sign() < 0) return false;
    return alpha.depth <= beta.depth; // l(s_beta) = 2 depth - 1
}

Word BasedRootSystem::reduced_word(const Word& w) const {
    Word reduced;
    for (std::size_t letter : w) {
        if (letter >= rank()) throw InputError("word letter out of range");
        Vec r = apply_word(reduced, simples_[letter]);
        if (height(r).sign() > 0) {
            reduced.push_back(letter);
            continue;
        }
        // exchange condition: delete the unique earlier letter with beta_t = -r
        bool deleted = false;
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            Word prefix(reduced.begin(), reduced.begin() + t);
            Vec beta_t = apply_word(prefix, simples_[reduced[t]]);
            if (beta_t == -r) {
                reduced.erase(reduced.begin() + t);
                deleted = true;
                break;
            }
        }
        if (!deleted)
            throw AlgorithmInvariantViolated("exchange condition failed in word reduction");
    }
    return reduced;
}

std::size_t BasedRootSystem::word_length(const Word& w) const { return reduced_word(w).size(); }

std::vector<Root> BasedRootSystem::inversion_roots(const Word& w) const {
    Word red = reduced_word(w);
    std::vector<Root> out;
    for (std::size_t t = 0; t < red.size(); ++t) {
        Word prefix(red.begin(), red.begin() + t);
        Vec beta_t = apply_word(prefix, simples_[red[t]]);
        auto r = is_root(beta_t);
        if (!r || r->vector != beta_t)
            throw AlgorithmInvariantViolated("inversion vector is not a positive root");
        out.push_back(*r);
    }
    return out;
}

Scalar BasedRootSystem::height_length_epsilon() const {
    if (epsilon_) return *epsilon_;
    const Scalar one(field_, 1, 1);
    Scalar eps0(field_, 2, 1);
    auto update = [&](const Scalar& cand) {
        if ((cand - eps0).sign() < 0) eps0 = cand;
    };
    std::set<int> labels;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j) {
            auto m = label_of_gram_entry(gram_.at(i, j));
            if (m && *m >= 3) labels.insert(*m);
        }
    for (int m : labels) {
        // min over k of the nonzero values |2 cos(k pi / m)|
        switch (m) {
        case 3:
            update(one);
            break;
        case 4:
            update(Scalar::sqrt_of(field_, 2));
            break;
        case 5: // 2 cos(2 pi/5) = (sqrt5 - 1)/2
            update((Scalar::sqrt_of(field_, 5) - one) / Scalar(field_, 2, 1));
            break;
        case 6:
            update(one);
            break;
        case 12: // 2 cos(5 pi/12) = (sqrt6 - sqrt2)/2
            update((Scalar::sqrt_of(field_, 2) * Scalar::sqrt_of(field_, 3) -
                    Scalar::sqrt_of(field_, 2)) /
                   Scalar(field_, 2, 1));
            break;
        default:
            throw AlgorithmInvariantViolated("unexpected finite label");
        }
    }
    Scalar min_h = height(simples_[0]);
    for (std::size_t i = 1; i < rank(); ++i) {
        Scalar h = height(simples_[i]);
        if ((h - min_h).sign() < 0) min_h = h;
    }
    epsilon_ = min_h * eps0 / Scalar(field_, 2, 1);
    return *epsilon_;
}

bool BasedRootSystem::support_connected(const std::vector<std::size_t>& support) const {
    if (support.empty()) return true;
    return split_components(support).size() == 1;
}

Word BasedRootSystem::reflection_word(const Root& r) const {
    Word w(r.word.begin(), r.word.end() - 1);
    Word out = w;
    out.push_back(r.word.back());
    for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i]);
    return out;
}

std::vector<Vec> BasedRootSystem::subgroup_roots_up_to(const std::vector<Root>& simples,
                                                       const Scalar& h) const {
    std::set<Vec, VecLess> found;
    std::vector<Vec> queue;
    for (const Root& s : simples) {
        if ((height(s.vector) - h).sign() > 0) continue;
        if (found.insert(s.vector).second) queue.push_back(s.vector);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vec cur = queue[qi];
        for (const Root& g : simples) {
            Vec w = reflect_by(g.vector, cur);
            if (height(w).sign() < 0) w = -w;
            if ((height(w) - h).sign() > 0) continue;
            if (found.insert(w).second) queue.push_back(w);
        }
    }
    return std::vector<Vec>(found.begin(), found.end());
}

void BasedRootSystem::verify_canonical_system(const std::vector<Root>& simples) const {
    for (const Root& gamma : simples) {
        std::vector<Root> inv = inversion_roots(reflection_word(gamma));
        if (inv.size() != 2 * gamma.depth - 1)
            throw AlgorithmInvariantViolated("reflection word of a canonical simple not reduced");
        Scalar maxh = height(gamma.vector);
        for (const Root& b : inv) {
            Scalar hb = height(b.vector);
            if ((hb - maxh).sign() > 0) maxh = hb;
        }
        std::vector<Vec> sub_roots = subgroup_roots_up_to(simples, maxh);
        std::set<Vec, VecLess> sub(sub_roots.begin(), sub_roots.end());
        for (const Root& b : inv) {
            if (b.vector == gamma.vector) continue;
            if (sub.count(b.vector))
                throw AlgorithmInvariantViolated(
                    "canonical simple fails N(s_gamma) ∩ W' = {s_gamma}");
        }
        if (!sub.count(gamma.vector))
            throw AlgorithmInvariantViolated("canonical simple missing from its own subgroup");
    }
}

} // namespace imagcone
