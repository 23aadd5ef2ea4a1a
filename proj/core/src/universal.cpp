#include "imagcone/universal.hpp"

namespace imagcone {

bool validate_generic_universal(const BasedRootSystem& sys) {
    if (sys.rank() < 2) return false;
    const Scalar minus_one(sys.field(), -1, 1);
    for (std::size_t i = 0; i < sys.rank(); ++i)
        for (std::size_t j = i + 1; j < sys.rank(); ++j)
            if ((sys.gram().at(i, j) - minus_one).sign() >= 0) return false;
    return true;
}

namespace {

void require_generic_universal(const BasedRootSystem& sys) {
    if (!validate_generic_universal(sys))
        throw AlgorithmInvariantViolated("operation needs a generic universal system");
}

Scalar exp_lambda(const BasedRootSystem& sys, std::size_t a, std::size_t b) {
    Scalar c = sys.gram().at(a, b);
    const Scalar one(sys.field(), 1, 1);
    auto root = (c * c - one).try_sqrt();
    if (!root) throw SqrtNotInField();
    return -c + *root;
}

} // namespace

Vec u_vec(const BasedRootSystem& sys, std::size_t a, std::size_t b) {
    require_generic_universal(sys);
    if (a == b) throw InputError("u(a,b) needs distinct simples");
    return exp_lambda(sys, a, b) * sys.simples()[a] + sys.simples()[b];
}

Vec uprime_vec(const BasedRootSystem& sys, std::size_t a, std::size_t b) {
    require_generic_universal(sys);
    if (a == b) throw InputError("u'(a,b) needs distinct simples");
    return -sys.gram().at(a, b) * sys.simples()[a] + sys.simples()[b];
}

PolyCone k_plus(const BasedRootSystem& sys) {
    require_generic_universal(sys);
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < sys.rank(); ++a)
        for (std::size_t b = 0; b < sys.rank(); ++b)
            if (a != b) gens.push_back(u_vec(sys, a, b));
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_generators(sys.field(), sys.ambient_dim(), gens, form);
}

PolyCone d_cone(const BasedRootSystem& sys, std::size_t alpha) {
    require_generic_universal(sys);
    std::vector<Vec> gens{sys.simples()[alpha]};
    for (std::size_t b = 0; b < sys.rank(); ++b)
        if (b != alpha) gens.push_back(u_vec(sys, alpha, b));
    auto form = std::make_shared<Mat>(sys.form());
    return PolyCone::from_generators(sys.field(), sys.ambient_dim(), gens, form);
}

namespace {

// The unique simple with positive pairing against v (v in the positive cone
// but not in K); throws UniquenessViolated if the partition fails.
std::size_t unique_positive_pairing(const BasedRootSystem& sys, const Vec& v) {
    std::size_t found = sys.rank();
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        if (sys.pair(v, sys.simples()[i]).sign() > 0) {
            if (found != sys.rank()) throw UniquenessViolated();
            found = i;
        }
    }
    if (found == sys.rank()) throw UniquenessViolated("no positive pairing outside K");
    return found;
}

bool in_k(const BasedRootSystem& sys, const Vec& v) {
    for (std::size_t i = 0; i < sys.rank(); ++i)
        if (sys.pair(v, sys.simples()[i]).sign() > 0) return false;
    return true;
}

} // namespace

LocateResult locate(const BasedRootSystem& sys, const Vec& v, std::size_t budget) {
    require_generic_universal(sys);
    if (!sys.positive_cone().contains(v)) throw NotInPositiveCone();
    LocateResult out;
    if (v.is_zero()) {
        out.status = LocateStatus::Zero;
        return out;
    }
    const int norm = sys.pair(v, v).sign();
    if (norm >= 0) {
        // norm > 0, or isotropic nonzero (Z meets the isotropic cone in 0):
        // the unique alpha with positive pairing names the D cone
        out.status = LocateStatus::InD;
        out.d_index = unique_positive_pairing(sys, v);
        return out;
    }
    Vec cur = v;
    for (std::size_t step = 0; step <= budget; ++step) {
        if (in_k(sys, cur)) {
            out.status = LocateStatus::InZ;
            out.steps = step;
            return out;
        }
        if (step == budget) break;
        if (!sys.positive_cone().contains(cur)) {
            // not expected for negative-norm points; log and fall back to
            // the unique-alpha rule at the original point
            out.anomaly = true;
            out.status = LocateStatus::InD;
            out.d_index = unique_positive_pairing(sys, v);
            out.steps = step;
            return out;
        }
        std::size_t i = unique_positive_pairing(sys, cur);
        cur = sys.reflect_simple(i, cur);
        out.applied.push_back(i);
    }
    out.status = LocateStatus::Inconclusive;
    out.steps = budget;
    return out;
}

Itinerary itinerary(const BasedRootSystem& sys, const Vec& v, std::size_t max_steps) {
    require_generic_universal(sys);
    if (!sys.positive_cone().contains(v)) throw NotInPositiveCone();
    Itinerary it;
    Vec cur = v;
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (in_k(sys, cur)) {
            it.terminated = true;
            return it;
        }
        std::size_t i = unique_positive_pairing(sys, cur);
        if (!it.prefix.empty() && it.prefix.back() == i)
            throw AlgorithmInvariantViolated("itinerary repeated a letter");
        it.prefix.push_back(i);
        cur = sys.reflect_simple(i, cur);
        it.steps += 1;
        if (!sys.positive_cone().contains(cur)) return it; // sequence ends
    }
    if (in_k(sys, cur)) it.terminated = true;
    return it;
}

std::vector<Root> beta_prime_roots(const BasedRootSystem& sys,
                                   const std::vector<std::size_t>& prefix, std::size_t n) {
    if (n > prefix.size()) throw InvalidPrefix("n exceeds the prefix length");
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
        if (prefix[i] == prefix[i + 1])
            throw InvalidPrefix("consecutive itinerary letters must differ");
    std::vector<Root> out;
    for (std::size_t i = 0; i < n; ++i) {
        Word w(prefix.begin(), prefix.begin() + i);
        Vec beta = sys.apply_word(w, sys.simples()[prefix[i]]);
        auto r = sys.is_root(beta);
        if (!r || r->vector != beta)
            throw AlgorithmInvariantViolated("beta-prime vector is not a positive root");
        if (!out.empty() && !sys.dominates(out.back(), *r))
            throw AlgorithmInvariantViolated("beta-prime chain not increasing in dominance");
        out.push_back(*r);
    }
    return out;
}

Scalar separation_constant(const BasedRootSystem& sys) {
    require_generic_universal(sys);
    std::optional<Scalar> k_rho;
    const Scalar two(sys.field(), 2, 1);
    for (std::size_t a = 0; a < sys.rank(); ++a) {
        std::vector<Vec> gens{sys.simples()[a]};
        for (std::size_t b = 0; b < sys.rank(); ++b)
            if (b != a) gens.push_back(u_vec(sys, a, b));
        for (const Vec& u : gens) {
            for (std::size_t b = 0; b < sys.rank(); ++b) {
                Scalar num = two * sys.pair(u, sys.simples()[b]);
                if (num.sign() < 0) num = -num;
                Scalar cand = num / sys.height(u);
                if (!k_rho || (cand - *k_rho).sign() < 0) k_rho = cand;
            }
        }
    }
    return *k_rho;
}

} // namespace imagcone
