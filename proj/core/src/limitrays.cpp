#include "imagcone/limitrays.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "imagcone/polycone.hpp"

namespace imagcone {

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return Vec::compare(a, b) < 0; }
};

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

NormalizedPoint normalize(const BasedRootSystem& sys, const Vec& v) {
    Scalar h = sys.height(v);
    if (h.sign() <= 0) throw NonpositiveHeight();
    NormalizedPoint p;
    p.exact = true;
    p.vector = h.inverse() * v;
    return p;
}

std::vector<double> normalize_float(const BasedRootSystem& sys, const Vec& v) {
    double h = sys.height(v).to_double();
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double() / h;
    return out;
}

RaySet dihedral_limit_rays(const BasedRootSystem& sys, const Root& a, const Root& b) {
    RaySet out;
    const Field& f = sys.field();
    Scalar c = sys.pair(a.vector, b.vector);
    const Scalar one(f, 1, 1);
    if ((c + one).sign() > 0) throw NotInfiniteDihedral();
    if ((c + one).sign() == 0) {
        out.exact_rays.push_back(canonical_ray(a.vector + b.vector));
        return out;
    }
    Scalar disc = c * c - one;
    auto root = disc.try_sqrt();
    if (root) {
        Scalar el = -c + *root; // e^lambda > 1
        out.exact_rays.push_back(canonical_ray(el * a.vector + b.vector));
        out.exact_rays.push_back(canonical_ray(a.vector + el * b.vector));
        std::sort(out.exact_rays.begin(), out.exact_rays.end(),
                  [](const Vec& x, const Vec& y) { return Vec::compare(x, y) < 0; });
        return out;
    }
    out.exact_complete = false;
    const double cd = c.to_double();
    const double el = -cd + std::sqrt(cd * cd - 1);
    std::vector<double> r1(sys.ambient_dim()), r2(sys.ambient_dim());
    for (std::size_t i = 0; i < sys.ambient_dim(); ++i) {
        r1[i] = el * a.vector[i].to_double() + b.vector[i].to_double();
        r2[i] = a.vector[i].to_double() + el * b.vector[i].to_double();
    }
    out.approx.push_back(std::move(r1));
    out.approx.push_back(std::move(r2));
    return out;
}

namespace {

std::vector<Cluster> cluster_points(std::vector<std::vector<double>> pts, double eps) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist(pts[i], pts[j]) <= eps) parent[find(i)] = find(j);
    std::map<std::size_t, Cluster> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        Cluster& c = by_root[find(i)];
        if (c.centroid.empty()) c.centroid.assign(pts[i].size(), 0.0);
        for (std::size_t k = 0; k < pts[i].size(); ++k) c.centroid[k] += pts[i][k];
        c.count += 1;
    }
    std::vector<Cluster> out;
    for (auto& [root, c] : by_root) {
        for (double& x : c.centroid) x /= double(c.count);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
        return a.centroid < b.centroid;
    });
    return out;
}

} // namespace

std::vector<Cluster> approx_limit_rays(const BasedRootSystem& sys, const Scalar& height,
                                       double eps) {
    std::vector<Root> roots = sys.positive_roots_up_to_height(height);
    if (roots.empty()) return {};
    // a finite root system stabilizes below the bound: no accumulation
    Scalar half = height / Scalar(sys.field(), 2, 1);
    std::size_t below_half = 0;
    for (const Root& r : roots)
        if ((sys.height(r.vector) - half).sign() <= 0) ++below_half;
    if (below_half == roots.size()) return {};
    // accumulation proxy: the top-height decile of the enumerated roots
    std::vector<std::pair<double, std::vector<double>>> pts;
    for (const Root& r : roots)
        pts.push_back({sys.height(r.vector).to_double(), normalize_float(sys, r.vector)});
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t keep = std::max<std::size_t>(1, (pts.size() + 9) / 10);
    std::vector<std::vector<double>> top;
    for (std::size_t i = 0; i < keep; ++i) top.push_back(pts[i].second);
    return cluster_points(std::move(top), eps);
}

RaySet dihedral_ray_union(const BasedRootSystem& sys, const Scalar& height) {
    RaySet out;
    std::set<Vec, VecLess> seen;
    std::set<std::vector<long>> approx_seen;
    const Scalar one(sys.field(), 1, 1);
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        Vec coeffs(sys.field(), sys.rank());
        coeffs[i] = one;
        Root simple{std::move(coeffs), sys.simples()[i], 1, {i}};
        for (const Root& b : sys.positive_roots_up_to_height(height)) {
            if (b.vector == sys.simples()[i]) continue;
            Scalar c = sys.pair(sys.simples()[i], b.vector);
            if ((c + one).sign() > 0) continue;
            RaySet rays = dihedral_limit_rays(sys, simple, b);
            for (Vec& r : rays.exact_rays)
                if (seen.insert(r).second) out.exact_rays.push_back(r);
            if (!rays.exact_complete) out.exact_complete = false;
            for (auto& fr : rays.approx) {
                // crude dedupe of float rays by rounding the direction
                double norm = 0;
                for (double x : fr) norm += x * x;
                norm = std::sqrt(norm);
                std::vector<long> key;
                for (double x : fr) key.push_back(std::lround(1e9 * x / norm));
                if (approx_seen.insert(key).second) out.approx.push_back(fr);
            }
        }
    }
    std::sort(out.exact_rays.begin(), out.exact_rays.end(),
              [](const Vec& x, const Vec& y) { return Vec::compare(x, y) < 0; });
    return out;
}

std::string normalized_roots_csv(const BasedRootSystem& sys, const Scalar& height, double eps) {
    std::vector<Root> roots = sys.positive_roots_up_to_height(height);
    std::vector<std::vector<double>> pts;
    for (const Root& r : roots) pts.push_back(normalize_float(sys, r.vector));
    // assign each point to the cluster structure at eps
    std::vector<Cluster> clusters = cluster_points(pts, eps);
    std::ostringstream os;
    for (std::size_t c = 0; c < sys.ambient_dim(); ++c) os << "x" << c << ",";
    os << "height,cluster\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        std::size_t best = 0;
        double best_d = 0;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            double d = dist(pts[i], clusters[c].centroid);
            if (c == 0 || d < best_d) { best = c; best_d = d; }
        }
        for (double x : pts[i]) os << x << ",";
        os << sys.height(roots[i].vector).to_double() << "," << best << "\n";
    }
    return os.str();
}

} // namespace imagcone
