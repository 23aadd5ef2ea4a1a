#include <benchmark/benchmark.h>

#include <random>

#include "imagcone/imagcone.hpp"
#include "imagcone/universal.hpp"

using namespace imagcone;

namespace {

Mat gram_of(const Field& f, std::vector<std::vector<mpq_class>> rows) {
    Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Scalar(f, rows[r][c]);
    return m;
}

BasedRootSystem universal3() {
    Field q;
    return BasedRootSystem::from_gram(q,
                                      gram_of(q, {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
}

} // namespace

static void BM_scalar_sign(benchmark::State& state) {
    Field f({2, 5});
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Scalar> xs;
    for (int i = 0; i < 64; ++i) {
        Scalar s(f);
        for (std::size_t mask = 0; mask < f.basis_size(); ++mask)
            s += Scalar(f, num(rng), 7) * Scalar::basis_element(f, mask);
        xs.push_back(s);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i % xs.size()].sign());
        ++i;
    }
}
BENCHMARK(BM_scalar_sign);

static void BM_root_enumeration(benchmark::State& state) {
    BasedRootSystem s = universal3();
    const long h = state.range(0);
    for (auto _ : state) {
        // bypass the per-system cache to measure the enumeration itself
        BasedRootSystem fresh = universal3();
        benchmark::DoNotOptimize(fresh.positive_roots_up_to_height(Scalar(h)).size());
    }
    state.SetComplexityN(h);
}
BENCHMARK(BM_root_enumeration)->Arg(10)->Arg(20)->Arg(40)->Complexity();

static void BM_double_description(benchmark::State& state) {
    Field q;
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coord(-3, 3);
    const std::size_t dim = 4, gens = state.range(0);
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < gens; ++i) {
        Vec v(q, dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = Scalar(q, coord(rng), 1);
        vs.push_back(std::move(v));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(PolyCone::from_generators(q, dim, vs).rays().size());
}
BENCHMARK(BM_double_description)->Arg(4)->Arg(8)->Arg(12);

static void BM_z_membership_descent(benchmark::State& state) {
    BasedRootSystem s = universal3();
    Vec k = s.simples()[0] + s.simples()[1] + s.simples()[2];
    Word w;
    for (long i = 0; i < state.range(0); ++i) w.push_back(std::size_t(i % 3));
    Vec moved = s.apply_word(s.reduced_word(w), k);
    for (auto _ : state) {
        auto zm = z_membership(s, moved, 10000);
        benchmark::DoNotOptimize(zm.status);
    }
}
BENCHMARK(BM_z_membership_descent)->Arg(4)->Arg(8)->Arg(16);

static void BM_signature(benchmark::State& state) {
    Field q;
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> entry(-4, 4);
    const std::size_t n = state.range(0);
    Mat m(q, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            Scalar e(q, entry(rng), 1);
            m.at(r, c) = e;
            m.at(c, r) = e;
        }
    for (auto _ : state) benchmark::DoNotOptimize(signature(m).positive);
}
BENCHMARK(BM_signature)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
