#include <doctest.h>

#include <random>

#include "imagcone/imagcone.hpp"

using namespace imagcone;

namespace {

Mat gram_of(const Field& f, std::vector<std::vector<mpq_class>> rows) {
    Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Scalar(f, rows[r][c]);
    return m;
}

BasedRootSystem a2() {
    Field q;
    return BasedRootSystem::from_gram(
        q, gram_of(q, {{1, mpq_class(-1, 2)}, {mpq_class(-1, 2), 1}}));
}

BasedRootSystem affine_a1() {
    Field q;
    return BasedRootSystem::from_gram(q, gram_of(q, {{1, -1}, {-1, 1}}));
}

BasedRootSystem indef_dihedral() {
    Field q;
    return BasedRootSystem::from_gram(
        q, gram_of(q, {{1, mpq_class(-5, 4)}, {mpq_class(-5, 4), 1}}));
}

BasedRootSystem universal3() {
    Field q;
    return BasedRootSystem::from_gram(q,
                                      gram_of(q, {{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
}

BasedRootSystem rank5_chain() {
    Field q;
    const mpq_class h(-1, 2);
    return BasedRootSystem::from_gram(q, gram_of(q, {{1, -1, 0, 0, 0},
                                                     {-1, 1, h, 0, 0},
                                                     {0, h, 1, h, 0},
                                                     {0, 0, h, 1, -1},
                                                     {0, 0, 0, -1, 1}}));
}

// A1 x indefinite dihedral: reducible, used for the orbit-escape certificate.
BasedRootSystem a1_x_dihedral() {
    Field q;
    const mpq_class c(-5, 4);
    return BasedRootSystem::from_gram(q, gram_of(q, {{1, 0, 0}, {0, 1, c}, {0, c, 1}}));
}

Vec ray_of(const PolyCone& c, std::size_t i) { return c.rays()[i]; }

} // namespace

TEST_CASE("k cone") {
    CHECK(k_cone(a2()).is_zero_cone());

    BasedRootSystem aff = affine_a1();
    PolyCone ka = k_cone(aff);
    REQUIRE(ka.rays().size() == 1);
    CHECK(ray_of(ka, 0) == canonical_ray(aff.simples()[0] + aff.simples()[1]));

    BasedRootSystem d = indef_dihedral();
    PolyCone kd = k_cone(d);
    REQUIRE(kd.rays().size() == 2);
    // u'(a,b) = (5/4)a + b and u'(b,a), canonically scaled to (5,4), (4,5)
    Vec u1 = Scalar(d.field(), 5, 1) * d.simples()[0] + Scalar(d.field(), 4, 1) * d.simples()[1];
    Vec u2 = Scalar(d.field(), 4, 1) * d.simples()[0] + Scalar(d.field(), 5, 1) * d.simples()[1];
    CHECK(((ray_of(kd, 0) == u1 && ray_of(kd, 1) == u2) ||
           (ray_of(kd, 0) == u2 && ray_of(kd, 1) == u1)));
    for (const Vec& r : kd.rays())
        for (std::size_t i = 0; i < 2; ++i) CHECK(d.pair(r, d.simples()[i]).sign() <= 0);
}

TEST_CASE("k cone via facial witnesses") {
    for (const BasedRootSystem& s :
         {indef_dihedral(), universal3(), rank5_chain()}) {
        CHECK(k_cone_via_facials(s) == k_cone(s));
    }
    CHECK_THROWS_AS(k_cone_via_facials(a2()), NotIrreducibleIndefinite);
    CHECK_THROWS_AS(k_cone_via_facials(a1_x_dihedral()), NotIrreducibleIndefinite);
}

TEST_CASE("z membership") {
    BasedRootSystem d = indef_dihedral();
    ZMembership pos = z_membership(d, d.simples()[0], 100);
    CHECK(pos.status == ZStatus::NotInZ);
    CHECK(pos.certificate == ZCertificate::PositiveNorm);

    Vec out = d.simples()[0] - d.simples()[1];
    ZMembership o = z_membership(d, out, 100);
    CHECK(o.status == ZStatus::NotInZ);
    CHECK(o.certificate == ZCertificate::NotInPositiveCone);

    Vec inz = Scalar(d.field(), 9, 4) * (d.simples()[0] + d.simples()[1]);
    ZMembership yes = z_membership(d, inz, 100);
    CHECK(yes.status == ZStatus::InZ);
    CHECK(yes.applied.empty());
    CHECK(yes.k == inz);

    Vec iso = Scalar(d.field(), 2, 1) * d.simples()[0] + d.simples()[1];
    ZMembership inc = z_membership(d, iso, 2000);
    CHECK(inc.status == ZStatus::Inconclusive);
    CHECK(inc.steps == 2000);

    // orbit escape: A1-coordinate plus a deep dihedral part
    BasedRootSystem mix = a1_x_dihedral();
    Vec v = mix.simples()[0] +
            Scalar(mix.field(), 9, 4) * (mix.simples()[1] + mix.simples()[2]);
    CHECK(mix.pair(v, v).sign() < 0);
    ZMembership esc = z_membership(mix, v, 100);
    CHECK(esc.status == ZStatus::NotInZ);
    CHECK(esc.certificate == ZCertificate::OrbitLeftPositiveCone);

    // a W-translate of an interior K point comes back with the right word
    BasedRootSystem u = universal3();
    Vec k = u.simples()[0] + u.simples()[1] + u.simples()[2];
    Word w{0, 1, 2, 1};
    Vec moved = u.apply_word(w, k);
    ZMembership back = z_membership(u, moved, 100);
    REQUIRE(back.status == ZStatus::InZ);
    CHECK(back.k == k);
}

TEST_CASE("z face minimal") {
    BasedRootSystem aff = affine_a1();
    ZFace f = z_face_minimal(aff, aff.simples()[0] + aff.simples()[1], 100);
    CHECK(f.word.empty());
    CHECK(f.indices == std::vector<std::size_t>{0, 1});
    CHECK(f.k_cone_standard.rays().size() == 1);

    BasedRootSystem d = indef_dihedral();
    Vec inz = Scalar(d.field(), 9, 4) * (d.simples()[0] + d.simples()[1]);
    ZFace fd = z_face_minimal(d, inz, 100);
    CHECK(fd.word.empty());
    CHECK(fd.indices == std::vector<std::size_t>{0, 1});

    Vec zero(d.field(), d.ambient_dim());
    ZFace fz = z_face_minimal(d, zero, 100);
    CHECK(fz.word.empty());
    CHECK(fz.indices.empty());

    // one reflection off the fundamental domain
    BasedRootSystem u = universal3();
    Vec delta = u.simples()[0] + u.simples()[1]; // isotropic ray of {a, b}
    Vec moved = u.reflect_simple(2, delta);
    ZFace fm = z_face_minimal(u, moved, 100);
    CHECK(fm.word == Word{2});
    CHECK(fm.indices == std::vector<std::size_t>{0, 1});
    CHECK(u.apply_word(fm.word, delta) == moved);
}

TEST_CASE("standard Z face lattice of the rank-3 universal system") {
    BasedRootSystem u = universal3();
    ZFaceLattice lat(u);
    REQUIRE(lat.size() == 5); // empty, three affine pairs, S
    CHECK(lat.node(lat.bottom()).indices.empty());
    CHECK(lat.node(lat.top()).indices == std::vector<std::size_t>{0, 1, 2});
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.node(i).indices.size() == 2) pairs.push_back(i);
    REQUIRE(pairs.size() == 3);
    for (std::size_t a : pairs)
        for (std::size_t b : pairs) {
            if (a == b) continue;
            CHECK(lat.meet(a, b) == lat.bottom());
            CHECK(lat.join(a, b) == lat.top());
        }
    // lattice axioms
    for (std::size_t a = 0; a < lat.size(); ++a) {
        CHECK(lat.meet(a, a) == a);
        CHECK(lat.join(a, a) == a);
        for (std::size_t b = 0; b < lat.size(); ++b) {
            CHECK(lat.meet(a, b) == lat.meet(b, a));
            CHECK(lat.join(a, b) == lat.join(b, a));
            CHECK(lat.meet(a, lat.join(a, b)) == a);
            CHECK(lat.join(a, lat.meet(a, b)) == a);
            CHECK(lat.leq(lat.meet(a, b), a));
            CHECK(lat.leq(a, lat.join(a, b)));
        }
    }
}

TEST_CASE("Z face lattice degenerate and chain cases") {
    ZFaceLattice fin(a2());
    CHECK(fin.size() == 1); // only the empty subset: Z = 0

    BasedRootSystem s = rank5_chain();
    ZFaceLattice lat(s);
    CHECK(lat.find({0, 1}).has_value());
    CHECK(lat.find({3, 4}).has_value());
    CHECK(lat.find({0, 1, 3, 4}).has_value());
    CHECK(lat.find({0, 1, 2, 3, 4}).has_value());
    CHECK(!lat.find({0}).has_value()); // finite type, not special
    std::size_t ab = *lat.find({0, 1});
    std::size_t de = *lat.find({3, 4});
    CHECK(lat.meet(ab, de) == lat.bottom());
    CHECK(lat.node(lat.join(ab, de)).indices == std::vector<std::size_t>{0, 1, 3, 4});
    // lattice axioms close on this system too
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
            CHECK(lat.meet(a, b) == lat.meet(b, a));
            CHECK(lat.join(a, b) == lat.join(b, a));
            CHECK(lat.meet(a, lat.join(a, b)) == a);
            CHECK(lat.join(a, lat.meet(a, b)) == a);
        }
    // the isotropic K point z lives on the face {0,1,3,4}
    Vec z = s.simples()[0] + s.simples()[1] + s.simples()[3] + s.simples()[4];
    ZFace zf = z_face_minimal(s, z, 100);
    CHECK(zf.word.empty());
    CHECK(zf.indices == std::vector<std::size_t>{0, 1, 3, 4});
}

TEST_CASE("interior points of subgroup imaginary cones") {
    BasedRootSystem aff = affine_a1();
    Root fa = *aff.is_root(aff.simples()[0]);
    Root fb = *aff.is_root(aff.simples()[1]);
    Vec p = z_interior_point(aff, aff.subgroup_from_canonical({fa, fb}));
    CHECK(canonical_ray(p) == canonical_ray(aff.simples()[0] + aff.simples()[1]));

    BasedRootSystem d = indef_dihedral();
    Vec pd = z_interior_point(d, d.subgroup_from_canonical(
                                     {*d.is_root(d.simples()[0]), *d.is_root(d.simples()[1])}));
    CHECK(canonical_ray(pd) == canonical_ray(d.simples()[0] + d.simples()[1]));

    // <s_g0, s_g1> in the rank-3 universal system: sum of 7g0+g1 and g0+7g1
    BasedRootSystem u = universal3();
    Vec g0 = u.simples()[2];
    Vec g1 = u.reflect_simple(0, u.reflect_simple(1, g0));
    ReflectionSubgroup sub =
        u.canonical_simples({*u.is_root(g0), *u.is_root(g1)});
    Vec pu = z_interior_point(u, sub);
    Vec expected = Scalar(u.field(), 8, 1) * (g0 + g1);
    CHECK(canonical_ray(pu) == canonical_ray(expected));

    BasedRootSystem fin = a2();
    Root a = *fin.is_root(fin.simples()[0]);
    CHECK_THROWS_AS(z_interior_point(fin, fin.subgroup_from_canonical({a})), FiniteSubgroup);
}

TEST_CASE("facial closure") {
    // <s_g0, s_g1> in the rank-3 universal system closes to the whole group
    BasedRootSystem u = universal3();
    Vec g0 = u.simples()[2];
    Vec g1 = u.reflect_simple(0, u.reflect_simple(1, g0));
    ReflectionSubgroup sub = u.canonical_simples({*u.is_root(g0), *u.is_root(g1)});
    FacialClosureResult r = facial_closure(u, sub, 1000);
    REQUIRE(r.conclusive);
    CHECK(r.indices == std::vector<std::size_t>{0, 1, 2});

    // a standard facial subgroup is its own closure
    BasedRootSystem s = rank5_chain();
    ReflectionSubgroup wab = s.subgroup_from_canonical(
        {*s.is_root(s.simples()[0]), *s.is_root(s.simples()[1])});
    FacialClosureResult rs = facial_closure(s, wab, 1000);
    REQUIRE(rs.conclusive);
    CHECK(rs.word.empty());
    CHECK(rs.indices == std::vector<std::size_t>{0, 1});

    // finite-type branch only
    BasedRootSystem fin = a2();
    ReflectionSubgroup wa = fin.subgroup_from_canonical({*fin.is_root(fin.simples()[0])});
    FacialClosureResult rf = facial_closure(fin, wa, 1000);
    REQUIRE(rf.conclusive);
    CHECK(rf.word.empty());
    CHECK(rf.indices == std::vector<std::size_t>{0});

    // conjugate of a standard facial pair: w W_{0,1} w^{-1} for w = s_g
    Vec ca = u.reflect_simple(2, u.simples()[0]);
    Vec cb = u.reflect_simple(2, u.simples()[1]);
    ReflectionSubgroup conj = u.canonical_simples({*u.is_root(ca), *u.is_root(cb)});
    FacialClosureResult rconj = facial_closure(u, conj, 1000);
    REQUIRE(rconj.conclusive);
    CHECK(rconj.word == Word{2});
    CHECK(rconj.indices == std::vector<std::size_t>{0, 1});

    // non-simple finite reflection subgroup: <s_{a+b}> in A2 closes to a
    // conjugate of a standard parabolic of rank 1
    Root ab = *fin.is_root(fin.simples()[0] + fin.simples()[1]);
    FacialClosureResult rc = facial_closure(fin, fin.subgroup_from_canonical({ab}), 1000);
    REQUIRE(rc.conclusive);
    CHECK(rc.indices.size() == 1);
    Vec img = fin.apply_word(rc.word, fin.simples()[rc.indices[0]]);
    if (fin.height(img).sign() < 0) img = -img;
    CHECK(img == ab.vector);
}

TEST_CASE("z sample and its invariants") {
    BasedRootSystem aff = affine_a1();
    auto sa = z_sample(aff, 3);
    REQUIRE(sa.size() == 1); // delta is W-fixed
    CHECK(sa[0] == canonical_ray(aff.simples()[0] + aff.simples()[1]));

    BasedRootSystem d = indef_dihedral();
    CHECK(z_sample(d, 0).size() == 2);
    CHECK(z_sample(d, 1).size() == 4);

    BasedRootSystem u = universal3();
    auto samples = z_sample(u, 2);
    PolyCone ku = k_cone(u);
    for (const Vec& z : samples) {
        ZMembership zm = z_membership(u, z, 200);
        REQUIRE(zm.status == ZStatus::InZ);
        CHECK(ku.contains(zm.k));
        // the recovered K point is the unique orbit representative: one of
        // the K generators (z was a generator image)
        bool is_gen = false;
        for (const Vec& g : ku.rays())
            if (g == zm.k) is_gen = true;
        CHECK(is_gen);
    }
    for (const Vec& z1 : samples)
        for (const Vec& z2 : samples) CHECK(u.pair(z1, z2).sign() <= 0);
}

TEST_CASE("isotropic K points have all-affine support and sit on component deltas") {
    BasedRootSystem s = rank5_chain();
    // all K generators: isotropy iff every support component is affine
    PolyCone k = k_cone(s);
    for (const Vec& g : k.rays()) {
        auto comps = support_components(s, g);
        bool all_affine = true;
        for (const auto& c : comps)
            if (c.type != ComponentType::Affine) all_affine = false;
        CHECK(all_affine == (s.pair(g, g).sign() == 0));
        // isotropic with connected support: a positive multiple of the
        // component delta
        if (s.pair(g, g).sign() == 0 && comps.size() == 1) {
            Vec delta = *s.classify_component(comps[0].simples).delta;
            CHECK(canonical_ray(g) == canonical_ray(delta));
        }
    }
    // the isotropic z with two affine components: each part spans its delta
    Vec z = s.simples()[0] + s.simples()[1] + s.simples()[3] + s.simples()[4];
    for (const auto& c : support_components(s, z)) {
        REQUIRE(c.type == ComponentType::Affine);
        Vec delta = *s.classify_component(c.simples).delta;
        CHECK(canonical_ray(c.part) == canonical_ray(delta));
    }
}

TEST_CASE("subgroup imaginary cones sit inside the big one") {
    BasedRootSystem u = universal3();
    Vec g0 = u.simples()[2];
    Vec g1 = u.reflect_simple(0, u.reflect_simple(1, g0));
    ReflectionSubgroup sub = u.canonical_simples({*u.is_root(g0), *u.is_root(g1)});
    PolyCone ksub = k_cone_of_subgroup(u, sub);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> letter(0, 1);
    for (const Vec& gen : ksub.rays()) {
        CHECK(z_membership(u, gen, 200).status == ZStatus::InZ);
        for (int trial = 0; trial < 5; ++trial) {
            Vec moved = gen;
            for (int k = 0; k < 4; ++k)
                moved = u.reflect_by(letter(rng) ? g0 : g1, moved);
            CHECK(z_membership(u, moved, 200).status == ZStatus::InZ);
        }
    }
}

TEST_CASE("face restriction: samples in a facial span are samples of the face") {
    BasedRootSystem s = rank5_chain();
    std::vector<Root> ab{*s.is_root(s.simples()[0]), *s.is_root(s.simples()[1])};
    ReflectionSubgroup sub = s.subgroup_from_canonical(ab);
    PolyCone ksub = k_cone_of_subgroup(s, sub);
    auto samples = z_sample(s, 2);
    Mat span(s.field(), s.ambient_dim(), 2);
    for (std::size_t r = 0; r < s.ambient_dim(); ++r) {
        span.at(r, 0) = s.simples()[0][r];
        span.at(r, 1) = s.simples()[1][r];
    }
    std::size_t restricted = 0;
    for (const Vec& z : samples) {
        if (!solve(span, z)) continue;
        ++restricted;
        // Z of the {a,b} subsystem is just its delta ray = K_{ab}
        CHECK(ksub.contains(z));
    }
    CHECK(restricted > 0);
}
