#include <doctest.h>

#include <random>

#include "imagcone/field.hpp"

using namespace imagcone;

namespace {

// Deterministic random canonical-form scalars for property tests.
Scalar random_scalar(const Field& f, std::mt19937& rng, int max_abs = 9) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    Scalar s(f);
    for (std::size_t mask = 0; mask < f.basis_size(); ++mask)
        s += Scalar(f, num(rng), den(rng)) * Scalar::basis_element(f, mask);
    return s;
}

} // namespace

TEST_CASE("field spec validation") {
    CHECK_NOTHROW(Field(std::vector<long>{}));
    CHECK_NOTHROW(Field({2, 3, 5}));
    CHECK_THROWS_AS(Field({4}), InvalidFieldSpec);     // not squarefree
    CHECK_THROWS_AS(Field({2, 2}), InvalidFieldSpec);  // duplicate
    CHECK_THROWS_AS(Field({1}), InvalidFieldSpec);
    CHECK_THROWS_AS(Field({2, 3, 6}), InvalidFieldSpec); // 2*3*6 = 36 square
}

TEST_CASE("rational arithmetic") {
    Scalar half = Scalar::rational(mpq_class(1, 2));
    CHECK(half + half == Scalar(1));
    Field f2({2});
    Scalar r2 = Scalar::sqrt_of(f2, 2);
    CHECK(r2 * r2 == Scalar(f2, 2, 1));
    Field f5({5});
    Scalar r5 = Scalar::sqrt_of(f5, 5);
    Scalar x = (Scalar(f5, 1, 4) + Scalar(f5, 1, 4) * r5); // (1+sqrt5)/4
    Scalar y = x / Scalar(f5, 1, 2);
    CHECK(y == Scalar(f5, 1, 2) + Scalar(f5, 1, 2) * r5); // (1+sqrt5)/2
    CHECK_THROWS_AS(x / Scalar(f5), DivisionByZero);
}

TEST_CASE("sign determination") {
    Field f2({2});
    Scalar r2 = Scalar::sqrt_of(f2, 2);
    CHECK((r2 - Scalar(f2, 1, 1)).sign() == 1);
    CHECK(Scalar(f2).sign() == 0);
    // sign(3 - 2*sqrt2): (2 sqrt2)^2 = 8 < 9, so positive (squaring oracle)
    Scalar a = Scalar(f2, 3, 1) - Scalar(f2, 2, 1) * r2;
    Scalar two_r2 = Scalar(f2, 2, 1) * r2;
    CHECK((two_r2 * two_r2) == Scalar(f2, 8, 1));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    // close calls in a rank-2 field
    Field f23({2, 3});
    Scalar r3 = Scalar::sqrt_of(f23, 3);
    Scalar r2b = Scalar::sqrt_of(f23, 2);
    Scalar r6 = r2b * r3;
    // sqrt2 + sqrt3 - sqrt6 - 1/4 is positive: ~ 3.146 - 2.449 - 0.25
    CHECK((r2b + r3 - r6 - Scalar(f23, 1, 4)).sign() == 1);
    // sqrt6 > sqrt2 + 1 (2.449 vs 2.414)
    CHECK((r6 - r2b - Scalar(f23, 1, 1)).sign() == 1);
}

TEST_CASE("coxeter cosines") {
    Field q;
    CHECK(coxeter_cosine(q, 3) == Scalar(q, -1, 2));
    CHECK(coxeter_cosine(q, 2) == Scalar(q));
    Field f2({2});
    CHECK(coxeter_cosine(f2, 4) == Scalar(f2, -1, 2) * Scalar::sqrt_of(f2, 2));
    CHECK_THROWS_AS(coxeter_cosine(q, 4), UnrepresentableLabel);
    CHECK_THROWS_AS(coxeter_cosine(q, 7), UnrepresentableLabel);
    Field f5({5});
    Scalar c5 = coxeter_cosine(f5, 5);
    // minimal polynomial check: 4c^2 - 2c - 1 = 0 for c = cos(pi/5) = -value
    Scalar c = -c5;
    CHECK(Scalar(f5, 4, 1) * c * c - Scalar(f5, 2, 1) * c - Scalar(f5, 1, 1) == Scalar(f5));
    CHECK(infinite_bond(Scalar(q, -5, 4)) == Scalar(q, -5, 4));
    CHECK_THROWS_AS(infinite_bond(Scalar(q, -1, 2)), InvalidInfiniteBond);

    CHECK(label_of_gram_entry(Scalar(q, -1, 2)) == 3);
    CHECK(label_of_gram_entry(Scalar(q)) == 2);
    CHECK(label_of_gram_entry(Scalar(q, -5, 4)) == 0);
    CHECK(label_of_gram_entry(Scalar(q, -1, 3)) == std::nullopt);
    CHECK(label_of_gram_entry(Scalar(q, 1, 2)) == std::nullopt);
    Field f23({2, 3});
    CHECK(label_of_gram_entry(coxeter_cosine(f23, 12)) == 12);
}

TEST_CASE("try_sqrt") {
    Field q;
    CHECK(Scalar(q, 9, 16).try_sqrt().value() == Scalar(q, 3, 4));
    CHECK(Scalar(q, 2, 1).try_sqrt() == std::nullopt);
    Field f2({2});
    CHECK(Scalar(f2, 2, 1).try_sqrt().value() == Scalar::sqrt_of(f2, 2));
    CHECK(Scalar(f2, 3, 1).try_sqrt() == std::nullopt);
    CHECK_THROWS_AS(Scalar(f2, -1, 1).try_sqrt(), NegativeRadicand);
    // 3 + 2 sqrt2 = (1 + sqrt2)^2
    Scalar r2 = Scalar::sqrt_of(f2, 2);
    Scalar s = (Scalar(f2, 3, 1) + Scalar(f2, 2, 1) * r2).try_sqrt().value();
    CHECK(s == Scalar(f2, 1, 1) + r2);
    // 48 = (4 sqrt3)^2 over Q(sqrt3)
    Field f3({3});
    CHECK(Scalar(f3, 48, 1).try_sqrt().value() == Scalar(f3, 4, 1) * Scalar::sqrt_of(f3, 3));
}

TEST_CASE("field axioms and sign multiplicativity on random scalars") {
    std::mt19937 rng(12345);
    Field f({2, 5});
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(f, rng);
        Scalar b = random_scalar(f, rng);
        Scalar c = random_scalar(f, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.sign() * b.sign() == (a * b).sign());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(f, 1, 1));
        Scalar sq = a * a;
        Scalar root = sq.try_sqrt().value();
        CHECK(root * root == sq);
        CHECK(root.sign() >= 0);
    }
}

TEST_CASE("scalar strings round trip") {
    Field f({2, 5});
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar a = random_scalar(f, rng);
        CHECK(parse_scalar(f, a.str()) == a);
    }
    CHECK(Scalar(f, 3, 4).str() == "3/4");
    Scalar g = Scalar(f, 1, 4) + Scalar(f, 1, 4) * Scalar::sqrt_of(f, 5);
    CHECK(g.str() == "1/4+1/4*sqrt5");
    CHECK(parse_scalar(f, "-sqrt2+1/2") == Scalar(f, 1, 2) - Scalar::sqrt_of(f, 2));
    CHECK(parse_scalar(f, "2") == Scalar(f, 2, 1));
    Field f23({2, 3});
    CHECK(parse_scalar(f23, "sqrt6") ==
          Scalar::sqrt_of(f23, 2) * Scalar::sqrt_of(f23, 3));
}
