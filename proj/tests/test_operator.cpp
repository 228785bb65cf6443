#include <gtest/gtest.h>

#include "binterp/operator.hpp"
#include "support/random.hpp"

using namespace binterp;
using binterp::testing::Gen;
using binterp::testing::ints;
using binterp::testing::q;

namespace {

// Term-by-term oracle straight from the defining sum.
SequencePrefix apply_naive(const BinomialOperator& op, const SequencePrefix& a) {
    std::vector<Rational> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i)
            b[n] += Rational{binomial(n, i)} * ipow(op.h, i) * ipow(op.y, n - i) * a[i];
    return SequencePrefix(std::move(b));
}

}  // namespace

TEST(Apply, Examples) {
    EXPECT_EQ(apply({-1, 1}, ints({2, 1, 3, 4, 7, 11})), ints({2, 1, 3, 4, 7, 11}));
    EXPECT_EQ(apply({q(1, 2), q(1, 2)}, ints({1, 5, 29})), ints({1, 3, 10}));
    EXPECT_EQ(apply({0, 3}, ints({5, 7, 11})), ints({5, 15, 45}));
    const auto a = SequencePrefix{q(1, 3), -2, q(7, 5), 0, 11};
    EXPECT_EQ(apply(BinomialOperator::identity(), a), a);
}

TEST(Apply, MatchesDefiningSum) {
    Gen gen(30);
    for (int trial = 0; trial < 60; ++trial) {
        const auto op = gen.op(0.2);
        const auto a = gen.prefix(static_cast<std::size_t>(gen.integer(1, 14)));
        EXPECT_EQ(apply(op, a), apply_naive(op, a));
    }
}

TEST(Apply, DegenerateOperators) {
    Gen gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = gen.prefix(10);
        const Rational h = gen.rational(), y = gen.rational();

        std::vector<Rational> zero_zero(10), zero_y(10), h_zero(10);
        zero_zero[0] = a[0];
        for (std::size_t n = 0; n < 10; ++n) {
            zero_y[n] = ipow(y, n) * a[0];
            h_zero[n] = ipow(h, n) * a[n];
        }
        EXPECT_EQ(apply({0, 0}, a), SequencePrefix(zero_zero));
        EXPECT_EQ(apply({0, y}, a), SequencePrefix(zero_y));
        EXPECT_EQ(apply({h, 0}, a), SequencePrefix(h_zero));
    }
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose({2, 3}, {5, 7}), (BinomialOperator{10, 17}));
    EXPECT_EQ(compose(BinomialOperator::identity(), {q(3, 4), -2}), (BinomialOperator{q(3, 4), -2}));
    const BinomialOperator op{q(-5, 3), q(2, 7)};
    EXPECT_EQ(compose(op, {1 / op.h, -op.y / op.h}), BinomialOperator::identity());
}

TEST(Compose, MatchesSuccessiveApplication) {
    Gen gen(32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto outer = gen.op(0.25), inner = gen.op(0.25);
        const auto a = gen.prefix(12);
        EXPECT_EQ(apply(compose(outer, inner), a), apply(outer, apply(inner, a)));
    }
}

TEST(Compose, GroupAxioms) {
    Gen gen(33);
    const auto e = BinomialOperator::identity();
    for (int trial = 0; trial < 100; ++trial) {
        const BinomialOperator a{gen.nonzero_rational(), gen.rational()};
        const BinomialOperator b{gen.nonzero_rational(), gen.rational()};
        const BinomialOperator c{gen.nonzero_rational(), gen.rational()};
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(compose(a, e), a);
        EXPECT_EQ(compose(e, a), a);
        EXPECT_EQ(compose(a, inverse(a)), e);
        EXPECT_EQ(compose(inverse(a), a), e);
        EXPECT_TRUE(compose(a, b).invertible());
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse({2, 6}), (BinomialOperator{q(1, 2), -3}));
    EXPECT_EQ(inverse(BinomialOperator::identity()), BinomialOperator::identity());
    EXPECT_THROW(inverse({0, 5}), degenerate_operator);
}

TEST(TransformRecurrence, Examples) {
    const auto a001653 = Degree2Spec{1, 5, 6, 1}.recurrence();
    EXPECT_EQ(transform_recurrence({q(1, 2), q(1, 2)}, a001653), (Degree2Spec{1, 3, 4, 2}.recurrence()));

    Gen gen(34);
    const auto rec = gen.recurrence(3);
    EXPECT_EQ(transform_recurrence(BinomialOperator::identity(), rec), rec);

    const auto fib = Degree2Spec{0, 1, 1, -1}.recurrence();
    const auto image = transform_recurrence({2, 3}, fib);
    EXPECT_EQ(image.charpoly(), MonicPolynomial({Rational{-8}, Rational{11}}));
    EXPECT_EQ(image.initial(), (std::vector<Rational>{0, 2}));
    EXPECT_EQ(generate(image, 30), apply({2, 3}, generate(fib, 30)));

    EXPECT_THROW(transform_recurrence({0, 3}, fib), degenerate_operator);
}

TEST(TransformRecurrence, ImageSatisfiesTransformedRecurrence) {
    Gen gen(35);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rec = gen.recurrence(static_cast<std::size_t>(gen.integer(1, 4)));
        const BinomialOperator op{gen.nonzero_rational(), gen.rational()};
        const auto image = transform_recurrence(op, rec);
        const auto termwise = apply(op, generate(rec, 30));
        EXPECT_TRUE(satisfies(termwise, image.charpoly()));
        EXPECT_EQ(generate(image, 30), termwise);
    }
}

TEST(IsFixedPrefix, Examples) {
    EXPECT_TRUE(is_fixed_prefix({-1, 1}, generate(Degree2Spec{2, 1, 1, -1}, 20)));
    EXPECT_FALSE(is_fixed_prefix({-1, 1}, ints({0, 1, 1, 2})));
    EXPECT_TRUE(is_fixed_prefix(BinomialOperator::identity(), ints({3, -1, 4})));
}
