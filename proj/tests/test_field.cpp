#include "hermitian/field.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace herm;

namespace {

Elem E(int i) { return Elem(static_cast<std::uint16_t>(i)); }

const int kSupported[] = {2, 3, 4, 5, 7, 8, 9};

} // namespace

TEST(Field, RejectsNonPrimePowers)
{
    for (int q : {0, 1, 6, 10, 12, 15, -3}) EXPECT_THROW(Field::build(q), field_error) << q;
    EXPECT_THROW(Field::build(37), field_error);
    EXPECT_THROW(Field::build(64), field_error);
    EXPECT_NO_THROW(Field::build(32));
}

TEST(Field, SmallOrders)
{
    auto f2 = Field::build(2);
    EXPECT_EQ(f2->order(), 4);
    EXPECT_EQ(f2->subfield_elements(), (std::vector<Elem>{kZero, kOne}));

    auto f3 = Field::build(3);
    EXPECT_EQ(f3->order(), 9);
    EXPECT_EQ(f3->p(), 3);
    EXPECT_EQ(f3->k(), 1);

    auto f4 = Field::build(4);
    EXPECT_EQ(f4->order(), 16);
    EXPECT_EQ(f4->p(), 2);
    EXPECT_EQ(f4->k(), 2);
}

// F_4 = F_2[x]/(x^2+x+1), written out by hand; index = c0 + 2 c1.
TEST(Field, F4TablesByHand)
{
    auto f = Field::build(2);
    EXPECT_EQ(f->modulus(), (std::vector<int>{1, 1, 1}));
    const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            EXPECT_EQ(f->mul(E(a), E(b)).index, mul[a][b]);
            EXPECT_EQ(f->add(E(a), E(b)).index, a ^ b);
        }
    const Elem w = E(2);
    EXPECT_EQ(f->primitive(), w);
    EXPECT_EQ(f->mul(w, f->mul(w, w)), kOne);
    EXPECT_EQ(f->conj(w), f->mul(w, w));
    EXPECT_EQ(f->norm(w), kOne);
}

// Over F_3 the monic quadratics in order x^2, x^2+x, x^2+2x, x^2+1, ... ; the
// first irreducible one is x^2+1. Over F_5, x^2+1 splits (2^2 = -1) while
// x^2+x+1 has discriminant 2, a non-square.
TEST(Field, ModulusIsSmallestIrreducible)
{
    EXPECT_EQ(Field::build(3)->modulus(), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(Field::build(5)->modulus(), (std::vector<int>{1, 1, 1}));
}

TEST(Field, ModulusHasNoZeroDivisors)
{
    for (int q : {2, 3, 4, 5, 7, 9}) {
        auto f = Field::build(q);
        for (int a = 1; a < f->order(); ++a)
            for (int b = 1; b < f->order(); ++b) ASSERT_FALSE(f->poly_mul(E(a), E(b)).is_zero()) << q;
    }
}

TEST(Field, TablesAgreeWithSchoolbookProducts)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        for (int a = 0; a < f->order(); ++a)
            for (int b = 0; b < f->order(); ++b) {
                ASSERT_EQ(f->mul(E(a), E(b)), n.mul(E(a), E(b))) << "q=" << q;
                ASSERT_EQ(f->add(E(a), E(b)), n.add(E(a), E(b))) << "q=" << q;
            }
    }
}

TEST(Field, PrimitiveHasFullOrder)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        std::set<Elem> seen;
        Elem x = kOne;
        for (int i = 0; i < f->order() - 1; ++i) {
            seen.insert(x);
            x = n.mul(x, f->primitive());
        }
        EXPECT_EQ(x, kOne);
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(f->order() - 1));
    }
}

TEST(Field, LogExpRoundTrip)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        for (int a = 1; a < f->order(); ++a) EXPECT_EQ(f->exp(f->log(E(a))), E(a));
        EXPECT_EQ(f->exp(-1), f->inv(f->primitive()));
        EXPECT_THROW(f->log(kZero), field_error);
    }
}

TEST(Field, Axioms)
{
    std::mt19937_64 rng(7);
    for (int q : kSupported) {
        auto f = Field::build(q);
        std::uniform_int_distribution<int> pick(0, f->order() - 1);
        for (int t = 0; t < 2000; ++t) {
            const Elem a = E(pick(rng)), b = E(pick(rng)), c = E(pick(rng));
            ASSERT_EQ(f->add(a, kZero), a);
            ASSERT_EQ(f->mul(a, kOne), a);
            ASSERT_EQ(f->add(a, f->neg(a)), kZero);
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->sub(f->add(a, b), b), a);
            if (!a.is_zero()) {
                ASSERT_EQ(f->mul(a, f->inv(a)), kOne);
                ASSERT_EQ(f->div(f->mul(b, a), a), b);
            }
        }
        EXPECT_THROW(f->inv(kZero), field_error);
        EXPECT_THROW(f->div(kOne, kZero), field_error);
    }
}

TEST(Field, F9GroupOrder)
{
    auto f = Field::build(3);
    const oracle::Naive n{*f};
    for (int a = 1; a < 9; ++a) {
        EXPECT_EQ(n.pow(E(a), 8), kOne);
        EXPECT_EQ(f->pow(E(a), 8), kOne);
    }
}

TEST(Field, PowMatchesRepeatedProduct)
{
    for (int q : {2, 3, 4, 5}) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        for (int a = 0; a < f->order(); ++a)
            for (int e = 0; e < 40; ++e) ASSERT_EQ(f->pow(E(a), static_cast<std::uint64_t>(e)), n.pow(E(a), e));
        EXPECT_EQ(f->pow(kZero, 0), kOne);
    }
}

TEST(Field, Conjugation)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        for (int a = 0; a < f->order(); ++a) {
            const Elem x = E(a);
            ASSERT_EQ(f->conj(x), n.pow(x, q));
            ASSERT_EQ(f->conj(f->conj(x)), x);
            for (int b = 0; b < f->order(); b += 3) {
                ASSERT_EQ(f->conj(f->mul(x, E(b))), f->mul(f->conj(x), f->conj(E(b))));
                ASSERT_EQ(f->conj(f->add(x, E(b))), f->add(f->conj(x), f->conj(E(b))));
            }
        }
    }
}

TEST(Field, SubfieldIsFixedSet)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        std::vector<Elem> fixed;
        for (int a = 0; a < f->order(); ++a)
            if (n.pow(E(a), q) == E(a)) fixed.push_back(E(a));
        EXPECT_EQ(f->subfield_elements(), fixed);
        EXPECT_EQ(fixed.size(), static_cast<std::size_t>(q));
        for (auto a : fixed)
            for (auto b : fixed) {
                EXPECT_TRUE(f->in_subfield(f->add(a, b)));
                EXPECT_TRUE(f->in_subfield(f->mul(a, b)));
            }
    }
    auto f4 = Field::build(4)->subfield_elements();
    EXPECT_EQ(f4.size(), 4u);
    EXPECT_EQ(f4[0], kZero);
    EXPECT_EQ(f4[1], kOne);
}

TEST(Field, NormAndTraceFibres)
{
    for (int q : kSupported) {
        auto f = Field::build(q);
        const oracle::Naive n{*f};
        std::map<Elem, int> norms;
        std::map<Elem, int> traces;
        for (int a = 0; a < f->order(); ++a) {
            const Elem x = E(a);
            ASSERT_EQ(f->norm(x), n.pow(x, q + 1));
            ASSERT_TRUE(f->in_subfield(f->norm(x)));
            ASSERT_TRUE(f->in_subfield(f->trace(x)));
            ++norms[f->norm(x)];
            ++traces[f->trace(x)];
        }
        EXPECT_EQ(norms.size(), static_cast<std::size_t>(q));
        EXPECT_EQ(norms[kZero], 1);
        for (const auto& [v, c] : norms)
            if (!v.is_zero()) {
                EXPECT_EQ(c, q + 1);
            }
        EXPECT_EQ(traces.size(), static_cast<std::size_t>(q));
        for (const auto& [v, c] : traces) EXPECT_EQ(c, q);
    }
}

TEST(Field, IntegersAndVectors)
{
    auto f = Field::build(9);
    EXPECT_EQ(f->from_int(4), E(1));
    EXPECT_EQ(f->from_int(-1), E(2));
    for (int a = 0; a < f->order(); ++a) EXPECT_EQ(f->from_vector(f->to_vector(E(a))), E(a));
    EXPECT_EQ(f->to_vector(E(3)), (std::vector<int>{0, 1, 0, 0}));
}

TEST(FieldElement, Operators)
{
    auto f = Field::build(2);
    const FieldElement w(f, E(2));
    const FieldElement one(f, kOne);
    EXPECT_EQ(w * w * w, one);
    EXPECT_EQ(w.conj(), w * w);
    EXPECT_EQ(w.norm(), one);
    EXPECT_EQ(w + w, FieldElement(f, kZero));
    EXPECT_EQ(w / w, one);
    EXPECT_EQ(w.inv(), w * w);
    EXPECT_EQ(-w, w);
    EXPECT_EQ(w.pow(4), w);
    EXPECT_EQ(w.trace(), one);
    EXPECT_EQ(w - one, FieldElement(f, E(3)));

    auto other = Field::build(2);
    EXPECT_THROW(w + FieldElement(other, kOne), field_error);
    EXPECT_THROW((void)(w == FieldElement(other, kOne)), field_error);
}
