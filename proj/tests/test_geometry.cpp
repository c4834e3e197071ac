#include "hermitian/geometry.hpp"
#include "hermitian/linalg.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace herm;

namespace {

Elem E(int i) { return Elem(static_cast<std::uint16_t>(i)); }
Vec4 V(int a, int b, int c, int d) { return {E(a), E(b), E(c), E(d)}; }

oracle::Tuple as_class(const oracle::Naive& n, const Vec4& v)
{
    return oracle::projective_class(n, {v[0].index, v[1].index, v[2].index, v[3].index});
}

std::set<oracle::Tuple> as_classes(const oracle::Naive& n, const Space& sp, const std::vector<PointId>& ids)
{
    std::set<oracle::Tuple> out;
    for (auto id : ids) out.insert(as_class(n, sp.point(id)));
    return out;
}

} // namespace

TEST(Linalg, RankAndNullspace)
{
    auto f = Field::build(3);
    const Row r0{kOne, E(2), kZero, E(4)};
    Row r1;
    for (auto x : r0) r1.push_back(f->mul(E(5), x));
    Matrix m{r0, r1, {kZero, kZero, kOne, kOne}};
    EXPECT_EQ(rank(*f, m), 2u);
    const auto ns = nullspace(*f, m, 4);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns)
        for (const auto& row : m) {
            Elem acc = kZero;
            for (std::size_t i = 0; i < 4; ++i) acc = f->add(acc, f->mul(row[i], v[i]));
            EXPECT_TRUE(acc.is_zero());
        }
    Matrix empty;
    EXPECT_EQ(rref(*f, empty), 0u);
}

TEST(Linalg, InverseRoundTrip)
{
    auto f = Field::build(4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, f->order() - 1);
    int invertible = 0;
    for (int t = 0; t < 200; ++t) {
        Matrix a(4, Row(4));
        for (auto& r : a)
            for (auto& x : r) x = E(pick(rng));
        const auto inv = inverse(*f, a);
        EXPECT_EQ(inv.has_value(), rank(*f, a) == 4);
        if (!inv) continue;
        ++invertible;
        const auto prod = multiply(*f, a, *inv);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(prod[i][j], i == j ? kOne : kZero);
    }
    EXPECT_GT(invertible, 150);
    Matrix a{{kOne, E(2)}, {E(3), E(4)}};
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_EQ(conjugate(*f, conjugate(*f, a)), a);
}

TEST(Space, Normalize)
{
    Space sp(Field::build(2));
    EXPECT_EQ(sp.normalize(V(0, 2, 2, 0)), V(0, 1, 1, 0));
    EXPECT_EQ(sp.normalize(V(1, 0, 0, 0)), V(1, 0, 0, 0));
    EXPECT_THROW(sp.normalize(V(0, 0, 0, 0)), geometry_error);
}

TEST(Space, NormalizeIgnoresScalars)
{
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4}) {
        Space sp(Field::build(q));
        const Field& f = sp.field();
        std::uniform_int_distribution<int> pick(0, f.order() - 1);
        for (int t = 0; t < 200; ++t) {
            Vec4 v = V(pick(rng), pick(rng), pick(rng), pick(rng));
            if (v == Vec4{}) continue;
            const Vec4 n = sp.normalize(v);
            for (int l = 1; l < f.order(); ++l) {
                Vec4 w;
                for (std::size_t i = 0; i < 4; ++i) w[i] = f.mul(E(l), v[i]);
                ASSERT_EQ(sp.normalize(w), n);
            }
        }
    }
}

TEST(Space, PointCountsAndIds)
{
    EXPECT_EQ(Space(Field::build(2)).point_count(), 85u);
    EXPECT_EQ(Space(Field::build(3)).point_count(), 820u);
    EXPECT_EQ(projective_points<2>(*Field::build(2)).size(), 5u);

    for (int q : {2, 3}) {
        Space sp(Field::build(q));
        const oracle::Naive n{sp.field()};
        const auto pts = sp.points();
        ASSERT_EQ(pts.size(), sp.point_count());
        std::set<oracle::Tuple> classes;
        for (PointId id = 0; id < pts.size(); ++id) {
            ASSERT_EQ(sp.id(pts[id]), id);
            ASSERT_EQ(sp.point(id), pts[id]);
            ASSERT_EQ(sp.normalize(pts[id]), pts[id]);
            classes.insert(as_class(n, pts[id]));
            if (id > 0) {
                ASSERT_LT(pts[id - 1], pts[id]);
            }
        }
        EXPECT_EQ(classes, oracle::all_points(n));
    }
}

TEST(Space, CoordinateLine)
{
    Space sp(Field::build(2));
    const Line l = sp.line_through(V(1, 0, 0, 0), V(0, 1, 0, 0));
    ASSERT_EQ(l.points.size(), 5u);
    for (auto id : l.points) {
        const Vec4 p = sp.point(id);
        EXPECT_TRUE(p[2].is_zero() && p[3].is_zero());
    }
    EXPECT_EQ(l.first, V(0, 1, 0, 0));
    EXPECT_EQ(l.second, V(1, 0, 0, 0));
    EXPECT_THROW(sp.line_through(V(1, 2, 0, 0), V(2, 3, 0, 0)), geometry_error);
}

TEST(Space, LineCountMatchesPairEnumeration)
{
    Space sp(Field::build(2));
    const oracle::Naive n{sp.field()};
    const auto lines = sp.lines();
    ASSERT_EQ(lines.size(), 357u);
    std::set<std::set<oracle::Tuple>> mine;
    for (const auto& l : lines) {
        ASSERT_EQ(l.points.size(), 5u);
        mine.insert(as_classes(n, sp, l.points));
    }
    const auto naive = oracle::all_lines(n);
    EXPECT_EQ(naive.size(), 357u);
    EXPECT_EQ(mine, naive);
    EXPECT_EQ(Space(Field::build(3)).lines().size(), 7462u);  // (81+1)(81+9+1)
}

TEST(Space, LineThroughIsSymmetricAndCanonical)
{
    std::mt19937_64 rng(5);
    for (int q : {2, 3}) {
        Space sp(Field::build(q));
        std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(sp.point_count() - 1));
        for (int t = 0; t < 1000; ++t) {
            const PointId a = pick(rng), b = pick(rng);
            if (a == b) continue;
            const Line l1 = sp.line_through(sp.point(a), sp.point(b));
            const Line l2 = sp.line_through(sp.point(b), sp.point(a));
            ASSERT_EQ(l1, l2);
            ASSERT_EQ(l1.points, l2.points);
            ASSERT_TRUE(sp.on_line(l1, a) && sp.on_line(l1, b));
            // The key pair is the two smallest ids on the line.
            ASSERT_EQ(sp.id(l1.first), l1.points[0]);
            ASSERT_EQ(sp.id(l1.second), l1.points[1]);
            // Any two points of the line give it back.
            const Line l3 = sp.line_through(sp.point(l1.points.back()), sp.point(l1.points[2]));
            ASSERT_EQ(l3, l1);
        }
    }
}

TEST(Space, Planes)
{
    Space sp(Field::build(2));
    const Plane x3 = sp.plane_through(V(1, 0, 0, 0), V(0, 1, 0, 0), V(0, 0, 1, 0));
    EXPECT_EQ(x3.coeffs, V(0, 0, 0, 1));
    EXPECT_THROW(sp.plane_through(V(1, 0, 0, 0), V(0, 1, 0, 0), V(1, 1, 0, 0)), geometry_error);

    const oracle::Naive n{sp.field()};
    const auto pts = sp.points();
    const auto planes = sp.planes();
    ASSERT_EQ(planes.size(), 85u);
    for (const auto& pl : planes) {
        const auto on = sp.plane_points(pl);
        ASSERT_EQ(on.size(), 21u);
        std::size_t brute = 0;
        for (const auto& p : pts) brute += oracle::dot(n, as_class(n, pl.coeffs), as_class(n, p)).is_zero() ? 1 : 0;
        ASSERT_EQ(brute, 21u);
        for (const auto& p : on) ASSERT_TRUE(sp.incident(pl, p));
        const auto ls = sp.lines_in_plane(pl);
        ASSERT_EQ(ls.size(), 21u);
        std::set<std::uint64_t> keys;
        for (const auto& l : ls) {
            ASSERT_TRUE(sp.line_in_plane(l, pl));
            keys.insert(sp.key(l));
        }
        ASSERT_EQ(keys.size(), 21u);
        ASSERT_EQ(sp.plane(sp.plane_id(pl)), pl);
    }
    for (const auto& p : pts) {
        const auto through = sp.planes_through_point(p);
        ASSERT_EQ(through.size(), 21u);
        std::size_t brute = 0;
        for (const auto& pl : planes) brute += sp.incident(pl, p) ? 1 : 0;
        ASSERT_EQ(brute, 21u);
    }
}

TEST(Space, Books)
{
    Space sp(Field::build(2));
    const Line l = sp.line_through(V(1, 0, 0, 0), V(0, 1, 0, 0));
    const auto book = sp.book(l);
    ASSERT_EQ(book.size(), 5u);
    for (const auto& pl : book) {
        EXPECT_TRUE(pl.coeffs[0].is_zero() && pl.coeffs[1].is_zero());
        EXPECT_TRUE(sp.line_in_plane(l, pl));
    }

    EXPECT_EQ(Space(Field::build(3)).book(l).size(), 10u);

    // The book is the intersection of the plane pencils of any two of its points.
    for (const auto& line : sp.lines()) {
        std::map<PointId, int> hits;
        for (const auto& pl : sp.planes_through_point(sp.point(line.points[0]))) ++hits[sp.plane_id(pl)];
        for (const auto& pl : sp.planes_through_point(sp.point(line.points[3]))) ++hits[sp.plane_id(pl)];
        std::set<PointId> both;
        for (const auto& [id, c] : hits)
            if (c == 2) both.insert(id);
        std::set<PointId> mine;
        for (const auto& pl : sp.book(line)) mine.insert(sp.plane_id(pl));
        ASSERT_EQ(mine.size(), 5u);
        ASSERT_EQ(mine, both);
    }
}

TEST(Space, Meet)
{
    Space sp(Field::build(3));
    const Line l = sp.meet(Plane{V(0, 0, 1, 0)}, Plane{V(0, 0, 0, 1)});
    EXPECT_EQ(l, sp.line_through(V(1, 0, 0, 0), V(0, 1, 0, 0)));
    EXPECT_THROW(sp.meet(Plane{V(0, 0, 1, 0)}, Plane{V(0, 0, 1, 0)}), geometry_error);
}
