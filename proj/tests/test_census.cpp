#include "hermitian/census.hpp"

#include <gtest/gtest.h>

using namespace herm;

namespace {

std::int64_t observed(const CensusReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name) return c.observed;
    ADD_FAILURE() << "missing check " << name;
    return -1;
}

} // namespace

TEST(Census, FullCensusQ2)
{
    const auto r = run_census(Surface::canonical(Field::build(2)));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass()) << c.name << ": " << c.observed << " vs " << c.expected;
    EXPECT_EQ(r.tangent_planes, 45);
    EXPECT_EQ(r.non_tangent_planes, 40);
    EXPECT_EQ(r.lines_examined, 357);
    EXPECT_EQ(r.generator_lines, 27);
    EXPECT_EQ(r.secant_lines + r.tangent_lines, 330);
    EXPECT_EQ(r.points_examined, 45);
    EXPECT_EQ(observed(r, "surface points = (q^3+1)(q^2+1)"), 45);
}

TEST(Census, SampledCensusQ3)
{
    CensusOptions opt;
    opt.max_lines = 500;
    opt.max_points = 20;
    const auto r = run_census(Surface::canonical(Field::build(3)), opt);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.lines_examined, 500);
    EXPECT_EQ(r.points_examined, 20);
    EXPECT_EQ(r.tangent_planes, 280);
    EXPECT_EQ(r.generator_lines + r.secant_lines + r.tangent_lines, 500);
    // A sample cannot certify that the generators are exactly the long lines.
    for (const auto& c : r.checks) EXPECT_NE(c.name, "lines with q^2+1 surface points are the generators");
}

// A surface given by a non-diagonal matrix carries the same counts.
TEST(Census, NonCanonicalSurface)
{
    auto f = Field::build(2);
    Mat4 a{};
    a[0][1] = Elem(2);
    a[1][0] = f->conj(Elem(2));
    a[2][3] = kOne;
    a[3][2] = kOne;
    const auto r = run_census(Surface(Space(f), HermitianMatrix(*f, a)));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.tangent_planes, 45);
}

TEST(Census, RejectsDegenerate)
{
    auto f = Field::build(2);
    Mat4 a{};
    a[0][0] = a[1][1] = a[2][2] = kOne;
    EXPECT_THROW(run_census(Surface(Space(f), HermitianMatrix(*f, a))), degenerate_surface_error);
}
