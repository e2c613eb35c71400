#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhcat/graded.hpp"

using namespace mhcat;

static GradedSpace line(int q, int k = 1)
{
    GradedSpace v;
    v.set(Deg{0, q}, k);
    return v;
}

TEST_CASE("epsilon is a homomorphism on generators")
{
    GradingConvention c;
    for (int n = -2; n <= 2; ++n)
        for (int q = -2; q <= 2; ++q)
            for (int n2 = -2; n2 <= 2; ++n2)
                for (int q2 = -2; q2 <= 2; ++q2)
                    CHECK(c.eps(Deg{n + n2, q + q2}) == c.eps(Deg{n, q}) * c.eps(Deg{n2, q2}));
}

TEST_CASE("tensor dims")
{
    GradedSpace unit = line(0);
    GradedSpace w = line(1, 2);
    w.set(Deg{0, 3}, 1);
    CHECK(tensor_graded(unit, w) == w);
    CHECK(tensor_graded(line(2), line(2)) == line(4));
    CHECK(tensor_graded(line(1, 2), line(1, 2)) == line(2, 4));

    GradedSpace v = line(0);
    v.set(Deg{0, 1}, 2);
    CHECK(tensor_graded(v, w).total_dim() == v.total_dim() * w.total_dim());
}

TEST_CASE("dual reflects support")
{
    CHECK(dual_graded(line(0)) == line(0));
    CHECK(dual_graded(line(2)) == line(-2));

    GradedSpace v = line(0);
    v.set(Deg{0, 1}, 2);
    GradedSpace expect = line(0);
    expect.set(Deg{0, -1}, 2);
    CHECK(dual_graded(v) == expect);
    CHECK(dual_graded(dual_graded(v)) == v);
}

TEST_CASE("koszul symmetry signs")
{
    GradingConvention c;
    CHECK(c.koszul_sign(Deg{0, 0}, Deg{0, 5}) == 1);
    CHECK(c.koszul_sign(Deg{0, 1}, Deg{0, 1}) == -1);
    CHECK(c.koszul_sign(Deg{0, 1}, Deg{0, 2}) == 1);
    // bimultiplicative in the first argument
    for (int a = -2; a <= 2; ++a)
        for (int a2 = -2; a2 <= 2; ++a2)
            for (int b = -2; b <= 2; ++b) {
                CHECK(c.koszul_sign(Deg{0, a + a2}, Deg{0, b}) ==
                      c.koszul_sign(Deg{0, a}, Deg{0, b}) * c.koszul_sign(Deg{0, a2}, Deg{0, b}));
                CHECK(c.koszul_sign(Deg{0, a}, Deg{0, b}) * c.koszul_sign(Deg{0, b}, Deg{0, a}) == 1);
            }
}

TEST_CASE("koszul symmetry involutive on a window of spaces")
{
    GradingConvention c;
    std::vector<GradedSpace> window;
    window.push_back(line(0));
    window.push_back(line(1, 2));
    GradedSpace mixed = line(0);
    mixed.set(Deg{0, 1}, 1);
    mixed.set(Deg{0, 2}, 2);
    window.push_back(mixed);
    GradedSpace shifted;
    shifted.set(Deg{1, 1}, 2);
    shifted.set(Deg{-1, 0}, 1);
    window.push_back(shifted);

    for (const auto& v : window)
        for (const auto& w : window) {
            GradedMap s = koszul_symmetry(v, w, c);
            GradedMap s2 = koszul_symmetry(w, v, c);
            CHECK(s2.compose(s) == GradedMap::identity(tensor_graded(v, w)));
            CHECK(s.is_iso());
        }
}

TEST_CASE("tensor_map respects composition")
{
    GradedSpace v = line(0, 2);
    GradedMap f = GradedMap::zero(v, v);
    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 1) = 3;
    f.set_block(Deg{0, 0}, m);
    GradedMap g = GradedMap::identity(v).scaled(rat_parse("1/2"));

    GradedMap fg = tensor_map(f, g);
    GradedMap gf = tensor_map(g, f);
    CHECK(fg.compose(gf) == tensor_map(f.compose(g), g.compose(f)));
}

TEST_CASE("graded map rank predicates")
{
    GradedSpace v = line(0);
    v.set(Deg{0, 1}, 2);
    GradedMap id = GradedMap::identity(v);
    CHECK(id.is_iso());
    CHECK(id.inverse().has_value());
    GradedMap z = GradedMap::zero(v, v);
    CHECK(!z.is_iso());
    CHECK(z.is_zero());
}
