#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace toric;
using namespace fixtures;

TEST_CASE("CWS parsing splits on the unique degree-consistent block length")
{
    CWS c = parse_cws({5, 1, 1, 1, 1, 1});
    CHECK(c.systems.size() == 1);
    CHECK(c.ncoords == 5);
    CHECK(c.dim() == 4);

    c = parse_cws({5, 1, 1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 1});
    CHECK(c.systems.size() == 2);
    CHECK(c.ncoords == 6);
    CHECK(c.dim() == 4);
    CHECK(c.systems[0].degree == 5);
    CHECK(c.systems[1].degree == 2);

    CHECK_THROWS_AS(parse_cws({4, 1, 1, 1}), InputError);    // degree != sum
    CHECK_THROWS_AS(parse_cws({1, 1}), InputError);          // too short
    CHECK_THROWS_AS(parse_cws({2, 1, 1, 2, 1, 1}), InputError); // ambiguous split
}

TEST_CASE("point counts and classification for the worked examples")
{
    LatticePolytope p = p1_over_p3_cws();
    CHECK(p.num_points() == 7);
    CHECK(p.num_divisors() == 6);
    CHECK(p.facet_interior_count() == 0);
    CHECK(p.reflexive());

    LatticePolytope q = deg86_cws();
    CHECK(q.num_points() == 8);
    CHECK(q.num_divisors() == 6);
    CHECK(q.facet_interior_count() == 1);
    CHECK(q.reflexive());
    CHECK(q.kind(q.origin_index()) == PointKind::origin);
}

TEST_CASE("pinned matrix input preserves the given point order")
{
    LatticePolytope p = p1_over_p3_matrix();
    IMat expect(4, 7, {1, 0, 0, -1, 0,  0, 0,
                       0, 1, 0, -1, 0,  0, 0,
                       0, 0, 1, -1, 0,  0, 0,
                       0, 0, 0,  1, -1, 1, 0});
    REQUIRE(p.num_points() == 7);
    for (int c = 0; c < 7; ++c)
        CHECK(p.point(c) == expect.col(c));
}

TEST_CASE("IP simplex rows of the P^1-over-P^3 polytope")
{
    // pinned order: the degree-5 simplex spans points 1..5, the degree-2 one
    // spans points 5 and 6
    LatticePolytope p = p1_over_p3_matrix();
    auto ips = ip_simplices(p);
    REQUIRE(ips.size() == 2);
    CHECK(ips[0].degree == 5);
    CHECK(ips[0].codim == 0);
    CHECK(ips[0].coefficients == IVec{1, 1, 1, 1, 1, 0});
    CHECK(ips[1].degree == 2);
    CHECK(ips[1].codim == 3);
    CHECK(ips[1].coefficients == IVec{0, 0, 0, 0, 1, 1});

    // same relations over the canonical order
    LatticePolytope q = p1_over_p3_cws();
    auto ips2 = ip_simplices(q);
    REQUIRE(ips2.size() == 2);
    CHECK(ips2[0].degree == 5);
    CHECK(ips2[0].codim == 0);
    CHECK(ips2[1].degree == 2);
    CHECK(ips2[1].codim == 3);
}

TEST_CASE("IP simplex rows of the 8/6 polytope include the facet-interior-free weights")
{
    LatticePolytope p = deg86_matrix();
    auto ips = ip_simplices(p);
    REQUIRE(ips.size() == 2);
    CHECK(ips[0].degree == 8);
    CHECK(ips[0].codim == 0);
    CHECK(ips[0].coefficients == IVec{1, 1, 1, 0, 1, 4});
    CHECK(ips[1].degree == 6);
    CHECK(ips[1].codim == 1);
    CHECK(ips[1].coefficients == IVec{1, 0, 1, 1, 0, 3});
}

TEST_CASE("incidence words of the 8/6 polytope")
{
    LatticePolytope p = deg86_matrix();
    auto words = incidence_words(p);
    std::multiset<std::string> got(words.begin(), words.end());
    std::multiset<std::string> expect = {"101011", "001111", "111110", "110101",
                                         "011101", "111001", "100111"};
    CHECK(got == expect);
}

TEST_CASE("facets are supporting, lattice-distance one, and the point set is complete")
{
    for (const LatticePolytope &p :
         {deg86_matrix(), p1_over_p3_matrix(), quintic()}) {
        // every point satisfies every facet inequality, with equality exactly
        // on the incident set
        for (const auto &f : p.facets()) {
            CHECK(f.dist == 1);
            std::vector<int> inc;
            for (int c = 0; c < p.num_points(); ++c) {
                Int d = dot(f.normal, p.point(c));
                CHECK(d >= -f.dist);
                if (d == -f.dist)
                    inc.push_back(c);
            }
            CHECK(inc == f.incident);
        }
        // exhaustive box scan: every lattice point inside the inequalities is
        // listed exactly once
        int dim = p.dim();
        IVec lo(dim), hi(dim);
        for (int c = 0; c < p.num_points(); ++c)
            for (int d = 0; d < dim; ++d) {
                lo[d] = std::min(lo[d], p.point(c)[d]);
                hi[d] = std::max(hi[d], p.point(c)[d]);
            }
        std::set<IVec> listed;
        for (int c = 0; c < p.num_points(); ++c)
            listed.insert(p.point(c));
        CHECK((int)listed.size() == p.num_points());
        IVec x(dim);
        long count = 0;
        std::function<void(int)> scan = [&](int d) {
            if (d == dim) {
                for (const auto &f : p.facets())
                    if (dot(f.normal, x) < -f.dist)
                        return;
                ++count;
                CHECK(listed.count(x) == 1);
                return;
            }
            for (Int v = lo[d]; v <= hi[d]; ++v) {
                x[d] = v;
                scan(d + 1);
            }
        };
        scan(0);
        CHECK(count == p.num_points());
    }
}

TEST_CASE("polytopes with a facet at lattice distance two are rejected as non-reflexive")
{
    IMat m(2, 3, {2, 0, -2,
                  0, 2, -2});
    LatticePolytope p = LatticePolytope::from_points(m, true);
    CHECK(!p.reflexive());
    CHECK_THROWS_AS(p.require_reflexive(), NotReflexiveError);
}

TEST_CASE("input without the origin in its interior is rejected")
{
    IMat m(2, 3, {1, 0, 1,
                  0, 1, 1});
    CHECK_THROWS_AS(LatticePolytope::from_points(m, true), InputError);
}

TEST_CASE("dual point count of the quintic simplex")
{
    // degree-5 monomials in 5 variables
    CHECK(quintic().dual_points().cols() == 126);
}

TEST_CASE("Kreuzer polynomial of the 8/6 polytope")
{
    LatticePolytope p = deg86_matrix();
    CHECK(kreuzer_polynomial(p, 2) ==
          "KreuzerPoly=t_1^3t_3^3/(t_2t_4^4)+t_1+t_2+t_4+t_3+t_4/(t_1t_3); "
          "intpts=1;  Pic=2");
    CHECK(kreuzer_polynomial(p, -1) ==
          "KreuzerPoly=t_1^3t_3^3/(t_2t_4^4)+t_1+t_2+t_4+t_3+t_4/(t_1t_3); intpts=1;");
}

TEST_CASE("face lattice dimensions and interior point counts are consistent")
{
    LatticePolytope p = deg86_matrix();
    const auto &faces = p.face_lattice();
    long relint_total = 0;
    for (const auto &f : faces) {
        CHECK(f.dim >= 0);
        CHECK(f.dim < p.dim());
        relint_total += (long)f.relint.size();
    }
    // every non-origin, non-interior point is in the relative interior of
    // exactly one proper face
    CHECK(relint_total == p.num_points() - 1);
}
