// Acceptance suite: one PASS/FAIL line per criterion. Needs the path to the
// command-line tool as argv[1].

#include "fixtures.hpp"
#include "toric/lp.hpp"

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace toric;
using namespace fixtures;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string &what)
{
    printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    if (!ok)
        ++failures;
}

std::string tool;

std::string run(const std::string &input, const std::string &flags)
{
    std::string cmd = "printf '%s\\n' \"" + input + "\" | " + tool + " " + flags;
    FILE *f = popen(cmd.c_str(), "r");
    if (!f)
        return "<popen failed>";
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0)
        out.append(buf, n);
    pclose(f);
    return out;
}

std::vector<std::string> tokens_of(const std::string &s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
        out.push_back(t);
    return out;
}

const char *cws52 = "5 1 1 1 1 1 0 2 0 0 0 0 1 1";
const char *cws86 = "8 4 1 1 1 1 0 6 3 1 0 1 0 1";
const char *mat52 = "4 7\n1 0 0 -1 0 0 0\n0 1 0 -1 0 0 0\n0 0 1 -1 0 0 0\n0 0 0 1 -1 1 0";
const char *mat86 = "3 1 0 0 0 -1 1 0\n-1 0 1 0 0 0 0 0\n3 0 0 0 1 -1 1 0\n-4 0 0 1 0 1 -1 0";

std::string mat86_input() { return std::string("4 8\n") + mat86; }

void criterion1()
{
    std::string a = run(cws52, "-fP");
    bool ok = a.find("5=d  codim=0") != std::string::npos &&
              a.find("2=d  codim=3") != std::string::npos;

    std::string b = run(mat52, "-fDP");
    std::string expect = "4 7  points of P* and IP-simplices\n"
                         "    1    0    0   -1    0    0    0\n"
                         "    0    1    0   -1    0    0    0\n"
                         "    0    0    1   -1    0    0    0\n"
                         "    0    0    0    1   -1    1    0\n"
                         "------------------------------   #IP-simp=2\n"
                         "    1    1    1    1    1    0   5=d  codim=0\n"
                         "    0    0    0    0    1    1   2=d  codim=3\n";
    ok = ok && b == expect;
    report(1, ok, "IP simplices of the P^1-over-P^3 example, weight and matrix input");
}

void criterion2()
{
    std::string g = run(mat86_input(), "-fDg");
    std::istringstream in(g);
    std::string line;
    std::vector<std::multiset<std::string>> tri_sets, sr_sets;
    std::vector<size_t> tri_sizes;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.size() == 2 && toks[1] == "Triangulation") {
            tri_sizes.push_back(std::stoul(toks[0]));
            std::getline(in, line);
            auto ws = tokens_of(line);
            tri_sets.emplace_back(ws.begin(), ws.end());
        } else if (toks.size() == 2 && toks[1] == "SR-ideal") {
            std::getline(in, line);
            auto ws = tokens_of(line);
            sr_sets.emplace_back(ws.begin(), ws.end());
        }
    }
    bool ok = tri_sizes == std::vector<size_t>{9, 8} && tri_sets.size() == 2 &&
              sr_sets.size() == 2;
    if (ok) {
        std::multiset<std::string> t9 = {"101011", "001111", "110101", "011101",
                                         "111001", "100111", "011110", "110110",
                                         "111010"};
        std::multiset<std::string> t8 = {"101011", "001111", "110101", "011101",
                                         "111001", "100111", "101110", "111100"};
        ok = tri_sets[0] == t9 && tri_sets[1] == t8 &&
             sr_sets[0] == std::multiset<std::string>{"101100", "010011"} &&
             sr_sets[1] == std::multiset<std::string>{"010010", "101101"};
    }

    std::string i = run(mat86_input(), "-fDI");
    auto toks = tokens_of(i);
    std::multiset<std::string> inc(toks.begin() + 1, toks.end());
    ok = ok && inc == std::multiset<std::string>{"101011", "001111", "111110",
                                                 "110101", "011101", "111001",
                                                 "100111"};
    report(2, ok, "8/6 example: triangulations, SR ideals and incidence words");
}

void criterion3()
{
    LatticePolytope p = deg86_matrix();
    DivisorBasis b = divisor_basis_for(p, {0, 5}); // (D1, D6)
    bool ok = divisor_class_string(b) ==
              "d1=J1, d2=-3*J1+J2, d3=J1, d4=4*J1-J2, d5=-3*J1+J2, d6=J2";
    for (const auto &tri : star_triangulations(p)) {
        auto t = IntersectionTensor::ambient(p, tri);
        TripleTensor tt(t, b, cy_class(p));
        ok = ok && tt.polynomial() == "2*J1^3+108*J2^3+8*J1^2*J2+30*J2^2*J1";
    }
    report(3, ok, "8/6 intersection polynomial and divisor expansions in basis (D1, D6)");
}

void criterion4()
{
    LatticePolytope p = deg86_matrix();
    HypersurfaceClass h = hypersurface_class(p, {1, 0, 0, 0, 0, 1});
    bool ok = hypersurface_degrees(p, h) == IVec{5, 4};
    auto tris = star_triangulations(p);
    ok = ok && tris.size() == 2;
    if (ok) {
        auto r0 = hodge_or_genera(p, IntersectionTensor::ambient(p, tris[0]), h);
        auto r1 = hodge_or_genera(p, IntersectionTensor::ambient(p, tris[1]), h);
        ok = r0.chi0 == Rat(35, 32) && r0.chi1 == Rat(143, 32) &&
             r0.euler == Rat(-27, 4) && r1.chi0 == Rat(29, 27) &&
             r1.chi1 == Rat(128, 27) && r1.euler == Rat(-22, 3) &&
             r0.euler == 2 * (r0.chi0 - r0.chi1) && r1.euler == 2 * (r1.chi0 - r1.chi1);
    }
    report(4, ok, "non-CY hypersurface H=D1+D6: degrees, genera and Euler numbers");
}

// signed monomial multiset of a Kreuzer polynomial
std::multiset<std::string> monomials(const std::string &poly)
{
    std::multiset<std::string> out;
    std::string cur = "+";
    for (char c : poly) {
        if (c == '+' || c == '-') {
            if (cur.size() > 1)
                out.insert(cur);
            cur = c;
        } else {
            cur += c;
        }
    }
    if (cur.size() > 1)
        out.insert(cur);
    return out;
}

void criterion5()
{
    std::string k = run(cws86, "-fK");
    bool ok = k.rfind("KreuzerPoly=", 0) == 0;
    std::string poly, rest;
    if (ok) {
        auto semi = k.find(';');
        poly = k.substr(12, semi - 12);
        rest = k.substr(semi);
        ok = monomials(poly) ==
             monomials("t_1^3t_3^3/(t_2t_4^4)+t_1+t_2+t_4+t_3+t_4/(t_1t_3)");
        ok = ok && rest.find("intpts=1;") != std::string::npos &&
             rest.find("Pic=2") != std::string::npos;
    }
    report(5, ok, "Kreuzer polynomial of the 8/6 example with intpts and Pic");
}

void criterion6()
{
    bool ok = true;
    std::vector<LatticePolytope> ps;
    ps.push_back(quintic());
    ps.push_back(p2());
    ps.push_back(p1xp1_matrix());
    ps.push_back(p1_over_p3_cws());
    ps.push_back(p1_over_p3_matrix());
    ps.push_back(deg86_cws());
    ps.push_back(deg86_matrix());

    for (const auto &p : ps) {
        IMat divs = p.divisor_matrix();
        int nd = p.num_divisors();
        std::optional<DivisorBasis> basis;
        if (p.dim() == 4)
            basis = divisor_basis(p);
        for (const auto &t : star_triangulations(p)) {
            // (a) Mori generators
            auto ws = walls(p, t);
            auto mg = mori_generators(p, ws);
            for (const auto &r : mg)
                for (int m = 0; m < p.dim(); ++m) {
                    Int s = 0;
                    for (int i = 0; i < nd; ++i)
                        s += divs.at(m, i) * r[i];
                    ok = ok && s == 0;
                }
            for (const auto &w : ws)
                ok = ok && in_nonneg_span(mg, w.relation);

            // (b) tensor annihilated by the relations
            auto tensor = IntersectionTensor::ambient(p, t);
            std::vector<std::vector<int>> js;
            std::vector<int> idx(p.dim() - 1, 0);
            while (true) {
                js.push_back(idx);
                int i = (int)idx.size() - 1;
                while (i >= 0 && idx[i] == nd - 1)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < (int)idx.size(); ++j)
                    idx[j] = idx[i];
            }
            for (int m = 0; m < p.dim(); ++m)
                for (const auto &j : js) {
                    Rat s = 0;
                    for (int i = 0; i < nd; ++i) {
                        auto key = j;
                        key.push_back(i);
                        s += Rat(divs.at(m, i)) * tensor.value(key);
                    }
                    ok = ok && s == 0;
                }

            // (c) per-facet volumes
            std::map<int, Int> per_facet;
            for (size_t s = 0; s < t.simplices.size(); ++s)
                per_facet[t.facet_of[s]] += t.simplex_volume(p, (int)s);
            for (const auto &[f, v] : per_facet)
                ok = ok && v == facet_volume(p, f);

            // (d) SR duality by subset scan
            std::map<int, int> div_index;
            for (int i = 0; i < nd; ++i)
                div_index[p.divisor_points()[i]] = i;
            std::vector<std::set<int>> cones;
            for (const auto &s : t.simplices) {
                std::set<int> c;
                for (int pt : s)
                    c.insert(div_index.at(pt));
                cones.push_back(std::move(c));
            }
            auto gens = stanley_reisner(p, t);
            for (unsigned mask = 1; mask < (1u << nd); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < nd; ++i)
                    if (mask & (1u << i))
                        sub.push_back(i);
                bool face = false;
                for (const auto &c : cones)
                    face = face ||
                           std::includes(c.begin(), c.end(), sub.begin(), sub.end());
                bool killed = false;
                for (const auto &g : gens)
                    killed = killed ||
                             std::includes(sub.begin(), sub.end(), g.begin(), g.end());
                ok = ok && face == !killed;
            }

            // (e) integral CY triples
            if (p.dim() == 4) {
                TripleTensor tt(tensor, *basis, cy_class(p));
                int h = (int)basis->basis.size();
                for (int x = 0; x < h; ++x)
                    for (int y = x; y < h; ++y)
                        for (int z = y; z < h; ++z)
                            ok = ok && denominator(tt.value({x, y, z})) == 1;
            }
        }
    }
    report(6, ok, "property suite: Mori cones, tensor relations, volumes, SR duality,"
                  " integrality");
}

void criterion7()
{
    LatticePolytope q = quintic();
    auto tris = star_triangulations(q);
    auto t = IntersectionTensor::ambient(q, tris[0]);
    DivisorBasis b = divisor_basis(q);
    BatyrevHodge bh = batyrev_hodge(q);
    TripleTensor tt(t, b, cy_class(q));
    auto rep = hodge_or_genera(q, t, cy_class(q)); // throws if the two e's differ
    bool ok = bh.h11 == 1 && bh.h21 == 101 && bh.euler() == -200 &&
              rep.euler == -200 && tt.value({0, 0, 0}) == 5 && bh.h11 == 1;

    auto mg = mori_generators(p2(), walls(p2(), star_triangulations(p2())[0]));
    ok = ok && mg == std::vector<IVec>{IVec{1, 1, 1}};

    LatticePolytope pp = p1xp1_matrix();
    auto mg2 = mori_generators(pp, walls(pp, star_triangulations(pp)[0]));
    std::set<IVec> got(mg2.begin(), mg2.end());
    ok = ok && got == std::set<IVec>{IVec{1, 1, 0, 0}, IVec{0, 0, 1, 1}};
    report(7, ok, "quintic Hodge/Euler data two ways; forced Mori generators");
}

void criterion8()
{
    std::string a1 = run(cws86, "-fg");
    std::string a2 = run(cws86, "-fg");
    std::string a3 = run(cws86, "-gf");
    std::string b1 = run(cws86, "-fa");
    std::string b2 = run(cws86, "-af");
    bool ok = !a1.empty() && a1 == a2 && a1 == a3 && !b1.empty() && b1 == b2;
    report(8, ok, "byte-identical output across repeated runs and flag orders");
}

} // namespace

int main(int argc, char **argv)
{
    if (argc < 2) {
        fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
        return 2;
    }
    tool = argv[1];
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
    } catch (const std::exception &e) {
        fprintf(stderr, "unexpected exception: %s\n", e.what());
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
