#include "toric/hypersurface.hpp"
#include "toric/mori_cone.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace toric;

namespace {

struct Config {
    bool filter = false;
    bool want_g = false, want_I = false, want_m = false, want_P = false;
    bool want_K = false, want_b = false, want_i = false, want_c = false;
    bool want_t = false, want_d = false;
    bool matrix_input = false; // -D
    bool custom_h = false;     // -H
};

const char *usage =
    "This is a reimplementation of `mori.x':\n"
    "                     performing crepant star triangulations of a polytope P* in the N-lattice\n"
    "                     computing the Mori cone of the corresponding toric ambient spaces\n"
    "                     determining the intersection rings of embedded (CY) hypersurfaces\n"
    "Usage:   morix [-<Option-string>] [in-file [out-file]]\n"
    "Options (concatenate any number of them into <Option-string>):\n"
    "    -h      print this information\n"
    "    -f      use as filter\n"
    "    -g      general output: triangulation and Stanley-Reisner ideal\n"
    "    -I      incidence information of the facets (ignoring interior points of facets)\n"
    "    -m      Mori generators of the ambient space\n"
    "    -P      IP-simplices among points of P* (ignoring interior points of facets)\n"
    "    -K      points of P* in Kreuzer polynomial form\n"
    "    -b      Hodge numbers and Euler number\n"
    "            or arithmetic genera and Euler number if combined with -H\n"
    "    -i      intersection ring\n"
    "    -c      Chern classes of the (CY) hypersurface\n"
    "    -t      triple intersection numbers\n"
    "    -d      topological information on toric divisors and del Pezzo conditions\n"
    "    -a      all of the above except h, f, I and K\n"
    "    -D      lattice polytope points of P* as input (default CWS)\n"
    "    -H      arbitrary hypersurface class `H = c1*D1 + c2*D2 + ...' as input (default CY)\n"
    "            Input: coefficients `c1 c2 ...'\n"
    "Input: 1) standard input format: degrees and weights `d1 w11 w12 ... d2 w21 w22 ...'\n"
    "       2) alternative (use -D): `d np' or `np d' (d=Dimension, np=#[points])\n"
    "                                and (after newline) np*d coordinates\n"
    "Output:   as specified by options\n"
    "Exit status: 0 ok, 1 input error, 2 not reflexive, 3 triangulation cap exceeded\n";

std::string fmt5(const Int &x) // right-aligned width-5 integer field
{
    std::string s = x.str();
    while (s.size() < 5)
        s = " " + s;
    return s;
}

std::string fmt4(const Int &x)
{
    std::string s = x.str();
    while (s.size() < 4)
        s = " " + s;
    return s;
}

// linear/quadratic expressions over the basis classes J1..Jh
std::string linear_in_j(const RVec &v)
{
    std::string s;
    for (size_t a = 0; a < v.size(); ++a) {
        if (v[a] == 0)
            continue;
        std::string term = "J" + std::to_string(a + 1);
        if (v[a] == -1)
            term = "-" + term;
        else if (v[a] != 1)
            term = rat_str(v[a]) + "*" + term;
        if (!s.empty() && term[0] != '-')
            s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

std::string quadratic_in_j(const std::map<std::vector<int>, Rat> &q)
{
    std::string s;
    for (const auto &[k, v] : q) {
        if (v == 0)
            continue;
        std::string mono = k[0] == k[1]
                               ? "J" + std::to_string(k[0] + 1) + "^2"
                               : "J" + std::to_string(k[0] + 1) + "*J" +
                                     std::to_string(k[1] + 1);
        std::string term = mono;
        if (v == -1)
            term = "-" + term;
        else if (v != 1)
            term = rat_str(v) + "*" + term;
        if (!s.empty() && term[0] != '-')
            s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

void print_polytope_sections(std::ostream &out, const Config &cfg,
                             const LatticePolytope &p)
{
    if (cfg.want_P) {
        out << p.dim() << " " << p.num_points() << "  points of P* and IP-simplices\n";
        for (int d = 0; d < p.dim(); ++d) {
            for (int c = 0; c < p.num_points(); ++c)
                out << fmt5(p.point(c)[d]);
            out << "\n";
        }
        auto ips = ip_simplices(p);
        out << std::string(30, '-') << "   #IP-simp=" << ips.size() << "\n";
        for (const auto &s : ips) {
            for (const auto &x : s.coefficients)
                out << fmt5(x);
            out << fmt4(s.degree) << "=d  codim=" << s.codim << "\n";
        }
    }
    if (cfg.want_I) {
        out << "Incidence:";
        for (const auto &w : incidence_words(p))
            out << " " << w;
        out << "\n";
    }
}

void print_hypersurface_info(std::ostream &out, const LatticePolytope &p,
                             const HypersurfaceClass &h)
{
    out << "Hypersurface degrees: (";
    for (const Int &d : hypersurface_degrees(p, h))
        out << " " << d.str() << " ";
    out << ")\n";
    out << "Hypersurface class:";
    for (int i = 0; i < p.num_divisors(); ++i)
        if (h.coeffs[i] != 0)
            out << " " << h.coeffs[i].str() << "*d" << i + 1;
    out << "\n";
}

int process(std::ostream &out, const Config &cfg, const LatticePolytope &p,
            const HypersurfaceClass &h)
{
    print_polytope_sections(out, cfg, p);

    bool topo = cfg.want_b || cfg.want_i || cfg.want_c || cfg.want_t || cfg.want_d;
    bool four_d = p.dim() == 4;
    if (topo && !four_d)
        std::cerr << "hypersurface topology is only computed for 4d polytopes\n";

    if (cfg.custom_h || ((topo || cfg.want_K) && four_d))
        p.require_reflexive();

    if (cfg.custom_h)
        print_hypersurface_info(out, p, h);

    long pic = -1;
    if (four_d && p.reflexive())
        pic = batyrev_hodge(p).h11;
    if (cfg.want_K)
        out << kreuzer_polynomial(p, pic) << "\n";

    bool need_tri = cfg.want_g || cfg.want_m || (topo && four_d);
    if (!need_tri)
        return 0;

    p.require_reflexive();
    auto tris = star_triangulations(p);
    std::optional<DivisorBasis> basis;
    if ((cfg.want_i || cfg.want_c) && four_d)
        basis = divisor_basis(p);

    for (const auto &t : tris) {
        if (cfg.want_g) {
            out << t.simplices.size() << " Triangulation\n";
            bool first = true;
            for (const auto &s : t.simplices) {
                out << (first ? "" : " ") << bitset_word(p, s);
                first = false;
            }
            out << "\n";
            auto sr = stanley_reisner(p, t);
            out << sr.size() << " SR-ideal\n";
            first = true;
            for (const auto &g : sr) {
                std::string w(p.num_divisors(), '0');
                for (int i : g)
                    w[i] = '1';
                out << (first ? "" : " ") << w;
                first = false;
            }
            out << "\n";
        }
        if (cfg.want_m) {
            auto mg = mori_generators(p, walls(p, t));
            out << mg.size() << " Mori generators:\n";
            for (const auto &g : mg) {
                for (const auto &x : g)
                    out << fmt4(x);
                out << "\n";
            }
        }
        if (!(topo && four_d))
            continue;

        auto tensor = IntersectionTensor::ambient(p, t);
        if (cfg.want_b) {
            auto rep = hodge_or_genera(p, tensor, h);
            if (rep.cy)
                out << "Hodge numbers and Euler number of H:\n"
                    << "h11: " << rep.h11 << " , h21: " << rep.h21 << "  [ "
                    << rat_str(rep.euler) << " ]\n";
            else
                out << "Arithmetic genera and Euler number of H:\n"
                    << "chi_0: " << rat_str(rep.chi0) << " , chi_1: "
                    << rat_str(rep.chi1) << "  [ " << rat_str(rep.euler) << " ]\n";
        }
        if (cfg.want_i) {
            out << "divisor classes (integral basis J1 ... J" << basis->basis.size()
                << "):\n"
                << divisor_class_string(*basis) << "\n";
            TripleTensor tt(tensor, *basis, h);
            out << "intersection polynomial:\n" << tt.polynomial() << "\n";
        }
        if (cfg.want_c) {
            auto cc = chern_classes(p, tensor, *basis, h);
            out << "Chern classes of H:\n"
                << "c1(H)= " << linear_in_j(cc.c1_basis) << "\n"
                << "c2(H)= " << quadratic_in_j(cc.c2_basis) << "\n"
                << "e(H)= " << rat_str(cc.euler) << "\n";
        }
        if (cfg.want_t) {
            out << "triple intersection numbers:\n";
            int nd = p.num_divisors();
            bool any = false;
            for (int a = 0; a < nd; ++a)
                for (int b = a; b < nd; ++b)
                    for (int c = b; c < nd; ++c) {
                        Rat v = 0;
                        for (int l = 0; l < nd; ++l)
                            if (h.coeffs[l] != 0)
                                v += Rat(h.coeffs[l]) * tensor.value({a, b, c, l});
                        if (v == 0)
                            continue;
                        out << "d" << a + 1 << "*d" << b + 1 << "*d" << c + 1
                            << ": " << rat_str(v) << "\n";
                        any = true;
                    }
            if (!any)
                out << "all zero\n";
        }
        if (cfg.want_d) {
            auto dt = divisor_topology(p, tensor, h);
            out << "Euler characteristics and arithmetic genera of toric divisors:\n";
            for (const auto &d : dt)
                out << "d" << d.divisor + 1 << ": chi= " << rat_str(d.chi)
                    << " , chi_0= " << rat_str(d.chi0) << "\n";
            int ncand = 0;
            for (const auto &d : dt)
                if (d.dp_candidate)
                    ++ncand;
            out << ncand << " del Pezzo candidates (type in brackets):";
            for (const auto &d : dt)
                if (d.dp_candidate)
                    out << " d" << d.divisor + 1 << "[" << d.dp_type << "]";
            out << "\n";
            out << "del Pezzo candidates not intersecting other del Pezzos:";
            bool none = true;
            for (const auto &d : dt)
                if (d.isolated_dp) {
                    out << " d" << d.divisor + 1;
                    none = false;
                }
            out << (none ? " none\n" : "\n");
        }
    }
    return 0;
}

// token-by-token integer reader
std::optional<Int> next_int(std::istream &in)
{
    std::string tok;
    if (!(in >> tok))
        return std::nullopt;
    try {
        return Int(tok);
    } catch (...) {
        throw InputError("not an integer: `" + tok + "'");
    }
}

Int need_int(std::istream &in, const char *what)
{
    auto v = next_int(in);
    if (!v)
        throw InputError(std::string("unexpected end of input while reading ") + what);
    return *v;
}

std::optional<LatticePolytope> read_record(std::istream &in, const Config &cfg,
                                           bool prompt)
{
    if (cfg.matrix_input) {
        if (prompt)
            std::cout << "`#lines #colums' (= `PolyDim #Points' or `#Points PolyDim'):"
                      << std::endl;
        auto first = next_int(in);
        if (!first)
            return std::nullopt;
        Int second = need_int(in, "the matrix header");
        long a = first->convert_to<long>(), b = second.convert_to<long>();
        if (a <= 0 || b <= 0)
            throw InputError("matrix header entries must be positive");
        bool rows_are_coords = a < b; // `d np' layout; `np d' otherwise
        long d = rows_are_coords ? a : b;
        long np = rows_are_coords ? b : a;
        if (prompt)
            std::cout << "Type the " << d * np << " coordinates as dim=" << d
                      << " lines with #pts=" << np << " columns:" << std::endl;
        IMat pts((int)d, (int)np);
        for (long r = 0; r < (rows_are_coords ? d : np); ++r)
            for (long c = 0; c < (rows_are_coords ? np : d); ++c) {
                Int v = need_int(in, "the point matrix");
                if (rows_are_coords)
                    pts.at((int)r, (int)c) = v;
                else
                    pts.at((int)c, (int)r) = v;
            }
        return LatticePolytope::from_points(pts, true);
    }

    if (prompt)
        std::cout << "Degrees and weights  `d1 w11 w12 ... d2 w21 w22 ...':"
                  << std::endl;
    // one CWS per input line
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        IVec toks;
        std::string tok;
        while (ls >> tok) {
            try {
                toks.push_back(Int(tok));
            } catch (...) {
                throw InputError("not an integer: `" + tok + "'");
            }
        }
        if (toks.empty())
            continue;
        return cws_dual_polytope(parse_cws(toks));
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char **argv)
{
    Config cfg;
    int argi = 1;
    if (argi < argc && argv[argi][0] == '-') {
        for (const char *c = argv[argi] + 1; *c; ++c) {
            switch (*c) {
            case 'h': std::cout << usage; return 0;
            case 'f': cfg.filter = true; break;
            case 'g': cfg.want_g = true; break;
            case 'I': cfg.want_I = true; break;
            case 'm': cfg.want_m = true; break;
            case 'P': cfg.want_P = true; break;
            case 'K': cfg.want_K = true; break;
            case 'b': cfg.want_b = true; break;
            case 'i': cfg.want_i = true; break;
            case 'c': cfg.want_c = true; break;
            case 't': cfg.want_t = true; break;
            case 'd': cfg.want_d = true; break;
            case 'D': cfg.matrix_input = true; break;
            case 'H': cfg.custom_h = true; break;
            case 'a':
                cfg.want_g = cfg.want_m = cfg.want_P = cfg.want_b = true;
                cfg.want_i = cfg.want_c = cfg.want_t = cfg.want_d = true;
                break;
            default:
                std::cerr << "unknown option -" << *c << "\n" << usage;
                return 1;
            }
        }
        ++argi;
    }
    bool any_section = cfg.want_g || cfg.want_I || cfg.want_m || cfg.want_P ||
                       cfg.want_K || cfg.want_b || cfg.want_i || cfg.want_c ||
                       cfg.want_t || cfg.want_d;
    if (!any_section) {
        if (cfg.custom_h)
            cfg.want_b = true; // plain -H runs -Hb
        else
            cfg.want_g = true; // default is -g
    }

    std::ifstream fin;
    std::ofstream fout;
    std::istream *in = &std::cin;
    std::ostream *out = &std::cout;
    if (argi < argc) {
        fin.open(argv[argi]);
        if (!fin) {
            std::cerr << "cannot open input file " << argv[argi] << "\n";
            return 1;
        }
        in = &fin;
        ++argi;
    }
    if (argi < argc) {
        fout.open(argv[argi]);
        if (!fout) {
            std::cerr << "cannot open output file " << argv[argi] << "\n";
            return 1;
        }
        out = &fout;
        ++argi;
    }
    if (argi < argc) {
        std::cerr << "too many arguments\n" << usage;
        return 1;
    }

    bool prompt = !cfg.filter && in == &std::cin;
    try {
        bool processed = false;
        do {
            auto p = read_record(*in, cfg, prompt);
            if (!p)
                break;
            HypersurfaceClass h = cy_class(*p);
            if (cfg.custom_h) {
                if (prompt)
                    std::cout << "Type the " << p->num_divisors()
                              << " (integer) entries for the hypersurface class:"
                              << std::endl;
                IVec coeffs;
                for (int i = 0; i < p->num_divisors(); ++i)
                    coeffs.push_back(need_int(*in, "the hypersurface class"));
                h = hypersurface_class(*p, std::move(coeffs));
            }
            int rc = process(*out, cfg, *p, h);
            if (rc)
                return rc;
            processed = true;
        } while (cfg.filter || !prompt);
        if (!processed && prompt)
            return 1;
    } catch (const NotReflexiveError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const TriangulationCapError &e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const InputError &e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
