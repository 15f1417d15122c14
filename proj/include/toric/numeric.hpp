#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

inline Int igcd(const Int &a, const Int &b)
{
    return boost::multiprecision::gcd(a, b);
}

// gcd of all entries, 0 for the zero vector
Int content(const IVec &v);

// divide by the content so the first nonzero entry keeps its sign
void make_primitive(IVec &v);

Int dot(const IVec &a, const IVec &b);

std::string rat_str(const Rat &r);

} // namespace toric
