#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "topq/catalog.hpp"
#include "topq/complex.hpp"

namespace support {

inline std::vector<oracle::Face> maximal_names(const topq::SimplicialComplex& x) {
  std::vector<oracle::Face> out;
  for (const auto& s : x.maximal_simplices()) {
    oracle::Face f;
    for (int v : s) f.push_back(x.vertex_name(v));
    out.push_back(f);
  }
  return out;
}

inline topq::QVector random_vector(std::mt19937_64& gen, std::size_t n, long spread = 3) {
  std::uniform_int_distribution<long> d(-spread, spread);
  topq::QVector v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

inline topq::Simplex simplex(const topq::SimplicialComplex& x, const std::vector<std::string>& names) {
  topq::Simplex s;
  for (const auto& n : names) s.push_back(*x.vertex_index(n));
  topq::sort_sign(s);
  return s;
}

}  // namespace support
