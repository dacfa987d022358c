#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "../oracles.hpp"
#include "comather/chow.hpp"

namespace test {

inline std::vector<int> coords(const comather::Weight& w) {
  std::vector<int> out;
  for (int i = 0; i < w.rank(); ++i) out.push_back(w[i]);
  return out;
}

// Same element in the epsilon model, via the library's reduced word.
inline oracle::Mat to_oracle(const oracle::EpsGroup& g, const comather::WeylGroup& W, const comather::WeylElt& w) {
  return g.from_word(W.reduced_word(w));
}

// Element from 1-based letters, e.g. "132" for s1 s3 s2.
inline comather::WeylElt word(const comather::WeylGroup& W, const std::string& letters) {
  std::vector<int> w;
  for (char c : letters) w.push_back(c - '1');
  return W.from_word(w);
}

inline comather::EquivPoly a(int i) { return comather::EquivPoly::alpha(i - 1); }

}  // namespace test

namespace doctest {
template <>
struct StringMaker<comather::EquivPoly> {
  static String convert(const comather::EquivPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<comather::SchubertClass> {
  static String convert(const comather::SchubertClass& c) {
    std::string s;
    for (const auto& [w, p] : c.sorted()) s += " " + c.space().label(w) + ":" + p.to_string();
    return s.c_str();
  }
};
}  // namespace doctest
