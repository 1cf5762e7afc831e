#pragma once

// Shared fixture models for the unit and acceptance tests.

#include "luka/model.hpp"

namespace fixtures {

inline luka::Rational01 rat(long long num, long long den) {
  return luka::Rational01::of(num, den);
}

// Three states s0,s1,s2 in a one-directional 3/5-cycle with 3/5 loops:
//   r(s0,s0)=r(s0,s1)=3/5, r(s0,s2)=0
//   r(s1,s1)=r(s1,s2)=3/5, r(s1,s0)=0
//   r(s2,s2)=r(s2,s0)=3/5, r(s2,s1)=0
// p = (4/5, 9/10, 7/10), q = 1/5 everywhere.
inline luka::Model m1() {
  auto z = luka::Rational01::zero();
  auto c = rat(3, 5);
  std::vector<luka::Rational01> access = {
      c, c, z,
      z, c, c,
      c, z, c,
  };
  std::vector<std::vector<luka::Rational01>> valuation = {
      {rat(4, 5), rat(1, 5)},
      {rat(9, 10), rat(1, 5)},
      {rat(7, 10), rat(1, 5)},
  };
  return luka::Model({"s0", "s1", "s2"}, {"a"}, {"p", "q"}, {access}, valuation);
}

// Four nonce states; the column of the reused nonce 11 is 0 from everywhere
// (its own loop included), all other edges are 1. p is 1 at s11 and 1/2
// elsewhere.
inline luka::Model cpa_fig() {
  auto z = luka::Rational01::zero();
  auto o = luka::Rational01::one();
  auto h = luka::Rational01::half();
  // State order s00, s01, s10, s11.
  std::vector<luka::Rational01> access = {
      o, o, o, z,
      o, o, o, z,
      o, o, o, z,
      o, o, o, z,
  };
  std::vector<std::vector<luka::Rational01>> valuation = {{h}, {h}, {h}, {o}};
  return luka::Model({"s00", "s01", "s10", "s11"}, {"a"}, {"p"}, {access}, valuation);
}

}  // namespace fixtures
