// Copyright 2026 The codeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEG_TESTS_TEST_SUPPORT_HPP_
#define CODEG_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "codeg/bignum.hpp"

namespace codeg::testing {

inline std::string Fixture(const std::string& name) {
  return std::string(CODEG_FIXTURE_DIR) + "/" + name;
}

inline const std::vector<std::string>& AllFixtures() {
  static const std::vector<std::string> v = {"a5.chartab",    "sl25.chartab", "psl27.chartab", "sl27.chartab",
                                             "a6.chartab",    "c2.chartab",   "2e4a5.chartab"};
  return v;
}

// Fixed seed: property failures must reproduce.
inline std::mt19937_64& Rng() {
  static std::mt19937_64 rng(0x5eed2026);
  return rng;
}

inline long Uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(Rng());
}

inline BigInt RandomBig(unsigned bits) {
  BigInt v = 0;
  for (unsigned i = 0; i < bits; i += 32) v = (v << 32) + static_cast<unsigned long>(Rng()() & 0xffffffffu);
  return v;
}

// q^e by repeated multiplication, kept apart from the library's Pow.
inline BigInt NaivePow(const BigInt& q, unsigned long e) {
  BigInt r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace codeg::testing

#endif  // CODEG_TESTS_TEST_SUPPORT_HPP_
