#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "metastable/summation.hpp"

using metastable::CompensatedSum;

TEST_CASE("compensated sum recovers terms lost by naive addition") {
  CompensatedSum s;
  double naive = 0.0;
  for (const double x : {1e16, 1.0, -1e16, 1.0}) {
    s += x;
    naive += x;
  }
  CHECK(s.value() == 2.0);
  CHECK(naive != 2.0);
}

TEST_CASE("compensated sum of many small terms matches long double reference") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CompensatedSum s;
  long double ref = 0.0L;
  for (int i = 0; i < 200000; ++i) {
    const double x = dist(rng) * std::pow(10.0, static_cast<int>(i % 9) - 4);
    s += x;
    ref += x;
  }
  CHECK(std::abs(s.value() - static_cast<double>(ref)) <= 1e-13);
}

TEST_CASE("merging partial accumulators keeps the error terms") {
  CompensatedSum a;
  CompensatedSum b;
  a += 1e16;
  a += 1.0;
  b += -1e16;
  b += 1.0;
  a += b;
  CHECK(a.value() == 2.0);
}
