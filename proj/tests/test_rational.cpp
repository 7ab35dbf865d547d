#include <catch2/catch.hpp>

#include <random>

#include "support.hpp"

using hyperrank::Int;
using hyperrank::Rat;

TEST_CASE("Rat canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(0, 7).den() == 1);
  CHECK(Rat(6, 3).str() == "2");
  CHECK(Rat(5, 1).is_integer());
  CHECK_FALSE(Rat(5, 2).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("Rat ordering and printing") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(7, 2).str() == "7/2");
  CHECK(abs(Rat(-3, 4)) == Rat(3, 4));
  CHECK(Rat(-3, 4).sign() == -1);
}

TEST_CASE("Rat field axioms on random operands") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 120; ++i) {
    Rat a = testsupport::rand_rat(rng), b = testsupport::rand_rat(rng),
        c = testsupport::rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rat(0));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * (Rat(1) / a) == Rat(1));
    CHECK(a * Rat(1) == a);
    CHECK(a + Rat(0) == a);
  }
}
