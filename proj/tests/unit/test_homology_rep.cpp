#include <doctest.h>

#include <random>

#include "braid3/braid_word.hpp"
#include "braid3/errors.hpp"
#include "braid3/homology_rep.hpp"
#include "oracles.hpp"

using namespace braid3;

namespace {

SL2Matrix sl2(long p, long q, long r, long s) {
  return SL2Matrix(IntMatrix2{p, q, r, s});
}

bool matches(SL2Matrix const& m, oracle::Mat const& o) {
  return m.p() == o[0] && m.q() == o[1] && m.r() == o[2] && m.s() == o[3];
}

}  // namespace

TEST_CASE("image of words") {
  CHECK(image(BraidWord{}) == SL2Matrix::identity());
  CHECK(image(parse("h")) == -SL2Matrix::identity());
  CHECK(image(parse("x y^-1")) == sl2(2, 1, 1, 1));
  CHECK_THROWS_AS(SL2Matrix(IntMatrix2{1, 1, 1, 1}), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    BraidWord const w = oracle::random_word(rng, 20);
    CHECK(matches(image(w), oracle::image(w)));
  }
}

TEST_CASE("image stays in SL(2,Z) on long words") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    BraidWord const u = oracle::random_word(rng, 60);
    BraidWord const w = oracle::random_word(rng, 60);
    CHECK(image(w).entries().det() == 1);
    CHECK(image(concat(u, w)) == image(u) * image(w));
    CHECK(image(inverse(w)) == image(w).inverse());
  }
  // Entries beyond 64 bits.
  BraidWord big;
  for (int i = 0; i < 40; ++i) {
    big.append(parse("x y^-3"));
  }
  CHECK_FALSE(image(big).p().fits_slong_p());
  CHECK(image(big).entries().det() == 1);
}

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form({-2, 0, 0, -2}) ==
        AbelianGroup{0, {mpz_class(2), mpz_class(2)}});
  CHECK(smith_normal_form({1, 1, 1, 0}) == AbelianGroup{0, {}});
  CHECK(smith_normal_form({0, 0, 0, 0}) == AbelianGroup{2, {}});
  CHECK(smith_normal_form({2, 4, 6, 12}) == AbelianGroup{1, {mpz_class(2)}});
  CHECK(smith_normal_form({0, 3, 0, 0}) == AbelianGroup{1, {mpz_class(3)}});
  CHECK(to_string(smith_normal_form({-2, 0, 0, -2})) == "Z/2 + Z/2");
  CHECK(to_string(smith_normal_form({1, 0, 0, 1})) == "0");

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(-12, 12);
  for (int i = 0; i < 2000; ++i) {
    int const a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    auto const g = smith_normal_form({a, b, c, d});
    auto const o = oracle::cokernel(a, b, c, d);
    REQUIRE(g.free_rank == o.free_rank);
    REQUIRE(g.torsion.size() == o.torsion.size());
    for (std::size_t k = 0; k < o.torsion.size(); ++k) {
      CHECK(g.torsion[k] == o.torsion[k]);
    }
  }
}

TEST_CASE("H1 of the branched double cover") {
  CHECK(h1_branched_cover(parse("h")) ==
        AbelianGroup{0, {mpz_class(2), mpz_class(2)}});
  CHECK(h1_branched_cover(parse("y x^5")) == AbelianGroup{0, {mpz_class(5)}});
  CHECK(h1_branched_cover(parse("y^3")).free_rank >= 1);
  CHECK(*h1_branched_cover(parse("x y^-1 x y^-1")).order() == 5);
  CHECK_FALSE(h1_branched_cover(BraidWord{}).order().has_value());

  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    BraidWord const u = oracle::random_word(rng, 10);
    BraidWord const w = oracle::random_word(rng, 16);
    CHECK(h1_branched_cover(concat(concat(u, w), inverse(u))) ==
          h1_branched_cover(w));
    CHECK(determinant(w) == determinant(inverse(w)));
    CHECK(determinant(w) == oracle::abs_det_minus_identity(oracle::image(w)));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(parse("x y^-1")) == 1);
  CHECK(determinant(parse("x y^-1 x y^-1")) == 5);
  CHECK(determinant(parse("x y y x")) == 4);
  CHECK(determinant(BraidWord{}) == 0);
}

TEST_CASE("trace classes") {
  using K = TraceClass::Kind;
  CHECK(trace_class(-SL2Matrix::identity()) == TraceClass{K::Central, -1});
  CHECK(trace_class(SL2Matrix::identity()) == TraceClass{K::Central, 1});
  CHECK(trace_class(image(parse("x y^-1"))) == TraceClass{K::Hyperbolic, 1});
  CHECK(trace_class(image(parse("x^-2 y^-1"))).kind == K::Elliptic);
  CHECK(trace_class(image(parse("x y"))) == TraceClass{K::Elliptic, 1});
  CHECK(trace_class(image(parse("y^3"))) == TraceClass{K::Parabolic, 1});
  CHECK(trace_class(image(parse("h y^3"))) == TraceClass{K::Parabolic, -1});
  CHECK(trace_class(image(parse("h x y^-1"))) ==
        TraceClass{K::Hyperbolic, -1});

  // At trace 0 the sign is constant on conjugacy classes.
  std::mt19937_64 rng(17);
  SL2Matrix const s = image(parse("x^-2 y^-1"));
  int const eps = trace_class(s).epsilon;
  for (int i = 0; i < 200; ++i) {
    SL2Matrix const u = image(oracle::random_word(rng, 12));
    CHECK(trace_class(u * s * u.inverse()).epsilon == eps);
    CHECK(trace_class(u * -s * u.inverse()).epsilon == -eps);
  }
}

TEST_CASE("parabolic invariant") {
  CHECK(parabolic_invariant(image(parse("y^3"))) ==
        ParabolicInvariant{1, mpz_class(3)});
  CHECK(parabolic_invariant(image(parse("x^3"))) ==
        ParabolicInvariant{1, mpz_class(3)});
  CHECK(parabolic_invariant(image(parse("h y^-1"))) ==
        ParabolicInvariant{-1, mpz_class(-1)});
  for (long m = -20; m <= 20; ++m) {
    if (m == 0) {
      continue;
    }
    BraidWord w;
    w.append_power(kY, m);
    CHECK(parabolic_invariant(image(w)) == ParabolicInvariant{1, mpz_class(m)});
  }
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    BraidWord const u = oracle::random_word(rng, 10);
    BraidWord const c = concat(concat(u, parse("x^-4")), inverse(u));
    CHECK(parabolic_invariant(image(c)) == ParabolicInvariant{1, mpz_class(-4)});
  }
  try {
    parabolic_invariant(image(parse("x y^-1")));
    FAIL("expected NotParabolic");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotParabolic);
  }
  CHECK_THROWS_AS(parabolic_invariant(SL2Matrix::identity()), Error);
}
