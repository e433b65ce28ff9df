#include <catch_amalgamated.hpp>

#include <complex>
#include <numbers>
#include <random>

#include <mckay3/catalog.hpp>

using namespace mckay3;
using Catch::Matchers::WithinAbs;

namespace {

std::complex<double> root(int n, long long k) { return std::polar(1.0, 2 * std::numbers::pi * k / n); }

// Random element of Q(zeta_n) together with its floating value computed
// independently from the raw terms.
std::pair<CycNum, std::complex<double>> random_cyc(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), exp(0, n - 1), terms(0, 4);
  std::vector<std::pair<Rat, long long>> t;
  std::complex<double> f = 0;
  for (int i = terms(rng); i > 0; --i) {
    Rat c(num(rng), den(rng));
    c.canonicalize();
    const long long e = exp(rng);
    t.emplace_back(c, e);
    f += c.get_d() * root(n, e);
  }
  return {CycNum::from_terms(n, t), f};
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials have degree phi(n)", "[cyclo]") {
  for (int n = 1; n <= 60; ++n) REQUIRE(cyclotomic_polynomial(n).size() - 1 == static_cast<std::size_t>(nt::totient(n)));
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105)[7] == -2);  // first coefficient of absolute value 2
}

TEST_CASE("small identities reduce canonically", "[cyclo]") {
  CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
  CHECK(CycNum::zeta(3) + CycNum::zeta(3, 2) == CycNum(-1));
  CHECK(CycNum::zeta(6, 3) == CycNum(-1));
  CHECK(CycNum::zeta(12, 12) == CycNum(1));
  CHECK(CycNum::zeta(5, -1) == CycNum::zeta(5, 4));
  CHECK(CycNum::reduce({0, 0, 0, 1}, 3) == CycNum(1));
  CHECK((CycNum::zeta(7) - CycNum::zeta(7)).is_zero());
  CHECK(CycNum::zeta(8).str() == "z8");
  CHECK(CycNum::zeta(12, 5).str() == "-z12 + z12^3");
}

TEST_CASE("sum of primitive n-th roots is the Moebius function", "[cyclo]") {
  for (int n = 1; n <= 40; ++n) {
    CycNum s = CycNum::zero_of(n);
    for (int k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) s += CycNum::zeta(n, k);
    REQUIRE(s == CycNum(nt::moebius(n)));
  }
}

TEST_CASE("Gauss sums square to the expected integers", "[cyclo]") {
  CHECK(gens::i_sqrt3() * gens::i_sqrt3() == CycNum(-3));
  CHECK(gens::sqrt5() * gens::sqrt5() == CycNum(5));
  CHECK(gens::sqrt_m7() * gens::sqrt_m7() == CycNum(-7));
  CHECK(gens::sqrt_m15() * gens::sqrt_m15() == CycNum(-15));
  CHECK_THAT(gens::sqrt5().to_float().real(), WithinAbs(std::sqrt(5.0), 1e-12));
  CHECK_THAT(gens::i_sqrt3().to_float().imag(), WithinAbs(std::sqrt(3.0), 1e-12));
}

TEST_CASE("field operations agree with floating evaluation", "[cyclo][property]") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 36, 60}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto [a, fa] = random_cyc(rng, n);
      auto [b, fb] = random_cyc(rng, n);
      REQUIRE(close(a.to_float(), fa));
      REQUIRE(close((a + b).to_float(), fa + fb));
      REQUIRE(close((a - b).to_float(), fa - fb));
      REQUIRE(close((a * b).to_float(), fa * fb));
      REQUIRE(close(a.conj().to_float(), std::conj(fa)));
      if (!a.is_zero()) {
        REQUIRE(a * a.inv() == CycNum(1));
        REQUIRE(close(a.inv().to_float(), 1.0 / fa));
      }
    }
  }
}

TEST_CASE("ring axioms hold exactly", "[cyclo][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_cyc(rng, 12).first, b = random_cyc(rng, 12).first, c = random_cyc(rng, 12).first;
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a.conj().conj() == a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE(-(-a) == a);
  }
}

TEST_CASE("embedding preserves value and equality is field equality", "[cyclo]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, fa] = random_cyc(rng, 6);
    const CycNum b = a.embed(36);
    REQUIRE(b.order() == 36);
    REQUIRE(b == a);
    REQUIRE(close(b.to_float(), fa));
  }
  CHECK(CycNum::zeta(4).embed(12) == CycNum::zeta(12, 3));
  CHECK_THROWS_AS(CycNum::zeta(4).embed(6), OrderMismatch);
}

TEST_CASE("mixed orders need an explicit lift", "[cyclo]") {
  const CycNum a = CycNum::zeta(3), b = CycNum::zeta(4);
  CHECK_THROWS_AS(a + b, OrderMismatch);
  CHECK_THROWS_AS(a * b, OrderMismatch);
  auto [x, y] = lift_to_lcm(a, b);
  CHECK(x.order() == 12);
  CHECK(x * y == CycNum::zeta(12, 7));
  // divisible orders lift automatically
  CHECK(CycNum::zeta(4) * CycNum::zeta(8) == CycNum::zeta(8, 3));
}

TEST_CASE("zero has no inverse", "[cyclo]") {
  CHECK_THROWS_AS(CycNum::zero_of(5).inv(), DivisionByZero);
  CHECK_THROWS_AS(CycNum(0).inv(), DivisionByZero);
}

TEST_CASE("rational queries", "[cyclo]") {
  CHECK(CycNum(Rat(3, 4)).to_rational() == Rat(3, 4));
  CHECK((CycNum::zeta(5) + CycNum::zeta(5, 4)).is_rational() == false);
  CHECK_THROWS_AS(CycNum::zeta(5).to_rational(), InvalidInput);
  CHECK(compare(CycNum(1), CycNum(2)) < 0);
  CHECK(compare(CycNum::zeta(3), CycNum::zeta(3)) == 0);
}
