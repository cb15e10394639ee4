#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "ncsieve/cyclo.hpp"
#include "ncsieve/errors.hpp"
#include "ncsieve/int_poly.hpp"
#include "ncsieve/qanalog.hpp"

using namespace ncsieve;

namespace {

using Complex = std::complex<double>;

Complex numeric_root(unsigned m, long long k) {
  const double t = 2 * std::numbers::pi * static_cast<double>(k) / m;
  return {std::cos(t), std::sin(t)};
}

// Independent evaluation of a field element as a complex number.
Complex numeric(const CycloElem& x) {
  Complex s = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) s += x.coeffs()[k].get_d() * numeric_root(x.conductor(), k);
  return s;
}

Complex numeric(const IntPoly& p, Complex z) {
  Complex s = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) s = s * z + p.coeffs()[k].get_d();
  return s;
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree, int range = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-range, range);
  std::vector<mpz_class> v(deg(rng) + 1);
  for (auto& x : v) x = c(rng);
  return IntPoly(std::move(v));
}

CycloElem random_elem(std::mt19937_64& rng, unsigned m) {
  std::uniform_int_distribution<int> c(-4, 4), den(1, 3);
  std::vector<mpq_class> v(euler_phi(m));
  for (auto& x : v) {
    x = mpq_class(c(rng), den(rng));
    x.canonicalize();
  }
  return CycloElem(m, std::move(v));
}

IntPoly naive_q_int_product(const std::vector<unsigned long>& f) {
  IntPoly r{1};
  for (auto n : f) r = r * q_int(static_cast<unsigned>(n));
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST_CASE("IntPoly keeps a canonical form") {
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{1, 2, 0}.degree() == 1);
  CHECK(IntPoly{}.degree() == -1);
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
  CHECK(IntPoly{1, 2, 1}.is_palindromic());
  CHECK_FALSE(IntPoly{1, 2}.is_palindromic());
  CHECK((IntPoly{1, -1, 0, 2}.to_string() == "1 - q + 2*q^3"));
}

TEST_CASE("division with remainder recovers the factors (random)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 8);
    IntPoly b = random_poly(rng, 5);
    b += IntPoly::monomial(1, b.degree() + 1);  // monic
    const IntPoly r = b.degree() > 0 ? random_poly(rng, static_cast<int>(b.degree()) - 1) : IntPoly{};
    const auto [q, rem] = divmod(a * b + r, b);
    CHECK(q == a);
    CHECK(rem == r);
  }
}

TEST_CASE("multiplication is an evaluation homomorphism (random)") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly a = random_poly(rng, 10), b = random_poly(rng, 10);
    for (long x : {-3L, -1L, 0L, 2L, 7L}) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("non-monic division leaving Z[q] is a domain error") {
  CHECK_THROWS_AS(divmod(IntPoly{1, 1}, IntPoly{1, 2}), DomainError);
  CHECK_THROWS_AS(divmod(IntPoly{1}, IntPoly{}), DomainError);
  CHECK_THROWS_AS(exact_quotient(IntPoly{1, 0, 1}, IntPoly{1, 1}, "test"), InternalError);
}

TEST_CASE("fold reduces exponents modulo n") {
  CHECK(IntPoly{1, 1, 1, 1, 1}.fold(2) == IntPoly{3, 2});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly p = random_poly(rng, 20);
    for (unsigned n = 1; n <= 6; ++n) {
      CHECK(p.fold(n).eval(1) == p.eval(1));
      CHECK(std::abs(numeric(p.fold(n), numeric_root(n, 1)) - numeric(p, numeric_root(n, 1))) < 1e-6);
    }
  }
}

TEST_CASE("cyclotomic polynomials multiply to q^n - 1") {
  for (unsigned n = 1; n <= 60; ++n) {
    IntPoly prod{1};
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic_poly(d);
    CHECK(prod == IntPoly::monomial(1, n) - IntPoly{1});
    CHECK(cyclotomic_poly(n).degree() == static_cast<long>(euler_phi(n)));
    CHECK(std::abs(numeric(cyclotomic_poly(n), numeric_root(n, 1))) < 1e-8);
  }
  CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("field arithmetic agrees with complex arithmetic (random)") {
  std::mt19937_64 rng(14);
  for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u, 15u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycloElem a = random_elem(rng, m), b = random_elem(rng, m);
      CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-8);
      CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8);
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK(std::abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-6);
      }
    }
  }
}

TEST_CASE("mixed conductors embed into the lcm") {
  const CycloElem i = CycloElem::root_of_unity(4, 1);
  const CycloElem w = CycloElem::root_of_unity(3, 1);
  const CycloElem prod = i * w;
  CHECK(prod.conductor() == 12);
  CHECK(prod == CycloElem::root_of_unity(12, 7));
  CHECK(i * i == CycloElem(-1));
  CHECK(w.embed(6) == CycloElem::root_of_unity(6, 2));
  CHECK((i * i).as_rational() == mpq_class(-1));
  CHECK_FALSE(i.as_rational().has_value());
  CHECK(CycloElem::root_of_unity(5, -1) == CycloElem::root_of_unity(5, 4));
}

TEST_CASE("sum of primitive roots is the Moebius function") {
  const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (unsigned n = 1; n <= 12; ++n) {
    CycloElem s(0);
    for (unsigned k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) s += CycloElem::root_of_unity(n, k);
    CHECK(s == CycloElem(mu[n]));
  }
}

TEST_CASE("reduce_at_root matches numeric evaluation (random)") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly p = random_poly(rng, 30);
    for (unsigned d = 1; d <= 12; ++d)
      CHECK(std::abs(numeric(reduce_at_root(p, d)) - numeric(p, numeric_root(d, 1))) < 1e-6);
  }
}

TEST_CASE("q-binomials satisfy the q-Pascal recurrence") {
  for (unsigned n = 1; n <= 14; ++n) {
    CHECK(q_binomial(n, 0) == IntPoly{1});
    CHECK(q_binomial(n, n) == IntPoly{1});
    for (unsigned k = 1; k < n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n - 1, k - 1) + IntPoly::monomial(1, k) * q_binomial(n - 1, k));
      CHECK(q_binomial(n, k).eval(1) == binomial(n, k));
    }
  }
  CHECK_THROWS_AS(q_binomial(2, 3), DomainError);
}

TEST_CASE("windowed q-integer products agree with convolution (random)") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<unsigned long> f(1, 25);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<unsigned long> fs(len(rng));
    for (auto& x : fs) x = f(rng);
    CHECK(q_int_product(fs) == naive_q_int_product(fs));
  }
  CHECK(q_int_product({3, 0}).is_zero());
  CHECK(q_int(0).is_zero());
}

TEST_CASE("Catalan numbers of the exceptional and classical types") {
  struct Row {
    std::vector<unsigned> degrees;
    long cat;
  };
  const std::vector<Row> rows = {{{2, 3, 4}, 14},          {{2, 4, 6}, 20},           {{2, 4, 4, 6}, 50},
                                 {{2, 6, 10}, 32},         {{2, 12, 20, 30}, 280},    {{2, 6, 8, 12}, 105},
                                 {{2, 5, 6, 8, 9, 12}, 833}, {{2, 6, 8, 10, 12, 14, 18}, 4160},
                                 {{2, 8, 12, 14, 18, 20, 24, 30}, 25080}};
  for (const auto& r : rows) {
    const IntPoly c = catalan_poly(QCatalanSpec::from_degrees(r.degrees));
    CHECK(c.eval(1) == r.cat);
    CHECK(c.nonnegative());
    CHECK(c.is_palindromic());
  }
}

TEST_CASE("Cat(A_(n-1), q) is the classical q-Catalan number") {
  for (unsigned n = 2; n <= 10; ++n) {
    std::vector<unsigned> degrees;
    for (unsigned i = 2; i <= n; ++i) degrees.push_back(i);
    const IntPoly expected = exact_quotient(q_binomial(2 * n, n), q_int(n + 1), "q-Catalan");
    CHECK(catalan_poly(QCatalanSpec::from_degrees(degrees)) == expected);
  }
}

TEST_CASE("Fuss-Catalan numbers of type A at q = 1") {
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      std::vector<unsigned> degrees;
      for (unsigned i = 2; i <= n; ++i) degrees.push_back(i);
      const mpz_class expected = binomial((m + 1) * n, n) / (m * n + 1);
      CHECK(catalan_poly(QCatalanSpec::from_degrees(degrees, m)).eval(1) == expected);
    }
}

TEST_CASE("E8 at a primitive fourth root of unity") {
  const auto spec = QCatalanSpec::from_degrees({2, 8, 12, 14, 18, 20, 24, 30});
  const RootEvaluation ev = eval_integer_at_root(catalan_poly(spec), 4);
  REQUIRE(ev.is_integer());
  CHECK(*ev.value == 88);
  CHECK(catalan_limit_product(spec, 4) == 88);
}

TEST_CASE("limit products agree with exact evaluation") {
  const std::vector<std::vector<unsigned>> cases = {
      {2, 3, 4}, {2, 4, 6}, {2, 4, 4, 6}, {2, 6, 10}, {2, 6, 8, 12}, {2, 5, 6, 8, 9, 12}, {3, 6, 9}, {2, 5}, {3, 6}};
  for (const auto& degrees : cases)
    for (unsigned m = 1; m <= 2; ++m) {
      const auto spec = QCatalanSpec::from_degrees(degrees, m);
      const IntPoly c = catalan_poly(spec);
      for (unsigned d = 1; d <= 2 * m * spec.h + 2; ++d) {
        mpq_class limit;
        try {
          limit = catalan_limit_product(spec, d);
        } catch (const DomainError&) {
          continue;
        }
        const RootEvaluation ev = eval_integer_at_root(c, d);
        CHECK(ev.residue == CycloElem(limit));
      }
    }
}

TEST_CASE("limit_ratio") {
  CHECK(limit_ratio(10, 4, 3) == 1);
  CHECK(limit_ratio(12, 4, 4) == 3);
  CHECK_THROWS_AS(limit_ratio(5, 4, 3), DomainError);
}

TEST_CASE("positive variant uses codegrees") {
  // A2: degrees 2, 3, h = 3; numerator [3+1][3+0], denominator [2][3].
  const IntPoly pos = catalan_poly(QCatalanSpec::from_degrees({2, 3}, 1, CatalanVariant::Positive));
  CHECK(pos.eval(1) == 2);
  CHECK_THROWS_AS(QCatalanSpec::from_degrees({}), DomainError);
}
