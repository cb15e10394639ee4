#include <doctest.h>

#include <random>
#include <unordered_set>

#include "ncsieve/errors.hpp"
#include "ncsieve/noncrossing.hpp"
#include "ncsieve/qanalog.hpp"

using namespace ncsieve;

namespace {

mpz_class fuss_catalan(const GroupView& g, unsigned m) {
  return catalan_poly(QCatalanSpec::from_degrees(g.degrees(), m)).eval(1);
}

std::unordered_set<GroupElement> as_set(const std::vector<GroupElement>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("|NC(W)| is the Catalan number; ranks are palindromic") {
  for (const char* s : {"A1", "A3", "A5", "B3", "B4", "D4", "D5", "I2(5)", "G(3,1,2)", "G(4,1,3)", "G(3,3,3)",
                        "G(5,5,3)", "H3", "F4", "H4"}) {
    CAPTURE(s);
    const auto g = ReflectionGroup::build(s);
    const NCPoset nc = enumerate_nc(g);
    CHECK(nc.size() == fuss_catalan(*g, 1));
    const auto& ranks = nc.rank_sizes();
    CHECK(std::equal(ranks.begin(), ranks.end(), ranks.rbegin()));
    CHECK(nc.element(nc.bottom()) == g->identity());
    CHECK(nc.element(nc.top()) == g->coxeter_element());
    for (std::size_t i = 0; i < nc.size(); ++i) CHECK(nc.rank_of(i) == g->rank() - g->fixed_space_dim(nc.element(i)));
  }
}

TEST_CASE("type A Narayana numbers") {
  const auto g = ReflectionGroup::build("A3");
  CHECK(enumerate_nc(g).rank_sizes() == std::vector<std::size_t>{1, 6, 6, 1});
  const auto b3 = ReflectionGroup::build("B3");
  CHECK(enumerate_nc(b3).rank_sizes() == std::vector<std::size_t>{1, 9, 9, 1});
}

TEST_CASE("fixed-space and length definitions of NC(W) agree") {
  for (const char* s : {"A2", "A4", "B3", "D4", "I2(7)", "G(3,1,2)", "G(4,4,3)", "H3", "F4"}) {
    CAPTURE(s);
    const auto g = ReflectionGroup::build(s);
    const LengthTable lengths(*g);
    CHECK(lengths.size() == g->elements().size());
    const NCPoset nc = enumerate_nc(g);
    CHECK(nc_by_length(*g, lengths) == as_set(nc.elements()));
    NCOptions left;
    left.left_multiplication = true;
    CHECK(as_set(enumerate_nc(g, left).elements()) == as_set(nc.elements()));
  }
}

TEST_CASE("absolute order by fixed spaces matches additivity of length (random pairs)") {
  std::mt19937_64 rng(31);
  for (const char* s : {"A3", "B3", "G(3,1,2)", "H3"}) {
    CAPTURE(s);
    const auto g = ReflectionGroup::build(s);
    const LengthTable len(*g);
    const auto& el = g->elements();
    std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
    for (int t = 0; t < 400; ++t) {
      const auto& x = el[pick(rng)];
      const auto& z = el[pick(rng)];
      CHECK(below(*g, x, z) == (len(x) + len(x.inverse() * z) == len(z)));
    }
  }
}

TEST_CASE("order matrix and on-demand comparisons agree") {
  const auto g = ReflectionGroup::build("B3");
  const NCPoset full = enumerate_nc(g);
  NCOptions lazy;
  lazy.order_matrix_limit = 0;
  const NCPoset slow = enumerate_nc(g, lazy);
  REQUIRE(full.has_order_matrix());
  CHECK_FALSE(slow.has_order_matrix());
  REQUIRE(full.elements() == slow.elements());
  for (std::size_t i = 0; i < full.size(); ++i)
    for (std::size_t j = 0; j < full.size(); ++j) CHECK(full.le(i, j) == slow.le(i, j));
}

TEST_CASE("NC(W) is a lattice") {
  for (const char* s : {"A3", "B3", "D4", "G(3,1,3)", "H3", "F4"}) {
    CAPTURE(s);
    CHECK(lattice_check(enumerate_nc(ReflectionGroup::build(s))).passed);
  }
}

TEST_CASE("Kreweras complement squares to conjugation by c") {
  for (const char* s : {"A3", "B3", "D4", "I2(5)", "G(3,1,2)", "H3"}) {
    CAPTURE(s);
    const NCPoset nc = enumerate_nc(ReflectionGroup::build(s));
    const auto k = kreweras_action(nc);
    const auto c = conjugation_action(nc);
    CHECK(permutation_power(k.generator, 2) == c.generator);
    CHECK(k.declared_order == 2 * c.declared_order);
    CHECK(k.annihilated());
    CHECK(c.annihilated());
  }
}

TEST_CASE("NC^m(W) tuples factor c with additive lengths") {
  for (const char* s : {"A2", "A3", "B2", "B3", "I2(5)", "G(3,1,2)"}) {
    const auto g = ReflectionGroup::build(s);
    const NCPoset nc = enumerate_nc(g);
    const LengthTable len(*g);
    for (unsigned m = 1; m <= 3; ++m) {
      CAPTURE(s);
      CAPTURE(m);
      const NCMTuples t = enumerate_nc_m(nc, m);
      CHECK(t.size() == fuss_catalan(*g, m));
      for (const auto& tuple : t.tuples) {
        REQUIRE(tuple.size() == m + 1);
        GroupElement prod = g->identity();
        unsigned total = 0;
        for (auto i : tuple) {
          prod = prod * nc.element(i);
          total += len(nc.element(i));
        }
        CHECK(prod == g->coxeter_element());
        CHECK(total == g->rank());
        CHECK(t.find(tuple).has_value());
      }
      const auto arm = armstrong_action(nc, t);
      const auto bes = bessis_action(nc, t);
      CHECK(arm.declared_order == m * g->coxeter_number());
      CHECK(bes.declared_order == (m + 1) * g->coxeter_number());
      CHECK(arm.annihilated());
      CHECK(bes.annihilated());
    }
  }
}

TEST_CASE("NC^0 is the single factorization (c)") {
  const NCPoset nc = enumerate_nc(ReflectionGroup::build("A3"));
  const NCMTuples t = enumerate_nc_m(nc, 0);
  CHECK(t.size() == 1);
}

TEST_CASE("enumeration budget") {
  NCOptions tiny;
  tiny.max_elements = 10;
  CHECK_THROWS_AS(enumerate_nc(ReflectionGroup::build("A3"), tiny), SizeError);
}
