#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ncsieve/errors.hpp"
#include "ncsieve/linalg.hpp"
#include "ncsieve/noncrossing.hpp"
#include "ncsieve/restricted_group.hpp"

using namespace ncsieve;

namespace {

std::vector<unsigned> divisors(unsigned h) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= h; ++d)
    if (h % d == 0) out.push_back(d);
  return out;
}

std::set<GroupElement> centralizer_by_search(const ReflectionGroup& g, const GroupElement& x) {
  std::set<GroupElement> out;
  for (const auto& w : g.elements())
    if (w * x == x * w) out.insert(w);
  return out;
}

std::set<GroupElement> closure(const std::vector<GroupElement>& gens, const GroupElement& e) {
  std::set<GroupElement> seen{e};
  std::vector<GroupElement> frontier{e};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& w : frontier)
      for (const auto& s : gens)
        if (auto x = w * s; seen.insert(x).second) next.push_back(x);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("centralizers match a direct commutation search") {
  for (const char* s : {"A3", "A4", "B3", "D4", "I2(6)", "G(3,1,2)", "G(4,4,3)", "H3"}) {
    const auto g = ReflectionGroup::build(s);
    for (unsigned d : divisors(g->coxeter_number())) {
      CAPTURE(s);
      CAPTURE(d);
      const auto r = RestrictedGroup::build(g, d);
      const auto direct = centralizer_by_search(*g, r->central_power());
      CHECK(std::set<GroupElement>(r->elements().begin(), r->elements().end()) == direct);
      std::uint64_t expected = 1;
      unsigned dim = 0;
      for (unsigned deg : g->degrees())
        if (deg % d == 0) {
          expected *= deg;
          ++dim;
        }
      CHECK(r->elements().size() == expected);
      CHECK(r->rank() == dim);
      CHECK(closure(r->reflections(), g->identity()) == direct);
      CHECK(r->reflections_generate());
    }
  }
}

TEST_CASE("restricted fixed spaces agree with exact rank on V'") {
  for (const char* s : {"A3", "B3", "D4", "G(3,1,2)", "H3"}) {
    const auto g = ReflectionGroup::build(s);
    for (unsigned d : divisors(g->coxeter_number())) {
      CAPTURE(s);
      CAPTURE(d);
      const auto r = RestrictedGroup::build(g, d);
      for (const auto& w : r->elements()) {
        const CycloMatrix m = r->as_matrix(w) - identity_matrix<CycloElem>(r->rank());
        CHECK(r->fixed_space_dim(w) == r->rank() - static_cast<unsigned>(ncsieve::rank(m)));
      }
    }
  }
}

TEST_CASE("NC(W) meets W' in NC(W')") {
  for (const char* s : {"A2", "A3", "A5", "B2", "B3", "B4", "D4", "D5", "I2(8)", "G(3,1,3)", "G(4,4,3)", "H3", "F4"}) {
    const auto g = ReflectionGroup::build(s);
    const NCPoset nc = enumerate_nc(g);
    for (unsigned d : divisors(g->coxeter_number())) {
      CAPTURE(s);
      CAPTURE(d);
      const auto r = RestrictedGroup::build(g, d);
      std::unordered_set<GroupElement> meet;
      for (const auto& w : nc.elements())
        if (r->contains(w)) meet.insert(w);
      const NCPoset nc_r = enumerate_nc(r);
      CHECK(std::unordered_set<GroupElement>(nc_r.elements().begin(), nc_r.elements().end()) == meet);
    }
  }
}

TEST_CASE("restriction at d = h is the cyclic group of c") {
  const auto g = ReflectionGroup::build("B2");
  const auto r = RestrictedGroup::build(g, 4);
  CHECK(r->elements().size() == 4);
  CHECK(r->rank() == 1);
  CHECK(enumerate_nc(r).size() == 2);
  CHECK(RestrictedGroup::build(g, 1)->form() == RestrictedGroup::Form::Identity);
  CHECK_THROWS_AS(RestrictedGroup::build(g, 3), DomainError);
}
