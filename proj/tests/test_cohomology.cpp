#include <doctest.h>

#include "support.hpp"
#include "topochar/cohomology.hpp"
#include "topochar/errors.hpp"
#include "topochar/topology.hpp"

using namespace topochar;

TEST_SUITE("cohomology") {

TEST_CASE("balls, spheres and cycles") {
  const Complex tet = simplex_complex(4);
  CHECK(betti(tet).b == std::vector<std::size_t>{1, 0, 0, 0});
  const SimplexSubset open_tet = SimplexSubset::of(tet, std::vector<Simplex>{Simplex{1, 2, 3, 4}});
  CHECK(betti(CochainSupport(open_tet)).b == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(betti(cycle(4)).b == std::vector<std::size_t>{1, 1});
  CHECK(betti(octahedron()).b == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti(CochainSupport(star(tet, Simplex{1}))).b == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(betti(Complex()).b.empty());
}

TEST_CASE("locally maximal simplices") {
  for (const Complex& g : testing::corpus(10))
    for (const Simplex& x : facets(g)) {
      const BettiVector b = betti(CochainSupport(star(g, x)));
      std::vector<std::size_t> e(x.size(), 0);
      e.back() = 1;
      CHECK(b.b == e);
    }
}

TEST_CASE("betti numbers agree with the oracle") {
  SplitMix64 rng(17);
  for (const Complex& g : testing::corpus(20)) {
    CHECK(betti(g).b == oracle::betti(oracle::family(g)));
    const SimplexSubset u = random_open_set(g, rng);
    const BettiVector b = betti(CochainSupport(u));
    std::vector<std::size_t> expect = oracle::betti(testing::family(u));
    std::vector<std::size_t> got = b.b;
    while (!got.empty() && got.back() == 0 && got.size() > expect.size()) got.pop_back();
    CHECK(got == expect);
    CHECK(b.euler() == characteristic(u, 1));
    CHECK(relative_betti(u) == b);
  }
}

TEST_CASE("coboundary squares to zero") {
  SplitMix64 rng(2);
  for (const Complex& g : testing::corpus(10)) {
    const CochainSupport closed(SimplexSubset::all(g));
    const CochainSupport open(random_open_set(g, rng));
    for (const CochainSupport* s : {&closed, &open})
      for (int i = 0; i + 1 < s->dimension(); ++i) {
        const IntMatrix dd = coboundary(*s, i + 1) * coboundary(*s, i);
        CHECK(dd.isZero());
      }
  }
}

TEST_CASE("incidence signs") {
  CHECK(incidence_sign(Simplex{1, 2, 3}, Simplex{2, 3}) == 1);
  CHECK(incidence_sign(Simplex{1, 2, 3}, Simplex{1, 3}) == -1);
  CHECK(incidence_sign(Simplex{1, 2, 3}, Simplex{1, 2}) == 1);
  CHECK(incidence_sign(Simplex{1, 2, 3}, Simplex{1}) == 0);
}

TEST_CASE("supports must be open or closed") {
  const Complex g = path3();
  const auto odd = SimplexSubset::of(g, std::vector<Simplex>{Simplex{1}, Simplex{2, 3}});
  CHECK_THROWS_AS(CochainSupport{odd}, DomainError);
  CHECK_THROWS_AS(relative_betti(SimplexSubset::of(g, std::vector<Simplex>{Simplex{1}})), DomainError);
}

}  // TEST_SUITE
