#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "topochar/complex.hpp"
#include "topochar/errors.hpp"
#include "topochar/generators.hpp"
#include "topochar/io.hpp"
#include "topochar/subset.hpp"

using namespace topochar;

TEST_SUITE("complex_core") {

TEST_CASE("simplex normalises and orders") {
  Simplex x{3, 1, 2};
  CHECK(x.to_string() == "{1,2,3}");
  CHECK(x.dim() == 2);
  CHECK(x.sign() == 1);
  CHECK(Simplex{1, 2}.sign() == -1);
  CHECK(Simplex{2} < Simplex{1, 2});
  CHECK(Simplex{1, 3} < Simplex{2, 3});
  CHECK(Simplex{1, 2}.is_subset_of(x));
  CHECK_FALSE(Simplex{1, 4}.is_subset_of(x));
  CHECK(Simplex{1, 4}.meets(x));
  CHECK_FALSE(Simplex{4, 5}.meets(x));
  CHECK_FALSE(intersection(Simplex{1}, Simplex{2}).has_value());
  CHECK(*intersection(Simplex{1, 2}, Simplex{2, 3}) == Simplex{2});
  CHECK(set_union(Simplex{1}, Simplex{3}) == Simplex{1, 3});
  CHECK(without_vertex(x, 1) == Simplex{1, 3});
  CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), InputError);
  CHECK_THROWS_AS((Simplex{1, 1}), InputError);
}

TEST_CASE("closure and canonical order") {
  const Complex k2 = closure({Simplex{1, 2}});
  REQUIRE(k2.size() == 3);
  CHECK(k2[0] == Simplex{1});
  CHECK(k2[1] == Simplex{2});
  CHECK(k2[2] == Simplex{1, 2});
  CHECK(k2.dimension() == 1);
  CHECK(k2.index_of(Simplex{1, 2}) == 2u);
  CHECK_FALSE(k2.contains(Simplex{3}));
  CHECK(f_vector(simplex_complex(4)).counts == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(Complex().empty());
  CHECK(Complex().dimension() == -1);
  CHECK(closure(std::vector<Simplex>{}).empty());
}

TEST_CASE("cofaces and faces are consistent") {
  const Complex g = random_whitney(8, 16, 3);
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    for (std::uint32_t c : g.cofaces(i)) CHECK(g[i].is_subset_of(g[c]));
    for (std::uint32_t f : g.faces(i)) CHECK(g[f].is_subset_of(g[i]));
    std::size_t count = 0;
    for (const auto& y : g) count += g[i].is_subset_of(y);
    CHECK(count == g.cofaces(i).size());
  }
}

TEST_CASE("from_simplices validates") {
  CHECK_THROWS_AS(Complex::from_simplices({Simplex{1, 2}}), InputError);
  const Complex g = Complex::from_simplices({Simplex{1, 2}, Simplex{2}, Simplex{1}});
  CHECK(g == closure({Simplex{1, 2}}));
  CHECK(is_complex(std::vector<Simplex>{Simplex{1}, Simplex{2}, Simplex{1, 2}}));
  CHECK_FALSE(is_complex(std::vector<Simplex>{Simplex{1, 2}, Simplex{1}}));
  CHECK(is_complex(std::vector<Simplex>{}));
}

TEST_CASE("whitney agrees with brute-force clique enumeration") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(10));
    std::vector<Edge> edges;
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = a + 1; b <= n; ++b)
        if (rng.below(3) == 0) edges.emplace_back(a, b);
    std::vector<VertexId> vs;
    for (VertexId v = 1; v <= n; ++v) vs.push_back(v);
    const Complex g = whitney(vs, edges);
    CHECK(oracle::family(g) == oracle::whitney(n, edges));
  }
}

TEST_CASE("whitney rejects bad graphs and respects the budget") {
  std::vector<VertexId> vs{1, 2};
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> stray{{1, 3}};
  CHECK_THROWS_AS(whitney(vs, loop), InputError);
  CHECK_THROWS_AS(whitney(vs, stray), InputError);
  std::vector<VertexId> ten;
  std::vector<Edge> all;
  for (VertexId a = 1; a <= 10; ++a) {
    ten.push_back(a);
    for (VertexId b = a + 1; b <= 10; ++b) all.emplace_back(a, b);
  }
  CHECK_THROWS_AS(whitney(ten, all, 100), ResourceError);
  CHECK(whitney(ten, all).size() == 1023);
}

TEST_CASE("f-vector, euler sum and facets") {
  const Complex oct = octahedron();
  CHECK(f_vector(oct).counts == std::vector<std::size_t>{6, 12, 8});
  CHECK(f_vector(oct).alternating_sum() == 2);
  CHECK(f_vector(oct).total() == 26);
  CHECK(f_vector(cycle(4)).counts == std::vector<std::size_t>{4, 4});
  CHECK(facets(path3()) == std::vector<Simplex>{Simplex{1, 2}, Simplex{2, 3}});
  CHECK(facets(closure({Simplex{1, 2}, Simplex{3}})) == std::vector<Simplex>{Simplex{3}, Simplex{1, 2}});
  CHECK(f_vector(Complex()).counts.empty());
}

TEST_CASE("join") {
  const Complex s0 = closure({Simplex{1}, Simplex{2}});
  const Complex s0b = closure({Simplex{3}, Simplex{4}});
  const Complex c4 = join(s0, s0b);
  CHECK(f_vector(c4).counts == std::vector<std::size_t>{4, 4});
  const Complex oct = join(c4, closure({Simplex{5}, Simplex{6}}));
  CHECK(oct == octahedron());
  CHECK(join(Complex(), c4) == c4);
  CHECK(join(c4, Complex()) == c4);
  CHECK_THROWS_AS(join(s0, s0), InputError);
  const Complex shifted = join(s0, s0, JoinLabels::kOffset);
  CHECK(f_vector(shifted).counts == std::vector<std::size_t>{4, 4});
}

TEST_CASE("relabel") {
  const Complex g = relabel(path3(), [](VertexId v) { return 10 * v; });
  CHECK(g.contains(Simplex{10, 20}));
  CHECK_THROWS_AS(relabel(path3(), [](VertexId) { return VertexId{1}; }), InputError);
}

TEST_CASE("subset algebra") {
  const Complex g = path3();
  const auto a = SimplexSubset::of(g, std::vector<Simplex>{Simplex{1}, Simplex{1, 2}});
  const auto b = SimplexSubset::of(g, std::vector<Simplex>{Simplex{1, 2}, Simplex{2, 3}});
  CHECK((a | b).size() == 3);
  CHECK((a & b).simplices() == std::vector<Simplex>{Simplex{1, 2}});
  CHECK((a - b).simplices() == std::vector<Simplex>{Simplex{1}});
  CHECK(a.complement().size() == 3);
  CHECK(is_open(b));
  CHECK_FALSE(is_closed(b));
  CHECK(closure(b).size() == 5);
  CHECK(boundary_set(b).simplices() == std::vector<Simplex>{Simplex{1}, Simplex{2}, Simplex{3}});
  CHECK(to_complex(closure(a)) == closure({Simplex{1, 2}}));
  CHECK_THROWS_AS(to_complex(b), DomainError);
  CHECK_THROWS_AS(SimplexSubset::of(g, std::vector<Simplex>{Simplex{9}}), DomainError);
  CHECK_THROWS_AS(a | SimplexSubset::all(cycle(4)), DomainError);
}

TEST_CASE("facet format round trip") {
  const Complex g = random_whitney(9, 15, 7);
  const std::string text = facets_text(g);
  CHECK(parse_complex(text) == g);
  CHECK(facets_text(path3()) == "1 2\n2 3\n");
  CHECK(facets_text(Complex()).empty());
}

TEST_CASE("parser") {
  CHECK(parse_complex("# comment\n\n2 1\n3 2\n") == path3());
  CHECK(parse_complex("").empty());
  CHECK(parse_complex("graph\n1 2\n2 3\n") == path3());
  CHECK(parse_complex("graph\n1 2\n2 3\n1 3\n4\n") == closure({Simplex{1, 2, 3}, Simplex{4}}));
  CHECK_THROWS_WITH_AS(parse_complex("1 2\n1 x\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_complex("1 1\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_complex("graph\n1 2 3\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(read_complex("/nonexistent/file"), InputError);
}

}  // TEST_SUITE
