#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "topochar/characteristics.hpp"
#include "topochar/errors.hpp"
#include "topochar/topology.hpp"

using namespace topochar;

namespace {

InteractionFunction random_table(const Complex& g, int arity, SplitMix64& rng) {
  std::size_t cells = 1;
  for (int j = 0; j < arity; ++j) cells *= g.size();
  std::vector<Value> values(cells);
  for (Value& v : values) v = static_cast<Value>(rng.below(7)) - 3;
  return InteractionFunction::table(arity, g.size(), std::move(values));
}

// Reference for the energized sum, over plain tuples.
Value energized_oracle(const SimplexSubset& a, const InteractionFunction& h) {
  const auto idx = a.indices();
  const Complex& g = a.ambient();
  Value total = 0;
  std::vector<std::size_t> pos(static_cast<std::size_t>(h.arity()), 0);
  if (idx.empty()) return 0;
  for (;;) {
    std::vector<std::uint32_t> x;
    oracle::Set cut(g[idx[pos[0]]].vertices().begin(), g[idx[pos[0]]].vertices().end());
    for (std::size_t p : pos) {
      x.push_back(idx[p]);
      cut = oracle::meet(cut, oracle::Set(g[idx[p]].vertices().begin(), g[idx[p]].vertices().end()));
    }
    if (!cut.empty() && a.contains(Simplex(cut))) total += h(g, x);
    std::size_t i = pos.size();
    while (i > 0 && pos[i - 1] + 1 == idx.size()) pos[--i] = 0;
    if (i == 0) break;
    ++pos[i - 1];
  }
  return total;
}

}  // namespace

TEST_SUITE("characteristics") {

TEST_CASE("known values") {
  const Complex oct = octahedron();
  for (int m = 1; m <= 3; ++m) CHECK(characteristic(oct, m) == 2);
  CHECK(characteristic(path3(), 1) == 1);
  CHECK(characteristic(path3(), 2) == -1);
  CHECK(characteristic(path3(), 3) == 1);
  const Complex k2 = closure({Simplex{1, 2}});
  CHECK(characteristic(k2, 2) == -1);
  CHECK(characteristic(Complex(), 1) == 0);
  CHECK(characteristic(cycle(4), 2) == 0);
  CHECK(characteristic(star(oct, Simplex{1}), 2) == 1);
  CHECK_THROWS_AS(characteristic(k2, 0), InputError);
}

TEST_CASE("dynamic programme, naive tuples and oracle agree on arbitrary subsets") {
  SplitMix64 rng(99);
  for (const Complex& g : testing::corpus(15)) {
    for (int t = 0; t < 4; ++t) {
      const SimplexSubset a = testing::random_subset(g, rng);
      const auto fam = testing::family(a);
      for (int m = 1; m <= 3; ++m) {
        const Value expect = oracle::w_m(fam, m);
        CHECK(characteristic(a, m) == expect);
        CHECK(characteristic_naive(a, m) == expect);
      }
    }
  }
}

TEST_CASE("local evaluation equals the global sum") {
  for (const Complex& g : testing::corpus(20))
    for (int m = 1; m <= 3; ++m) {
      EvalStats s;
      CHECK(gauss_bonnet(g, m, &s) == characteristic(g, m));
      Value total = 0;
      for (const auto& [x, v] : curvature_profile(g, m)) total += v;
      CHECK(total == characteristic(g, m));
    }
}

TEST_CASE("curvature of the octahedron") {
  for (int m = 1; m <= 2; ++m)
    for (const auto& [x, v] : curvature_profile(octahedron(), m)) CHECK(v == x.sign());
  const auto one = curvature_profile(closure({Simplex{1}}), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].second == 1);
}

TEST_CASE("green values and Fermi characteristic") {
  const Complex k2 = closure({Simplex{1, 2}});
  const std::uint32_t a[] = {0}, b[] = {1}, c[] = {2};
  CHECK(green(k2, a, 1) == 0);
  CHECK(green(k2, b, 1) == 0);
  CHECK(green(k2, c, 1) == 1);
  CHECK(fermi(k2) == -1);
  CHECK(fermi(Complex()) == 1);
  CHECK(fermi(octahedron()) == 1);
}

TEST_CASE("energized characteristic") {
  SplitMix64 rng(4);
  for (const Complex& g : testing::corpus(6)) {
    const SimplexSubset all = SimplexSubset::all(g);
    for (int arity = 1; arity <= 2; ++arity) {
      const InteractionFunction h = random_table(g, arity, rng);
      CHECK(energized_characteristic(all, h) == energized_oracle(all, h));
      const SimplexSubset a = testing::random_subset(g, rng);
      CHECK(energized_characteristic(a, h) == energized_oracle(a, h));
      CHECK(energized_characteristic(a, InteractionFunction::zero(arity)) == 0);
      CHECK(energized_characteristic(a, InteractionFunction::standard(arity)) == characteristic(a, arity));
    }
  }
  const Complex k2 = closure({Simplex{1, 2}});
  CHECK(energized_characteristic(SimplexSubset::all(k2), InteractionFunction::delta({0, 2})) == 1);
  CHECK(energized_characteristic(SimplexSubset::all(k2), InteractionFunction::delta({0, 1})) == 0);
  CHECK_THROWS_AS(InteractionFunction::table(2, 3, {1, 2}), InputError);
}

TEST_CASE("multi-slot characteristic") {
  const Complex k2 = closure({Simplex{1, 2}});
  const SimplexSubset one = SimplexSubset::of(k2, std::vector<Simplex>{Simplex{1}});
  std::vector<SimplexSubset> slots{one, SimplexSubset::all(k2)};
  CHECK(multi_characteristic(slots) == 0);
  SplitMix64 rng(31);
  for (const Complex& g : testing::corpus(10)) {
    const SimplexSubset all = SimplexSubset::all(g);
    std::vector<SimplexSubset> full{all, all};
    CHECK(multi_characteristic(full) == characteristic(g, 2));
    std::vector<SimplexSubset> with_empty{all, SimplexSubset::none(g), all};
    CHECK(multi_characteristic(with_empty) == 0);
    // linear in each slot under union and intersection
    const SimplexSubset a = testing::random_subset(g, rng);
    const SimplexSubset b = testing::random_subset(g, rng);
    const SimplexSubset c = testing::random_subset(g, rng);
    auto value = [&](const SimplexSubset& s) {
      std::vector<SimplexSubset> v{c, s, c};
      return multi_characteristic(v);
    };
    CHECK(value(a) + value(b) == value(a | b) + value(a & b));
  }
  std::vector<SimplexSubset> mixed{SimplexSubset::all(k2), SimplexSubset::all(path3())};
  CHECK_THROWS_AS(multi_characteristic(mixed), DomainError);
}

TEST_CASE("energy identity on small complexes") {
  for (const Complex& g : testing::corpus(5))
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 2; ++k) {
        const EnergyReport r = energy_sum(g, m, k);
        CHECK(r.pass);
        CHECK(r.lhs == characteristic(g, m));
      }
  CHECK(energy_sum(closure({Simplex{1, 2}}), 1, 2).rhs == 1);
}

TEST_CASE("energy identity with arbitrary interaction") {
  SplitMix64 rng(77);
  for (const Complex& g : testing::corpus(4))
    for (int arity = 1; arity <= 2; ++arity)
      for (int k = 1; k <= 2; ++k) {
        const EnergyReport r = energy_sum(g, k, random_table(g, arity, rng));
        CHECK(r.pass);
      }
}

TEST_CASE("green matrix of a delta interaction is an outer product") {
  for (const Complex& g : testing::corpus(3)) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.size());
    const std::vector<std::uint32_t> z{0, n - 1};
    const InteractionFunction h = InteractionFunction::delta(z);
    const auto cut = intersection(g[z[0]], g[z[1]]);
    std::vector<Value> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = cut && g[i].is_subset_of(*cut) ? g[i].sign() : 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t x[] = {i, j};
        CHECK(green(g, x, h) == v[i] * v[j]);
      }
  }
}

TEST_CASE("truncated geometric series of energies") {
  const Complex g = testing::corpus(1)[0];
  for (int m = 1; m <= 2; ++m) {
    constexpr int kTop = 3;
    Value weighted = 0;
    for (int k = 1; k <= kTop; ++k) weighted += (Value{1} << (kTop - k)) * energy_sum(g, m, k).rhs;
    CHECK(weighted == ((Value{1} << kTop) - 1) * characteristic(g, m));
  }
}

TEST_CASE("sphere, ball and dual sphere sums vanish") {
  for (const Complex& g : testing::corpus(5))
    for (int m = 1; m <= 2; ++m)
      for (int k = 1; k <= 2; ++k) {
        CHECK(sphere_sum(g, m, k).pass);
        CHECK(dual_sphere_sum(g, m, k).pass);
        CHECK(energy_ball_sum(g, m, k).pass);
      }
  for (int m = 1; m <= 2; ++m) {
    CHECK(dual_sphere_sum(closure({Simplex{1, 2}}), m, 2).rhs == 0);
    CHECK(dual_sphere_sum(octahedron(), m, 2).rhs == 0);
    CHECK(dual_sphere_sum(octahedron(), m, 1).rhs == sphere_sum(octahedron(), m, 1).rhs);
  }
}

TEST_CASE("thread count does not change results") {
  const Complex g = testing::corpus(2)[1];
  SumOptions one{1, kDefaultWorkBudget};
  SumOptions many{3, kDefaultWorkBudget};
  for (int k = 1; k <= 3; ++k) {
    CHECK(energy_sum(g, 2, k, one).rhs == energy_sum(g, 2, k, many).rhs);
    CHECK(sphere_sum(g, 2, k, one).rhs == sphere_sum(g, 2, k, many).rhs);
  }
}

TEST_CASE("budget and overflow guards") {
  SumOptions tight{1, 1000};
  try {
    energy_sum(octahedron(), 2, 3, tight);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.partial() == 0);
  }
  const Value big = std::numeric_limits<Value>::max();
  CHECK_THROWS_AS(checked_add(big, 1), ResourceError);
  CHECK_THROWS_AS(checked_mul(big, 2), ResourceError);
  CHECK(checked_mul(-3, 4) == -12);
}

TEST_CASE("valuation on open sets") {
  SplitMix64 rng(3);
  for (const Complex& g : testing::corpus(10))
    for (int t = 0; t < 20; ++t) {
      const OpenSet u(random_open_set(g, rng));
      const OpenSet v(random_open_set(g, rng));
      for (int m = 1; m <= 3; ++m) CHECK(valuation_check(u, v, m).pass);
    }
  const Complex c4 = cycle(4);
  CHECK(valuation_check(star(c4, Simplex{1}), star(c4, Simplex{3}), 2).pass);
}

TEST_CASE("valuation fails for the closed path pieces") {
  const Complex g = path3();
  const auto a = SimplexSubset::of(g, std::vector<Simplex>{Simplex{1}, Simplex{2}, Simplex{1, 2}});
  const auto b = SimplexSubset::of(g, std::vector<Simplex>{Simplex{2}, Simplex{3}, Simplex{2, 3}});
  CHECK(characteristic(a, 2) == -1);
  CHECK(characteristic(b, 2) == -1);
  const EnergyReport r = valuation_identity(a, b, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == -2);
}

TEST_CASE("local valuation") {
  const Complex c4 = cycle(4);
  const Configuration v = configuration(c4, {Simplex{1}});
  auto triple = [&](const Complex& g, const Configuration& x, int m) {
    return std::array<Value, 3>{characteristic(ball_set(g, x), m),
                                characteristic(star_intersection(g, x).subset(), m),
                                characteristic(sphere_set(g, x), m)};
  };
  CHECK(triple(c4, v, 1) == std::array<Value, 3>{1, -1, 2});
  CHECK(triple(c4, v, 2) == std::array<Value, 3>{-1, 1, 2});
  CHECK(triple(c4, v, 3) == std::array<Value, 3>{1, -1, 2});
  const Complex oct = octahedron();
  for (int m = 1; m <= 3; ++m) {
    CHECK(triple(oct, configuration(oct, {Simplex{1}}), m) == std::array<Value, 3>{1, 1, 0});
    CHECK(local_valuation_check(c4, v, m).pass);
  }
  for (const Complex& g : testing::corpus(5))
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      const std::uint32_t x[] = {i};
      for (int m = 1; m <= 3; ++m) CHECK(local_valuation_check(g, x, m).pass);
    }
}

TEST_CASE("report serialisation") {
  EnergyReport r{"energy", 2, 1, 3, 3, true, 10, 0.5};
  CHECK(to_json(r) ==
        R"({"suite":"energy","m":2,"k":1,"lhs":3,"rhs":3,"pass":true,"n_simplices":10,"elapsed_ms":0.5})");
  CHECK(nlohmann::json::parse(to_json(energy_sum(path3(), 1, 1))).is_object());
}

}  // TEST_SUITE
