#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topochar/complex.hpp"
#include "topochar/subset.hpp"
#include "topochar/topology.hpp"

namespace topochar {

/// Ring for characteristics. Overflow raises ResourceError.
using Value = std::int64_t;

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

struct EvalStats {
  std::uint64_t tuples = 0;  ///< m-tuples (or DP transitions) examined
};

/**
 * w_m(A): sum over m-tuples X of members of A whose intersection is nonempty
 * and lies in A, of the product of (-1)^dim x_j.
 *
 * Evaluated by dynamic programming over partial intersections, which costs
 * O(m |G| |A|) lookups instead of |A|^m.
 */
Value characteristic(const SimplexSubset& a, int m, EvalStats* stats = nullptr);
Value characteristic(const Complex& g, int m);

/// Same value by enumerating every tuple in A^m; the global reference path.
Value characteristic_naive(const SimplexSubset& a, int m, EvalStats* stats = nullptr);

/// h: integer function on m-tuples of ambient positions.
class InteractionFunction {
 public:
  using Rule = std::function<Value(const Complex&, std::span<const std::uint32_t>)>;

  InteractionFunction(int arity, Rule rule);

  /// h(X) = w(X).
  static InteractionFunction standard(int arity);
  static InteractionFunction zero(int arity);
  /// 1 on the tuple z, 0 elsewhere.
  static InteractionFunction delta(std::vector<std::uint32_t> z);
  /// values[i_1 n^(m-1) + ... + i_m] for tuples over an n-simplex ambient.
  static InteractionFunction table(int arity, std::size_t n, std::vector<Value> values);

  int arity() const noexcept { return arity_; }
  bool is_standard() const noexcept { return standard_; }
  Value operator()(const Complex& g, std::span<const std::uint32_t> x) const { return rule_(g, x); }

 private:
  int arity_;
  Rule rule_;
  bool standard_ = false;
};

/// w_m^h(A) with m = h.arity().
Value energized_characteristic(const SimplexSubset& a, const InteractionFunction& h);

/// Multi-linear extension: x_j ranges over slot j, the tuple survives when
/// its intersection is nonempty (hence in the ambient). DomainError when the
/// slots have different ambients or no slots are given.
Value multi_characteristic(std::span<const SimplexSubset> slots);

/// g_m(X) = w(X) w_m(U(X)).
Value green(const Complex& g, std::span<const std::uint32_t> x, int m);
Value green(const Complex& g, std::span<const std::uint32_t> x, const InteractionFunction& h);

/// Product of (-1)^dim over the members; 1 for the empty set.
int fermi(const SimplexSubset& a);
int fermi(const Complex& g);

/// (x, g_m(x)) for every simplex x, in canonical order.
std::vector<std::pair<Simplex, Value>> curvature_profile(const Complex& g, int m);

/// Sum over x of w(x) w_m(U(x)) with each star evaluated by full tuple
/// enumeration; cost sum_x |U(x)|^m.
Value gauss_bonnet(const Complex& g, int m, EvalStats* stats = nullptr);

/// Outcome of one identity check. pass is lhs == rhs.
struct EnergyReport {
  std::string suite;
  int m = 0;
  int k = 0;
  Value lhs = 0;
  Value rhs = 0;
  bool pass = false;
  std::size_t n_simplices = 0;
  double elapsed_ms = 0;
};

/// {"suite","m","k","lhs","rhs","pass","n_simplices","elapsed_ms"}
std::string to_json(const EnergyReport& r);

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;

struct SumOptions {
  unsigned threads = 1;  ///< 0 = hardware concurrency
  std::uint64_t budget = kDefaultWorkBudget;
};

/// w_m^h(G) against the sum of g_m(X) over all X in G^k.
EnergyReport energy_sum(const Complex& g, int k, const InteractionFunction& h,
                        const SumOptions& opts = {});
EnergyReport energy_sum(const Complex& g, int m, int k, const SumOptions& opts = {});

/// w_m(G) against the sum of w(X) w_m(B(X)).
EnergyReport energy_ball_sum(const Complex& g, int m, int k, const SumOptions& opts = {});

/// 0 against the sum of w(X) w_m(S(X)).
EnergyReport sphere_sum(const Complex& g, int m, int k, const SumOptions& opts = {});

/// 0 against the sum of w(X) w_m(dual sphere of X).
EnergyReport dual_sphere_sum(const Complex& g, int m, int k, const SumOptions& opts = {});

/// w_m(U|V) + w_m(U&V) against w_m(U) + w_m(V) for open U, V.
EnergyReport valuation_check(const OpenSet& u, const OpenSet& v, int m);

/// Same identity for arbitrary subsets; used to exhibit closed-set failures.
EnergyReport valuation_identity(const SimplexSubset& a, const SimplexSubset& b, int m);

/// w_m(B(X)) against w_m(U(X)) - (-1)^m w_m(S(X)).
EnergyReport local_valuation_check(const Complex& g, std::span<const std::uint32_t> x, int m);

}  // namespace topochar
