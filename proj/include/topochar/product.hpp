#pragma once

#include <compare>
#include <string>
#include <vector>

#include "topochar/complex.hpp"

namespace topochar {

/// A ring variable such as a3 or b12.
struct Variable {
  char prefix = 'a';
  VertexId index = 0;

  std::string name() const { return prefix + std::to_string(index); }
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Squarefree monomial: ascending, duplicate-free variables.
using Monomial = std::vector<Variable>;

/// Divides: every variable of `a` occurs in `b`.
bool divides(const Monomial& a, const Monomial& b);

/**
 * A sum of distinct squarefree monomials with unit coefficients, the ring
 * encoding of a complex. Terms keep their insertion order; that order fixes
 * vertex ids when the polynomial is turned back into a complex.
 */
class MonomialPolynomial {
 public:
  MonomialPolynomial() = default;

  /// Sorts each term. InputError on an empty, repeated-variable or duplicate
  /// term.
  explicit MonomialPolynomial(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// "a1 + a2 + a1*a2"
  std::string to_string() const;

  /// Expanded product, terms ordered by (left term, right term).
  /// InputError if the factors share a variable.
  friend MonomialPolynomial operator*(const MonomialPolynomial& p, const MonomialPolynomial& q);

  friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

 private:
  std::vector<Monomial> terms_;
};

/// One monomial per simplex: vertex i becomes variable <prefix><i>.
MonomialPolynomial ring_from_complex(const Complex& g, char prefix = 'a');

/// Whitney complex of the divisibility graph on the terms; term i is
/// vertex i + 1.
Complex complex_from_ring(const MonomialPolynomial& p);

/// G . H: Whitney complex of the comparability graph of the product order on
/// pairs, (a,b) <= (c,d) iff a in c and b in d. Pair (G[i], H[j]) is vertex
/// i |H| + j + 1.
Complex topological_product(const Complex& g, const Complex& h);

struct RingProduct {
  MonomialPolynomial polynomial;
  Complex complex;
};

/// Same product through the ring: ring_from_complex(G, 'a') times
/// ring_from_complex(H, 'b'), then complex_from_ring. Vertex ids match
/// topological_product.
RingProduct ring_product(const Complex& g, const Complex& h);

}  // namespace topochar
