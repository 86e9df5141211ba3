#include "topochar/product.hpp"

#include <algorithm>
#include <set>

#include "topochar/errors.hpp"

namespace topochar {

bool divides(const Monomial& a, const Monomial& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

MonomialPolynomial::MonomialPolynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  std::set<Monomial> seen;
  for (Monomial& t : terms_) {
    if (t.empty()) throw InputError("empty monomial");
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw InputError("monomial is not squarefree");
    if (!seen.insert(t).second) throw InputError("duplicate monomial");
  }
}

std::string MonomialPolynomial::to_string() const {
  std::string out;
  for (const Monomial& t : terms_) {
    if (!out.empty()) out += " + ";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += '*';
      out += t[i].name();
    }
  }
  return out.empty() ? "0" : out;
}

MonomialPolynomial operator*(const MonomialPolynomial& p, const MonomialPolynomial& q) {
  std::vector<Monomial> out;
  out.reserve(p.size() * q.size());
  for (const Monomial& s : p.terms_) {
    for (const Monomial& t : q.terms_) {
      Monomial st;
      std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(st));
      if (st.size() != s.size() + t.size()) throw InputError("factors share a variable");
      out.push_back(std::move(st));
    }
  }
  return MonomialPolynomial(std::move(out));
}

MonomialPolynomial ring_from_complex(const Complex& g, char prefix) {
  std::vector<Monomial> terms;
  terms.reserve(g.size());
  for (const Simplex& x : g) {
    Monomial t;
    for (VertexId v : x.vertices()) t.push_back({prefix, v});
    terms.push_back(std::move(t));
  }
  return MonomialPolynomial(std::move(terms));
}

Complex complex_from_ring(const MonomialPolynomial& p) {
  const auto& terms = p.terms();
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    vertices.push_back(static_cast<VertexId>(i + 1));
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (divides(terms[i], terms[j]) || divides(terms[j], terms[i]))
        edges.emplace_back(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
  }
  return whitney(vertices, edges);
}

Complex topological_product(const Complex& g, const Complex& h) {
  const auto nh = static_cast<VertexId>(h.size());
  auto id = [nh](std::uint32_t i, std::uint32_t j) { return i * nh + j + 1; };
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    for (std::uint32_t b = 0; b < h.size(); ++b) {
      vertices.push_back(id(a, b));
      // Pairs above (a,b) in the product order.
      for (std::uint32_t c : g.cofaces(a))
        for (std::uint32_t d : h.cofaces(b))
          if (c != a || d != b) edges.emplace_back(id(a, b), id(c, d));
    }
  }
  return whitney(vertices, edges);
}

RingProduct ring_product(const Complex& g, const Complex& h) {
  MonomialPolynomial p = ring_from_complex(g, 'a') * ring_from_complex(h, 'b');
  Complex c = complex_from_ring(p);
  return {std::move(p), std::move(c)};
}

}  // namespace topochar
