#include "topochar/exact_linalg.hpp"

#include <limits>
#include <stdexcept>

#include "topochar/errors.hpp"

namespace topochar {

std::int64_t Integer::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return v_.convert_to<std::int64_t>();
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {}

Integer Rational::numerator() const { return Integer(boost::multiprecision::numerator(v_)); }

Integer Rational::denominator() const { return Integer(boost::multiprecision::denominator(v_)); }

namespace {

void check_size(const Complex& g, std::size_t cap) {
  if (g.empty()) throw DomainError("matrix of the void complex");
  if (g.size() > cap) throw DomainError("complex exceeds the matrix size cap");
}

void check_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw DomainError("matrix is not square");
}

}  // namespace

IntMatrix connection_matrix(const Complex& g, std::size_t cap) {
  check_size(g, cap);
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      l(i, j) = g.packed().meets(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1 : 0;
  return l;
}

IntMatrix connection_matrix_from_cores(const Complex& g, std::size_t cap) {
  check_size(g, cap);
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      auto a = g.faces(static_cast<std::uint32_t>(i));
      auto b = g.faces(static_cast<std::uint32_t>(j));
      long long chi = 0;
      // Both face lists are ascending positions.
      for (auto p = a.begin(), q = b.begin(); p != a.end() && q != b.end();) {
        if (*p < *q) {
          ++p;
        } else if (*q < *p) {
          ++q;
        } else {
          chi += g[*p].sign();
          ++p;
          ++q;
        }
      }
      l(i, j) = chi;
    }
  }
  return l;
}

IntMatrix green_matrix(const Complex& g, std::size_t cap) {
  check_size(g, cap);
  const std::size_t n = g.size();
  // U(x) and U(y) meet in U(x u y) when the union is a simplex, else nowhere.
  std::vector<long long> star_chi(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t c : g.cofaces(i)) star_chi[i] += g[c].sign();
  const PackedSimplices& p = g.packed();
  std::vector<std::uint64_t> mask(p.stride());
  IntMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t w = 0; w < mask.size(); ++w) mask[w] = p.row(i)[w] | p.row(j)[w];
      auto u = p.find(mask.data());
      const long long chi = u ? star_chi[*u] : 0;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g[i].sign() * g[j].sign() * chi;
    }
  }
  return out;
}

namespace detail {

Integer det(IntMatrix a) {
  check_square(a.rows(), a.cols());
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

RationalMatrix inverse(RationalMatrix a) {
  check_square(a.rows(), a.cols());
  const Eigen::Index n = a.rows();
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularError("matrix is singular");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rational d = a(k, k);
    a.row(k) /= d;
    inv.row(k) /= d;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

std::size_t rank(IntMatrix a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
std::vector<Integer> char_poly(const IntMatrix& a) {
  check_square(a.rows(), a.cols());
  const Eigen::Index n = a.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    const IntMatrix am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Integer(k);
  }
  return c;
}

}  // namespace detail

IntMatrix integer_inverse(const IntMatrix& m) {
  const Integer d = detail::det(m);
  if (d != Integer(1) && d != Integer(-1)) throw SingularError("determinant is not a unit");
  const RationalMatrix inv = detail::inverse(m.cast<Rational>());
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!inv(i, j).is_integer()) throw SingularError("inverse is not integral");
      out(i, j) = inv(i, j).numerator();
    }
  return out;
}

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).to_int64());
  return out;
}

}  // namespace topochar
