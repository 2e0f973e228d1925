#include "planeprover/kernel/linear.hpp"

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace planeprover::kernel {
namespace {

// Splits a numerator that is affine in `unknowns` into coefficients and the
// constant part.
std::vector<Poly> affine_row(const Poly& p, const std::vector<Var>& unknowns) {
  std::uint32_t mask = 0;
  for (Var v : unknowns) mask |= 1u << v.id;
  std::vector<std::vector<Term>> parts(unknowns.size() + 1);
  for (const Term& t : p.terms()) {
    unsigned deg = 0;
    std::size_t slot = unknowns.size();
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      unsigned e = t.mono[unknowns[j]];
      if (e > 0) {
        deg += e;
        slot = j;
      }
    }
    if (deg > 1) throw Error(Errc::nonlinear_system, "equation is not linear in the unknowns");
    parts[slot].push_back(Term{slot == unknowns.size() ? t.mono : t.mono.without(unknowns[slot]), t.coeff});
  }
  std::vector<Poly> row;
  row.reserve(parts.size());
  for (auto& terms : parts) row.push_back(Poly::from_terms(p.session(), std::move(terms)));
  return row;
}

}  // namespace

LinearSolution solve_linear(const std::vector<Scalar>& equations, const std::vector<Var>& unknowns) {
  const std::size_t n = unknowns.size();
  SessionPtr session;
  for (const Scalar& eq : equations) session = common_session(session, eq.session());
  std::vector<std::vector<Scalar>> rows;
  for (const Scalar& eq : equations) {
    if (eq.is_zero()) continue;
    std::vector<Poly> parts = affine_row(eq.num(), unknowns);
    std::vector<Scalar> row;
    row.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(parts[j]);
    row.emplace_back(-parts[n]);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // Generic semantics: any entry that is not identically zero may pivot;
    // prefer the most compact one.
    std::size_t best = rows.size();
    for (std::size_t k = r; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      if (best == rows.size() ||
          rows[k][c].num().size() + rows[k][c].den().size() < rows[best][c].num().size() + rows[best][c].den().size()) {
        best = k;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j <= n; ++j) rows[r][j] = rows[r][j] * inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      check_deadline();
      const Scalar f = rows[k][c];
      for (std::size_t j = c; j <= n; ++j) {
        if (!rows[r][j].is_zero()) rows[k][j] = rows[k][j] - f * rows[r][j];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution out;
  for (std::size_t k = r; k < rows.size(); ++k) {
    if (!rows[k][n].is_zero()) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  // Reduced row echelon form: pivot unknown = rhs - sum over free unknowns.
  for (std::size_t k = 0; k < r; ++k) {
    Scalar value = rows[k][n];
    for (std::size_t j = pivot_col[k] + 1; j < n; ++j) {
      if (rows[k][j].is_zero()) continue;
      value = value - rows[k][j] * Scalar::variable(session, unknowns[j]);
    }
    out.bindings.emplace_back(unknowns[pivot_col[k]], value);
  }
  out.status = r == n ? SolveStatus::unique : SolveStatus::underdetermined;
  return out;
}

namespace {

template <typename T, typename Divide>
T bareiss(std::vector<std::vector<T>> a, const T& one, const T& zero, Divide divide) {
  const std::size_t n = a.size();
  T previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == zero) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == zero) ++swap;
      if (swap == n) return zero;
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        check_deadline();
        a[i][j] = divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous);
      }
    }
    previous = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? zero - det : det;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(Errc::shape, "determinant of a non-square matrix");
  }
  if (n == 0) return Scalar(1);
  SessionPtr session;
  bool polynomial = true;
  for (const auto& row : m) {
    for (const Scalar& e : row) {
      session = common_session(session, e.session());
      polynomial &= e.is_polynomial() && !e.has_generators();
    }
  }
  if (polynomial) {
    std::vector<std::vector<Poly>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const Scalar& e : m[i]) a[i].push_back(e.num().with_session(session));
    }
    Poly det = bareiss(std::move(a), Poly(1, session), Poly(0, session), [](const Poly& p, const Poly& q) {
      auto r = try_divide(p, q);
      if (!r) throw Error(Errc::internal_inconsistency, "Bareiss step was not exact");
      return *r;
    });
    return Scalar(det);
  }
  return bareiss(m, Scalar(mpq_class(1), session), Scalar(mpq_class(0), session),
                 [](const Scalar& p, const Scalar& q) { return p / q; });
}

}  // namespace planeprover::kernel
