#include "singpoincare/exact_linalg.hpp"

#include <algorithm>
#include <optional>

#include "singpoincare/errors.hpp"

namespace singpoincare {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto start = s.find_first_not_of(" \t");
  auto stop = s.find_last_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(start, stop - start + 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
  return r;
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.square()) throw MathError(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) throw MathError(ErrorKind::SingularMatrix, "matrix is not invertible");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational pivot = a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) /= pivot;
      inv.at(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw MathError(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c) / a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

IntMatrix SmithForm::diagonal_matrix() const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
  return d;
}

namespace {

// Row/column operations applied simultaneously to the working matrix and the
// accumulated transforms so that left * original * right == work holds throughout.
struct SmithState {
  IntMatrix work, left, right;

  void add_row(std::size_t dst, std::size_t src, const Integer& f) {  // row dst += f * row src
    for (std::size_t j = 0; j < work.cols(); ++j) work.at(dst, j) += f * work.at(src, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left.at(dst, j) += f * left.at(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {  // col dst += f * col src
    for (std::size_t i = 0; i < work.rows(); ++i) work.at(i, dst) += f * work.at(i, src);
    for (std::size_t i = 0; i < right.rows(); ++i) right.at(i, dst) += f * right.at(i, src);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    work.swap_rows(a, b);
    left.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    work.swap_cols(a, b);
    right.swap_cols(a, b);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < work.cols(); ++j) work.at(i, j) = -work.at(i, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left.at(i, j) = -left.at(i, j);
  }
};

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& v = s.work.at(i, j);
          if (v == 0) continue;
          if (!best || abs(v) < abs(s.work.at(best->first, best->second))) best = {i, j};
        }
      if (!best) break;
      if (best->first != t) s.swap_rows(best->first, t);
      if (best->second != t) s.swap_cols(best->second, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.work.at(i, t) == 0) continue;
        s.add_row(i, t, -trunc_div(s.work.at(i, t), s.work.at(t, t)));
        if (s.work.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.work.at(t, j) == 0) continue;
        s.add_col(j, t, -trunc_div(s.work.at(t, j), s.work.at(t, t)));
        if (s.work.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder appeared; re-pivot

      // Divisibility: fold an offending row into row t and retry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), s.work.at(i, j).get_mpz_t(), s.work.at(t, t).get_mpz_t());
          if (r != 0) {
            offender = i;
            break;
          }
        }
      if (!offender) break;
      s.add_row(t, *offender, 1);
    }
    if (s.work.at(t, t) < 0) s.negate_row(t);
  }

  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = s.work.at(i, i);
  out.left = std::move(s.left);
  out.right = std::move(s.right);
  return out;
}

}  // namespace singpoincare
