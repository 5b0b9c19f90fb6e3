#include "torichodge/linalg.hpp"

#include <stdexcept>

namespace th {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(static_cast<long>(rows[i][j]));
  return m;
}

namespace {

// Smallest nonzero |entry| in the lower-right block, lowest (row, col) on ties.
bool find_pivot(const IntMatrix& S, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < S.rows(); ++i)
    for (std::size_t j = t; j < S.cols(); ++j) {
      if (S(i, j) == 0) continue;
      Int a = abs(S(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

void add_row(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += q * M(src, j);
}

void add_col(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += q * M(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  SmithForm f{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
  IntMatrix& S = f.S;
  const std::size_t n = std::min(A.rows(), A.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(S, t, pi, pj)) return f;
      S.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < S.rows(); ++i) {
        if (S(i, t) == 0) continue;
        Int q = S(i, t) / S(t, t);
        add_row(S, i, t, -q);
        add_row(f.U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < S.cols(); ++j) {
        if (S(t, j) == 0) continue;
        Int q = S(t, j) / S(t, t);
        add_col(S, j, t, -q);
        add_col(f.V, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | remaining entries.
      bool divides = true;
      for (std::size_t i = t + 1; i < S.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < S.cols(); ++j)
          if (S(i, j) % S(t, t) != 0) {
            add_row(S, t, i, Int(1));
            add_row(f.U, t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < S.cols(); ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < f.U.cols(); ++j) f.U(t, j) = -f.U(t, j);
    }
  }
  return f;
}

RatMatrix rref(const RatMatrix& A, std::vector<std::size_t>* pivots) {
  RatMatrix R = A;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t p = r;
    while (p < R.rows() && R(p, c) == 0) ++p;
    if (p == R.rows()) continue;
    R.swap_rows(r, p);
    Rat inv = 1 / R(r, c);
    for (std::size_t j = c; j < R.cols(); ++j) R(r, j) *= inv;
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r || R(i, c) == 0) continue;
      Rat q = R(i, c);
      for (std::size_t j = c; j < R.cols(); ++j) R(i, j) -= q * R(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return R;
}

RankNullspace rank_and_nullspace(const RatMatrix& A) {
  std::vector<std::size_t> piv;
  RatMatrix R = rref(A, &piv);
  RankNullspace out;
  out.rank = piv.size();
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(A.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -R(k, f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::optional<RatVec> solve_linear(const RatMatrix& A, const RatVec& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  RatMatrix R = rref(aug, &piv);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
  RatVec x(A.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = R(k, A.cols());
  return x;
}

IntMatrix hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i)
        if (H(i, c) != 0 && (best == H.rows() || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == H.rows()) break;
      H.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Int q = H(i, c) / H(r, c);
        add_row(H, i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0)
      for (std::size_t j = 0; j < H.cols(); ++j) H(r, j) = -H(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      if (q != 0) add_row(H, i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, H.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < H.cols(); ++j) out(i, j) = H(i, j);
  return out;
}

IntMatrix kernel_saturation(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  std::size_t r = 0;
  while (r < std::min(A.rows(), A.cols()) && f.S(r, r) != 0) ++r;
  IntMatrix K(A.cols() - r, A.cols());
  for (std::size_t j = r; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.cols(); ++i) K(j - r, i) = f.V(i, j);
  return hermite_normal_form(K);
}

IntMatrix saturate_rows(const IntMatrix& A) {
  if (A.rows() == 0) return IntMatrix(0, A.cols());
  IntMatrix K = kernel_saturation(A);
  if (K.rows() == 0) return IntMatrix::identity(A.cols());
  return kernel_saturation(K);
}

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  int sign = 1;
  Int prev = 1;
  // Bareiss fraction-free elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

Rat determinant(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix M = A;
  Rat det = 1;
  const std::size_t n = M.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && M(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      M.swap_rows(k, p);
      det = -det;
    }
    det *= M(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(i, k) == 0) continue;
      Rat q = M(i, k) / M(k, k);
      for (std::size_t j = k; j < n; ++j) M(i, j) -= q * M(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& A) {
  std::vector<std::size_t> piv;
  rref(A, &piv);
  return piv.size();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace th
