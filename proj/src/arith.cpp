#include "mmx/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mmx/error.hpp"

namespace mmx {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries, std::size_t rows,
                              std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size() && i < rows && i < cols; ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (s != 0) mpz_addmul((*this)(dst, c).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (s != 0) mpz_addmul((*this)(r, dst).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) {
    Integer& v = (*this)(r, c);
    v = -v;
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

const Integer& primality_limit() {
  // Smallest strong pseudoprime to all prime bases up to 41.
  static const Integer limit("3317044064679887385961981");
  return limit;
}

namespace {

constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Integer& n) {
  Integer d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Integer n_minus_1 = n - 1;
  Integer x;
  for (unsigned a : kWitnesses) {
    if (n == a) return true;
    const Integer base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long c_seed) {
  constexpr unsigned long kMaxSteps = 1ul << 20;
  const Integer c = c_seed;
  Integer y = 2, x, ys, q = 1, g = 1, t;
  unsigned long r = 1, steps = 0;
  const unsigned long m = 128;
  auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        t = abs(x - y);
        q = (q * t) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      steps += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && steps < kMaxSteps);
  if (g == n) {
    do {
      ys = f(ys);
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (n >= primality_limit())
    throw Error(ErrorCode::Unsupported, "cofactor " + n.get_str() + " exceeds the primality bound");
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long c = 1; c < 16; ++c) {
    Integer d = pollard_brent(n, c);
    if (d != 0) {
      split(d, out);
      split(Integer(n / d), out);
      return;
    }
  }
  throw Error(ErrorCode::Unsupported, "could not factor " + n.get_str());
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n >= primality_limit())
    throw Error(ErrorCode::Unsupported, n.get_str() + " exceeds the primality bound");
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return miller_rabin(n);
}

std::vector<PrimePower> factorize(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "factorize(0)");
  Integer rest = abs(n);
  std::vector<PrimePower> result;
  auto take = [&](const Integer& p) {
    const Exponent e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e > 0) result.push_back({p, e});
  };
  take(2);
  for (unsigned long d = 3; d < 10000 && rest != 1; d += 2) {
    if (Integer(d) * d > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) take(d);
  }
  if (rest == 1) return result;
  std::vector<Integer> primes;
  split(rest, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) take(p);
  std::sort(result.begin(), result.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

Exponent valuation(const Integer& p, const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of 0");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Integer rest = n;
  return mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
}

Integer pow(const Integer& base, Exponent e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{a, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& d = s.diagonal;
  Integer q;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool found_any = false;
    for (;;) {
      // Pivot: least nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pr = 0, pc = 0;
      const Integer* best = nullptr;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& v = d(i, j);
          if (v == 0) continue;
          if (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
            best = &v;
            pr = i;
            pc = j;
          }
        }
      if (!best) break;
      found_any = true;
      d.swap_rows(t, pr);
      s.left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      s.right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        s.left.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        s.right.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain before moving on.
      bool divides_rest = true;
      for (std::size_t i = t + 1; i < m && divides_rest; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.left.add_row_multiple(t, i, 1);
            divides_rest = false;
            break;
          }
      if (divides_rest) break;
    }
    if (!found_any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.left.negate_row(t);
    }
    ++s.rank;
  }
  return s;
}

}  // namespace mmx
