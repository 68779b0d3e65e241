#pragma once

// 5x5 non-negative matrices, the domination order against A0, doubling
// matrices, and the potential S(x) = s1 s2 s4 s5 that grows under both.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace threecol {

using big_int = boost::multiprecision::cpp_int;

template <class T>
using vector5 = std::array<T, 5>;

template <class T>
struct matrix5 {
  std::array<T, 25> a{};

  T& operator()(std::size_t i, std::size_t j) { return a[i * 5 + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * 5 + j]; }

  static matrix5 identity() {
    matrix5 m;
    for (std::size_t i = 0; i < 5; ++i) m(i, i) = 1;
    return m;
  }
  static matrix5 ones() {
    matrix5 m;
    m.a.fill(1);
    return m;
  }
  static matrix5 from_rows(const std::array<std::array<T, 5>, 5>& rows) {
    matrix5 m;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = rows[i][j];
    return m;
  }

  matrix5 transpose() const {
    matrix5 t;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class U>
  matrix5<U> cast() const {
    matrix5<U> out;
    for (std::size_t k = 0; k < 25; ++k) out.a[k] = static_cast<U>(a[k]);
    return out;
  }

  T sum() const {
    T s = 0;
    for (const T& x : a) s += x;
    return s;
  }

  friend bool operator==(const matrix5&, const matrix5&) = default;

  friend matrix5 operator*(const matrix5& x, const matrix5& y) {
    matrix5 out;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t k = 0; k < 5; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < 5; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
};

template <class T>
matrix5<T> a0_matrix() {
  return matrix5<T>::from_rows({{{1, 1, 0, 0, 0},
                                 {1, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 1}}});
}

/// M x for a column vector x.
template <class T, class U>
vector5<T> apply(const matrix5<U>& m, const vector5<T>& x) {
  vector5<T> out{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) out[i] += T(m(i, j)) * x[j];
  return out;
}

/// x^T M for a row vector x.
template <class T, class U>
vector5<T> apply_row(const vector5<T>& x, const matrix5<U>& m) {
  vector5<T> out{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) out[j] += x[i] * T(m(i, j));
  return out;
}

/// s_k(x): the sum of the k smallest entries.
template <class T>
T smallest_sum(vector5<T> x, std::size_t k) {
  std::sort(x.begin(), x.end());
  T s = 0;
  for (std::size_t i = 0; i < k && i < 5; ++i) s += x[i];
  return s;
}

/// S(x) = s1(x) s2(x) s4(x) s5(x).
template <class T>
T potential(const vector5<T>& x) {
  vector5<T> y = x;
  std::sort(y.begin(), y.end());
  const T s1 = y[0], s2 = s1 + y[1], s4 = s2 + y[2] + y[3], s5 = s4 + y[4];
  return s1 * s2 * s4 * s5;
}

template <class T>
bool majorizes(const matrix5<T>& a, const matrix5<T>& b) {
  for (std::size_t k = 0; k < 25; ++k)
    if (a.a[k] < b.a[k]) return false;
  return true;
}

/// Row and column permutations: (P B Q)(i, j) = B(rows[i], cols[j]).
struct permutation_pair {
  std::array<std::uint8_t, 5> rows;
  std::array<std::uint8_t, 5> cols;
};

template <class T>
matrix5<T> permute(const matrix5<T>& b, const permutation_pair& p) {
  matrix5<T> out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) out(i, j) = b(p.rows[i], p.cols[j]);
  return out;
}

/// Permutations witnessing that `a` majorizes P b Q, if any. Every row
/// permutation is tried; the column permutation is then a perfect matching
/// in the column compatibility relation.
template <class T>
std::optional<permutation_pair> find_domination(const matrix5<T>& a, const matrix5<T>& b) {
  permutation_pair p;
  std::array<std::uint8_t, 5> rows{0, 1, 2, 3, 4};
  do {
    std::array<std::uint8_t, 5> compat{};
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t l = 0; l < 5; ++l) {
        bool ok = true;
        for (std::size_t i = 0; i < 5 && ok; ++i) ok = !(a(i, j) < b(rows[i], l));
        if (ok) compat[j] |= static_cast<std::uint8_t>(1u << l);
      }
    std::array<std::uint8_t, 5> cols{};
    auto match = [&](auto&& self, std::size_t j, unsigned used) -> bool {
      if (j == 5) return true;
      for (std::uint8_t l = 0; l < 5; ++l) {
        if (!(compat[j] >> l & 1) || (used >> l & 1)) continue;
        cols[j] = l;
        if (self(self, j + 1, used | 1u << l)) return true;
      }
      return false;
    };
    if (match(match, 0, 0)) {
      p.rows = rows;
      p.cols = cols;
      return p;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

template <class T>
bool dominates(const matrix5<T>& a, const matrix5<T>& b) {
  return find_domination(a, b).has_value();
}

template <class T>
bool is_dominant(const matrix5<T>& a) {
  return dominates(a, a0_matrix<T>());
}

/// Every row and every column has at least two entries >= 1.
template <class T>
bool is_doubling(const matrix5<T>& a) {
  for (std::size_t i = 0; i < 5; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      row += !(a(i, j) < 1);
      col += !(a(j, i) < 1);
    }
    if (row < 2 || col < 2) return false;
  }
  return true;
}

enum class matrix_class { dominant, doubling, both, neither };

inline std::string_view to_string(matrix_class c) {
  switch (c) {
    case matrix_class::dominant: return "dominant";
    case matrix_class::doubling: return "doubling";
    case matrix_class::both: return "both";
    case matrix_class::neither: return "neither";
  }
  return "neither";
}

template <class T>
matrix_class classify(const matrix5<T>& a) {
  const bool dom = is_dominant(a), dbl = is_doubling(a);
  if (dom && dbl) return matrix_class::both;
  if (dom) return matrix_class::dominant;
  if (dbl) return matrix_class::doubling;
  return matrix_class::neither;
}

/// (total)^4 * 2^n >= 3^n, i.e. total >= (3/2)^(n/4), in exact arithmetic.
inline bool meets_product_bound(const big_int& total, std::size_t n) {
  const big_int lhs = boost::multiprecision::pow(total, 4) << n;
  return lhs >= boost::multiprecision::pow(big_int(3), static_cast<unsigned>(n));
}

struct product_bound_report {
  std::size_t n = 0;
  bool holds = true;
  std::optional<std::size_t> first_violation;  // 1-based step
  std::string reason;
  big_int total;                    // 1^T M_1 ... M_n 1
  std::vector<big_int> potentials;  // S(x_0), ..., S(x_n)
};

/// Follows x_i = x_{i-1} M_i from x_0 = 1 and checks the potential growth
/// at each step (x3/2 for dominant, x10 for doubling) and the final bound.
template <class T>
product_bound_report verify_product_bound(std::span<const matrix5<T>> ms) {
  product_bound_report rep;
  rep.n = ms.size();
  vector5<big_int> x;
  x.fill(1);
  rep.potentials.push_back(potential(x));
  auto fail = [&](std::size_t step, std::string why) {
    if (rep.holds) {
      rep.holds = false;
      rep.first_violation = step;
      rep.reason = std::move(why);
    }
  };
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const matrix5<big_int> m = ms[i].template cast<big_int>();
    const big_int before = rep.potentials.back();
    x = apply_row(x, m);
    const big_int after = potential(x);
    rep.potentials.push_back(after);
    const matrix_class cls = classify(m);
    if (cls == matrix_class::neither) fail(i + 1, "matrix is neither dominant nor doubling");
    if ((cls == matrix_class::dominant || cls == matrix_class::both) && 2 * after < 3 * before)
      fail(i + 1, "potential grew by less than 3/2 under a dominant matrix");
    if ((cls == matrix_class::doubling || cls == matrix_class::both) && after < 10 * before)
      fail(i + 1, "potential grew by less than 10 under a doubling matrix");
  }
  rep.total = 0;
  for (const auto& v : x) rep.total += v;
  if (!meets_product_bound(rep.total, rep.n)) fail(rep.n, "1^T M 1 is below (3/2)^(n/4)");
  return rep;
}

// Seeded random instances. Reduction by modulo keeps the streams identical
// across standard libraries.

template <class T>
matrix5<T> random_dominant(std::mt19937_64& rng) {
  std::array<std::uint8_t, 5> rows{0, 1, 2, 3, 4}, cols{0, 1, 2, 3, 4};
  for (std::size_t i = 4; i > 0; --i) {
    std::swap(rows[i], rows[rng() % (i + 1)]);
    std::swap(cols[i], cols[rng() % (i + 1)]);
  }
  matrix5<T> m = permute(a0_matrix<T>(), permutation_pair{rows, cols});
  for (auto& e : m.a)
    if (rng() % 4 == 0) e += static_cast<T>(rng() % 3);
  return m;
}

template <class T>
matrix5<T> random_doubling(std::mt19937_64& rng) {
  matrix5<T> m;
  for (auto& e : m.a) e = (rng() % 2) ? static_cast<T>(rng() % 4 == 0 ? 2 : 1) : T(0);
  auto nonzero_row = [&](std::size_t i) {
    int c = 0;
    for (std::size_t j = 0; j < 5; ++j) c += m(i, j) != 0;
    return c;
  };
  auto nonzero_col = [&](std::size_t j) {
    int c = 0;
    for (std::size_t i = 0; i < 5; ++i) c += m(i, j) != 0;
    return c;
  };
  for (std::size_t i = 0; i < 5; ++i)
    while (nonzero_row(i) < 2) m(i, rng() % 5) = 1;
  for (std::size_t j = 0; j < 5; ++j)
    while (nonzero_col(j) < 2) m(rng() % 5, j) = 1;
  return m;
}

struct matrix_lemma_report {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t dominant_steps = 0;
  std::size_t doubling_steps = 0;
  std::size_t violations = 0;
  std::optional<std::size_t> first_failing_trial;
  std::string first_reason;

  bool pass() const noexcept { return violations == 0; }
};

/// `trials` random chains of n matrices, each step dominant or doubling
/// with equal probability, checked with verify_product_bound.
inline matrix_lemma_report run_matrix_lemma(std::size_t n, std::uint64_t seed, std::size_t trials) {
  matrix_lemma_report rep;
  rep.n = n;
  rep.seed = seed;
  rep.trials = trials;
  std::mt19937_64 rng(seed);
  std::vector<matrix5<std::uint64_t>> chain;
  for (std::size_t t = 0; t < trials; ++t) {
    chain.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2 == 0) {
        chain.push_back(random_dominant<std::uint64_t>(rng));
        ++rep.dominant_steps;
      } else {
        chain.push_back(random_doubling<std::uint64_t>(rng));
        ++rep.doubling_steps;
      }
    }
    const product_bound_report r = verify_product_bound<std::uint64_t>(chain);
    if (!r.holds) {
      if (!rep.first_failing_trial) {
        rep.first_failing_trial = t;
        rep.first_reason = r.reason;
      }
      ++rep.violations;
    }
  }
  return rep;
}

}  // namespace threecol
