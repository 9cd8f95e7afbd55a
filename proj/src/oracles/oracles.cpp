#include "tracegeo/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tracegeo::oracle {

std::vector<std::vector<std::size_t>> closed_parabolic_subsets(const std::vector<IntVector>& roots) {
  const std::size_t n = roots.size();
  if (n > 20) throw std::length_error("brute-force parabolic enumeration limited to 20 roots");
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[roots[i]] = i;

  std::vector<std::size_t> neg(n);
  std::vector<std::vector<long>> sum(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector m = roots[i];
    for (auto& x : m) x = -x;
    neg[i] = index.at(m);
    for (std::size_t j = 0; j < n; ++j) {
      IntVector s = roots[i];
      for (std::size_t d = 0; d < s.size(); ++d) s[d] += roots[j][d];
      const auto it = index.find(s);
      if (it != index.end()) sum[i][j] = static_cast<long>(it->second);
    }
  }

  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1u; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (!in(i) && !in(neg[i])) ok = false;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (in(i) && in(j) && sum[i][j] >= 0 && !in(static_cast<std::size_t>(sum[i][j]))) ok = false;
    if (!ok) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (in(i)) members.push_back(i);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t sl_order_by_enumeration(int n, int N) {
  std::uint64_t count = 0;
  if (n == 2) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d)
            if (((a * d - b * c) % N + N) % N == 1 % N) ++count;
    return count;
  }
  if (n == 3) {
    // det = r3 · (r1 × r2); loop the third row innermost.
    for (int a0 = 0; a0 < N; ++a0)
      for (int a1 = 0; a1 < N; ++a1)
        for (int a2 = 0; a2 < N; ++a2)
          for (int b0 = 0; b0 < N; ++b0)
            for (int b1 = 0; b1 < N; ++b1)
              for (int b2 = 0; b2 < N; ++b2) {
                const int c0 = a1 * b2 - a2 * b1;
                const int c1 = a2 * b0 - a0 * b2;
                const int c2 = a0 * b1 - a1 * b0;
                for (int x = 0; x < N; ++x)
                  for (int y = 0; y < N; ++y)
                    for (int z = 0; z < N; ++z)
                      if ((((x * c0 + y * c1 + z * c2) % N) + N) % N == 1 % N) ++count;
              }
    return count;
  }
  throw std::invalid_argument("enumeration only for n in {2, 3}");
}

Rational diagonal_discriminant(const std::vector<Rational>& diagonal) {
  Rational p = 1;
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = 0; j < diagonal.size(); ++j)
      if (i != j && diagonal[i] != diagonal[j]) p *= 1 - diagonal[i] / diagonal[j];
  return p;
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

Rational det_cofactor(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    d += (c % 2 == 0 ? 1 : -1) * m[0][c] * det_cofactor(minor);
  }
  return d;
}

Mat inverse_cofactor(const Mat& m) {
  const std::size_t n = m.size();
  const Rational det = det_cofactor(m);
  Mat inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Rational> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i) row.push_back(m[r][k]);
        minor.push_back(std::move(row));
      }
      inv[i][j] = ((i + j) % 2 == 0 ? 1 : -1) * det_cofactor(minor) / det;
    }
  return inv;
}

// Gauss-Jordan on a copy; returns the pivot rows' spanning vectors.
std::vector<std::vector<Rational>> column_space(const Mat& a) {
  // Columns of a as vectors, greedily kept when independent of those kept.
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<Rational>> basis;      // as kept
  std::vector<std::vector<Rational>> reduced;    // echelon copies
  std::vector<std::size_t> pivot_of;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Rational> v(rows), w(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = w[r] = a[r][c];
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      const Rational f = w[pivot_of[b]] / reduced[b][pivot_of[b]];
      if (f == 0) continue;
      for (std::size_t r = 0; r < rows; ++r) w[r] -= f * reduced[b][r];
    }
    const auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
    if (it == w.end()) continue;
    pivot_of.push_back(static_cast<std::size_t>(it - w.begin()));
    reduced.push_back(w);
    basis.push_back(v);
  }
  return basis;
}

// Solves B x = y for x given B's columns independent and y in their span.
std::vector<Rational> coordinates(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& y) {
  const std::size_t k = basis.size(), rows = y.size();
  Mat aug(rows, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = basis[c][r];
    aug[r][k] = y[r];
  }
  std::size_t lead = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = lead;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) throw std::logic_error("dependent basis");
    std::swap(aug[p], aug[lead]);
    const Rational inv = 1 / aug[lead][c];
    for (auto& x : aug[lead]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t j = 0; j <= k; ++j) aug[r][j] -= f * aug[lead][j];
    }
    ++lead;
  }
  std::vector<Rational> x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = aug[c][k];
  return x;
}

}  // namespace

Rational restricted_discriminant(const Mat& gamma) {
  const std::size_t n = gamma.size();
  const Mat inv = inverse_cofactor(gamma);
  const std::size_t n2 = n * n;
  // (Ad γ - 1) as an n² × n² matrix in the basis E_ij.
  Mat ad_minus_one(n2, std::vector<Rational>(n2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          ad_minus_one[k * n + l][i * n + j] = gamma[k][i] * inv[j][l] - (k == i && l == j ? 1 : 0);
  // For semisimple γ the image of Ad - 1 complements its kernel and is
  // Ad-stable; restrict 1 - Ad = -(Ad - 1) to it.
  const auto basis = column_space(ad_minus_one);
  const std::size_t k = basis.size();
  Mat restricted(k, std::vector<Rational>(k));
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Rational> image(n2);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t s = 0; s < n2; ++s) image[r] -= ad_minus_one[r][s] * basis[c][s];
    const auto x = coordinates(basis, image);
    for (std::size_t r = 0; r < k; ++r) restricted[r][c] = x[r];
  }
  // Cofactor expansion is exponential; eliminate instead for larger blocks.
  Mat m = restricted;
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Rational f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::uint64_t tuples_by_enumeration(std::size_t levis, std::size_t base, int length, int max_other) {
  std::vector<std::size_t> t(static_cast<std::size_t>(length), 0);
  std::uint64_t count = 0;
  for (;;) {
    int other = 0;
    for (auto x : t)
      if (x != base) ++other;
    if (other <= max_other) ++count;
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == levis) t[i++] = 0;
    if (i == t.size()) break;
  }
  return count;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int gl_orbit_dim_by_diagram(const std::vector<int>& partition) {
  int n = 0;
  for (int x : partition) n += x;
  // Column c of the Young diagram has #{rows with length > c} boxes.
  int cols = 0;
  for (int c = 0; c < (partition.empty() ? 0 : partition[0]); ++c) {
    int len = 0;
    for (int x : partition)
      if (x > c) ++len;
    cols += len * len;
  }
  return n * n - cols;
}

}  // namespace tracegeo::oracle

namespace tracegeo::oracle {

int classical_orbit_dim(bool orthogonal, const std::vector<int>& partition) {
  int m = 0, odd = 0, pair_sum = 0;
  for (int x : partition) {
    m += x;
    if (x % 2 != 0) ++odd;
  }
  for (int x : partition)
    for (int y : partition) pair_sum += std::min(x, y);
  const int dim_g = orthogonal ? m * (m - 1) / 2 : m * (m + 1) / 2;
  const int centralizer = orthogonal ? (pair_sum - odd) / 2 : (pair_sum + odd) / 2;
  return dim_g - centralizer;
}

bool classical_partition_ok(bool orthogonal, const std::vector<int>& partition) {
  std::map<int, int> mult;
  for (int x : partition) ++mult[x];
  for (const auto& [part, count] : mult) {
    const bool restricted = orthogonal ? part % 2 == 0 : part % 2 != 0;
    if (restricted && count % 2 != 0) return false;
  }
  return true;
}

}  // namespace tracegeo::oracle
