#include "ghw/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ghw {

namespace {

std::string seq_str(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void check_sorted_bounds(const std::vector<long>& e) {
  if (e.empty()) throw std::invalid_argument("empty bound list");
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) throw std::invalid_argument("bounds must be >= 1");
    if (i && e[i - 1] > e[i])
      throw std::invalid_argument("bounds must be non-decreasing");
  }
}

// all tuples with lo_i <= t_i <= hi_i, in odometer order
void for_each_tuple(const std::vector<long>& lo, const std::vector<long>& hi,
                    const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> t(lo);
  for (;;) {
    fn(t);
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[i] == hi[i]) {
      t[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++t[i];
  }
}

}  // namespace

long pi_product(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("sequences must have equal positive length");
  long pa = 1, pb = 1, pm = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || b[i] < 1)
      throw std::invalid_argument("sequence entries must be positive");
    pa *= a[i];
    pb *= b[i];
    pm *= std::min(a[i], b[i]);
  }
  return pa + pb - pm;
}

long pi_bound_rhs(long d, const std::vector<long>& e, int k) {
  const int m = static_cast<int>(e.size());
  if (k < 1 || k > m - 1) throw std::invalid_argument("k must be in 1..m-1");
  long tail_sum = 0, tail_prod = 1, tail2_prod = 1;
  for (int i = k; i < m; ++i) {  // 0-based tail: the 1-based range k+1..m
    tail_sum += e[i];
    tail_prod *= e[i];
    if (i > k) tail2_prod *= e[i];
  }
  return (d - tail_sum - (k - 2)) * tail_prod - tail2_prod;
}

VerifyReport verify_pi_bound(const std::vector<long>& e) {
  check_sorted_bounds(e);
  VerifyReport rep;
  const int m = static_cast<int>(e.size());
  if (m == 1) return rep;  // no admissible k

  // bucket tuples by their sum; the bound depends only on (d, k)
  long max_sum = std::accumulate(e.begin(), e.end(), 0L);
  std::vector<std::vector<std::vector<long>>> bucket(max_sum + 1);
  std::vector<long> lo(m, 1);
  for_each_tuple(lo, e, [&](const std::vector<long>& t) {
    long d = std::accumulate(t.begin(), t.end(), 0L);
    bucket[d].push_back(t);
  });

  for (long d = m; d <= max_sum; ++d) {
    const auto& tuples = bucket[d];
    if (tuples.size() < 2) continue;
    long rhs_max = pi_bound_rhs(d, e, 1);
    int k_max = 1;
    for (int k = 2; k <= m - 1; ++k) {
      long v = pi_bound_rhs(d, e, k);
      if (v > rhs_max) {
        rhs_max = v;
        k_max = k;
      }
    }
    std::vector<long> prod(tuples.size(), 1);
    for (size_t i = 0; i < tuples.size(); ++i)
      for (long x : tuples[i]) prod[i] *= x;
    for (size_t i = 0; i < tuples.size(); ++i) {
      for (size_t j = i + 1; j < tuples.size(); ++j) {
        long pm = 1;
        for (int t = 0; t < m; ++t) pm *= std::min(tuples[i][t], tuples[j][t]);
        long pi = prod[i] + prod[j] - pm;
        rep.checked += (m - 1);  // one comparison covers every k
        if (pi < rhs_max) {
          rep.violations.push_back("e=" + seq_str(e) + " a=" + seq_str(tuples[i]) +
                                   " b=" + seq_str(tuples[j]) +
                                   " k=" + std::to_string(k_max) +
                                   " pi=" + std::to_string(pi) +
                                   " bound=" + std::to_string(rhs_max));
        } else if (pi == rhs_max && rep.tight_instances.size() < 5) {
          rep.tight_instances.push_back(
              "e=" + seq_str(e) + " a=" + seq_str(tuples[i]) + " b=" +
              seq_str(tuples[j]) + " k=" + std::to_string(k_max) +
              " pi=" + std::to_string(pi));
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_complement_product_bound(const std::vector<long>& e) {
  check_sorted_bounds(e);
  VerifyReport rep;
  const int m = static_cast<int>(e.size());
  std::vector<long> lo(m, 0), hi(m);
  for (int i = 0; i < m; ++i) hi[i] = e[i] - 1;
  for_each_tuple(lo, hi, [&](const std::vector<long>& b) {
    long lhs = 1;
    for (int i = 0; i < m; ++i) lhs *= e[i] - b[i];
    for (int k = 1; k <= m; ++k) {
      long head = 0, tail = 0, tail_prod = 1;
      for (int i = 0; i < k; ++i) head += e[i] - b[i];
      for (int i = k; i < m; ++i) {
        tail += b[i];
        tail_prod *= e[i];
      }
      long rhs = (head - (k - 1) - tail) * tail_prod;
      ++rep.checked;
      if (lhs < rhs) {
        rep.violations.push_back("e=" + seq_str(e) + " b=" + seq_str(b) +
                                 " k=" + std::to_string(k) +
                                 " lhs=" + std::to_string(lhs) +
                                 " rhs=" + std::to_string(rhs));
      } else if (lhs == rhs && rep.tight_instances.size() < 5) {
        rep.tight_instances.push_back("e=" + seq_str(e) + " b=" + seq_str(b) +
                                      " k=" + std::to_string(k) +
                                      " value=" + std::to_string(lhs));
      }
    }
  });
  return rep;
}

long degree_pure_powers_plus_monomial(const std::vector<int>& sizes,
                                      const std::vector<int>& a) {
  const size_t n = sizes.size();
  if (a.size() != n && a.size() != n + 1)
    throw std::invalid_argument("exponent vector length must be s-1 or s");
  bool some_positive = false;
  long full = 1, rest = 1;
  for (size_t i = 0; i < n; ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("sizes must be >= 1");
    if (a[i] < 0 || a[i] > sizes[i] - 1)
      throw std::invalid_argument("need 0 <= a_i <= d_i - 1 for i <= s-1");
    if (a[i] > 0) some_positive = true;
    full *= sizes[i];
    rest *= sizes[i] - a[i];
  }
  if (a.size() == n + 1 && a[n] < 0)
    throw std::invalid_argument("exponents must be non-negative");
  if (!some_positive)
    throw std::invalid_argument("some a_j with j <= s-1 must be positive");
  return full - rest;
}

Decomposition degree_decomposition(int d, const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  long cap = 0;
  for (int s : sizes) {
    if (s < 2) throw std::invalid_argument("sizes must be >= 2");
    cap += s - 1;
  }
  if (d < 1 || d > cap)
    throw std::invalid_argument("d must be in 1..sum(sizes_i - 1)");
  Decomposition out;
  int rest = d;
  while (rest > sizes[out.k] - 1) {
    rest -= sizes[out.k] - 1;
    ++out.k;
  }
  out.ell = rest;
  return out;
}

namespace {

void check_cartesian_sizes(const std::vector<int>& sizes) {
  if (sizes.size() < 2)
    throw std::invalid_argument("need at least two factors (s >= 3)");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2) throw std::invalid_argument("factor sizes must be >= 2");
    if (i && sizes[i - 1] > sizes[i])
      throw std::invalid_argument("factor sizes must be non-decreasing");
  }
}

}  // namespace

long cartesian_second_weight(const std::vector<int>& sizes, int d) {
  check_cartesian_sizes(sizes);
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const int n = static_cast<int>(sizes.size());  // n = s-1
  long cap = 0;
  for (int s : sizes) cap += s - 1;
  if (d >= cap) return 2;
  Decomposition kl = degree_decomposition(d, sizes);
  const int k = kl.k;
  const long ell = kl.ell;
  if (k == n - 1) return sizes[n - 1] - ell + 1;  // last-block case: only the final factor remains
  long tail = 1, tail2 = 1;
  for (int i = k + 1; i < n; ++i) tail *= sizes[i];       // d_{k+2}..d_{s-1}
  for (int i = k + 2; i < n; ++i) tail2 *= sizes[i];      // d_{k+3}..d_{s-1}
  return (sizes[k] - ell + 1) * tail - tail2;  // k = s-3 gives tail2 = 1
}

MinPair cartesian_second_weight_min(const std::vector<int>& sizes, int d) {
  check_cartesian_sizes(sizes);
  const int n = static_cast<int>(sizes.size());
  long cap = 0;
  for (int s : sizes) cap += s - 1;
  if (d < 1 || d > cap)
    throw std::invalid_argument("d must be in 1..sum(sizes_i - 1)");

  // prefixes (a_1..a_n) with 0 <= a_i <= d_i - 1 and sum <= d, some a_i != 0;
  // a_{n+1} = d - sum is then forced
  std::vector<long> lo(n, 0), hi(n);
  for (int i = 0; i < n; ++i) hi[i] = sizes[i] - 1;
  std::vector<std::vector<long>> prefixes;
  for_each_tuple(lo, hi, [&](const std::vector<long>& t) {
    long sum = std::accumulate(t.begin(), t.end(), 0L);
    if (sum == 0 || sum > d) return;
    prefixes.push_back(t);
  });

  MinPair best;
  best.value = -1;
  for (size_t i = 0; i < prefixes.size(); ++i)
    for (size_t j = i + 1; j < prefixes.size(); ++j) {
      long pa = 1, pb = 1, pm = 1;
      for (int t = 0; t < n; ++t) {
        long ca = sizes[t] - prefixes[i][t], cb = sizes[t] - prefixes[j][t];
        pa *= ca;
        pb *= cb;
        pm *= std::min(ca, cb);
      }
      long val = pa + pb - pm;
      if (best.value < 0 || val < best.value) {
        best.value = val;
        best.a.assign(prefixes[i].begin(), prefixes[i].end());
        best.b.assign(prefixes[j].begin(), prefixes[j].end());
        long sa = std::accumulate(best.a.begin(), best.a.end(), 0L);
        long sb = std::accumulate(best.b.begin(), best.b.end(), 0L);
        best.a.push_back(static_cast<int>(d - sa));
        best.b.push_back(static_cast<int>(d - sb));
      }
    }
  if (best.value < 0) throw std::logic_error("no admissible pair found");
  return best;
}

long torus_second_weight(long q, int s, int d) {
  if (q < 3) throw std::invalid_argument("torus formula needs q >= 3");
  if (s < 3) throw std::invalid_argument("torus formula needs s >= 3");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const long eta = (q - 2) * (s - 2);
  const long gamma = (q - 2) * (s - 1);
  if (d >= gamma) return 2;
  long k = (d - 1) / (q - 2);
  long ell = d - k * (q - 2);
  if (d > eta) return q - ell;
  long v = (q - 1) * (q - ell) - 1;
  for (long i = 0; i < s - (k + 3); ++i) v *= q - 1;
  return v;
}

long nested_conjectured_min_distance(const std::vector<int>& sizes, int d) {
  if (sizes.size() < 2) throw std::invalid_argument("need at least two factors");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i - 1] > sizes[i])
      throw std::invalid_argument("factor sizes must be non-decreasing");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  // decompose against d_2..d_s
  std::vector<int> tail(sizes.begin() + 1, sizes.end());
  long cap = 0;
  for (int s : tail) cap += s - 1;
  if (d > cap) return 1;
  Decomposition kl = degree_decomposition(d, tail);
  long v = tail[kl.k] - kl.ell + 1;  // factor after the decomposition block, 1-based d_{k+2} - ell + 1
  for (size_t i = kl.k + 1; i < tail.size(); ++i) v *= tail[i];
  return v;
}

long nested_min_distance_lower_bound(const std::vector<int>& sizes, int d) {
  if (sizes.size() < 2) throw std::invalid_argument("need at least two factors");
  long mid = 0;  // sum_{i=2}^{s-1}(d_i - 1)
  for (size_t i = 1; i + 1 < sizes.size(); ++i) mid += sizes[i] - 1;
  long ell = d - mid;
  if (ell < 1 || ell > sizes[0] - 1)
    throw std::invalid_argument("d outside the bound's range");
  return sizes[0] - ell + 1;
}

WitnessPair second_weight_witness_pair(const FieldPtr& field,
                                       const std::vector<std::vector<Fe>>& factors,
                                       int d) {
  const int n = static_cast<int>(factors.size());
  if (n < 2) throw std::invalid_argument("need at least two factors (s >= 3)");
  std::vector<int> sizes;
  for (const auto& A : factors) {
    if (A.size() < 2) throw std::invalid_argument("factor sizes must be >= 2");
    sizes.push_back(static_cast<int>(A.size()));
  }
  for (int i = 1; i < n; ++i)
    if (sizes[i - 1] > sizes[i])
      throw std::invalid_argument("factor sizes must be non-decreasing");
  Decomposition kl = degree_decomposition(d, sizes);
  const int k = kl.k;
  const int ell = kl.ell;

  auto linear = [&](int var, Fe beta) {
    // beta - t_var
    Polynomial p = Polynomial::constant(field, n, beta);
    return p - Polynomial::variable(field, n, var);
  };

  // shared part f_1...f_k * g with f_i omitting the factor's last element
  Polynomial shared = Polynomial::constant(field, n, field->one());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j + 1 < sizes[i]; ++j) shared = shared * linear(i, factors[i][j]);
  for (int j = 0; j < ell - 1; ++j) shared = shared * linear(k, factors[k][j]);

  WitnessPair out;
  out.F = shared * linear(k, factors[k][ell - 1]);  // h_1 = beta_{k+1,ell} - t_{k+1}
  if (k <= n - 2) {
    out.G = shared * linear(k + 1, factors[k + 1][ell - 1]);  // h_2
  } else {
    out.G = shared * linear(k, factors[k][ell]);  // h_3, needs ell + 1 <= d_{k+1}
  }

  long expected;
  long full = 1;
  for (int s : sizes) full *= s;
  if (k <= n - 2) {
    long tail = 1, tail2 = 1;
    for (int i = k + 1; i < n; ++i) tail *= sizes[i];
    for (int i = k + 2; i < n; ++i) tail2 *= sizes[i];
    expected = full - (sizes[k] - ell + 1) * tail + tail2;
  } else {
    expected = full - sizes[n - 1] + ell - 1;
  }

  // verify by evaluation over the grid, and check the evaluation vectors of
  // F and G are independent so they really span a 2-dimensional subcode
  long common = 0;
  bool independent = false;
  std::optional<std::pair<Fe, Fe>> first_nonzero;
  std::vector<long> lo(n, 0), hi(n);
  for (int i = 0; i < n; ++i) hi[i] = sizes[i] - 1;
  std::vector<Fe> point(n, field->zero());
  for_each_tuple(lo, hi, [&](const std::vector<long>& idx) {
    for (int i = 0; i < n; ++i) point[i] = factors[i][idx[i]];
    Fe fv = out.F.evaluate(point), gv = out.G.evaluate(point);
    if (fv.v == 0 && gv.v == 0) {
      ++common;
      return;
    }
    if (!first_nonzero) {
      first_nonzero = {fv, gv};
      return;
    }
    if (!independent) {
      // rank of [[fv0, gv0], [fv, gv]] over the field
      const Field& F = *field;
      uint32_t det = F.subc(F.mulc(first_nonzero->first.v, gv.v),
                            F.mulc(first_nonzero->second.v, fv.v));
      if (det) independent = true;
    }
  });
  if (common != expected)
    throw std::logic_error("witness common-zero count differs from the case value");
  if (!independent)
    throw std::logic_error("witness polynomials are dependent on the grid");
  out.common_zeros = common;
  out.support_upper = full - common;
  return out;
}

}  // namespace ghw
