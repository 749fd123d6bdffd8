#include "ghw/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghw {

namespace {

PointAlgebra build_algebra(PointSet X, const MonomialOrder& ord) {
  PointAlgebra A;
  A.order = ord;
  A.gb = vanishing_basis(X, ord);
  A.in = initial_ideal(A.gb);
  DegReg dr = degree_and_regularity(A.in);
  A.degree = dr.degree;
  A.regularity = dr.regularity;
  for (int d = 0; d <= A.regularity; ++d) A.hf.push_back(hilbert_function(A.in, d));
  A.X = std::move(X);
  return A;
}

}  // namespace

PointAlgebra make_point_algebra(PointSet X) {
  MonomialOrder ord = default_order(X);
  return build_algebra(std::move(X), ord);
}

PointAlgebra make_point_algebra(PointSet X, const MonomialOrder& ord) {
  return build_algebra(std::move(X), ord);
}

long hilbert_at(const PointAlgebra& A, int d) {
  if (d < 0) return 0;
  if (d <= A.regularity) return A.hf[d];
  return A.degree;
}

std::vector<Monomial> degree_basis(const PointAlgebra& A, int d) {
  std::vector<Monomial> basis = standard_monomials(A.in, d);
  std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(A.order, a, b) > 0;
  });
  return basis;
}

EvalCode build_code(const PointAlgebra& A, int d) {
  if (d < 1) throw std::invalid_argument("code degree must be >= 1");
  EvalCode code;
  code.field = A.X.field;
  code.d = d;
  code.basis = degree_basis(A, d);
  const int H = static_cast<int>(code.basis.size());
  const int m = static_cast<int>(A.X.size());
  code.G = GfMatrix(code.field, H, m);
  const Field& F = *code.field;
  for (int i = 0; i < H; ++i) {
    const Monomial& mono = code.basis[i];
    for (int j = 0; j < m; ++j) {
      Fe v = F.one();
      for (int t = 0; t < A.X.nvars; ++t)
        for (int32_t rep = 0; rep < mono.e[t]; ++rep)
          v = F.mul(v, A.X.points[j].coords[t]);
      code.G.set(i, j, v.v);
    }
  }
  if (code.G.rank() != H)
    throw std::logic_error("evaluation matrix rank below the code dimension");
  for (int j = 0; j < m; ++j) {
    bool nonzero = false;
    for (int i = 0; i < H; ++i)
      if (code.G.at(i, j)) {
        nonzero = true;
        break;
      }
    if (!nonzero && H > 0)
      throw std::logic_error("degenerate code: a point is unseen at this degree");
  }
  return code;
}

namespace {

constexpr unsigned long long kSat = 1000000000000000000ull;  // 10^18

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  unsigned long long s = a + b;
  if (s < a || s > kSat) return kSat;
  return s;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  unsigned long long s = a * b;
  return s > kSat ? kSat : s;
}

}  // namespace

unsigned long long subspace_count(int H, int r, long q) {
  if (r < 0 || r > H) return 0;
  if (r == 0 || r == H) return 1;
  // Gaussian binomial via [n k] = [n-1 k-1] + q^k [n-1 k]
  std::vector<unsigned long long> qpow(r + 1, 1);
  for (int k = 1; k <= r; ++k)
    qpow[k] = sat_mul(qpow[k - 1], static_cast<unsigned long long>(q));
  std::vector<unsigned long long> c(r + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= H; ++n)
    for (int k = std::min(r, n); k >= 1; --k)
      c[k] = sat_add(c[k - 1], sat_mul(qpow[k], c[k]));
  return c[r];
}

long support_weight(const EvalCode& code,
                    const std::vector<std::vector<uint32_t>>& rows) {
  const Field& F = *code.field;
  const int H = code.dimension(), m = code.length();
  std::vector<uint8_t> covered(m, 0);
  for (const auto& x : rows) {
    if (static_cast<int>(x.size()) != H)
      throw std::invalid_argument("coefficient row length must equal the dimension");
    for (int j = 0; j < m; ++j) {
      if (covered[j]) continue;
      uint32_t acc = 0;
      for (int i = 0; i < H; ++i)
        if (x[i]) acc = F.addc(acc, F.mulc(x[i], code.G.at(i, j)));
      if (acc) covered[j] = 1;
    }
  }
  long w = 0;
  for (int j = 0; j < m; ++j) w += covered[j];
  return w;
}

namespace {

// walks r-subsets of {0..H-1} in ascending lexicographic order
bool next_combination(std::vector<int>& p, int H) {
  int r = static_cast<int>(p.size());
  for (int i = r - 1; i >= 0; --i) {
    if (p[i] < H - (r - i)) {
      ++p[i];
      for (int j = i + 1; j < r; ++j) p[j] = p[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct GhwSearch {
  const Field& F;
  const GfMatrix& G;
  int H, m, r;
  long q;
  long best;

  std::vector<int> pivots;
  std::vector<std::vector<int>> freecols;     // per row
  std::vector<int> var_rows;                  // rows that have free cells
  std::vector<std::vector<uint32_t>> scratch; // accumulated row per cell depth
  std::vector<uint8_t> covered;
  long covered_cnt = 0;
  std::vector<long> defect;

  GhwSearch(const EvalCode& code, int r_)
      : F(*code.field), G(code.G), H(code.dimension()), m(code.length()),
        r(r_), q(F.q()), best(code.length()), covered(code.length(), 0),
        defect(F.q(), 0) {}

  // fold a completed row vector into the coverage, remembering the flips
  void cover(const uint32_t* y, std::vector<int>& flipped) {
    for (int j = 0; j < m; ++j)
      if (!covered[j] && y[j]) {
        covered[j] = 1;
        ++covered_cnt;
        flipped.push_back(j);
      }
  }

  void uncover(const std::vector<int>& flipped) {
    for (int j : flipped) covered[j] = 0;
    covered_cnt -= static_cast<long>(flipped.size());
  }

  // exact weights for all q values of the final free cell, in O(m + q)
  void leaf_batch(const uint32_t* base, int gcol) {
    long n_always = 0;
    std::fill(defect.begin(), defect.end(), 0);
    for (int j = 0; j < m; ++j) {
      if (covered[j]) continue;
      uint32_t gv = G.at(gcol, j), bv = base[j];
      if (gv == 0) {
        n_always += (bv != 0);
      } else {
        ++n_always;
        defect[F.mulc(F.negc(bv), F.invc(gv))] += 1;
      }
    }
    for (long c = 0; c < q; ++c) {
      long w = covered_cnt + n_always - defect[c];
      if (w < best) best = w;
    }
  }

  // enumerate the cells of var_rows[k] starting at cell index ci; depth is
  // the global cell index addressing the scratch row for this level
  void rec_cell(size_t k, size_t ci, int depth) {
    int row = var_rows[k];
    const auto& cells = freecols[row];
    const uint32_t* cur = scratch[depth].data();
    if (k + 1 == var_rows.size() && ci + 1 == cells.size()) {
      leaf_batch(cur, cells[ci]);
      return;
    }
    if (ci == cells.size()) {
      std::vector<int> flipped;
      cover(cur, flipped);
      if (covered_cnt < best) rec_row(k + 1, depth);
      uncover(flipped);
      return;
    }
    const int gcol = cells[ci];
    uint32_t* next = scratch[depth + 1].data();
    for (long c = 0; c < q; ++c) {
      if (c == 0) {
        std::copy(cur, cur + m, next);
      } else {
        uint32_t cc = static_cast<uint32_t>(c);
        for (int j = 0; j < m; ++j)
          next[j] = F.addc(cur[j], F.mulc(cc, G.at(gcol, j)));
      }
      rec_cell(k, ci + 1, depth + 1);
      if (best == r) return;  // weight can never drop below r
    }
  }

  void rec_row(size_t k, int depth) {
    int row = var_rows[k];
    uint32_t* cur = scratch[depth].data();
    for (int j = 0; j < m; ++j) cur[j] = G.at(pivots[row], j);
    rec_cell(k, 0, depth);
  }

  long run() {
    pivots.resize(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    std::vector<uint8_t> is_pivot(H, 0);
    do {
      std::fill(is_pivot.begin(), is_pivot.end(), 0);
      for (int p : pivots) is_pivot[p] = 1;
      freecols.assign(r, {});
      var_rows.clear();
      int total_cells = 0;
      for (int i = 0; i < r; ++i) {
        for (int jcol = pivots[i] + 1; jcol < H; ++jcol)
          if (!is_pivot[jcol]) freecols[i].push_back(jcol);
        if (!freecols[i].empty()) {
          var_rows.push_back(i);
          total_cells += static_cast<int>(freecols[i].size());
        }
      }

      std::vector<int> flipped;
      std::vector<uint32_t> fixed_row(m);
      bool pruned = false;
      for (int i = 0; i < r && !pruned; ++i) {
        if (!freecols[i].empty()) continue;
        for (int j = 0; j < m; ++j) fixed_row[j] = G.at(pivots[i], j);
        cover(fixed_row.data(), flipped);
        if (covered_cnt >= best) pruned = true;
      }
      if (!pruned) {
        if (var_rows.empty()) {
          if (covered_cnt < best) best = covered_cnt;
        } else {
          scratch.assign(total_cells + 1, std::vector<uint32_t>(m));
          rec_row(0, 0);
        }
      }
      uncover(flipped);
      if (best == r) break;
    } while (next_combination(pivots, H));
    return best;
  }
};

}  // namespace

std::optional<long> ghw(const EvalCode& code, int r, unsigned long long budget) {
  const int H = code.dimension();
  if (r < 1 || r > H)
    throw std::invalid_argument("subspace dimension out of range 1..dimension");
  if (subspace_count(H, r, code.field->q()) > budget) return std::nullopt;
  GhwSearch search(code, r);
  return search.run();
}

void enumerate_subspace_rref(
    const FieldPtr& field, int H, int r,
    const std::function<void(const std::vector<std::vector<uint32_t>>&)>& visit) {
  if (r < 1 || r > H)
    throw std::invalid_argument("subspace dimension out of range 1..dimension");
  const long q = field->q();
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) pivots[i] = i;
  std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(H, 0));
  do {
    std::vector<uint8_t> is_pivot(H, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::pair<int, int>> cells;  // (row, col), row-major
    for (int i = 0; i < r; ++i)
      for (int jcol = pivots[i] + 1; jcol < H; ++jcol)
        if (!is_pivot[jcol]) cells.emplace_back(i, jcol);
    for (int i = 0; i < r; ++i) {
      std::fill(rows[i].begin(), rows[i].end(), 0);
      rows[i][pivots[i]] = 1;
    }
    std::function<void(size_t)> rec = [&](size_t ci) {
      if (ci == cells.size()) {
        visit(rows);
        return;
      }
      auto [ri, col] = cells[ci];
      for (long c = 0; c < q; ++c) {
        rows[ri][col] = static_cast<uint32_t>(c);
        rec(ci + 1);
      }
      rows[ri][col] = 0;
    };
    rec(0);
  } while (next_combination(pivots, H));
}

}  // namespace ghw
