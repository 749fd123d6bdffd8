#include "ghw/gmdfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ghw {

namespace {

bool next_combination(std::vector<int>& p, int n) {
  int r = static_cast<int>(p.size());
  for (int i = r - 1; i >= 0; --i) {
    if (p[i] < n - (r - i)) {
      ++p[i];
      for (int j = i + 1; j < r; ++j) p[j] = p[j - 1] + 1;
      return true;
    }
  }
  return false;
}

unsigned long long combination_count(int n, int r, unsigned long long cap) {
  unsigned long long c = 1;
  for (int i = 1; i <= r; ++i) {
    c = c * static_cast<unsigned long long>(n - r + i);
    c /= static_cast<unsigned long long>(i);
    if (c > cap) return cap + 1;
  }
  return c;
}

void check_dr(const PointAlgebra& A, int d, int r) {
  if (A.degree < 2)
    throw std::invalid_argument("point set must have at least 2 points");
  if (d < 1 || r < 1) throw std::invalid_argument("d and r must be >= 1");
}

// first r-subset M of the degree-d standard monomials with (L:(M)) != L,
// or nothing; monomial colon triviality bounds the polynomial one
std::optional<std::vector<Monomial>> first_colon_witness(const MonomialIdeal& L,
                                                         int d, int r) {
  std::vector<Monomial> sm = standard_monomials(L, d);
  const int H = static_cast<int>(sm.size());
  if (r > H) return std::nullopt;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  do {
    std::vector<Monomial> M;
    M.reserve(r);
    for (int i : idx) M.push_back(sm[i]);
    if (!equal(colon(L, M), L)) return M;
  } while (next_combination(idx, H));
  return std::nullopt;
}

}  // namespace

std::optional<long> delta_fn(const PointAlgebra& A, int d, int r,
                             unsigned long long budget) {
  check_dr(A, d, r);
  const long H = hilbert_at(A, d);
  if (r > H) return A.degree;
  // pre-filter, skipped when the subset walk would itself be enormous
  if (combination_count(static_cast<int>(H), r, 2000000) <= 2000000) {
    if (!first_colon_witness(A.in, d, r)) return A.degree;
  }
  EvalCode code = build_code(A, d);
  return ghw(code, r, budget);
}

std::optional<long> vasconcelos_fn(const PointAlgebra& A, int d, int r,
                                   unsigned long long budget) {
  check_dr(A, d, r);
  const int H = static_cast<int>(hilbert_at(A, d));
  if (r > H) return A.degree;
  if (subspace_count(H, r, A.X.field->q()) > budget) return std::nullopt;

  // evaluation table rebuilt from the monomials themselves
  std::vector<Monomial> basis = degree_basis(A, d);
  const int m = static_cast<int>(A.X.size());
  const Field& F = *A.X.field;
  std::vector<std::vector<uint32_t>> E(H, std::vector<uint32_t>(m));
  for (int j = 0; j < H; ++j) {
    Polynomial mono = Polynomial::term(A.X.field, basis[j].e, F.one());
    for (int P = 0; P < m; ++P)
      E[j][P] = mono.evaluate(A.X.points[P].coords).v;
  }

  long best = A.degree;
  bool any = false;
  enumerate_subspace_rref(
      A.X.field, H, r, [&](const std::vector<std::vector<uint32_t>>& rows) {
        long zeros = 0;
        for (int P = 0; P < m; ++P) {
          bool all_zero = true;
          for (int i = 0; i < r && all_zero; ++i) {
            uint32_t acc = 0;
            for (int j = 0; j < H; ++j)
              if (rows[i][j]) acc = F.addc(acc, F.mulc(rows[i][j], E[j][P]));
            if (acc) all_zero = false;
          }
          if (all_zero) ++zeros;
        }
        if (zeros > 0) {
          any = true;
          long cand = A.degree - zeros;  // = deg(S/(I : (F)))
          if (cand < best) best = cand;
        }
      });
  return any ? best : A.degree;
}

long footprint_fn(const MonomialIdeal& L, long degS, int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("d and r must be >= 1");
  std::vector<Monomial> sm = standard_monomials(L, d);
  const int H = static_cast<int>(sm.size());
  if (r > H) return degS;
  long max_deg = -1;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  do {
    std::vector<Monomial> M;
    M.reserve(r);
    for (int i : idx) M.push_back(sm[i]);
    if (equal(colon(L, M), L)) continue;
    long deg = degree_and_regularity(add_generators(L, M)).degree;
    if (deg > max_deg) max_deg = deg;
  } while (next_combination(idx, H));
  if (max_deg < 0) return degS;
  return degS - max_deg;
}

long footprint_fn(const PointAlgebra& A, int d, int r) {
  return footprint_fn(A.in, A.degree, d, r);
}

FnMatrix footprint_matrix(const PointAlgebra& A) {
  FnMatrix M;
  M.kind = MatrixKind::Footprint;
  M.rows = A.regularity;
  M.cols = static_cast<int>(A.degree);
  M.cells.assign(M.rows, std::vector<MatrixCell>(M.cols));
  for (int d = 1; d <= M.rows; ++d) {
    const long H = hilbert_at(A, d);
    for (int r = 1; r <= M.cols; ++r) {
      MatrixCell& cell = M.cells[d - 1][r - 1];
      if (r > H) {
        cell.kind = CellKind::Infinite;
      } else {
        cell.kind = CellKind::Exact;
        cell.value = footprint_fn(A, d, r);
      }
    }
  }
  return M;
}

FnMatrix weight_matrix(const PointAlgebra& A, unsigned long long budget) {
  if (A.degree < 2)
    throw std::invalid_argument("point set must have at least 2 points");
  FnMatrix M;
  M.kind = MatrixKind::Delta;
  M.rows = A.regularity;
  M.cols = static_cast<int>(A.degree);
  M.cells.assign(M.rows, std::vector<MatrixCell>(M.cols));
  const long q = A.X.field->q();
  for (int d = 1; d <= M.rows; ++d) {
    const long H = hilbert_at(A, d);
    std::optional<EvalCode> code;
    for (int r = 1; r <= M.cols; ++r) {
      MatrixCell& cell = M.cells[d - 1][r - 1];
      if (r > H) {
        cell.kind = CellKind::Infinite;
        continue;
      }
      if (subspace_count(static_cast<int>(H), r, q) <= budget) {
        if (!code) code = build_code(A, d);
        cell.kind = CellKind::Exact;
        cell.value = *ghw(*code, r, budget);
        continue;
      }
      long fp = footprint_fn(A, d, r);
      if (fp == A.degree) {
        // no monomial subset passes the colon test, so no polynomial
        // family has a common zero and the cell equals |X|
        cell.kind = CellKind::Exact;
        cell.value = A.degree;
        continue;
      }
      long lo = std::max(fp, static_cast<long>(r));
      if (r >= 2) {
        const MatrixCell& left = M.cells[d - 1][r - 2];
        if (left.kind == CellKind::Exact) lo = std::max(lo, left.value + 1);
        else if (left.kind == CellKind::Interval) lo = std::max(lo, left.lo + 1);
      }
      long hi = std::min(A.degree, A.degree - H + r);
      if (lo > hi)
        throw std::logic_error("weight bounds crossed; computation is wrong");
      if (lo == hi) {
        cell.kind = CellKind::Exact;
        cell.value = lo;
      } else {
        cell.kind = CellKind::Interval;
        cell.lo = lo;
        cell.hi = hi;
      }
    }
  }
  return M;
}

FnMatrix vasconcelos_matrix(const PointAlgebra& A, unsigned long long budget) {
  FnMatrix M;
  M.kind = MatrixKind::Vasconcelos;
  M.rows = A.regularity;
  M.cols = static_cast<int>(A.degree);
  M.cells.assign(M.rows, std::vector<MatrixCell>(M.cols));
  for (int d = 1; d <= M.rows; ++d) {
    const long H = hilbert_at(A, d);
    for (int r = 1; r <= M.cols; ++r) {
      MatrixCell& cell = M.cells[d - 1][r - 1];
      if (r > H) {
        cell.kind = CellKind::Infinite;
        continue;
      }
      std::optional<long> v = vasconcelos_fn(A, d, r, budget);
      if (v) {
        cell.kind = CellKind::Exact;
        cell.value = *v;
        continue;
      }
      long fp = footprint_fn(A, d, r);
      if (fp == A.degree) {
        cell.kind = CellKind::Exact;
        cell.value = A.degree;
        continue;
      }
      cell.kind = CellKind::Interval;
      cell.lo = std::max(fp, static_cast<long>(r));
      cell.hi = std::min(A.degree, A.degree - H + r);
    }
  }
  return M;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Delta: return "delta";
    case MatrixKind::Footprint: return "footprint";
    case MatrixKind::Vasconcelos: return "vasconcelos";
  }
  return "";
}

namespace {

std::string cell_text(const MatrixCell& c, bool csv) {
  switch (c.kind) {
    case CellKind::Exact: return std::to_string(c.value);
    case CellKind::Infinite: return csv ? "inf" : "∞";
    case CellKind::Interval: {
      std::string s = std::to_string(c.lo) + ".." + std::to_string(c.hi);
      return csv ? s : "[" + s + "]";
    }
  }
  return "";
}

}  // namespace

std::string render_matrix(const FnMatrix& M, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::Json) {
    nlohmann::json j;
    j["kind"] = matrix_kind_name(M.kind);
    j["rows"] = M.rows;
    j["cols"] = M.cols;
    nlohmann::json cells = nlohmann::json::array();
    for (int d = 1; d <= M.rows; ++d) {
      nlohmann::json row = nlohmann::json::array();
      for (int r = 1; r <= M.cols; ++r) {
        const MatrixCell& c = M.at(d, r);
        nlohmann::json jc;
        switch (c.kind) {
          case CellKind::Exact:
            jc["value"] = c.value;
            break;
          case CellKind::Infinite:
            jc["value"] = nullptr;
            jc["infinite"] = true;
            break;
          case CellKind::Interval:
            jc["value"] = nullptr;
            jc["lo"] = c.lo;
            jc["hi"] = c.hi;
            break;
        }
        row.push_back(jc);
      }
      cells.push_back(row);
    }
    j["cells"] = cells;
    out << j.dump(2) << "\n";
    return out.str();
  }

  if (fmt == Format::Csv) {
    out << "d/r";
    for (int r = 1; r <= M.cols; ++r) out << "," << r;
    out << "\n";
    for (int d = 1; d <= M.rows; ++d) {
      out << d;
      for (int r = 1; r <= M.cols; ++r) out << "," << cell_text(M.at(d, r), true);
      out << "\n";
    }
    return out.str();
  }

  // text: aligned columns
  std::vector<size_t> width(M.cols, 1);
  std::vector<std::vector<std::string>> txt(M.rows, std::vector<std::string>(M.cols));
  for (int d = 1; d <= M.rows; ++d)
    for (int r = 1; r <= M.cols; ++r) {
      std::string s = cell_text(M.at(d, r), false);
      // the infinity sign is three bytes but one column wide
      size_t w = (M.at(d, r).kind == CellKind::Infinite) ? 1 : s.size();
      txt[d - 1][r - 1] = s;
      width[r - 1] = std::max(width[r - 1], w);
      width[r - 1] = std::max(width[r - 1], std::to_string(r).size());
    }
  out << matrix_kind_name(M.kind) << " matrix, rows d = 1.." << M.rows
      << ", columns r = 1.." << M.cols << "\n";
  out << "  d\\r";
  for (int r = 1; r <= M.cols; ++r) {
    std::string h = std::to_string(r);
    out << "  " << std::string(width[r - 1] - h.size(), ' ') << h;
  }
  out << "\n";
  bool intervals = false;
  for (int d = 1; d <= M.rows; ++d) {
    std::string h = std::to_string(d);
    out << "  " << std::string(3 - std::min<size_t>(3, h.size()), ' ') << h;
    for (int r = 1; r <= M.cols; ++r) {
      const std::string& s = txt[d - 1][r - 1];
      size_t w = (M.at(d, r).kind == CellKind::Infinite) ? 1 : s.size();
      out << "  " << std::string(width[r - 1] - w, ' ') << s;
      if (M.at(d, r).kind == CellKind::Interval) intervals = true;
    }
    out << "\n";
  }
  if (intervals)
    out << "  [lo..hi] cells: enumeration budget exceeded; bounds shown\n";
  return out.str();
}

}  // namespace ghw
