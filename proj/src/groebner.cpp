#include "ghw/groebner.hpp"

#include <algorithm>
#include <set>

#include "ghw/linalg.hpp"

namespace ghw {

namespace {

// drop generators divisible by another generator; sort for canonical form
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.deg != b.deg) return a.deg < b.deg;
              return a.e < b.e;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

void check_nvars(const MonomialIdeal& L, const Monomial& m) {
  if (m.nvars() != L.nvars)
    throw std::invalid_argument("variable count mismatch");
}

// all exponent vectors of total degree d over nvars variables, ascending lex
void for_each_exponent(int nvars, int d,
                       const std::function<void(const std::vector<int32_t>&)>& fn) {
  std::vector<int32_t> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == nvars - 1) {
      e[i] = rest;
      fn(e);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      e[i] = v;
      rec(i + 1, rest - v);
    }
  };
  if (nvars == 0) return;
  rec(0, d);
}

}  // namespace

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens) {
  for (const auto& m : gens)
    if (m.nvars() != nvars) throw std::invalid_argument("variable count mismatch");
  return MonomialIdeal{nvars, minimalize(std::move(gens))};
}

bool contains(const MonomialIdeal& L, const Monomial& m) {
  check_nvars(L, m);
  for (const auto& g : L.gens)
    if (divides(g, m)) return true;
  return false;
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.nvars == b.nvars && a.gens == b.gens;
}

MonomialIdeal add_generators(const MonomialIdeal& L, std::span<const Monomial> extra) {
  std::vector<Monomial> gens = L.gens;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return make_monomial_ideal(L.nvars, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& L, const Monomial& m) {
  check_nvars(L, m);
  std::vector<Monomial> gens;
  gens.reserve(L.gens.size());
  for (const auto& g : L.gens) gens.push_back(quotient(g, gcd(g, m)));
  return make_monomial_ideal(L.nvars, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& L, std::span<const Monomial> ms) {
  if (ms.empty()) throw std::invalid_argument("colon by an empty monomial list");
  MonomialIdeal acc = colon(L, ms[0]);
  for (size_t i = 1; i < ms.size(); ++i) {
    MonomialIdeal next = colon(L, ms[i]);
    // intersection of monomial ideals: lcms of generator pairs
    std::vector<Monomial> gens;
    gens.reserve(acc.gens.size() * next.gens.size());
    for (const auto& a : acc.gens)
      for (const auto& b : next.gens) gens.push_back(lcm(a, b));
    acc = make_monomial_ideal(acc.nvars, std::move(gens));
  }
  return acc;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& L, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Monomial> out;
  for_each_exponent(L.nvars, d, [&](const std::vector<int32_t>& e) {
    Monomial m(e);
    if (!contains(L, m)) out.push_back(std::move(m));
  });
  return out;
}

long hilbert_function(const MonomialIdeal& L, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  long count = 0;
  for_each_exponent(L.nvars, d, [&](const std::vector<int32_t>& e) {
    for (const auto& g : L.gens) {
      bool div = true;
      for (int i = 0; i < L.nvars; ++i)
        if (g.e[i] > e[i]) {
          div = false;
          break;
        }
      if (div) return;
    }
    ++count;
  });
  return count;
}

int krull_dimension(const MonomialIdeal& L) {
  if (L.is_unit()) return -1;
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << L.nvars); ++mask) {
    bool ok = true;
    for (const auto& g : L.gens) {
      bool inside = true;
      for (int i = 0; i < L.nvars; ++i)
        if (g.e[i] > 0 && !(mask & (1u << i))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

DegReg degree_and_regularity(const MonomialIdeal& L) {
  if (L.is_unit()) return DegReg{0, 0};
  int dim = krull_dimension(L);
  if (dim > 1)
    throw std::invalid_argument("degree/regularity supported for dim(S/L) <= 1 only");

  int max_gen_deg = 0;
  long cap = 2 + L.nvars;
  for (const auto& g : L.gens) {
    max_gen_deg = std::max(max_gen_deg, g.deg);
    cap += g.deg;
  }

  std::vector<long> hf;
  long v = -1;
  for (int d = 0;; ++d) {
    hf.push_back(hilbert_function(L, d));
    int last = static_cast<int>(hf.size()) - 1;
    if (last >= 1 && last - 1 >= max_gen_deg && hf[last - 1] == hf[last]) {
      // candidate plateau; confirm one degree further
      long next = hilbert_function(L, last + 1);
      if (next == hf[last]) {
        v = hf[last];
        break;
      }
      hf.push_back(next);
      ++d;
    }
    if (d > cap) throw std::logic_error("Hilbert function failed to stabilize");
  }

  DegReg out;
  if (v == 0) {
    out.degree = 0;
    for (long h : hf) out.degree += h;
    int reg = 0;
    for (size_t i = 0; i < hf.size(); ++i)
      if (hf[i] != 0) reg = static_cast<int>(i) + 1;
    out.regularity = reg;
  } else {
    out.degree = v;
    int reg = 0;
    for (size_t i = 0; i < hf.size(); ++i)
      if (hf[i] != v) reg = static_cast<int>(i) + 1;
    out.regularity = reg;
  }
  return out;
}

namespace {

struct PairKey {
  int32_t lcm_deg;
  std::vector<int32_t> lcm_e;
  size_t i, j;

  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (a.lcm_e != b.lcm_e) return a.lcm_e < b.lcm_e;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> input, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& g : input)
    if (!g.is_zero()) basis.push_back(g.monic(ord));
  if (basis.empty()) throw std::invalid_argument("no nonzero generators");
  const FieldPtr field = basis[0].field();
  const int nvars = basis[0].nvars();
  if (static_cast<int>(ord.priority.size()) != nvars)
    throw std::invalid_argument("order has wrong variable count");

  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.leading_monomial(ord));

  std::set<PairKey> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial l = lcm(lms[i], lms[j]);
      pairs.insert(PairKey{l.deg, l.e, i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    PairKey key = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial &mi = lms[key.i], &mj = lms[key.j];
    if (coprime(mi, mj)) continue;  // S-polynomial reduces to zero
    Monomial l = lcm(mi, mj);
    Polynomial sp = basis[key.i].times_term(quotient(l, mi), 1) -
                    basis[key.j].times_term(quotient(l, mj), 1);
    if (sp.is_zero()) continue;
    Polynomial rem = divide(sp, basis, ord).remainder;
    if (rem.is_zero()) continue;
    basis.push_back(rem.monic(ord));
    lms.push_back(basis.back().leading_monomial(ord));
    if (basis.size() > 10000)
      throw std::logic_error("Groebner basis computation exploded");
    push_pairs(basis.size() - 1);
  }

  // minimal: drop any generator whose leading monomial another one divides
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!divides(lms[j], lms[i])) continue;
      if (lms[j] != lms[i] || j < i) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      minimal.push_back(basis[i]);
      minimal_lms.push_back(lms[i]);
    }
  }

  // reduced: every tail is in normal form with respect to the others
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (others.empty()) {
      reduced.push_back(minimal[i]);
      continue;
    }
    reduced.push_back(divide(minimal[i], others, ord).remainder.monic(ord));
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compare(ord, a.leading_monomial(ord), b.leading_monomial(ord)) < 0;
            });
  return GroebnerBasis{ord, std::move(reduced)};
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.gens.size());
  for (const auto& g : gb.gens) lms.push_back(g.leading_monomial(gb.order));
  return make_monomial_ideal(gb.gens[0].nvars(), std::move(lms));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return divide(f, gb.gens, gb.order).remainder;
}

long evaluation_rank(const PointSet& X, int d) {
  const FieldPtr& field = X.field;
  std::vector<std::vector<int32_t>> monos;
  for_each_exponent(X.nvars, d, [&](const std::vector<int32_t>& e) { monos.push_back(e); });
  GfMatrix M(field, static_cast<int>(monos.size()), static_cast<int>(X.points.size()));
  for (size_t r = 0; r < monos.size(); ++r) {
    Polynomial mono = Polynomial::term(field, monos[r], field->one());
    for (size_t c = 0; c < X.points.size(); ++c)
      M.set(static_cast<int>(r), static_cast<int>(c),
            mono.evaluate(X.points[c].coords).v);
  }
  return M.rank();
}

namespace {

// kernel of the degree-d evaluation map, one polynomial per kernel vector
std::vector<Polynomial> evaluation_kernel(const PointSet& X, int d, long* rank_out) {
  const FieldPtr& field = X.field;
  std::vector<std::vector<int32_t>> monos;
  for_each_exponent(X.nvars, d, [&](const std::vector<int32_t>& e) { monos.push_back(e); });
  GfMatrix M(field, static_cast<int>(X.points.size()), static_cast<int>(monos.size()));
  for (size_t c = 0; c < monos.size(); ++c) {
    Polynomial mono = Polynomial::term(field, monos[c], field->one());
    for (size_t r = 0; r < X.points.size(); ++r)
      M.set(static_cast<int>(r), static_cast<int>(c),
            mono.evaluate(X.points[r].coords).v);
  }
  auto kernel = M.right_kernel();
  if (rank_out)
    *rank_out = static_cast<long>(monos.size()) - static_cast<long>(kernel.size());
  std::vector<Polynomial> polys;
  for (const auto& v : kernel) {
    Polynomial f(field, X.nvars);
    for (size_t c = 0; c < monos.size(); ++c)
      if (v[c]) f.add_term(monos[c], v[c]);
    polys.push_back(std::move(f));
  }
  return polys;
}

void validate_vanishing_basis(const PointSet& X, const GroebnerBasis& gb) {
  for (const auto& g : gb.gens) {
    if (!g.is_homogeneous())
      throw std::logic_error("vanishing basis has a non-homogeneous element");
    for (const auto& P : X.points)
      if (g.evaluate(P.coords).v != 0)
        throw std::logic_error("vanishing basis element does not vanish on X");
  }
  MonomialIdeal L = initial_ideal(gb);
  DegReg dr = degree_and_regularity(L);
  if (dr.degree != static_cast<long>(X.size()))
    throw std::logic_error("vanishing ideal degree does not match |X|");
  for (int d = 1; d <= dr.regularity + 1; ++d)
    if (hilbert_function(L, d) != evaluation_rank(X, d))
      throw std::logic_error("Hilbert function disagrees with evaluation rank");
}

}  // namespace

GroebnerBasis vanishing_ideal_points(const PointSet& X, const MonomialOrder& ord) {
  if (X.points.empty()) throw std::invalid_argument("empty point set");
  const long m = static_cast<long>(X.size());
  std::vector<Polynomial> gens;
  int d = 1;
  int stop = -1;
  for (; stop < 0 || d <= stop; ++d) {
    long rank = 0;
    auto kernel = evaluation_kernel(X, d, &rank);
    gens.insert(gens.end(), kernel.begin(), kernel.end());
    if (stop < 0 && rank == m) stop = d + 1;
    if (d > 4 * (m + X.nvars))
      throw std::logic_error("evaluation rank never reached |X|");
  }
  GroebnerBasis gb = buchberger(gens, ord);
  validate_vanishing_basis(X, gb);
  return gb;
}

GroebnerBasis vanishing_basis(const PointSet& X, const MonomialOrder& ord) {
  if (X.family == Family::Custom) return vanishing_ideal_points(X, ord);
  std::vector<Polynomial> gens = vanishing_generators(X);
  GroebnerBasis gb = buchberger(gens, ord);
  try {
    validate_vanishing_basis(X, gb);
  } catch (const std::logic_error&) {
    // published set can fall short for unusual nested families
    return vanishing_ideal_points(X, ord);
  }
  return gb;
}

}  // namespace ghw
