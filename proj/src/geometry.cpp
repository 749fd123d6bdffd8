#include "ghw/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ghw {

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.coords.size() != b.coords.size())
    return a.coords.size() < b.coords.size();
  for (size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i].v != b.coords[i].v) return a.coords[i].v < b.coords[i].v;
  return false;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::AffineCartesian: return "affine-cartesian";
    case Family::NestedCartesian: return "nested-cartesian";
    case Family::ProjectiveSpace: return "projective-space";
    case Family::Torus: return "torus";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& name) {
  if (name == "affine-cartesian") return Family::AffineCartesian;
  if (name == "nested-cartesian") return Family::NestedCartesian;
  if (name == "projective-space") return Family::ProjectiveSpace;
  if (name == "torus") return Family::Torus;
  if (name == "custom") return Family::Custom;
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<int32_t> PointSet::factor_sizes() const {
  std::vector<int32_t> sizes;
  sizes.reserve(factors.size());
  for (const auto& A : factors) sizes.push_back(static_cast<int32_t>(A.size()));
  return sizes;
}

namespace {

void check_factor(const Field& K, const std::vector<Fe>& A, size_t idx) {
  if (A.empty())
    throw std::invalid_argument("factor A_" + std::to_string(idx + 1) + " is empty");
  std::set<uint32_t> seen;
  for (Fe x : A) {
    K.check(x);
    if (!seen.insert(x.v).second)
      throw std::invalid_argument("factor A_" + std::to_string(idx + 1) +
                                  " has duplicate elements");
  }
}

ProjectivePoint normalize_first_nonzero(const Field& K, std::vector<Fe> coords) {
  size_t lead = coords.size();
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i].v) {
      lead = i;
      break;
    }
  if (lead == coords.size())
    throw std::invalid_argument("projective point cannot be the zero tuple");
  uint32_t inv = K.invc(coords[lead].v);
  for (auto& c : coords) c = Fe{K.mulc(c.v, inv), c.fid};
  return ProjectivePoint{std::move(coords)};
}

void sort_points(PointSet& X) {
  std::sort(X.points.begin(), X.points.end());
  X.points.erase(std::unique(X.points.begin(), X.points.end()), X.points.end());
}

// every tuple of A_1 x ... x A_n, visited in factor order
void for_each_tuple(const std::vector<std::vector<Fe>>& factors,
                    const std::function<void(const std::vector<Fe>&)>& fn) {
  std::vector<Fe> tuple(factors.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == factors.size()) {
      fn(tuple);
      return;
    }
    for (Fe x : factors[i]) {
      tuple[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

PointSet affine_cartesian_set(FieldPtr field, std::vector<std::vector<Fe>> factors) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  for (size_t i = 0; i < factors.size(); ++i) {
    check_factor(*field, factors[i], i);
    if (factors[i].size() < 2)
      throw std::invalid_argument("factor A_" + std::to_string(i + 1) +
                                  " needs at least 2 elements");
  }
  PointSet X;
  X.field = field;
  X.nvars = static_cast<int>(factors.size()) + 1;
  X.family = Family::AffineCartesian;
  X.factors = factors;
  Fe one = field->one();
  for_each_tuple(factors, [&](const std::vector<Fe>& tuple) {
    std::vector<Fe> coords = tuple;
    coords.push_back(one);
    X.points.push_back(ProjectivePoint{std::move(coords)});
  });
  sort_points(X);
  return X;
}

PointSet nested_cartesian_set(FieldPtr field, std::vector<std::vector<Fe>> factors) {
  const Field& K = *field;
  if (factors.size() < 2) throw std::invalid_argument("need at least two factors");
  for (size_t i = 0; i < factors.size(); ++i) {
    check_factor(K, factors[i], i);
    auto has = [&](uint32_t v) {
      return std::any_of(factors[i].begin(), factors[i].end(),
                         [v](Fe x) { return x.v == v; });
    };
    if (!has(0) || !has(1))
      throw std::invalid_argument("condition (i) fails: {0,1} not a subset of A_" +
                                  std::to_string(i + 1));
  }
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i].size() > factors[i + 1].size())
      throw std::invalid_argument("condition (iii) fails: |A_" + std::to_string(i + 1) +
                                  "| > |A_" + std::to_string(i + 2) + "|");
  for (size_t j = 1; j < factors.size(); ++j) {
    std::set<uint32_t> Aj;
    for (Fe x : factors[j]) Aj.insert(x.v);
    for (size_t i = 0; i < j; ++i)
      for (Fe b : factors[i]) {
        if (b.v == 0) continue;
        for (Fe a : factors[j]) {
          uint32_t ratio = K.mulc(a.v, K.invc(b.v));
          if (!Aj.count(ratio))
            throw std::invalid_argument(
                "condition (ii) fails: a/b leaves A_" + std::to_string(j + 1) +
                " for a=" + K.to_string(a) + ", b=" + K.to_string(b) + " in A_" +
                std::to_string(i + 1));
        }
      }
  }

  PointSet X;
  X.field = field;
  X.nvars = static_cast<int>(factors.size());
  X.family = Family::NestedCartesian;
  X.factors = factors;
  for_each_tuple(factors, [&](const std::vector<Fe>& tuple) {
    bool all_zero = std::all_of(tuple.begin(), tuple.end(),
                                [](Fe x) { return x.v == 0; });
    if (all_zero) return;
    X.points.push_back(normalize_first_nonzero(K, tuple));
  });
  sort_points(X);
  return X;
}

PointSet projective_space(FieldPtr field, int s) {
  if (s < 2) throw std::invalid_argument("projective space needs s >= 2");
  std::vector<std::vector<Fe>> factors(s, std::vector<Fe>{});
  auto elems = field->elements();
  for (auto& A : factors) A = elems;
  PointSet X = nested_cartesian_set(std::move(field), std::move(factors));
  X.family = Family::ProjectiveSpace;
  return X;
}

PointSet projective_torus(FieldPtr field, int s) {
  if (s < 2) throw std::invalid_argument("torus needs s >= 2");
  const Field& K = *field;
  PointSet X;
  X.field = field;
  X.nvars = s;
  X.family = Family::Torus;
  std::vector<Fe> units;
  for (Fe x : field->elements())
    if (x.v) units.push_back(x);
  std::vector<std::vector<Fe>> rest(s - 1, units);
  for_each_tuple(rest, [&](const std::vector<Fe>& tail) {
    std::vector<Fe> coords;
    coords.reserve(s);
    coords.push_back(K.one());
    for (Fe x : tail) coords.push_back(x);
    X.points.push_back(ProjectivePoint{std::move(coords)});
  });
  sort_points(X);
  return X;
}

PointSet custom_points(FieldPtr field, int s, const std::vector<std::vector<Fe>>& coords) {
  if (s < 1) throw std::invalid_argument("need at least one coordinate");
  PointSet X;
  X.field = field;
  X.nvars = s;
  X.family = Family::Custom;
  for (const auto& c : coords) {
    if (static_cast<int>(c.size()) != s)
      throw std::invalid_argument("point has wrong number of coordinates");
    for (Fe x : c) field->check(x);
    X.points.push_back(normalize_first_nonzero(*field, c));
  }
  if (X.points.empty()) throw std::invalid_argument("empty point set");
  sort_points(X);
  return X;
}

namespace {

// prod_{gamma in A}(t_var - gamma * t_hom), the degree-|A| homogeneous
// polynomial vanishing where t_var/t_hom lies in A
Polynomial factor_annihilator(const FieldPtr& field, int nvars, int var, int hom,
                              const std::vector<Fe>& A) {
  Polynomial acc = Polynomial::constant(field, nvars, field->one());
  Polynomial tv = Polynomial::variable(field, nvars, var);
  Polynomial th = Polynomial::variable(field, nvars, hom);
  for (Fe gamma : A) acc = acc * (tv - th.scaled(gamma));
  return acc;
}

}  // namespace

std::vector<Polynomial> vanishing_generators(const PointSet& X) {
  const FieldPtr& field = X.field;
  int s = X.nvars;
  std::vector<Polynomial> gens;
  switch (X.family) {
    case Family::AffineCartesian: {
      for (size_t i = 0; i < X.factors.size(); ++i)
        gens.push_back(factor_annihilator(field, s, static_cast<int>(i), s - 1,
                                          X.factors[i]));
      break;
    }
    case Family::Torus: {
      // A_i = F_q^* relative to the last coordinate: t_i^{q-1} - t_s^{q-1}
      std::vector<Fe> units;
      for (Fe x : field->elements())
        if (x.v) units.push_back(x);
      for (int i = 0; i + 1 < s; ++i)
        gens.push_back(factor_annihilator(field, s, i, s - 1, units));
      break;
    }
    case Family::NestedCartesian:
    case Family::ProjectiveSpace: {
      // t_i t_j^{d_j} - t_i^{d_j} t_j for i < j
      auto sizes = X.factor_sizes();
      if (X.family == Family::ProjectiveSpace)
        sizes.assign(s, static_cast<int32_t>(field->q()));
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
          int32_t dj = sizes[j];
          std::vector<int32_t> e1(s, 0), e2(s, 0);
          e1[i] = 1;
          e1[j] = dj;
          e2[i] = dj;
          e2[j] = 1;
          Polynomial g = Polynomial::term(field, e1, field->one()) -
                         Polynomial::term(field, e2, field->one());
          gens.push_back(std::move(g));
        }
      break;
    }
    case Family::Custom:
      throw std::invalid_argument(
          "no published generator set for a custom family; use the points-kernel "
          "construction");
  }
  // construction check: every generator vanishes on all of X
  for (const auto& g : gens) {
    if (!g.is_homogeneous() || g.is_zero())
      throw std::logic_error("family generator is not homogeneous");
    for (const auto& P : X.points)
      if (g.evaluate(P.coords).v != 0)
        throw std::logic_error("family generator does not vanish on X");
  }
  return gens;
}

ZeroSet zero_set(const PointSet& X, std::span<const Polynomial> polys) {
  if (polys.empty()) throw std::invalid_argument("zero_set needs at least one polynomial");
  for (const auto& f : polys) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no zero set here");
    if (!f.is_homogeneous())
      throw std::invalid_argument("zero sets on projective points need homogeneous "
                                  "polynomials; got " + f.str());
    if (f.nvars() != X.nvars) throw std::invalid_argument("variable count mismatch");
    if (f.field()->id() != X.field->id())
      throw std::invalid_argument("mixed-field operands");
  }
  ZeroSet out;
  for (size_t idx = 0; idx < X.points.size(); ++idx) {
    bool all_zero = true;
    for (const auto& f : polys)
      if (f.evaluate(X.points[idx].coords).v != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) out.indices.push_back(static_cast<int>(idx));
  }
  out.zeros = static_cast<long>(out.indices.size());
  out.complement = static_cast<long>(X.points.size()) - out.zeros;
  return out;
}

PointSet parse_family_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("field")) throw std::invalid_argument("family JSON needs \"field\"");
  FieldPtr field;
  if (j["field"].is_object())
    field = make_field(j["field"].at("p").get<uint32_t>(),
                       j["field"].at("k").get<uint32_t>());
  else
    field = parse_field(j["field"].get<std::string>());
  Family fam = parse_family(j.at("family").get<std::string>());

  auto parse_factors = [&]() {
    std::vector<std::vector<Fe>> factors;
    for (const auto& entry : j.at("factors")) {
      if (entry.is_string()) {
        if (entry.get<std::string>() != "all")
          throw std::invalid_argument("factor strings must be \"all\"");
        factors.push_back(field->elements());
      } else {
        std::vector<Fe> A;
        for (const auto& el : entry) A.push_back(field->parse(el.get<std::string>()));
        factors.push_back(std::move(A));
      }
    }
    return factors;
  };

  switch (fam) {
    case Family::AffineCartesian:
      return affine_cartesian_set(field, parse_factors());
    case Family::NestedCartesian:
      return nested_cartesian_set(field, parse_factors());
    case Family::ProjectiveSpace:
      return projective_space(field, j.at("s").get<int>());
    case Family::Torus:
      return projective_torus(field, j.at("s").get<int>());
    case Family::Custom: {
      std::vector<std::vector<Fe>> pts;
      for (const auto& row : j.at("points")) {
        std::vector<Fe> coords;
        for (const auto& el : row) coords.push_back(field->parse(el.get<std::string>()));
        pts.push_back(std::move(coords));
      }
      if (pts.empty()) throw std::invalid_argument("custom family needs points");
      return custom_points(field, static_cast<int>(pts[0].size()), pts);
    }
  }
  throw std::invalid_argument("unreachable family");
}

std::string family_to_json(const PointSet& X) {
  nlohmann::json j;
  j["field"] = {{"p", X.field->p()}, {"k", X.field->k()}};
  j["family"] = family_name(X.family);
  switch (X.family) {
    case Family::AffineCartesian:
    case Family::NestedCartesian: {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& A : X.factors) {
        if (A.size() == X.field->q()) {
          factors.push_back("all");
          continue;
        }
        nlohmann::json fl = nlohmann::json::array();
        for (Fe x : A) fl.push_back(X.field->to_digits(x));
        factors.push_back(fl);
      }
      j["factors"] = factors;
      break;
    }
    case Family::ProjectiveSpace:
    case Family::Torus:
      j["s"] = X.nvars;
      break;
    case Family::Custom: {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& P : X.points) {
        nlohmann::json row = nlohmann::json::array();
        for (Fe x : P.coords) row.push_back(X.field->to_digits(x));
        pts.push_back(row);
      }
      j["points"] = pts;
      break;
    }
  }
  return j.dump();
}

MonomialOrder default_order(const PointSet& X) {
  switch (X.family) {
    case Family::NestedCartesian:
    case Family::ProjectiveSpace:
    case Family::Custom:
      return MonomialOrder::lex_desc(X.nvars);
    case Family::AffineCartesian:
    case Family::Torus:
      return MonomialOrder::grevlex_asc(X.nvars);
  }
  return MonomialOrder::lex_desc(X.nvars);
}

}  // namespace ghw
