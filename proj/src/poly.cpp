#include "ghw/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ghw {

Monomial::Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {
  for (int32_t x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent");
    deg += x;
  }
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) throw std::invalid_argument("variable count mismatch");
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r = b;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
  r.deg = b.deg - a.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex_desc(int nvars) {
  std::vector<int> pr(nvars);
  for (int i = 0; i < nvars; ++i) pr[i] = nvars - 1 - i;
  return MonomialOrder{OrderKind::Lex, std::move(pr)};
}

MonomialOrder MonomialOrder::lex_asc(int nvars) {
  std::vector<int> pr(nvars);
  std::iota(pr.begin(), pr.end(), 0);
  return MonomialOrder{OrderKind::Lex, std::move(pr)};
}

MonomialOrder MonomialOrder::grevlex_asc(int nvars) {
  std::vector<int> pr(nvars);
  std::iota(pr.begin(), pr.end(), 0);
  return MonomialOrder{OrderKind::GrevLex, std::move(pr)};
}

MonomialOrder MonomialOrder::make(OrderKind kind, std::vector<int> priority) {
  std::vector<int> seen(priority.size(), 0);
  for (int v : priority) {
    if (v < 0 || v >= static_cast<int>(priority.size()) || seen[v]++)
      throw std::invalid_argument("priority is not a permutation of the variables");
  }
  return MonomialOrder{kind, std::move(priority)};
}

MonomialOrder MonomialOrder::parse(const std::string& kind, const std::string& priority,
                                   int nvars) {
  OrderKind k;
  if (kind == "lex")
    k = OrderKind::Lex;
  else if (kind == "grlex")
    k = OrderKind::GrLex;
  else if (kind == "grevlex")
    k = OrderKind::GrevLex;
  else
    throw std::invalid_argument("unknown order kind: " + kind);

  if (priority.empty()) {
    if (k == OrderKind::Lex) return make(k, lex_desc(nvars).priority);
    return make(k, grevlex_asc(nvars).priority);
  }
  std::vector<int> pr;
  std::stringstream ss(priority);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() < 2 || tok[0] != 't')
      throw std::invalid_argument("priority entries look like t1,t2,...: " + tok);
    int idx = std::stoi(tok.substr(1)) - 1;
    pr.push_back(idx);
  }
  if (static_cast<int>(pr.size()) != nvars)
    throw std::invalid_argument("priority must list every variable once");
  return make(k, std::move(pr));
}

std::string MonomialOrder::str() const {
  std::string s;
  switch (kind) {
    case OrderKind::Lex: s = "lex"; break;
    case OrderKind::GrLex: s = "grlex"; break;
    case OrderKind::GrevLex: s = "grevlex"; break;
  }
  s += " ";
  for (size_t i = 0; i < priority.size(); ++i) {
    if (i) s += ">";
    s += "t" + std::to_string(priority[i] + 1);
  }
  return s;
}

int compare(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size() ||
      a.e.size() != ord.priority.size())
    throw std::invalid_argument("variable count mismatch in comparison");
  if (ord.kind != OrderKind::Lex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  }
  if (ord.kind == OrderKind::GrevLex) {
    // the side whose exponent is smaller at the least significant difference wins
    for (size_t i = ord.priority.size(); i-- > 0;) {
      int32_t av = a.e[ord.priority[i]], bv = b.e[ord.priority[i]];
      if (av != bv) return av > bv ? -1 : 1;
    }
    return 0;
  }
  for (int v : ord.priority) {
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
  }
  return 0;
}

Polynomial::Polynomial(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw std::invalid_argument("null field");
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
}

Polynomial Polynomial::constant(FieldPtr field, int nvars, Fe c) {
  Polynomial p(std::move(field), nvars);
  p.field_->check(c);
  p.add_term(std::vector<int32_t>(nvars, 0), c.v);
  return p;
}

Polynomial Polynomial::term(FieldPtr field, std::vector<int32_t> exps, Fe c) {
  Polynomial p(std::move(field), static_cast<int>(exps.size()));
  p.field_->check(c);
  for (int32_t e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  p.add_term(exps, c.v);
  return p;
}

Polynomial Polynomial::variable(FieldPtr field, int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int32_t> e(nvars, 0);
  e[var] = 1;
  Fe one = field->one();
  return term(std::move(field), std::move(e), one);
}

int32_t Polynomial::total_degree() const {
  int32_t d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), int32_t{0}));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int32_t d = -1;
  for (const auto& [e, c] : terms_) {
    int32_t t = std::accumulate(e.begin(), e.end(), int32_t{0});
    if (d == -1)
      d = t;
    else if (t != d)
      return false;
  }
  return true;
}

void Polynomial::add_term(const std::vector<int32_t>& exps, uint32_t code) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("variable count mismatch");
  if (code == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, code);
  } else {
    it->second = field_->addc(it->second, code);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!field_ || !other.field_) throw std::invalid_argument("uninitialized polynomial");
  if (field_->id() != other.field_->id())
    throw std::invalid_argument("mixed-field operands");
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("variable count mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = field_->negc(c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, b.field_->negc(c));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.field_, a.nvars_);
  std::vector<int32_t> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, a.field_->mulc(ca, cb));
    }
  return r;
}

Polynomial Polynomial::scaled(Fe c) const {
  field_->check(c);
  Polynomial r(field_, nvars_);
  if (c.v == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_.emplace(e, field_->mulc(cc, c.v));
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, uint32_t code) const {
  Polynomial r(field_, nvars_);
  if (code == 0) return r;
  std::vector<int32_t> e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + m.e[i];
    r.terms_.emplace(e, field_->mulc(ca, code));
  }
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  Fe lc = leading_coefficient(ord);
  if (lc.v == 1) return *this;
  return scaled(field_->inv(lc));
}

Fe Polynomial::evaluate(std::span<const Fe> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point has wrong number of coordinates");
  for (const Fe& x : point) field_->check(x);
  uint32_t total = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t v = c;
    for (int i = 0; i < nvars_ && v; ++i) {
      if (e[i] == 0) continue;
      uint32_t xp = field_->pow(point[i], e[i]).v;
      v = field_->mulc(v, xp);
    }
    total = field_->addc(total, v);
  }
  return Fe{total, field_->id()};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
  const std::vector<int32_t>* best = nullptr;
  Monomial bm;
  for (const auto& [e, c] : terms_) {
    Monomial m(e);
    if (!best || compare(ord, m, bm) > 0) {
      best = &e;
      bm = std::move(m);
    }
  }
  return bm;
}

Fe Polynomial::leading_coefficient(const MonomialOrder& ord) const {
  auto lm = leading_monomial(ord);
  return Fe{terms_.at(lm.e), field_->id()};
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // descending plain-lex on exponent vectors, so output is deterministic
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << "+";
    first = false;
    std::string cs = field_->to_string(Fe{c, field_->id()});
    bool has_vars = std::any_of(e.begin(), e.end(), [](int32_t x) { return x > 0; });
    if (!has_vars) {
      out << cs;
      continue;
    }
    bool need_star = false;
    if (cs != "1") {
      if (cs.find('+') != std::string::npos)
        out << "(" << cs << ")";
      else
        out << cs;
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << "t" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord) {
  for (const auto& g : divisors)
    if (g.is_zero()) throw std::invalid_argument("zero divisor in division");
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial(f.field(), f.nvars()));
  res.remainder = Polynomial(f.field(), f.nvars());

  std::vector<Monomial> lms;
  std::vector<uint32_t> lcs;
  lms.reserve(divisors.size());
  for (const auto& g : divisors) {
    lms.push_back(g.leading_monomial(ord));
    lcs.push_back(g.leading_coefficient(ord).v);
  }

  const Field& K = *f.field();
  Polynomial p = f;
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial(ord);
    uint32_t lc = p.terms().at(lm.e);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(lms[i], lm)) continue;
      Monomial q = quotient(lm, lms[i]);
      uint32_t qc = K.mulc(lc, K.invc(lcs[i]));
      res.quotients[i].add_term(q.e, qc);
      p = p - divisors[i].times_term(q, qc);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm.e, lc);
      Polynomial t(f.field(), f.nvars());
      t.add_term(lm.e, lc);
      p = p - t;
    }
  }
  return res;
}

namespace {

struct Parser {
  FieldPtr field;
  int nvars;
  const std::string& s;
  size_t pos = 0;

  Parser(FieldPtr f, int n, const std::string& text) : field(std::move(f)), nvars(n), s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term_signed();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_term_signed() {
    if (peek() == '-') {
      ++pos;
      return -parse_term();
    }
    if (peek() == '+') ++pos;
    return parse_term();
  }

  Polynomial parse_term() {
    Polynomial acc = parse_power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = acc * parse_power();
      } else if (c == '(' || c == 't' || c == 'a' || (c >= '0' && c <= '9')) {
        // juxtaposition also means product
        acc = acc * parse_power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_base();
    if (peek() == '^') {
      ++pos;
      skip_ws();
      size_t at = pos;
      long e = parse_uint();
      if (e < 0) throw ParseError(at, "expected exponent");
      if (e > 4096) throw ParseError(at, "exponent too large");
      Polynomial r = Polynomial::constant(field, nvars, field->one());
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long parse_uint() {
    skip_ws();
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') return -1;
    long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1'000'000) throw ParseError(pos, "number too large");
    }
    return v;
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos >= s.size()) throw ParseError(pos, "unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      size_t at = pos;
      ++pos;
      Polynomial inner = parse_expr();
      if (!eat(')')) throw ParseError(at, "unbalanced parenthesis");
      return inner;
    }
    if (c == 't') {
      size_t at = pos;
      ++pos;
      long idx = parse_uint();
      if (idx < 1 || idx > nvars)
        throw ParseError(at, "variable index out of range (have t1..t" +
                                 std::to_string(nvars) + ")");
      return Polynomial::term(field, unit_exps(static_cast<int>(idx) - 1), field->one());
    }
    if (c == 'a') {
      size_t at = pos;
      ++pos;
      if (field->k() == 1)
        throw ParseError(at, "symbol 'a' needs an extension field");
      long e = 1;
      if (peek() == '^') {
        ++pos;
        e = parse_uint();
        if (e < 0) throw ParseError(pos, "expected exponent after a^");
        if (e >= static_cast<long>(field->k()))
          throw ParseError(at, "power of a exceeds k-1; reduce the constant");
      }
      uint32_t mult = 1;
      for (long i = 0; i < e; ++i) mult *= field->p();
      return Polynomial::constant(field, nvars, field->element(mult));
    }
    if (c >= '0' && c <= '9') {
      long v = parse_uint();
      return Polynomial::constant(field, nvars, field->from_int(v));
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }

  std::vector<int32_t> unit_exps(int var) {
    std::vector<int32_t> e(nvars, 0);
    e[var] = 1;
    return e;
  }
};

}  // namespace

Polynomial parse_polynomial(FieldPtr field, int nvars, const std::string& text) {
  Parser p(std::move(field), nvars, text);
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError(p.pos, "trailing input");
  return r;
}

}  // namespace ghw
