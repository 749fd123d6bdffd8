#include "ghw/gf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

namespace ghw {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense univariate polynomials over GF(p), coefficient of x^i at index i
using Upoly = std::vector<uint32_t>;

void trim(Upoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Upoly mul_mod_p(const Upoly& f, const Upoly& g, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Upoly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(f[i]) * g[j]) % p;
  trim(r);
  return r;
}

// remainder of f by monic divisor m
Upoly rem_mod_p(Upoly f, const Upoly& m, uint32_t p) {
  trim(f);
  while (f.size() >= m.size()) {
    uint32_t c = f.back();
    size_t shift = f.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t t = static_cast<uint64_t>(c) * m[i] % p;
      f[shift + i] = (f[shift + i] + p - static_cast<uint32_t>(t)) % p;
    }
    trim(f);
  }
  return f;
}

Upoly decode(uint32_t code, uint32_t p, uint32_t k) {
  Upoly f(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    f[i] = code % p;
    code /= p;
  }
  trim(f);
  return f;
}

uint32_t encode(const Upoly& f, uint32_t p) {
  uint32_t code = 0;
  for (size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

bool is_irreducible(const Upoly& f, uint32_t p) {
  // trial division by every monic polynomial of degree 1..deg(f)/2
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      Upoly g = decode(static_cast<uint32_t>(code), p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

std::atomic<uint16_t> next_field_id{1};

}  // namespace

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field size above 2^16 not supported");
  }
  q_ = static_cast<uint32_t>(q);
  id_ = next_field_id.fetch_add(1);

  // smallest monic irreducible of degree k, by coefficient code
  for (uint32_t code = 0;; ++code) {
    Upoly m = decode(code, p_, k_);
    m.resize(k_ + 1, 0);
    m[k_] = 1;
    if (k_ == 1 || is_irreducible(m, p_)) {
      modulus_ = m;
      break;
    }
    if (code + 1 == q_) throw std::logic_error("no irreducible modulus found");
  }

  // multiplication via a discrete log on a generator of the unit group
  if (q_ > 2) {
    auto factors = prime_factors(q_ - 1);
    uint32_t gen = 0;
    for (uint32_t g = 2; g < q_ && gen == 0; ++g) {
      bool ok = true;
      for (uint32_t ell : factors) {
        uint32_t x = 1, e = (q_ - 1) / ell, base = g;
        // square-and-multiply with table-free multiplication
        uint32_t bb = base;
        uint32_t ee = e;
        x = 1;
        while (ee) {
          if (ee & 1) x = mul_poly(x, bb);
          bb = mul_poly(bb, bb);
          ee >>= 1;
        }
        if (x == 1) {
          ok = false;
          break;
        }
      }
      if (ok) gen = g;
    }
    if (gen == 0) throw std::logic_error("no generator found");
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_poly(x, gen);
    }
    for (uint32_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
  } else {
    exp_ = {1, 1};
    log_ = {0, 0};
  }

  if (q_ <= 1024) {
    add_table_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_table_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
      neg_table_[a] = neg_slow(a);
      for (uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }
  }
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
  Upoly f = decode(a, p_, k_), g = decode(b, p_, k_);
  return encode(rem_mod_p(mul_mod_p(f, g, p_), modulus_, p_), p_);
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

uint32_t Field::neg_slow(uint32_t a) const {
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

Fe Field::element(uint32_t code) const {
  if (code >= q_) throw std::invalid_argument("element code out of range");
  return make(code);
}

Fe Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return make(static_cast<uint32_t>(r));
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> out;
  out.reserve(q_);
  for (uint32_t v = 0; v < q_; ++v) out.push_back(make(v));
  return out;
}

Fe Field::add(Fe a, Fe b) const {
  check(a);
  check(b);
  return make(addc(a.v, b.v));
}

Fe Field::sub(Fe a, Fe b) const {
  check(a);
  check(b);
  return make(subc(a.v, b.v));
}

Fe Field::neg(Fe a) const {
  check(a);
  return make(negc(a.v));
}

Fe Field::mul(Fe a, Fe b) const {
  check(a);
  check(b);
  return make(mulc(a.v, b.v));
}

uint32_t Field::invc(uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return exp_[(q_ - 1) - log_[a]];
}

Fe Field::inv(Fe a) const {
  check(a);
  return make(invc(a.v));
}

Fe Field::div(Fe a, Fe b) const {
  check(a);
  check(b);
  return make(mulc(a.v, invc(b.v)));
}

Fe Field::pow(Fe a, int64_t e) const {
  check(a);
  if (a.v == 0) {
    if (e < 0) throw std::domain_error("division by zero");
    return e == 0 ? one() : zero();
  }
  int64_t ord = q_ - 1;
  int64_t r = e % ord;
  if (r < 0) r += ord;
  uint64_t idx = static_cast<uint64_t>(log_[a.v]) * r % ord;
  return make(exp_[idx]);
}

std::vector<uint32_t> Field::coeffs(Fe a) const {
  check(a);
  std::vector<uint32_t> cs(k_, 0);
  uint32_t v = a.v;
  for (uint32_t i = 0; i < k_; ++i) {
    cs[i] = v % p_;
    v /= p_;
  }
  return cs;
}

std::string Field::to_digits(Fe a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.v);
  if (p_ > 10) throw std::invalid_argument("digit format needs p <= 10");
  std::string s;
  auto cs = coeffs(a);
  for (size_t i = cs.size(); i-- > 0;) s += static_cast<char>('0' + cs[i]);
  return s;
}

std::string Field::to_string(Fe a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.v);
  if (a.v == 0) return "0";
  auto cs = coeffs(a);
  std::ostringstream out;
  bool first = true;
  for (size_t i = cs.size(); i-- > 0;) {
    if (cs[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || cs[i] > 1) out << cs[i];
    if (i >= 1) {
      if (cs[i] > 1) out << "*";
      out << "a";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Fe Field::parse(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("empty field element");
  bool digits_only = std::all_of(text.begin(), text.end(),
                                 [](char c) { return c >= '0' && c <= '9'; });
  if (digits_only) {
    if (k_ == 1) {
      uint64_t v = std::stoull(text);
      return make(static_cast<uint32_t>(v % p_));
    }
    if (text.size() > k_) throw std::invalid_argument("digit string longer than k");
    uint32_t v = 0;
    for (char c : text) {
      uint32_t d = static_cast<uint32_t>(c - '0');
      if (d >= p_) throw std::invalid_argument("digit out of range for base p");
      v = v * p_ + d;
    }
    return make(v);
  }
  // sum of c, a, c*a, a^j, c*a^j terms
  if (k_ == 1) throw std::invalid_argument("unexpected symbol in prime-field element");
  uint32_t total = 0;
  size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] == '+') {
      ++pos;
      continue;
    }
    uint64_t c = 1;
    bool saw_coeff = false;
    if (text[pos] >= '0' && text[pos] <= '9') {
      c = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        c = c * 10 + (text[pos++] - '0');
      saw_coeff = true;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    uint32_t power = 0;
    if (pos < text.size() && text[pos] == 'a') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
          throw std::invalid_argument("bad exponent in field element");
        power = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
          power = power * 10 + (text[pos++] - '0');
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("bad field element syntax");
    }
    if (power >= k_) throw std::invalid_argument("power of a exceeds k-1");
    uint32_t mult = 1;
    for (uint32_t i = 0; i < power; ++i) mult *= p_;
    total = addc(total, static_cast<uint32_t>(c % p_) * mult);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty field element");
  return make(total);
}

FieldPtr make_field(uint32_t p, uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<Field>(p, k);
  cache[key] = f;
  return f;
}

namespace {

uint64_t parse_number(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad field spec, expected p^k or a prime power: " +
                                text);
  return std::stoull(text);
}

}  // namespace

FieldPtr parse_field(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    uint32_t p = static_cast<uint32_t>(parse_number(text.substr(0, caret)));
    uint32_t k = static_cast<uint32_t>(parse_number(text.substr(caret + 1)));
    return make_field(p, k);
  }
  uint64_t q = parse_number(text);
  if (q < 2) throw std::invalid_argument("field size must be >= 2");
  for (uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    if (q % p) continue;
    uint64_t m = q;
    uint32_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) break;
    return make_field(p, k);
  }
  throw std::invalid_argument("field size is not a prime power: " + text);
}

}  // namespace ghw
