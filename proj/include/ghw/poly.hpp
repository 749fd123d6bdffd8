#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ghw/gf.hpp"

namespace ghw {

// exponent vector with cached total degree
struct Monomial {
  std::vector<int32_t> e;
  int32_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps);

  int nvars() const { return static_cast<int>(e.size()); }
  bool is_one() const { return deg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mul(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GrLex, GrevLex };

// Monomial order with an explicit variable priority: priority[0] is the index
// of the most significant variable. Graded kinds compare total degree first.
struct MonomialOrder {
  OrderKind kind = OrderKind::Lex;
  std::vector<int> priority;

  static MonomialOrder lex_desc(int nvars);      // t_s > ... > t_1
  static MonomialOrder lex_asc(int nvars);       // t_1 > ... > t_s
  static MonomialOrder grevlex_asc(int nvars);   // grevlex, t_1 > ... > t_s
  static MonomialOrder make(OrderKind kind, std::vector<int> priority);
  static MonomialOrder parse(const std::string& kind, const std::string& priority,
                             int nvars);

  std::string str() const;
};

// -1 if a < b, 0 if equal, +1 if a > b
int compare(const MonomialOrder& ord, const Monomial& a, const Monomial& b);

struct ParseError : std::invalid_argument {
  size_t pos;
  ParseError(size_t at, const std::string& msg)
      : std::invalid_argument("parse error at position " + std::to_string(at) +
                              ": " + msg),
        pos(at) {}
};

// Sparse multivariate polynomial over a fixed field, variables t1..ts.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldPtr field, int nvars);

  static Polynomial constant(FieldPtr field, int nvars, Fe c);
  static Polynomial term(FieldPtr field, std::vector<int32_t> exps, Fe c);
  static Polynomial variable(FieldPtr field, int nvars, int var);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int32_t>, uint32_t>& terms() const { return terms_; }

  int32_t total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;   // true for the zero polynomial

  void add_term(const std::vector<int32_t>& exps, uint32_t code);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(Fe c) const;
  Polynomial times_term(const Monomial& m, uint32_t code) const;
  Polynomial monic(const MonomialOrder& ord) const;

  Fe evaluate(std::span<const Fe> point) const;

  // leading data under an order; polynomial must be nonzero
  Monomial leading_monomial(const MonomialOrder& ord) const;
  Fe leading_coefficient(const MonomialOrder& ord) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_compatible(const Polynomial& other) const;

  FieldPtr field_;
  int nvars_ = 0;
  std::map<std::vector<int32_t>, uint32_t> terms_;  // exps -> coefficient code
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: at each step the first divisor (in the given list
// order) whose leading monomial divides the current leading term is used.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord);

// Polynomial expression parser. Accepts +, -, *, ^, parentheses, variables
// t1..ts, decimal prime-subfield constants, and extension-field constants in
// the "a" form (parenthesize sums: "(a+1)*t1"). Throws ParseError.
Polynomial parse_polynomial(FieldPtr field, int nvars, const std::string& text);

}  // namespace ghw
