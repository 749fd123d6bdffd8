#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghw {

// Element of a finite field, identified by its code in [0, q).
// The code encodes the power-basis coefficients: code = sum c_i * p^i,
// where c_i is the coefficient of x^i. Elements compare by code.
struct Fe {
  uint32_t v = 0;
  uint16_t fid = 0;  // owning field id, checked on every operation

  friend bool operator==(Fe a, Fe b) { return a.v == b.v && a.fid == b.fid; }
  friend bool operator!=(Fe a, Fe b) { return !(a == b); }
  friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

// GF(p^k) with a fixed modulus: the lexicographically smallest monic
// irreducible polynomial of degree k over GF(p), where "smallest" reads the
// coefficient tuple (c_{k-1},...,c_0) as a base-p number. Element order is
// code order: 0 first, then coefficient-lexicographic in the same reading.
class Field {
 public:
  Field(uint32_t p, uint32_t k);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  uint16_t id() const { return id_; }

  // modulus coefficients c_0..c_k (monic, c_k = 1)
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fe zero() const { return make(0); }
  Fe one() const { return make(1); }
  Fe element(uint32_t code) const;
  Fe from_int(int64_t n) const;  // n mod p, for prime-subfield constants
  std::vector<Fe> elements() const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const;
  Fe pow(Fe a, int64_t e) const;

  // raw-code arithmetic for hot loops (no fid carried)
  uint32_t addc(uint32_t a, uint32_t b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
  }
  uint32_t subc(uint32_t a, uint32_t b) const { return addc(a, negc(b)); }
  uint32_t negc(uint32_t a) const {
    return neg_table_.empty() ? neg_slow(a) : neg_table_[a];
  }
  uint32_t mulc(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t invc(uint32_t a) const;

  // power-basis coefficients c_{k-1},...,c_0? No: returns c_0..c_{k-1}
  // indexed by power, i.e. coeffs[i] is the coefficient of x^i.
  std::vector<uint32_t> coeffs(Fe a) const;

  // canonical digit string c_{k-1}...c_1c_0 (base-p digits); requires p <= 10
  // when k > 1. For k = 1 the decimal residue is used.
  std::string to_digits(Fe a) const;
  // human-friendly form: 0, 1, a, a+1, 2a+1, a^2+a, ...
  std::string to_string(Fe a) const;
  // accepts both formats above
  Fe parse(const std::string& text) const;

  void check(Fe a) const {
    if (a.fid != id_) throw std::invalid_argument("mixed-field operands");
    if (a.v >= q_) throw std::invalid_argument("element code out of range");
  }

 private:
  Fe make(uint32_t v) const { return Fe{v, id_}; }
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t neg_slow(uint32_t a) const;
  uint32_t mul_poly(uint32_t a, uint32_t b) const;  // modulus reduction, no tables

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  uint16_t id_ = 0;
  std::vector<uint32_t> modulus_;    // c_0..c_k
  std::vector<uint32_t> exp_;        // exp_[i] = g^i, i in [0, 2(q-1))
  std::vector<uint32_t> log_;        // log_[x] for x != 0
  std::vector<uint32_t> add_table_;  // q*q, only for small q
  std::vector<uint32_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Cached constructor: same (p, k) returns the same Field object, so element
// fids agree across call sites.
FieldPtr make_field(uint32_t p, uint32_t k);
// Accepts "p^k" or a prime power "q".
FieldPtr parse_field(const std::string& text);

bool is_prime(uint32_t n);

}  // namespace ghw
