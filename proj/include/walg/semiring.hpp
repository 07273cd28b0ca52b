#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

enum class Kind { boolean, tropical, arctic, counting };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

/// Scalar of one of the four instances.  Extended naturals are stored in
/// `v`; the tokens kInf and kNegInf stand for the infinities.
struct Value {
  static constexpr std::int64_t kInf = INT64_MAX;
  static constexpr std::int64_t kNegInf = INT64_MIN;

  Kind kind = Kind::boolean;
  std::int64_t v = 0;

  bool operator==(const Value& o) const { return kind == o.kind && v == o.v; }
  bool operator!=(const Value& o) const { return !(*this == o); }
};

class semiring_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Value make_value(Kind k, std::int64_t v);  // checks the carrier
Value zero(Kind k);
Value one(Kind k);
Value top(Kind k);  // largest element in the natural order
bool is_zero(const Value& a);
bool is_one(const Value& a);
bool idempotent(Kind k);

Value add(const Value& a, const Value& b);
Value mul(const Value& a, const Value& b);
Value star(const Value& a);
Value omega(const Value& a);
Value sum_family(const std::vector<Value>& values, Kind k);

/// a <= b in the natural order (a + c = b for some c).
bool natural_leq(const Value& a, const Value& b);

std::string to_string(const Value& a);
Value parse_value(Kind k, const std::string& s);

/// Elements (s, v) of S x V with V = S.
struct Quem {
  Value s;
  Value v;
  bool operator==(const Quem& o) const { return s == o.s && v == o.v; }
};

Quem quem_add(const Quem& a, const Quem& b);
Quem quem_mul(const Quem& a, const Quem& b);
Quem quem_otimes(const Quem& q);

/// Value grid used by the exhaustive identity checks.
std::vector<Value> value_grid(Kind k);

}  // namespace walg
