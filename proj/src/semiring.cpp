#include "walg/semiring.hpp"

#include <algorithm>

namespace walg {

namespace {

constexpr std::int64_t kInf = Value::kInf;
constexpr std::int64_t kNegInf = Value::kNegInf;

void same_kind(const Value& a, const Value& b) {
  if (a.kind != b.kind)
    throw semiring_error(std::string("mixed semiring instances: ") + kind_name(a.kind) + " and " +
                         kind_name(b.kind));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r) || r == kInf) throw semiring_error("integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r) || r == kInf) throw semiring_error("integer overflow");
  return r;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::boolean: return "boolean";
    case Kind::tropical: return "tropical";
    case Kind::arctic: return "arctic";
    case Kind::counting: return "counting";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "boolean") return Kind::boolean;
  if (s == "tropical") return Kind::tropical;
  if (s == "arctic") return Kind::arctic;
  if (s == "counting") return Kind::counting;
  throw semiring_error("unknown semiring '" + s + "'");
}

Value make_value(Kind k, std::int64_t v) {
  bool ok = false;
  switch (k) {
    case Kind::boolean: ok = v == 0 || v == 1; break;
    case Kind::tropical:
    case Kind::counting: ok = v >= 0; break;
    case Kind::arctic: ok = v >= 0 || v == kNegInf; break;
  }
  if (!ok) throw semiring_error(std::string("value outside the ") + kind_name(k) + " carrier");
  return Value{k, v};
}

Value zero(Kind k) {
  switch (k) {
    case Kind::tropical: return Value{k, kInf};
    case Kind::arctic: return Value{k, kNegInf};
    default: return Value{k, 0};
  }
}

Value one(Kind k) {
  switch (k) {
    case Kind::tropical:
    case Kind::arctic: return Value{k, 0};
    default: return Value{k, 1};
  }
}

Value top(Kind k) {
  switch (k) {
    case Kind::boolean: return Value{k, 1};
    case Kind::tropical: return Value{k, 0};
    default: return Value{k, kInf};
  }
}

bool is_zero(const Value& a) { return a == zero(a.kind); }
bool is_one(const Value& a) { return a == one(a.kind); }
bool idempotent(Kind k) { return k != Kind::counting; }

Value add(const Value& a, const Value& b) {
  same_kind(a, b);
  switch (a.kind) {
    case Kind::boolean: return Value{a.kind, a.v | b.v};
    case Kind::tropical: return Value{a.kind, std::min(a.v, b.v)};
    case Kind::arctic: return Value{a.kind, std::max(a.v, b.v)};
    case Kind::counting:
      if (a.v == kInf || b.v == kInf) return Value{a.kind, kInf};
      return Value{a.kind, checked_add(a.v, b.v)};
  }
  return a;
}

Value mul(const Value& a, const Value& b) {
  same_kind(a, b);
  switch (a.kind) {
    case Kind::boolean: return Value{a.kind, a.v & b.v};
    case Kind::tropical:
      if (a.v == kInf || b.v == kInf) return Value{a.kind, kInf};
      return Value{a.kind, checked_add(a.v, b.v)};
    case Kind::arctic:
      // -inf is the zero and annihilates, also against +inf
      if (a.v == kNegInf || b.v == kNegInf) return Value{a.kind, kNegInf};
      if (a.v == kInf || b.v == kInf) return Value{a.kind, kInf};
      return Value{a.kind, checked_add(a.v, b.v)};
    case Kind::counting:
      if (a.v == 0 || b.v == 0) return Value{a.kind, 0};
      if (a.v == kInf || b.v == kInf) return Value{a.kind, kInf};
      return Value{a.kind, checked_mul(a.v, b.v)};
  }
  return a;
}

Value star(const Value& a) {
  switch (a.kind) {
    case Kind::boolean: return one(a.kind);
    case Kind::tropical: return one(a.kind);
    case Kind::arctic:
      return (a.v == kNegInf || a.v == 0) ? one(a.kind) : Value{a.kind, kInf};
    case Kind::counting: return a.v == 0 ? one(a.kind) : Value{a.kind, kInf};
  }
  return a;
}

Value omega(const Value& a) {
  switch (a.kind) {
    case Kind::boolean: return a;
    case Kind::tropical: return a.v == 0 ? a : Value{a.kind, kInf};
    case Kind::arctic: return (a.v == kNegInf || a.v == 0) ? a : Value{a.kind, kInf};
    case Kind::counting: return (a.v <= 1) ? a : Value{a.kind, kInf};
  }
  return a;
}

Value sum_family(const std::vector<Value>& values, Kind k) {
  Value acc = zero(k);
  for (const auto& v : values) acc = add(acc, v);
  return acc;
}

bool natural_leq(const Value& a, const Value& b) {
  same_kind(a, b);
  switch (a.kind) {
    case Kind::boolean: return a.v <= b.v;
    case Kind::tropical: return b.v <= a.v;
    case Kind::arctic:
    case Kind::counting: return a.v <= b.v;
  }
  return false;
}

std::string to_string(const Value& a) {
  if (a.v == kInf) return "inf";
  if (a.v == kNegInf) return "-inf";
  return std::to_string(a.v);
}

Value parse_value(Kind k, const std::string& s) {
  if (s == "inf" || s == "+inf") {
    if (k == Kind::boolean) throw semiring_error("inf is not a boolean value");
    return Value{k, kInf};
  }
  if (s == "-inf") {
    if (k != Kind::arctic) throw semiring_error("-inf is only legal in the arctic semiring");
    return Value{k, kNegInf};
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw semiring_error("malformed value '" + s + "'");
  std::int64_t v = 0;
  for (char c : s) v = checked_add(checked_mul(v, 10), c - '0');
  return make_value(k, v);
}

Quem quem_add(const Quem& a, const Quem& b) { return {add(a.s, b.s), add(a.v, b.v)}; }

Quem quem_mul(const Quem& a, const Quem& b) { return {mul(a.s, b.s), add(a.v, mul(a.s, b.v))}; }

Quem quem_otimes(const Quem& q) { return {star(q.s), add(omega(q.s), mul(star(q.s), q.v))}; }

std::vector<Value> value_grid(Kind k) {
  if (k == Kind::boolean) return {Value{k, 0}, Value{k, 1}};
  std::vector<Value> g = {Value{k, 0}, Value{k, 1}, Value{k, 2}, Value{k, 3}, Value{k, kInf}};
  if (k == Kind::arctic) g.push_back(Value{k, kNegInf});
  return g;
}

}  // namespace walg
