#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dickson/checked.hpp"

namespace dickson {

struct ConstantTail {
  Nat value = 0;
  bool operator==(const ConstantTail&) const = default;
};

struct PeriodicTail {
  std::vector<Nat> block;  // nonempty
  bool operator==(const PeriodicTail&) const = default;
};

using Tail = std::variant<ConstantTail, PeriodicTail>;

/// A total function on the naturals, given by a finite prefix followed by a
/// constant or eventually repeating tail. Immutable after construction and
/// safe to share across threads.
class Seq {
 public:
  explicit Seq(std::vector<Nat> prefix = {}, Tail tail = ConstantTail{0});

  static Seq constant(Nat value) { return Seq({}, ConstantTail{value}); }

  Nat eval(Nat n) const;

  const std::vector<Nat>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }

  /// Length of the repeating tail block (1 for a constant tail).
  Nat period() const;

  /// prefix length + period. Indices at or beyond the horizon only repeat
  /// tail values that already occur below it.
  Nat horizon() const;

  bool operator==(const Seq&) const = default;  // structural equality

 private:
  std::vector<Nat> prefix_;
  Tail tail_;
};

/// Drops the first n+1 elements: shift(s, n).eval(i) == s.eval(n + 1 + i).
/// Reindexes the prefix and rotates a periodic block; no tail information
/// is lost.
Seq shift(const Seq& s, Nat n);

/// Raised by parse_seq on malformed input; position is a byte offset.
struct SeqParseError : std::runtime_error {
  SeqParseError(std::size_t position, const std::string& message);
  std::size_t position;
};

/// Parses a sequence literal.
///
///   seq      := prefix [ tailpart ]
///   prefix   := nat ("," nat)*        may be empty only when a tail follows
///   tailpart := ";" nat               constant tail
///             | "%" nat ("," nat)*    periodic tail, nonempty block
///
/// Whitespace around tokens is ignored. An omitted tail means constant 0.
/// Numbers that do not fit in 64 bits raise std::overflow_error.
Seq parse_seq(std::string_view text);

/// Canonical literal for s, always with an explicit tail.
/// parse_seq(render(s)) == s.
std::string render(const Seq& s);

/// Pointwise combination of two sequences. Exact: the result's tail block
/// covers one full common period of both inputs.
template <typename F>
Seq zip_with(const Seq& a, const Seq& b, F&& fn) {
  const std::size_t lead = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Nat> prefix;
  prefix.reserve(lead);
  for (std::size_t i = 0; i < lead; ++i) {
    prefix.push_back(fn(a.eval(i), b.eval(i)));
  }
  const auto* const_a = std::get_if<ConstantTail>(&a.tail());
  const auto* const_b = std::get_if<ConstantTail>(&b.tail());
  if (const_a && const_b) {
    return Seq(std::move(prefix), ConstantTail{fn(const_a->value, const_b->value)});
  }
  const Nat gcd = std::gcd(a.period(), b.period());
  const Nat period = checked_mul(a.period() / gcd, b.period(), "zip period");
  std::vector<Nat> block;
  block.reserve(period);
  for (Nat i = 0; i < period; ++i) {
    block.push_back(fn(a.eval(lead + i), b.eval(lead + i)));
  }
  return Seq(std::move(prefix), PeriodicTail{std::move(block)});
}

}  // namespace dickson
