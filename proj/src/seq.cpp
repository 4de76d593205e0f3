#include "dickson/seq.hpp"

#include <cctype>

namespace dickson {

Seq::Seq(std::vector<Nat> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (const auto* periodic = std::get_if<PeriodicTail>(&tail_)) {
    if (periodic->block.empty()) {
      throw ContractError("periodic tail block must be nonempty");
    }
  }
}

Nat Seq::eval(Nat n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (const auto* constant = std::get_if<ConstantTail>(&tail_)) {
    return constant->value;
  }
  const auto& block = std::get<PeriodicTail>(tail_).block;
  return block[(n - prefix_.size()) % block.size()];
}

Nat Seq::period() const {
  if (std::holds_alternative<ConstantTail>(tail_)) return 1;
  return std::get<PeriodicTail>(tail_).block.size();
}

Nat Seq::horizon() const { return prefix_.size() + period(); }

Seq shift(const Seq& s, Nat n) {
  const Nat drop = checked_add(n, 1, "shift offset");
  const auto& prefix = s.prefix();
  if (drop <= prefix.size()) {
    return Seq(std::vector<Nat>(prefix.begin() + static_cast<std::ptrdiff_t>(drop), prefix.end()),
               s.tail());
  }
  if (const auto* constant = std::get_if<ConstantTail>(&s.tail())) {
    return Seq({}, *constant);
  }
  const auto& block = std::get<PeriodicTail>(s.tail()).block;
  const std::size_t offset = (drop - prefix.size()) % block.size();
  std::vector<Nat> rotated;
  rotated.reserve(block.size());
  rotated.insert(rotated.end(), block.begin() + static_cast<std::ptrdiff_t>(offset), block.end());
  rotated.insert(rotated.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(offset));
  return Seq({}, PeriodicTail{std::move(rotated)});
}

SeqParseError::SeqParseError(std::size_t position_, const std::string& message)
    : std::runtime_error("syntax error at position " + std::to_string(position_) +
                         ": " + message),
      position(position_) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_whitespace();
    return pos_ == text_.size();
  }

  bool consume(char c) {
    skip_whitespace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_is(char c) {
    skip_whitespace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Nat number() {
    skip_whitespace();
    const std::size_t start = pos_;
    if (pos_ == text_.size() || !is_digit(text_[pos_])) {
      throw SeqParseError(pos_, "expected a number");
    }
    Nat value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const Nat digit = static_cast<Nat>(text_[pos_] - '0');
      if (value > (std::numeric_limits<Nat>::max() - digit) / 10) {
        throw std::overflow_error("number at position " + std::to_string(start) +
                                  " exceeds 64 bits");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::size_t position() const { return pos_; }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void skip_whitespace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Seq parse_seq(std::string_view text) {
  Cursor cursor(text);
  std::vector<Nat> prefix;
  if (!cursor.peek_is(';') && !cursor.peek_is('%')) {
    prefix.push_back(cursor.number());
    while (cursor.consume(',')) prefix.push_back(cursor.number());
  }
  Tail tail = ConstantTail{0};
  if (cursor.consume(';')) {
    tail = ConstantTail{cursor.number()};
  } else if (cursor.consume('%')) {
    std::vector<Nat> block{cursor.number()};
    while (cursor.consume(',')) block.push_back(cursor.number());
    tail = PeriodicTail{std::move(block)};
  }
  if (!cursor.at_end()) {
    throw SeqParseError(cursor.position(), "unexpected trailing input");
  }
  return Seq(std::move(prefix), std::move(tail));
}

std::string render(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.prefix().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.prefix()[i]);
  }
  if (const auto* constant = std::get_if<ConstantTail>(&s.tail())) {
    out += ';';
    out += std::to_string(constant->value);
  } else {
    const auto& block = std::get<PeriodicTail>(s.tail()).block;
    out += '%';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

}  // namespace dickson
