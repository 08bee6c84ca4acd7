#ifndef ODDCHAIN_LITERALS_HPP
#define ODDCHAIN_LITERALS_HPP

// Text forms of group elements, chain elements, subgroup descriptors and
// algebra descriptors.
//
//   group   := int | int '/' int | '<' [int {',' int}] '>'
//   elem    := 'TOP' | 'BOT' | '(' elem ',' second ')' | group
//   second  := 'T' | 'B' | elem
//   desc    := '1' | entry {'x' entry}
//   entry   := 'Z' | rational 'Z' | 'Q' | '*' | '0'

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "algebra.hpp"
#include "core.hpp"
#include "error.hpp"

namespace oddchain {

/// Minimal scanner shared by the literal, algebra and formula parsers.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const noexcept { return pos_; }
  void set_pos(std::size_t p) noexcept { pos_ = p; }
  std::string_view rest() const { return text_.substr(pos_); }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  /// Accepts `word` only when it is not followed by an identifier character.
  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::optional<std::int64_t> integer() {
    skip_ws();
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return std::nullopt;
    std::int64_t v = 0;
    const char *b = text_.data() + pos_ + (text_[pos_] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("integer out of range");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  std::int64_t expect_integer() {
    auto v = integer();
    if (!v) fail("expected an integer");
    return *v;
  }
  /// int or int/int
  std::optional<Rational> rational() {
    auto n = integer();
    if (!n) return std::nullopt;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      auto d = integer();
      if (!d || *d <= 0) fail("expected a positive denominator");
      return Rational(*n, *d);
    }
    return Rational(*n);
  }

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

inline std::string to_string(const GroupElem &g) {
  if (g.is_rational()) return g.rat().str();
  const auto &v = g.vec();
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "<";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ">";
}

inline std::string to_string(const Elem &e) {
  switch (e.kind()) {
  case Elem::Kind::Leaf: return to_string(e.group());
  case Elem::Kind::TopBound: return "TOP";
  case Elem::Kind::BotBound: return "BOT";
  case Elem::Kind::Pair: {
    std::string s = "(" + to_string(e.first()) + ", ";
    switch (e.mark()) {
    case Mark::Top: s += "T"; break;
    case Mark::Bot: s += "B"; break;
    case Mark::Val: s += to_string(e.second()); break;
    }
    return s + ")";
  }
  }
  return "?";
}

inline std::string to_string(const CoordConstraint &c, std::optional<CoordKind> kind = std::nullopt) {
  switch (c.kind) {
  case CoordConstraint::Kind::ZeroOnly: return "0";
  case CoordConstraint::Kind::All:
    if (!kind) return "*";
    return *kind == CoordKind::Rat ? "Q" : "Z";
  case CoordConstraint::Kind::MultiplesOf: return c.step == Rational(1) ? "Z" : c.step.str() + "Z";
  }
  return "?";
}

/// Descriptor text; with `kinds`, All prints as the coordinate's group.
inline std::string to_string(const SubgroupDescriptor &d, const std::vector<CoordKind> *kinds = nullptr) {
  if (d.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += " x ";
    s += to_string(d[i], kinds ? std::optional<CoordKind>((*kinds)[i]) : std::nullopt);
  }
  return s;
}

inline std::string to_string(const Algebra &A) {
  if (!A.name().empty()) return A.name();
  switch (A.kind()) {
  case Algebra::Kind::Base:
    switch (A.chain().kind()) {
    case GroupChain::Kind::QChain: return "Q";
    case GroupChain::Kind::Trivial: return "1";
    case GroupChain::Kind::ZLex:
      return A.chain().rank() == 1 ? "Z" : "Z^" + std::to_string(A.chain().rank());
    }
    break;
  case Algebra::Kind::Bounded: return "BOUNDED(" + to_string(A.inner()) + ")";
  case Algebra::Kind::PlpIII: {
    const auto *k = &A.x().gr_kinds();
    if (A.is_type_I())
      return "PLPI(" + to_string(A.x()) + "," + to_string(A.z(), k) + "," + to_string(A.y()) + ")";
    return "PLPIII(" + to_string(A.x()) + "," + to_string(A.z(), k) + "," + to_string(A.v(), k) + "," +
           to_string(A.y()) + ")";
  }
  case Algebra::Kind::PlpIV:
    if (A.is_type_II()) return "PLPII(" + to_string(A.x()) + "," + to_string(A.y()) + ")";
    return "PLPIV(" + to_string(A.x()) + "," + to_string(A.v(), &A.x().gr_kinds()) + "," +
           to_string(A.y()) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline GroupElem parse_group(Cursor &c, const GroupChain &g) {
  if (c.accept("<")) {
    IntVector v;
    if (!c.accept(">")) {
      do v.push_back(c.expect_integer());
      while (c.accept(","));
      c.expect(">");
    }
    if (g.kind() != GroupChain::Kind::ZLex && g.kind() != GroupChain::Kind::Trivial)
      c.fail("vector literal for a non-integer group");
    if (static_cast<int>(v.size()) != g.rank()) c.fail("vector literal has the wrong length");
    return v;
  }
  auto q = c.rational();
  if (!q) c.fail("expected a group element");
  if (g.kind() == GroupChain::Kind::QChain) return *q;
  if (g.kind() != GroupChain::Kind::ZLex || g.rank() != 1 || !q->is_integer())
    c.fail("literal does not belong to " +
           std::string(g.kind() == GroupChain::Kind::Trivial ? "the trivial group" : "Z^k"));
  return IntVector{q->num()};
}

inline Elem parse_elem(Cursor &c, const Algebra &A) {
  switch (A.kind()) {
  case Algebra::Kind::Bounded:
    if (c.accept_word("TOP")) return Elem::top_bound();
    if (c.accept_word("BOT")) return Elem::bot_bound();
    return parse_elem(c, A.inner());
  case Algebra::Kind::Base: return Elem::leaf(parse_group(c, A.chain()));
  default: {
    c.expect("(");
    Elem first = parse_elem(c, A.x());
    c.expect(",");
    Elem out;
    if (c.accept_word("T")) out = Elem::pair_top(std::move(first));
    else if (c.accept_word("B")) out = Elem::pair_bot(std::move(first));
    else out = Elem::pair_val(std::move(first), parse_elem(c, A.y()));
    c.expect(")");
    return out;
  }
  }
}

inline CoordConstraint parse_entry(Cursor &c) {
  if (c.accept("*") || c.accept_word("Q")) return CoordConstraint::all();
  if (c.accept_word("Z")) return CoordConstraint::multiples_of(1);
  std::size_t at = c.pos();
  auto q = c.rational();
  if (!q) c.fail("expected a subgroup entry (Z, dZ, Q, *, 0)");
  if (c.accept("Z")) {
    if (q->sign() <= 0) {
      c.set_pos(at);
      c.fail("subgroup step must be positive");
    }
    return CoordConstraint::multiples_of(*q);
  }
  if (q->sign() == 0) return CoordConstraint::zero_only();
  c.set_pos(at);
  c.fail("expected a subgroup entry (Z, dZ, Q, *, 0)");
}

inline SubgroupDescriptor parse_descriptor(Cursor &c) {
  std::size_t at = c.pos();
  if (c.accept("1")) {
    // "1" alone is the trivial subgroup of a zero-coordinate group part
    char nx = c.peek();
    if (nx != 'Z' && nx != '/') return {};
    c.set_pos(at);
  }
  SubgroupDescriptor d;
  d.push_back(parse_entry(c));
  while (c.accept_word("x")) d.push_back(parse_entry(c));
  return d;
}

} // namespace detail

/// Parse an element literal and check carrier membership in A.
inline Elem parse_elem(const Algebra &A, std::string_view text) {
  Cursor c(text);
  Elem e = detail::parse_elem(c, A);
  c.expect_end();
  if (!contains(A, e))
    throw MembershipError("'" + std::string(text) + "' is not in the carrier of " + to_string(A));
  return e;
}

inline SubgroupDescriptor parse_descriptor(std::string_view text) {
  Cursor c(text);
  auto d = detail::parse_descriptor(c);
  c.expect_end();
  return d;
}

} // namespace oddchain

#endif // ODDCHAIN_LITERALS_HPP
