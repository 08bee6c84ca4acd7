#ifndef ODDCHAIN_LOGIC_HPP
#define ODDCHAIN_LOGIC_HPP

// Formulas over the connectives ~ * & | -> <-> with constants t, f, TOP, BOT.
//
//   iff  := imp ['<->' imp]*        (left-assoc, sugar for (a->b) & (b->a))
//   imp  := or ['->' imp]
//   or   := and {'|' and}
//   and  := fuse {'&' fuse}
//   fuse := un {'*' un}
//   un   := '~' un | atom
//   atom := var | 't' | 'f' | 'TOP' | 'BOT' | '(' iff ')'

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "literals.hpp"
#include "sampling.hpp"

namespace oddchain {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Op { Var, T, F, Top, Bot, And, Or, Fuse, Imp, Neg };
  Op op = Op::T;
  std::string name; // Var only
  FormulaPtr l, r;  // Neg uses l

  static FormulaPtr var(std::string n) { return std::make_shared<Formula>(Formula{Op::Var, std::move(n), {}, {}}); }
  static FormulaPtr constant(Op o) { return std::make_shared<Formula>(Formula{o, {}, {}, {}}); }
  static FormulaPtr binary(Op o, FormulaPtr a, FormulaPtr b) {
    return std::make_shared<Formula>(Formula{o, {}, std::move(a), std::move(b)});
  }
  static FormulaPtr neg(FormulaPtr a) { return std::make_shared<Formula>(Formula{Op::Neg, {}, std::move(a), {}}); }
  static FormulaPtr iff(const FormulaPtr &a, const FormulaPtr &b) {
    return binary(Op::And, binary(Op::Imp, a, b), binary(Op::Imp, b, a));
  }

  bool is_binary() const { return op == Op::And || op == Op::Or || op == Op::Fuse || op == Op::Imp; }
};

inline bool operator==(const Formula &a, const Formula &b) {
  if (a.op != b.op) return false;
  switch (a.op) {
  case Formula::Op::Var: return a.name == b.name;
  case Formula::Op::Neg: return *a.l == *b.l;
  case Formula::Op::And:
  case Formula::Op::Or:
  case Formula::Op::Fuse:
  case Formula::Op::Imp: return *a.l == *b.l && *a.r == *b.r;
  default: return true;
  }
}

inline void collect_vars(const Formula &f, std::set<std::string> &out) {
  if (f.op == Formula::Op::Var) out.insert(f.name);
  if (f.l) collect_vars(*f.l, out);
  if (f.r) collect_vars(*f.r, out);
}

inline bool uses_bounds(const Formula &f) {
  if (f.op == Formula::Op::Top || f.op == Formula::Op::Bot) return true;
  return (f.l && uses_bounds(*f.l)) || (f.r && uses_bounds(*f.r));
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int level(Formula::Op op) {
  switch (op) {
  case Formula::Op::Imp: return 1;
  case Formula::Op::Or: return 2;
  case Formula::Op::And: return 3;
  case Formula::Op::Fuse: return 4;
  case Formula::Op::Neg: return 5;
  default: return 6;
  }
}

inline void print(const Formula &f, std::string &out);

inline void print_child(const Formula &f, bool paren, std::string &out) {
  if (paren) out += "(";
  print(f, out);
  if (paren) out += ")";
}

inline void print(const Formula &f, std::string &out) {
  using Op = Formula::Op;
  switch (f.op) {
  case Op::Var: out += f.name; return;
  case Op::T: out += "t"; return;
  case Op::F: out += "f"; return;
  case Op::Top: out += "TOP"; return;
  case Op::Bot: out += "BOT"; return;
  case Op::Neg:
    out += "~";
    print_child(*f.l, level(f.l->op) < 5, out);
    return;
  default: break;
  }
  const int lv = level(f.op);
  const char *sym = f.op == Op::Imp ? " -> " : f.op == Op::Or ? " | " : f.op == Op::And ? " & " : " * ";
  // -> associates to the right, the others to the left
  const bool right = f.op == Op::Imp;
  print_child(*f.l, right ? level(f.l->op) <= lv : level(f.l->op) < lv, out);
  out += sym;
  print_child(*f.r, right ? level(f.r->op) < lv : level(f.r->op) <= lv, out);
}

} // namespace detail

inline std::string to_string(const Formula &f) {
  std::string s;
  detail::print(f, s);
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : c_(text) {}

  FormulaPtr run() {
    auto f = iff();
    c_.expect_end();
    return f;
  }

private:
  FormulaPtr iff() {
    auto f = imp();
    while (c_.accept("<->")) f = Formula::iff(f, imp());
    return f;
  }
  FormulaPtr imp() {
    auto f = disj();
    if (c_.accept("->")) return Formula::binary(Formula::Op::Imp, f, imp());
    return f;
  }
  FormulaPtr disj() {
    auto f = conj();
    while (c_.accept("|")) f = Formula::binary(Formula::Op::Or, f, conj());
    return f;
  }
  FormulaPtr conj() {
    auto f = fuse();
    while (c_.accept("&")) f = Formula::binary(Formula::Op::And, f, fuse());
    return f;
  }
  FormulaPtr fuse() {
    auto f = unary();
    while (c_.accept("*")) f = Formula::binary(Formula::Op::Fuse, f, unary());
    return f;
  }
  FormulaPtr unary() {
    if (c_.accept("~")) return Formula::neg(unary());
    return atom();
  }
  FormulaPtr atom() {
    if (c_.accept("(")) {
      auto f = iff();
      c_.expect(")");
      return f;
    }
    if (c_.accept_word("TOP")) return Formula::constant(Formula::Op::Top);
    if (c_.accept_word("BOT")) return Formula::constant(Formula::Op::Bot);
    char ch = c_.peek();
    if (ch < 'a' || ch > 'z') c_.fail("expected a formula");
    std::string_view rest = c_.rest();
    std::size_t n = 1;
    while (n < rest.size() && ((rest[n] >= 'a' && rest[n] <= 'z') || (rest[n] >= '0' && rest[n] <= '9') || rest[n] == '_'))
      ++n;
    std::string name(rest.substr(0, n));
    if (n < rest.size() && std::isalpha(static_cast<unsigned char>(rest[n])))
      c_.fail("variable names use lowercase letters, digits and '_'");
    c_.set_pos(c_.pos() + n);
    if (name == "t") return Formula::constant(Formula::Op::T);
    if (name == "f") return Formula::constant(Formula::Op::F);
    return Formula::var(std::move(name));
  }

  Cursor c_;
};

} // namespace detail

inline FormulaPtr parse_formula(std::string_view text) { return detail::FormulaParser(text).run(); }

/// Theory file: one formula per line, '#' starts a comment.
inline std::vector<FormulaPtr> parse_theory(const std::string &text) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0, line = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string l = text.substr(start, end - start);
    if (auto h = l.find('#'); h != std::string::npos) l.resize(h);
    if (l.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        out.push_back(parse_formula(l));
      } catch (const ParseError &e) {
        throw ValidationError("theory line " + std::to_string(line) + ": " + e.what());
      }
    }
    start = end + 1;
    ++line;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

using Assignment = std::map<std::string, Elem>;

namespace detail {

inline Elem eval(const Algebra &A, const Formula &f, const Assignment &e) {
  using Op = Formula::Op;
  switch (f.op) {
  case Op::Var: {
    auto it = e.find(f.name);
    if (it == e.end()) throw ValidationError("unassigned variable '" + f.name + "'");
    return it->second;
  }
  case Op::T:
  case Op::F: return A.unit();
  case Op::Top: return Elem::top_bound();
  case Op::Bot: return Elem::bot_bound();
  case Op::Neg: return detail::neg(A, eval(A, *f.l, e));
  default: break;
  }
  Elem a = eval(A, *f.l, e);
  Elem b = eval(A, *f.r, e);
  switch (f.op) {
  case Op::Fuse: return detail::mult(A, a, b);
  case Op::Imp: return detail::residuum(A, a, b);
  case Op::And: return detail::compare(A, a, b) <= 0 ? a : b;
  case Op::Or: return detail::compare(A, a, b) <= 0 ? b : a;
  default: return a;
  }
}

} // namespace detail

/// Homomorphic evaluation. TOP and BOT need a bounded algebra.
inline Elem eval(const Algebra &A, const Formula &f, const Assignment &e) {
  if (!A.is_bounded() && uses_bounds(f)) throw ValidationError("TOP and BOT need a bounded algebra");
  std::set<std::string> vars;
  collect_vars(f, vars);
  for (const auto &v : vars) {
    auto it = e.find(v);
    if (it == e.end()) throw ValidationError("unassigned variable '" + v + "'");
    if (!contains(A, it->second)) throw MembershipError("value of '" + v + "' is not in the carrier");
  }
  return detail::eval(A, f, e);
}

inline bool designated(const Algebra &A, const Elem &v) { return detail::compare(A, v, A.unit()) >= 0; }

// ---------------------------------------------------------------------------
// Rendering into (0,1)

/// Incremental order embedding of chain elements into the rationals of
/// (0,1): the first element goes to 1/2, later ones to the midpoint of their
/// neighbours (0 and 1 acting as outer neighbours). Global bounds map to 0, 1.
class UnitIntervalRenderer {
public:
  explicit UnitIntervalRenderer(Algebra A) : A_(std::move(A)) {}

  /// Insert a new element; a repeated element is rejected.
  Rational insert(const Elem &e) {
    detail::require(A_, e);
    if (e.kind() == Elem::Kind::TopBound || e.kind() == Elem::Kind::BotBound) {
      if (bounds_.count(e.kind() == Elem::Kind::TopBound)) throw ValidationError("element already rendered");
      bounds_.insert(e.kind() == Elem::Kind::TopBound);
      return e.kind() == Elem::Kind::TopBound ? Rational(1) : Rational(0);
    }
    auto pos = lower(e);
    if (pos < items_.size() && items_[pos].first == e) throw ValidationError("element already rendered");
    Rational lo = pos == 0 ? Rational(0) : items_[pos - 1].second;
    Rational hi = pos == items_.size() ? Rational(1) : items_[pos].second;
    Rational v = items_.empty() ? Rational(1, 2) : midpoint(lo, hi);
    items_.insert(items_.begin() + static_cast<std::ptrdiff_t>(pos), {e, v});
    return v;
  }

  /// Rendered value, inserting the element on first use.
  Rational value(const Elem &e) {
    if (auto v = find(e)) return *v;
    return insert(e);
  }

  std::optional<Rational> find(const Elem &e) const {
    if (e.kind() == Elem::Kind::TopBound) return bounds_.count(true) ? std::optional(Rational(1)) : std::nullopt;
    if (e.kind() == Elem::Kind::BotBound) return bounds_.count(false) ? std::optional(Rational(0)) : std::nullopt;
    auto pos = lower(e);
    if (pos < items_.size() && items_[pos].first == e) return items_[pos].second;
    return std::nullopt;
  }

  /// Interior entries in increasing order.
  const std::vector<std::pair<Elem, Rational>> &entries() const { return items_; }

private:
  std::size_t lower(const Elem &e) const {
    std::size_t lo = 0, hi = items_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (detail::compare(A_, items_[mid].first, e) < 0) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  }

  Algebra A_;
  std::vector<std::pair<Elem, Rational>> items_;
  std::set<bool> bounds_;
};

// ---------------------------------------------------------------------------
// Consequence search

struct SearchOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 10000; // assignments tried in total
  std::int64_t window_radius = 3;
  int window_depth = 2;
  std::int64_t sample_radius = 6;
};

struct Countermodel {
  Assignment assignment;
  Elem value;                      // of the goal, below t
  std::vector<Elem> theory_values; // each at least t
  std::size_t tried = 0;           // index of the assignment, 1-based
};

struct SearchResult {
  std::optional<Countermodel> countermodel;
  std::size_t tried = 0;
  bool found() const { return countermodel.has_value(); }
};

namespace detail {

inline std::optional<Countermodel> try_assignment(const Algebra &A, const std::vector<FormulaPtr> &theory,
                                                  const Formula &goal, const Assignment &e) {
  std::vector<Elem> tv;
  tv.reserve(theory.size());
  for (const auto &psi : theory) {
    Elem v = detail::eval(A, *psi, e);
    if (!designated(A, v)) return std::nullopt;
    tv.push_back(std::move(v));
  }
  Elem g = detail::eval(A, goal, e);
  if (designated(A, g)) return std::nullopt;
  return Countermodel{e, std::move(g), std::move(tv), 0};
}

} // namespace detail

/// Search for an assignment making every theory member designated and the
/// goal undesignated: first a sweep of the small window (mixed-radix order
/// over variables sorted by name), then seeded random elements, `budget`
/// assignments in all. NotFound certifies nothing.
inline SearchResult check_consequence(const Algebra &A, const std::vector<FormulaPtr> &theory,
                                      const FormulaPtr &goal, const SearchOptions &opt = {}) {
  if (opt.budget == 0) throw ValidationError("budget must be positive");
  bool bounds = uses_bounds(*goal);
  for (const auto &psi : theory) bounds = bounds || uses_bounds(*psi);
  if (bounds && !A.is_bounded()) throw ValidationError("TOP and BOT need a bounded algebra");

  std::set<std::string> names;
  collect_vars(*goal, names);
  for (const auto &psi : theory) collect_vars(*psi, names);
  const std::vector<std::string> vars(names.begin(), names.end());

  SearchResult res;
  auto attempt = [&](const Assignment &e) {
    ++res.tried;
    if (auto cm = detail::try_assignment(A, theory, *goal, e)) {
      cm->tried = res.tried;
      res.countermodel = std::move(cm);
      return true;
    }
    return false;
  };

  const auto window = enumerate_window(A, opt.window_radius, opt.window_depth);
  std::vector<std::size_t> digit(vars.size(), 0);
  Assignment e;
  for (;;) {
    if (res.tried >= opt.budget) return res;
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] = window[digit[i]];
    if (attempt(e)) return res;
    std::size_t i = 0;
    while (i < vars.size() && ++digit[i] == window.size()) digit[i++] = 0;
    if (i == vars.size()) break; // sweep complete
  }

  Rng rng(opt.seed);
  while (res.tried < opt.budget) {
    for (const auto &v : vars) e[v] = sample(A, rng, opt.sample_radius);
    if (attempt(e)) return res;
  }
  return res;
}

/// Every subformula of the goal and the theory, in evaluation order.
inline void subformulas(const FormulaPtr &f, std::vector<FormulaPtr> &out) {
  if (f->l) subformulas(f->l, out);
  if (f->r) subformulas(f->r, out);
  out.push_back(f);
}

/// Countermodel as JSON. With `render`, every value met while evaluating the
/// goal and the theory (plus t) is placed in (0,1); t is inserted first.
inline nlohmann::json countermodel_json(const Algebra &A, const std::vector<FormulaPtr> &theory,
                                        const FormulaPtr &goal, const Countermodel &cm, bool render) {
  nlohmann::json j;
  j["found"] = true;
  j["algebra"] = to_string(A);
  j["goal"] = to_string(*goal);
  j["assignment"] = nlohmann::json::object();
  for (const auto &[k, v] : cm.assignment) j["assignment"][k] = to_string(v);
  j["value"] = to_string(cm.value);
  j["theory"] = nlohmann::json::array();
  for (std::size_t i = 0; i < theory.size(); ++i)
    j["theory"].push_back({{"formula", to_string(*theory[i])}, {"value", to_string(cm.theory_values[i])}});
  j["tried"] = cm.tried;
  if (render) {
    UnitIntervalRenderer r(A);
    r.insert(A.unit());
    std::vector<FormulaPtr> subs;
    for (const auto &psi : theory) subformulas(psi, subs);
    subformulas(goal, subs);
    auto rows = nlohmann::json::array();
    std::set<std::string> done;
    for (const auto &s : subs) {
      std::string text = to_string(*s);
      if (!done.insert(text).second) continue;
      Elem v = detail::eval(A, *s, cm.assignment);
      rows.push_back({{"formula", text}, {"value", to_string(v)}, {"unit", r.value(v).str()}});
    }
    auto order = nlohmann::json::array();
    for (const auto &[e, q] : r.entries()) order.push_back({{"elem", to_string(e)}, {"unit", q.str()}});
    j["render"] = {{"t", "1/2"}, {"subformulas", rows}, {"order", order}};
  }
  return j;
}

} // namespace oddchain

#endif // ODDCHAIN_LOGIC_HPP
