#ifndef ODDCHAIN_ELEM_HPP
#define ODDCHAIN_ELEM_HPP

#include <cstdint>
#include <memory>

#include "groups.hpp"

namespace oddchain {

/// Tag of a pair's second component. Declaration order is the order of the
/// extended second factor: Bot < every Val < Top.
enum class Mark : std::uint8_t { Bot, Val, Top };

/// Member of an iterated partial lexicographic product.
///
/// An element is a group leaf, a pair `(first, second)` whose second is
/// either a value of the inner chain or one of the adjoined markers, or one
/// of the global bounds of a bound-adjoined algebra. Elements are immutable
/// and share subtrees; equality is structural.
class Elem {
public:
  enum class Kind : std::uint8_t { Leaf, Pair, TopBound, BotBound };

  Elem() = default; // the empty-vector leaf, i.e. the unit of the trivial group

  static Elem leaf(GroupElem g) {
    Elem e;
    e.leaf_ = std::move(g);
    return e;
  }
  static Elem pair_val(Elem first, Elem second) {
    return make_pair(std::move(first), Mark::Val, std::make_shared<const Elem>(std::move(second)));
  }
  static Elem pair_top(Elem first) { return make_pair(std::move(first), Mark::Top, nullptr); }
  static Elem pair_bot(Elem first) { return make_pair(std::move(first), Mark::Bot, nullptr); }
  static Elem pair(Elem first, Mark m, const Elem *second) {
    if (m == Mark::Val) return pair_val(std::move(first), *second);
    return make_pair(std::move(first), m, nullptr);
  }
  static Elem top_bound() { return bound(Kind::TopBound); }
  static Elem bot_bound() { return bound(Kind::BotBound); }

  Kind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept { return kind_ == Kind::Leaf; }
  bool is_pair() const noexcept { return kind_ == Kind::Pair; }
  bool is_bound() const noexcept { return kind_ == Kind::TopBound || kind_ == Kind::BotBound; }

  const GroupElem &group() const { return leaf_; }
  const Elem &first() const { return *first_; }
  Mark mark() const noexcept { return mark_; }
  /// Only valid when mark() == Mark::Val.
  const Elem &second() const { return *second_; }

  friend bool operator==(const Elem &a, const Elem &b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case Kind::Leaf: return a.leaf_ == b.leaf_;
    case Kind::Pair:
      if (a.mark_ != b.mark_) return false;
      if (a.first_ != b.first_ && !(*a.first_ == *b.first_)) return false;
      return a.mark_ != Mark::Val || a.second_ == b.second_ || *a.second_ == *b.second_;
    default: return true;
    }
  }

  std::size_t hash() const noexcept {
    switch (kind_) {
    case Kind::Leaf: return leaf_.hash();
    case Kind::Pair: {
      std::size_t h = first_->hash() * 1000003u + static_cast<std::size_t>(mark_) + 17u;
      if (mark_ == Mark::Val) h ^= second_->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
    case Kind::TopBound: return 0x51ed270b27a1f3d5ULL;
    case Kind::BotBound: return 0x2545f4914f6cdd1dULL;
    }
    return 0;
  }

private:
  static Elem make_pair(Elem first, Mark m, std::shared_ptr<const Elem> second) {
    Elem e;
    e.kind_ = Kind::Pair;
    e.first_ = std::make_shared<const Elem>(std::move(first));
    e.mark_ = m;
    e.second_ = std::move(second);
    return e;
  }
  static Elem bound(Kind k) {
    Elem e;
    e.kind_ = k;
    return e;
  }

  Kind kind_ = Kind::Leaf;
  GroupElem leaf_;
  std::shared_ptr<const Elem> first_;
  Mark mark_ = Mark::Val;
  std::shared_ptr<const Elem> second_;
};

struct ElemHash {
  std::size_t operator()(const Elem &e) const noexcept { return e.hash(); }
};

} // namespace oddchain

#endif // ODDCHAIN_ELEM_HPP
