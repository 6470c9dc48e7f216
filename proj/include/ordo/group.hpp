#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ordo {

enum class GroupKind { integer_lattice, rational_subgroup, free, klein };

/// Thrown when elements of different groups are combined, or an element is
/// not a member of the group it is used with.
class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed element or group literal. `position()` is the byte offset of
/// the first offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Reduced fraction num/den with den >= 1.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The Klein-bottle group element y^a x^b, subject to x y x^-1 = y^-1.
struct KleinPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const KleinPair&, const KleinPair&) = default;
};

using LatticeVec = boost::container::small_vector<std::int64_t, 4>;
/// Freely reduced word. Letter +k is the k-th generator (1-based), -k its inverse.
using Word = boost::container::small_vector<std::int32_t, 16>;

/// A group element in canonical form. Equality is structural, which is
/// sound because every constructor path produces the canonical encoding.
class Element {
 public:
  using Storage = std::variant<LatticeVec, Fraction, Word, KleinPair>;

  Element() = default;
  explicit Element(LatticeVec v) : value_(std::move(v)) {}
  explicit Element(Fraction f) : value_(f) {}
  explicit Element(Word w) : value_(std::move(w)) {}
  explicit Element(KleinPair k) : value_(k) {}

  GroupKind kind() const noexcept { return static_cast<GroupKind>(value_.index()); }

  const LatticeVec& lattice() const { return std::get<LatticeVec>(value_); }
  const Fraction& fraction() const { return std::get<Fraction>(value_); }
  const Word& word() const { return std::get<Word>(value_); }
  const KleinPair& klein() const { return std::get<KleinPair>(value_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Storage value_;
};

/// Canonical total order on elements. Within a kind:
///   lattice:   (L1 norm, zigzag(c1), ..., zigzag(cn))
///   rational:  (denominator, zigzag(numerator))
///   free:      shortlex with a < A < b < B < ...
///   klein:     (|a| + |b|, zigzag(b), zigzag(a))
/// where zigzag maps 0, 1, -1, 2, -2, ... to 0, 1, 2, 3, 4, ...
std::strong_ordering canonical_compare(const Element& lhs, const Element& rhs);

struct CanonicalLess {
  bool operator()(const Element& lhs, const Element& rhs) const {
    return canonical_compare(lhs, rhs) < 0;
  }
};

class GroupSpec {
 public:
  static GroupSpec integer_lattice(int rank);
  static GroupSpec rational_subgroup(std::vector<std::int64_t> primes);
  static GroupSpec free(int rank);
  static GroupSpec klein();

  /// Parses "zn:N", "q-sub:p1[,p2...]", "free:K" or "klein".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  GroupKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
  bool is_abelian() const noexcept;

  const std::vector<Element>& generators() const noexcept { return generators_; }
  /// Generators together with their inverses, deduplicated, canonical order.
  std::vector<Element> symmetric_generators() const;
  GroupSpec with_generators(std::vector<Element> generators) const;

  Element identity() const;
  bool is_identity(const Element& g) const;
  /// True iff g has this group's kind, shape, and (for subgroups of Q) an
  /// admissible denominator.
  bool contains(const Element& g) const;

  Element compose(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  Element power(const Element& g, std::int64_t n) const;
  /// h * x * h^-1
  Element conjugate(const Element& h, const Element& x) const;

  std::string encode(const Element& g) const;
  Element decode(std::string_view text) const;

  Element lattice(std::vector<std::int64_t> coords) const;
  Element rational(std::int64_t num, std::int64_t den = 1) const;
  Element klein_element(std::int64_t a, std::int64_t b) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&);

 private:
  GroupSpec(GroupKind kind, int rank, std::vector<std::int64_t> primes);
  void require(const Element& g) const;
  bool admissible_denominator(std::int64_t den) const;

  GroupKind kind_;
  int rank_ = 1;
  std::vector<std::int64_t> primes_;
  std::vector<Element> generators_;
};

/// Finite symmetric subset of a group, stored in canonical order.
class Window {
 public:
  /// Sorts and deduplicates; throws GroupError if the set is not symmetric
  /// or contains non-members.
  Window(GroupSpec group, std::vector<Element> elements);

  const GroupSpec& group() const noexcept { return group_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Element& g) const;
  bool contains(const Element& g) const { return index_of(g).has_value(); }
  bool has_identity() const;

  /// Elements conjugated as h^-1 * w * h.
  Window conjugated_by(const Element& h) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  GroupSpec group_;
  std::vector<Element> elements_;
};

Window generate_ball(const GroupSpec& group, int radius, bool include_identity = true);

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<Element>& elements);

}  // namespace ordo
