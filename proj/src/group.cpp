#include "ordo/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace ordo {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in group arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in group arithmetic");
  return out;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

std::uint64_t magnitude(std::int64_t c) {
  return c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1u : static_cast<std::uint64_t>(c);
}

std::uint64_t zigzag(std::int64_t c) {
  const auto mag = magnitude(c);
  return c > 0 ? 2 * mag - 1 : 2 * mag;
}

std::uint32_t letter_key(std::int32_t letter) {
  return letter > 0 ? 2u * static_cast<std::uint32_t>(letter - 1) : 2u * static_cast<std::uint32_t>(-letter - 1) + 1u;
}

Fraction make_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw GroupError("zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const std::int64_t g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void append_reduced(Word& out, std::int32_t letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

std::int64_t parse_int(std::string_view text, std::size_t& pos, std::size_t offset) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", offset + pos);
  if (ec != std::errc()) throw ParseError("expected integer", offset + pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

}  // namespace

std::strong_ordering canonical_compare(const Element& lhs, const Element& rhs) {
  if (lhs.kind() != rhs.kind()) return lhs.kind() <=> rhs.kind();
  switch (lhs.kind()) {
    case GroupKind::integer_lattice: {
      const auto& a = lhs.lattice();
      const auto& b = rhs.lattice();
      if (a.size() != b.size()) return a.size() <=> b.size();
      std::uint64_t na = 0, nb = 0;
      for (auto c : a) na += magnitude(c);
      for (auto c : b) nb += magnitude(c);
      if (na != nb) return na <=> nb;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return zigzag(a[i]) <=> zigzag(b[i]);
      return std::strong_ordering::equal;
    }
    case GroupKind::rational_subgroup: {
      const auto& a = lhs.fraction();
      const auto& b = rhs.fraction();
      if (a.den != b.den) return a.den <=> b.den;
      return zigzag(a.num) <=> zigzag(b.num);
    }
    case GroupKind::free: {
      const auto& a = lhs.word();
      const auto& b = rhs.word();
      if (a.size() != b.size()) return a.size() <=> b.size();
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_key(a[i]) <=> letter_key(b[i]);
      return std::strong_ordering::equal;
    }
    case GroupKind::klein: {
      const auto& a = lhs.klein();
      const auto& b = rhs.klein();
      const auto na = magnitude(a.a) + magnitude(a.b);
      const auto nb = magnitude(b.a) + magnitude(b.b);
      if (na != nb) return na <=> nb;
      if (a.b != b.b) return zigzag(a.b) <=> zigzag(b.b);
      return zigzag(a.a) <=> zigzag(b.a);
    }
  }
  return std::strong_ordering::equal;
}

void canonicalize(std::vector<Element>& elements) {
  std::sort(elements.begin(), elements.end(), CanonicalLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(GroupKind kind, int rank, std::vector<std::int64_t> primes)
    : kind_(kind), rank_(rank), primes_(std::move(primes)) {}

GroupSpec GroupSpec::integer_lattice(int rank) {
  if (rank < 1) throw GroupError("integer lattice rank must be positive");
  GroupSpec g(GroupKind::integer_lattice, rank, {});
  for (int i = 0; i < rank; ++i) {
    LatticeVec v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = 1;
    g.generators_.emplace_back(std::move(v));
  }
  return g;
}

GroupSpec GroupSpec::rational_subgroup(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p)) throw GroupError("denominator set contains non-prime " + std::to_string(p));
  GroupSpec g(GroupKind::rational_subgroup, 1, std::move(primes));
  g.generators_.emplace_back(Fraction{1, 1});
  for (auto p : g.primes_) g.generators_.emplace_back(Fraction{1, p});
  return g;
}

GroupSpec GroupSpec::free(int rank) {
  if (rank < 1 || rank > 26) throw GroupError("free group rank must be in 1..26");
  GroupSpec g(GroupKind::free, rank, {});
  for (int i = 1; i <= rank; ++i) g.generators_.emplace_back(Word{i});
  return g;
}

GroupSpec GroupSpec::klein() {
  GroupSpec g(GroupKind::klein, 2, {});
  g.generators_.emplace_back(KleinPair{1, 0});  // y
  g.generators_.emplace_back(KleinPair{0, 1});  // x
  return g;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  auto positive = [&](std::string_view rest, std::size_t offset) {
    std::size_t pos = 0;
    const auto n = parse_int(rest, pos, offset);
    if (pos != rest.size()) throw ParseError("trailing characters in group spec", offset + pos);
    if (n < 1 || n > 64) throw ParseError("rank out of range", offset);
    return static_cast<int>(n);
  };
  if (text == "klein") return klein();
  if (text.starts_with("zn:")) return integer_lattice(positive(text.substr(3), 3));
  if (text.starts_with("free:")) return free(positive(text.substr(5), 5));
  if (text.starts_with("q-sub:")) {
    std::vector<std::int64_t> primes;
    std::size_t pos = 6;
    while (true) {
      primes.push_back(parse_int(text, pos, 0));
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' in prime list", pos);
      ++pos;
    }
    return rational_subgroup(std::move(primes));
  }
  throw ParseError("unknown group spec '" + std::string(text) + "'", 0);
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::integer_lattice:
      return "zn:" + std::to_string(rank_);
    case GroupKind::free:
      return "free:" + std::to_string(rank_);
    case GroupKind::klein:
      return "klein";
    case GroupKind::rational_subgroup: {
      std::string out = "q-sub:";
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(primes_[i]);
      }
      return out;
    }
  }
  return {};
}

bool GroupSpec::is_abelian() const noexcept {
  return kind_ == GroupKind::integer_lattice || kind_ == GroupKind::rational_subgroup ||
         (kind_ == GroupKind::free && rank_ == 1);
}

std::vector<Element> GroupSpec::symmetric_generators() const {
  std::vector<Element> out;
  for (const auto& g : generators_) {
    out.push_back(g);
    out.push_back(invert(g));
  }
  canonicalize(out);
  std::erase_if(out, [&](const Element& g) { return is_identity(g); });
  return out;
}

GroupSpec GroupSpec::with_generators(std::vector<Element> generators) const {
  for (const auto& g : generators) require(g);
  GroupSpec out = *this;
  out.generators_ = std::move(generators);
  return out;
}

Element GroupSpec::identity() const {
  switch (kind_) {
    case GroupKind::integer_lattice:
      return Element(LatticeVec(static_cast<std::size_t>(rank_), 0));
    case GroupKind::rational_subgroup:
      return Element(Fraction{0, 1});
    case GroupKind::free:
      return Element(Word{});
    case GroupKind::klein:
      return Element(KleinPair{});
  }
  return {};
}

bool GroupSpec::is_identity(const Element& g) const {
  switch (g.kind()) {
    case GroupKind::integer_lattice:
      return std::all_of(g.lattice().begin(), g.lattice().end(), [](auto c) { return c == 0; });
    case GroupKind::rational_subgroup:
      return g.fraction().num == 0;
    case GroupKind::free:
      return g.word().empty();
    case GroupKind::klein:
      return g.klein() == KleinPair{};
  }
  return false;
}

bool GroupSpec::admissible_denominator(std::int64_t den) const {
  for (auto p : primes_)
    while (den % p == 0) den /= p;
  return den == 1;
}

bool GroupSpec::contains(const Element& g) const {
  if (g.kind() != kind_) return false;
  switch (kind_) {
    case GroupKind::integer_lattice:
      return g.lattice().size() == static_cast<std::size_t>(rank_);
    case GroupKind::rational_subgroup: {
      const auto& f = g.fraction();
      return f.den >= 1 && std::gcd(f.num, f.den) == 1 && admissible_denominator(f.den);
    }
    case GroupKind::free:
      return std::all_of(g.word().begin(), g.word().end(),
                         [&](auto l) { return l != 0 && std::abs(l) <= rank_; });
    case GroupKind::klein:
      return true;
  }
  return false;
}

void GroupSpec::require(const Element& g) const {
  if (!contains(g)) throw GroupError("element does not belong to group " + to_string());
}

Element GroupSpec::compose(const Element& g, const Element& h) const {
  require(g);
  require(h);
  switch (kind_) {
    case GroupKind::integer_lattice: {
      LatticeVec out(g.lattice());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], h.lattice()[i]);
      return Element(std::move(out));
    }
    case GroupKind::rational_subgroup: {
      const auto& a = g.fraction();
      const auto& b = h.fraction();
      const std::int64_t l = std::lcm(a.den, b.den);
      const std::int64_t num = checked_add(checked_mul(a.num, l / a.den), checked_mul(b.num, l / b.den));
      return Element(make_fraction(num, l));
    }
    case GroupKind::free: {
      Word out(g.word());
      for (auto letter : h.word()) append_reduced(out, letter);
      return Element(std::move(out));
    }
    case GroupKind::klein: {
      const auto& p = g.klein();
      const auto& q = h.klein();
      const std::int64_t twist = (p.b % 2 == 0) ? q.a : checked_neg(q.a);
      return Element(KleinPair{checked_add(p.a, twist), checked_add(p.b, q.b)});
    }
  }
  return {};
}

Element GroupSpec::invert(const Element& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::integer_lattice: {
      LatticeVec out(g.lattice());
      for (auto& c : out) c = checked_neg(c);
      return Element(std::move(out));
    }
    case GroupKind::rational_subgroup:
      return Element(Fraction{checked_neg(g.fraction().num), g.fraction().den});
    case GroupKind::free: {
      Word out;
      for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) out.push_back(-*it);
      return Element(std::move(out));
    }
    case GroupKind::klein: {
      const auto& p = g.klein();
      const std::int64_t a = (p.b % 2 == 0) ? checked_neg(p.a) : p.a;
      return Element(KleinPair{a, checked_neg(p.b)});
    }
  }
  return {};
}

Element GroupSpec::power(const Element& g, std::int64_t n) const {
  Element base = n < 0 ? invert(g) : g;
  std::uint64_t e = magnitude(n);
  Element out = identity();
  while (e) {
    if (e & 1u) out = compose(out, base);
    e >>= 1u;
    if (e) base = compose(base, base);
  }
  return out;
}

Element GroupSpec::conjugate(const Element& h, const Element& x) const {
  return compose(compose(h, x), invert(h));
}

std::string GroupSpec::encode(const Element& g) const {
  require(g);
  std::string out;
  switch (kind_) {
    case GroupKind::integer_lattice:
      for (std::size_t i = 0; i < g.lattice().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.lattice()[i]);
      }
      break;
    case GroupKind::rational_subgroup:
      out = std::to_string(g.fraction().num);
      if (g.fraction().den != 1) out += "/" + std::to_string(g.fraction().den);
      break;
    case GroupKind::free:
      for (auto l : g.word())
        out += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
      break;
    case GroupKind::klein:
      out = "y^" + std::to_string(g.klein().a) + " x^" + std::to_string(g.klein().b);
      break;
  }
  return out;
}

Element GroupSpec::decode(std::string_view text) const {
  std::size_t pos = 0;
  switch (kind_) {
    case GroupKind::integer_lattice: {
      LatticeVec v;
      while (true) {
        v.push_back(parse_int(text, pos, 0));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
      }
      if (v.size() != static_cast<std::size_t>(rank_))
        throw ParseError("expected " + std::to_string(rank_) + " coordinates", 0);
      return Element(std::move(v));
    }
    case GroupKind::rational_subgroup: {
      const std::int64_t num = parse_int(text, pos, 0);
      std::int64_t den = 1;
      if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError("expected '/'", pos);
        ++pos;
        const std::size_t den_pos = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) throw ParseError("expected digit", pos);
        den = parse_int(text, pos, 0);
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        if (den < 1) throw ParseError("denominator must be positive", den_pos);
        if (std::gcd(num, den) != 1) throw ParseError("fraction not in lowest terms", 0);
        if (!admissible_denominator(den))
          throw ParseError("denominator " + std::to_string(den) + " has a prime outside " + to_string(), den_pos);
      }
      return Element(Fraction{num, den});
    }
    case GroupKind::free: {
      Word w;
      for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        std::int32_t letter = 0;
        if (c >= 'a' && c <= 'z') letter = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z') letter = -(c - 'A' + 1);
        if (letter == 0 || std::abs(letter) > rank_) throw ParseError("invalid letter for " + to_string(), pos);
        append_reduced(w, letter);
      }
      return Element(std::move(w));
    }
    case GroupKind::klein: {
      auto expect = [&](std::string_view token) {
        if (text.substr(pos, token.size()) != token)
          throw ParseError("expected '" + std::string(token) + "'", pos);
        pos += token.size();
      };
      skip_spaces(text, pos);
      expect("y^");
      const std::int64_t a = parse_int(text, pos, 0);
      skip_spaces(text, pos);
      expect("x^");
      const std::int64_t b = parse_int(text, pos, 0);
      skip_spaces(text, pos);
      if (pos != text.size()) throw ParseError("trailing characters", pos);
      return Element(KleinPair{a, b});
    }
  }
  return {};
}

Element GroupSpec::lattice(std::vector<std::int64_t> coords) const {
  Element g(LatticeVec(coords.begin(), coords.end()));
  require(g);
  return g;
}

Element GroupSpec::rational(std::int64_t num, std::int64_t den) const {
  Element g(make_fraction(num, den));
  require(g);
  return g;
}

Element GroupSpec::klein_element(std::int64_t a, std::int64_t b) const {
  Element g(KleinPair{a, b});
  require(g);
  return g;
}

bool operator==(const GroupSpec& lhs, const GroupSpec& rhs) {
  return lhs.kind_ == rhs.kind_ && lhs.rank_ == rhs.rank_ && lhs.primes_ == rhs.primes_ &&
         lhs.generators_ == rhs.generators_;
}

// ---------------------------------------------------------------------------
// Window

Window::Window(GroupSpec group, std::vector<Element> elements) : group_(std::move(group)), elements_(std::move(elements)) {
  for (const auto& g : elements_)
    if (!group_.contains(g)) throw GroupError("window element outside group " + group_.to_string());
  canonicalize(elements_);
  for (const auto& g : elements_)
    if (!contains(group_.invert(g)))
      throw GroupError("window is not symmetric: missing inverse of " + group_.encode(g));
}

std::optional<std::size_t> Window::index_of(const Element& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g, CanonicalLess{});
  if (it == elements_.end() || !(*it == g)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Window::has_identity() const { return contains(group_.identity()); }

Window Window::conjugated_by(const Element& h) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  const Element h_inv = group_.invert(h);
  for (const auto& w : elements_) out.push_back(group_.compose(group_.compose(h_inv, w), h));
  return Window(group_, std::move(out));
}

Window generate_ball(const GroupSpec& group, int radius, bool include_identity) {
  if (radius < 0) throw GroupError("ball radius must be non-negative");
  const auto gens = group.symmetric_generators();
  std::set<Element, CanonicalLess> seen{group.identity()};
  std::vector<Element> frontier{group.identity()};
  for (int r = 0; r < radius; ++r) {
    std::vector<Element> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Element p = group.compose(g, s);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  std::vector<Element> elements(seen.begin(), seen.end());
  if (!include_identity) std::erase_if(elements, [&](const Element& g) { return group.is_identity(g); });
  return Window(group, std::move(elements));
}

}  // namespace ordo
