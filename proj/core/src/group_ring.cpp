#include "qalex/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qalex/checked.hpp"
#include "qalex/error.hpp"

namespace qalex {

std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << v.rule;
  if (!v.witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank(free_rank), torsion_orders(std::move(torsion)) {
  if (free_rank < 0) throw DomainError("negative free rank");
  for (auto n : torsion_orders)
    if (n < 2) throw DomainError("torsion order must be >= 2, got " + std::to_string(n));
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "1" || s.empty()) return trivial();
  int free = 0;
  std::vector<std::int64_t> tors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw ParseError(0, "bad group spec '" + std::string(spec) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) {
      ++free;
    } else {
      tors.push_back(std::stoll(s.substr(start, pos - start)));
    }
    if (pos < s.size()) {
      if (s[pos] != 'x') throw ParseError(0, "bad group spec '" + std::string(spec) + "'");
      ++pos;
    }
  }
  return AbelianGroup(free, std::move(tors));
}

std::int64_t AbelianGroup::order() const {
  if (!is_finite()) throw DomainError("order of an infinite group");
  std::int64_t n = 1;
  for (auto k : torsion_orders) n = checked::mul(n, k);
  return n;
}

std::string AbelianGroup::generator_name(std::size_t i) const {
  auto fr = static_cast<std::size_t>(free_rank);
  if (i < fr) return fr == 1 ? "t" : "t" + std::to_string(i + 1);
  i -= fr;
  return torsion_orders.size() == 1 ? "u" : "u" + std::to_string(i + 1);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (int i = 0; i < free_rank; ++i) out += (out.empty() ? "" : " x ") + std::string("Z");
  for (auto n : torsion_orders) out += (out.empty() ? "" : " x ") + ("Z" + std::to_string(n));
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- elements

GroupElement identity(const AbelianGroup& g) { return GroupElement{std::vector<std::int64_t>(g.rank(), 0)}; }

GroupElement normalize(const AbelianGroup& g, GroupElement x) {
  if (x.coords.size() != g.rank()) throw DomainError("group element has wrong number of coordinates");
  for (std::size_t i = 0; i < g.torsion_orders.size(); ++i) {
    auto& c = x.coords[static_cast<std::size_t>(g.free_rank) + i];
    c = checked::mod(c, g.torsion_orders[i]);
  }
  return x;
}

GroupElement compose(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked::add(r.coords[i], b.coords[i]);
  return normalize(g, std::move(r));
}

GroupElement inverse(const AbelianGroup& g, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords) c = -c;
  return normalize(g, std::move(r));
}

GroupElement power(const AbelianGroup& g, const GroupElement& a, std::int64_t k) {
  GroupElement r = a;
  for (auto& c : r.coords) c = checked::mul(c, k);
  return normalize(g, std::move(r));
}

bool is_identity(const GroupElement& a) {
  return std::all_of(a.coords.begin(), a.coords.end(), [](auto c) { return c == 0; });
}

GroupElement cyclic_element(const AbelianGroup& g, std::int64_t k) {
  if (g.rank() != 1) throw DomainError("cyclic_element needs a rank-1 group");
  return normalize(g, GroupElement{{k}});
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& g) {
  auto n = static_cast<std::size_t>(g.order());
  std::vector<GroupElement> out;
  out.reserve(n);
  GroupElement cur = identity(g);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(cur);
    for (std::size_t k = g.torsion_orders.size(); k-- > 0;) {
      if (++cur.coords[k] < g.torsion_orders[k]) break;
      cur.coords[k] = 0;
    }
  }
  return out;
}

std::size_t element_index(const AbelianGroup& g, const GroupElement& a) {
  if (!g.is_finite()) throw DomainError("element_index on an infinite group");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < g.torsion_orders.size(); ++k)
    idx = idx * static_cast<std::size_t>(g.torsion_orders[k]) + static_cast<std::size_t>(a.coords[k]);
  return idx;
}

std::string format_element(const AbelianGroup& g, const GroupElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += g.generator_name(i);
    if (a.coords[i] != 1) out += "^" + std::to_string(a.coords[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- GroupRingElem

GroupRingElem GroupRingElem::constant(const AbelianGroup& g, std::int64_t c) {
  return monomial(g, identity(g), c);
}

GroupRingElem GroupRingElem::monomial(const AbelianGroup& g, GroupElement x, std::int64_t c) {
  GroupRingElem r(g);
  r.add_term(normalize(g, std::move(x)), c);
  return r;
}

void GroupRingElem::add_term(const GroupElement& x, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool GroupRingElem::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 && is_identity(terms_.begin()->first);
}

std::int64_t GroupRingElem::coefficient(const GroupElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

bool GroupRingElem::is_signed_monomial() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

GroupRingElem GroupRingElem::monomial_inverse() const {
  if (!is_signed_monomial()) throw DomainError("'" + to_string() + "' is not a signed monomial");
  const auto& [x, c] = *terms_.begin();
  return monomial(group_, inverse(group_, x), c);
}

std::int64_t GroupRingElem::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [x, c] : terms_) s = checked::add(s, c);
  return s;
}

static void require_same_group(const GroupRingElem& a, const GroupRingElem& b) {
  if (!(a.group() == b.group()))
    throw DomainError("group ring mismatch: Z[" + a.group().to_string() + "] vs Z[" + b.group().to_string() + "]");
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& other) {
  require_same_group(*this, other);
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& other) {
  require_same_group(*this, other);
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r = *this;
  for (auto& [x, c] : r.terms_) c = -c;
  return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  require_same_group(a, b);
  GroupRingElem r(a.group_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) r.add_term(compose(a.group_, x, y), checked::mul(c, d));
  return r;
}

GroupRingElem GroupRingElem::scaled(std::int64_t c) const {
  GroupRingElem r(group_);
  if (c == 0) return r;
  for (const auto& [x, d] : terms_) r.terms_.emplace(x, checked::mul(c, d));
  return r;
}

GroupRingElem GroupRingElem::shifted(const GroupElement& x) const {
  GroupRingElem r(group_);
  for (const auto& [y, c] : terms_) r.terms_.emplace(compose(group_, x, y), c);
  return r;
}

std::string GroupRingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto c = it->second;
    std::string mono = format_element(group_, it->first);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (mono == "1") {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

namespace {

class RingParser {
 public:
  RingParser(const AbelianGroup& g, std::string_view s) : g_(g), s_(s) {}

  GroupRingElem run() {
    GroupRingElem acc(g_);
    skip();
    if (pos_ == s_.size()) fail("empty ring element");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip();
      acc += term(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(0, msg + " in ring element '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1));
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  GroupRingElem term(int sign) {
    std::int64_t coeff = sign;
    GroupElement x = identity(g_);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = checked::mul(coeff, integer());
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        return GroupRingElem::monomial(g_, x, coeff);
      }
    }
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::size_t gen = g_.rank();
      for (std::size_t i = 0; i < g_.rank(); ++i)
        if (g_.generator_name(i) == name) gen = i;
      if (gen == g_.rank()) {
        pos_ = start;
        fail("unknown generator '" + name + "' for Z[" + g_.to_string() + "]");
      }
      std::int64_t e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        bool paren = peek() == '(';
        if (paren) ++pos_;
        int esign = 1;
        if (peek() == '-') {
          esign = -1;
          ++pos_;
        }
        e = esign * integer();
        if (paren) {
          if (peek() != ')') fail("expected ')'");
          ++pos_;
        }
        skip();
      }
      x.coords[gen] = checked::add(x.coords[gen], e);
      have_factor = true;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected generator after '*'");
      }
    }
    if (!have_factor) fail("expected term");
    return GroupRingElem::monomial(g_, x, coeff);
  }

  const AbelianGroup& g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupRingElem GroupRingElem::parse(const AbelianGroup& g, std::string_view text) { return RingParser(g, text).run(); }

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b) { return a + b; }
GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b) { return a * b; }
GroupRingElem ring_neg(const GroupRingElem& a) { return -a; }

// ---------------------------------------------------------------- associates

namespace {

// Smaller is better: compare leading exponents, then prefer a positive
// leading coefficient, then the remaining terms.
bool better_associate(const GroupRingElem& a, const GroupRingElem& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto la = ta.rbegin(), lb = tb.rbegin();
  if (la->first != lb->first) return la->first < lb->first;
  if ((la->second > 0) != (lb->second > 0)) return la->second > 0;
  std::vector<std::pair<GroupElement, std::int64_t>> va(ta.rbegin(), ta.rend()), vb(tb.rbegin(), tb.rend());
  return va < vb;
}

}  // namespace

GroupRingElem normalize_associate(const GroupRingElem& a) {
  if (a.is_zero()) return a;
  const auto& g = a.group();
  // Move the free part so every free coordinate has minimum 0.
  GroupElement shift = identity(g);
  for (int i = 0; i < g.free_rank; ++i) {
    std::int64_t lo = a.terms().begin()->first.coords[static_cast<std::size_t>(i)];
    for (const auto& [x, c] : a.terms()) lo = std::min(lo, x.coords[static_cast<std::size_t>(i)]);
    shift.coords[static_cast<std::size_t>(i)] = -lo;
  }
  GroupRingElem base = a.shifted(shift);
  // Torsion shifts are finitely many; try them all with both signs.
  AbelianGroup torsion_part(0, g.torsion_orders);
  GroupRingElem best = base;
  if (best.terms().rbegin()->second < 0) best = -best;
  for (const auto& t : enumerate_elements(torsion_part)) {
    GroupElement full = identity(g);
    std::copy(t.coords.begin(), t.coords.end(), full.coords.begin() + g.free_rank);
    GroupRingElem cand = base.shifted(full);
    for (int s : {1, -1}) {
      GroupRingElem c = s == 1 ? cand : -cand;
      if (better_associate(c, best)) best = c;
    }
  }
  return best;
}

bool trivially_associated(const GroupRingElem& a, const GroupRingElem& b) {
  if (!(a.group() == b.group())) return false;
  return normalize_associate(a) == normalize_associate(b);
}

}  // namespace qalex
