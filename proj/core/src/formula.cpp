#include "proofid/formula.hpp"

#include <cctype>
#include <functional>
#include <unordered_set>

#include "proofid/error.hpp"

namespace proofid {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_valid_letter_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Formula Formula::letter(std::string name) {
  if (!is_valid_letter_name(name)) {
    throw Error("invalid letter name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Connective::Letter;
  node->hash = mix(1, std::hash<std::string>{}(name));
  node->name = std::move(name);
  node->occurrences = 1;
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Top;
    node->hash = 2;
    return Formula(std::move(node));
  }();
  return instance;
}

Formula Formula::bot() {
  static const Formula instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Bot;
    node->hash = 3;
    return Formula(std::move(node));
  }();
  return instance;
}

Formula Formula::binary(Connective c, Formula l, Formula r) {
  auto node = std::make_shared<Node>();
  node->kind = c;
  node->occurrences = l.occurrences() + r.occurrences();
  node->connectives = l.connectives() + r.connectives() + 1;
  node->hash = mix(mix(static_cast<std::size_t>(c) + 11, l.hash()), r.hash());
  node->left = std::make_unique<Formula>(std::move(l));
  node->right = std::make_unique<Formula>(std::move(r));
  return Formula(std::move(node));
}

Formula Formula::conj(Formula left, Formula right) {
  return binary(Connective::Conj, std::move(left), std::move(right));
}
Formula Formula::disj(Formula left, Formula right) {
  return binary(Connective::Disj, std::move(left), std::move(right));
}
Formula Formula::impl(Formula antecedent, Formula consequent) {
  return binary(Connective::Impl, std::move(antecedent), std::move(consequent));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::Letter:
      return a.name() == b.name();
    case Connective::Top:
    case Connective::Bot:
      return true;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Letter:
      return a.name() <=> b.name();
    case Connective::Top:
    case Connective::Bot:
      return std::strong_ordering::equal;
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

std::vector<Occurrence> frontier(const Formula& f) {
  std::vector<Occurrence> out;
  out.reserve(f.occurrences());
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Connective::Letter:
        out.push_back({g.name(), out.size()});
        break;
      case Connective::Top:
      case Connective::Bot:
        break;
      default:
        walk(g.left());
        walk(g.right());
    }
  };
  walk(f);
  return out;
}

std::vector<std::string> letters(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& occ : frontier(f)) {
    if (seen.insert(occ.letter).second) out.push_back(occ.letter);
  }
  return out;
}

bool contains(const Formula& f, Connective c) {
  if (f.kind() == c) return true;
  switch (f.kind()) {
    case Connective::Conj:
    case Connective::Disj:
    case Connective::Impl:
      return contains(f.left(), c) || contains(f.right(), c);
    default:
      return false;
  }
}

}  // namespace proofid
