#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace proofid {

enum class Connective { Letter, Top, Bot, Conj, Disj, Impl };

// Immutable propositional formula. Copies share structure.
//
// Equality is syntactic: no associativity or commutativity is assumed.
// The ordering is a fixed total order (connective rank, then letter name,
// then children left to right) used wherever a canonical sort is needed.
class Formula {
 public:
  static Formula letter(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula impl(Formula antecedent, Formula consequent);

  Connective kind() const { return node_->kind; }
  bool is(Connective c) const { return node_->kind == c; }
  const std::string& name() const { return node_->name; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  // Number of letter occurrences (the length of its frontier).
  std::size_t occurrences() const { return node_->occurrences; }
  // Number of binary connectives.
  std::size_t connectives() const { return node_->connectives; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
    std::size_t occurrences = 0;
    std::size_t connectives = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective c, Formula l, Formula r);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct Occurrence {
  std::string letter;
  std::size_t position;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Left-to-right letter occurrences, positions 0..n-1. Top and Bot add none.
std::vector<Occurrence> frontier(const Formula& f);

// Distinct letters in order of first occurrence.
std::vector<std::string> letters(const Formula& f);

bool contains(const Formula& f, Connective c);
bool is_valid_letter_name(const std::string& name);

}  // namespace proofid
