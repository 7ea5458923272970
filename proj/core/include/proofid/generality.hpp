#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "proofid/arrow.hpp"

namespace proofid {

using Natural = boost::multiprecision::cpp_int;

// Arrow of the opposite of the category of functions on finite ordinals.
// It maps each codomain occurrence (source) to the domain occurrence
// (target) it is linked to.
struct OrdinalFunction {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> map;

  static OrdinalFunction identity(std::size_t n);
  friend bool operator==(const OrdinalFunction&, const OrdinalFunction&) = default;
};

// Binary relation between domain and codomain occurrences, stored as
// sorted, duplicate-free (dom index, cod index) pairs.
struct Relation {
  std::size_t dom_size = 0;
  std::size_t cod_size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  static Relation identity(std::size_t n);
  static Relation from_pairs(std::size_t dom_size, std::size_t cod_size,
                             std::vector<std::pair<std::size_t, std::size_t>> pairs);
  bool contains(std::size_t d, std::size_t c) const;
  Relation inverse() const;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// Natural-number matrix with rows indexed by domain occurrences and columns
// by codomain occurrences. Entries count linking paths.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<unsigned>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Natural& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Natural& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Natural> entries_;
};

// Graphical composition in diagrammatic-reverse order: compose(g, f) is
// the image of comp(g, f).
OrdinalFunction compose(const OrdinalFunction& g, const OrdinalFunction& f);
Relation compose(const Relation& g, const Relation& f);
Matrix compose(const Matrix& g, const Matrix& f);

Relation relation_union(const Relation& a, const Relation& b);

using GraphValue = std::variant<OrdinalFunction, Relation, Matrix>;

// CART terms.
OrdinalFunction interp_function(const ArrowTerm& t);
// CONJDISJ terms, plus CART terms without bang or T. Sum is read as union
// and zero as the empty relation, so MATRIX terms are accepted too.
Relation interp_relation(const ArrowTerm& t);
// MATRIX (hence CONJDISJ) terms.
Matrix interp_matrix(const ArrowTerm& t);

// Interpretation selected by fragment: CART -> function, CONJDISJ ->
// relation, MATRIX -> matrix. CCC has no graph semantics here.
GraphValue interpret(const ArrowTerm& t, Fragment fragment);

// Memoized interp_matrix / interp_relation for bulk runs over enumerated
// terms. Proper subterms are cached, the argument itself is not. Fragment
// and type checks are skipped, so arguments must be well-typed.
class GraphCache {
 public:
  Matrix matrix(const ArrowTerm& t);
  Relation relation(const ArrowTerm& t);
  std::size_t size() const { return matrices_.size() + relations_.size(); }
  void clear() {
    matrices_.clear();
    relations_.clear();
  }

 private:
  const Matrix& cached_matrix(const ArrowTerm& t);
  const Relation& cached_relation(const ArrowTerm& t);
  // Entries hold the term so node addresses stay unique.
  std::unordered_map<const void*, std::pair<ArrowTerm, Matrix>> matrices_;
  std::unordered_map<const void*, std::pair<ArrowTerm, Relation>> relations_;
};

Relation support(const Matrix& m);

bool is_difunctional(const Relation& r);

// Same generality: equal graphs in the graphical category of the smallest
// fragment containing both terms. Requires equal types; rejects CCC.
bool equal_by_generality(const ArrowTerm& f, const ArrowTerm& g);
bool equal_by_generality(const ArrowTerm& f, const ArrowTerm& g, Fragment fragment);

// Decomposes m into matrices with a single entry equal to 1, one per unit
// of multiplicity, in row-major order. Throws BoundError if the total
// multiplicity exceeds `cap`.
std::vector<Matrix> single_entry_decomposition(const Matrix& m, std::size_t cap = 1'000'000);
Matrix resum(const std::vector<Matrix>& parts, std::size_t rows, std::size_t cols);

struct DifunctionalWitness {
  Relation first;   // X -> Y
  Relation second;  // Y -> Z
  Relation composite;
};

// Brute force over all relations between sets of size <= max_size for a
// composable difunctional pair whose composite is not difunctional.
std::optional<DifunctionalWitness> find_difunctional_noncomposition_witness(std::size_t max_size = 3);

std::string render(const OrdinalFunction& f);
std::string render(const Relation& r);
std::string render(const Matrix& m);
std::string render(const GraphValue& v);

}  // namespace proofid
