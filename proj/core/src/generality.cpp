#include "proofid/generality.hpp"

#include <algorithm>
#include <sstream>

#include "proofid/error.hpp"

namespace proofid {

// ---- values ----------------------------------------------------------------

OrdinalFunction OrdinalFunction::identity(std::size_t n) {
  OrdinalFunction f{n, n, {}};
  for (std::size_t i = 0; i < n; ++i) f.map.push_back(i);
  return f;
}

Relation Relation::identity(std::size_t n) {
  Relation r{n, n, {}};
  for (std::size_t i = 0; i < n; ++i) r.pairs.emplace_back(i, i);
  return r;
}

Relation Relation::from_pairs(std::size_t dom_size, std::size_t cod_size,
                              std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  for (auto [d, c] : pairs) {
    if (d >= dom_size || c >= cod_size) throw Error("relation pair out of range");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Relation{dom_size, cod_size, std::move(pairs)};
}

bool Relation::contains(std::size_t d, std::size_t c) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{d, c});
}

Relation Relation::inverse() const {
  std::vector<std::pair<std::size_t, std::size_t>> inv;
  inv.reserve(pairs.size());
  for (auto [d, c] : pairs) inv.emplace_back(c, d);
  return from_pairs(cod_size, dom_size, std::move(inv));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<unsigned>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Natural& n) { return n == 0; });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

// ---- composition -----------------------------------------------------------

OrdinalFunction compose(const OrdinalFunction& g, const OrdinalFunction& f) {
  if (g.target_size != f.source_size) throw Error("ordinal function composition mismatch");
  OrdinalFunction out{g.source_size, f.target_size, {}};
  out.map.reserve(g.source_size);
  for (std::size_t i : g.map) out.map.push_back(f.map[i]);
  return out;
}

Relation compose(const Relation& g, const Relation& f) {
  if (f.cod_size != g.dom_size) throw Error("relation composition mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : f.pairs) {
    auto lo = std::lower_bound(g.pairs.begin(), g.pairs.end(), std::pair<std::size_t, std::size_t>{b, 0});
    for (auto it = lo; it != g.pairs.end() && it->first == b; ++it) out.emplace_back(a, it->second);
  }
  return Relation::from_pairs(f.dom_size, g.cod_size, std::move(out));
}

Matrix compose(const Matrix& g, const Matrix& f) {
  if (f.cols() != g.rows()) throw Error("matrix composition mismatch");
  Matrix out(f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Natural& x = f.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Natural& y = g.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

Relation relation_union(const Relation& a, const Relation& b) {
  if (a.dom_size != b.dom_size || a.cod_size != b.cod_size) throw Error("relation union mismatch");
  auto pairs = a.pairs;
  pairs.insert(pairs.end(), b.pairs.begin(), b.pairs.end());
  return Relation::from_pairs(a.dom_size, a.cod_size, std::move(pairs));
}

// ---- interpretations -------------------------------------------------------

namespace {

[[noreturn]] void reject(const ArrowTerm& t, const char* semantics) {
  throw FragmentError("constructor '" + std::string(to_string(t.kind())) + "' has no " +
                      semantics + " interpretation");
}

OrdinalFunction function_of(const ArrowTerm& t) {
  switch (t.kind()) {
    case ArrowKind::Id:
      return OrdinalFunction::identity(t.a().occurrences());
    case ArrowKind::Bang:
      return OrdinalFunction{0, t.a().occurrences(), {}};
    case ArrowKind::Proj1:
    case ArrowKind::Proj2: {
      std::size_t na = t.a().occurrences();
      std::size_t nb = t.b().occurrences();
      std::size_t n = t.kind() == ArrowKind::Proj1 ? na : nb;
      std::size_t offset = t.kind() == ArrowKind::Proj1 ? 0 : na;
      OrdinalFunction f{n, na + nb, {}};
      for (std::size_t i = 0; i < n; ++i) f.map.push_back(offset + i);
      return f;
    }
    case ArrowKind::Pair: {
      OrdinalFunction f = function_of(t.first());
      OrdinalFunction g = function_of(t.second());
      OrdinalFunction out{f.source_size + g.source_size, f.target_size, f.map};
      out.map.insert(out.map.end(), g.map.begin(), g.map.end());
      return out;
    }
    case ArrowKind::Comp:
      return compose(function_of(t.first()), function_of(t.second()));
    default:
      reject(t, "ordinal-function");
  }
}

// One interpretation step; `sub` supplies the graphs of the children.
template <class Sub>
Relation relation_step(const ArrowTerm& t, Sub&& sub) {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  switch (t.kind()) {
    case ArrowKind::Id:
      return Relation::identity(t.a().occurrences());
    case ArrowKind::Proj1:
    case ArrowKind::Proj2: {
      std::size_t na = t.a().occurrences();
      std::size_t nb = t.b().occurrences();
      bool first = t.kind() == ArrowKind::Proj1;
      std::size_t n = first ? na : nb;
      Pairs p;
      for (std::size_t i = 0; i < n; ++i) p.emplace_back((first ? 0 : na) + i, i);
      return Relation{na + nb, n, std::move(p)};
    }
    case ArrowKind::Inj1:
    case ArrowKind::Inj2: {
      std::size_t na = t.a().occurrences();
      std::size_t nb = t.b().occurrences();
      bool first = t.kind() == ArrowKind::Inj1;
      std::size_t n = first ? na : nb;
      Pairs p;
      for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, (first ? 0 : na) + i);
      return Relation{n, na + nb, std::move(p)};
    }
    case ArrowKind::Pair: {
      Relation f = sub(t.first());
      Relation g = sub(t.second());
      Pairs p = f.pairs;
      for (auto [d, c] : g.pairs) p.emplace_back(d, f.cod_size + c);
      return Relation::from_pairs(f.dom_size, f.cod_size + g.cod_size, std::move(p));
    }
    case ArrowKind::Copair: {
      Relation f = sub(t.first());
      Relation g = sub(t.second());
      Pairs p = f.pairs;
      for (auto [d, c] : g.pairs) p.emplace_back(f.dom_size + d, c);
      return Relation::from_pairs(f.dom_size + g.dom_size, f.cod_size, std::move(p));
    }
    case ArrowKind::Comp:
      return compose(sub(t.first()), sub(t.second()));
    case ArrowKind::Sum:
      return relation_union(sub(t.first()), sub(t.second()));
    case ArrowKind::Zero:
      return Relation{t.a().occurrences(), t.b().occurrences(), {}};
    default:
      reject(t, "relational");
  }
}

Relation relation_of(const ArrowTerm& t) { return relation_step(t, relation_of); }

template <class Sub>
Matrix matrix_step(const ArrowTerm& t, Sub&& sub) {
  switch (t.kind()) {
    case ArrowKind::Comp:
      return compose(sub(t.first()), sub(t.second()));
    case ArrowKind::Sum:
      return sub(t.first()) + sub(t.second());
    case ArrowKind::Zero:
      return Matrix(t.a().occurrences(), t.b().occurrences());
    case ArrowKind::Pair:
    case ArrowKind::Copair: {
      Matrix f = sub(t.first());
      Matrix g = sub(t.second());
      bool pair = t.kind() == ArrowKind::Pair;
      Matrix out = pair ? Matrix(f.rows(), f.cols() + g.cols()) : Matrix(f.rows() + g.rows(), f.cols());
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) out.at(i, j) = f.at(i, j);
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
          out.at(pair ? i : f.rows() + i, pair ? f.cols() + j : j) = g.at(i, j);
      return out;
    }
    case ArrowKind::Id:
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
    case ArrowKind::Inj1:
    case ArrowKind::Inj2: {
      Relation r = relation_step(t, [](const ArrowTerm&) -> Relation { return {}; });
      Matrix m(r.dom_size, r.cod_size);
      for (auto [d, c] : r.pairs) m.at(d, c) = 1;
      return m;
    }
    default:
      reject(t, "matrix");
  }
}

Matrix matrix_of(const ArrowTerm& t) { return matrix_step(t, matrix_of); }

bool relational_formula(const Formula& a) {
  switch (a.kind()) {
    case Connective::Letter:
    case Connective::Top:
      return true;
    case Connective::Conj:
    case Connective::Disj:
      return relational_formula(a.left()) && relational_formula(a.right());
    default:
      return false;
  }
}

// Everything except bang, curry, eval, implication and F.
void require_relational(const ArrowTerm& t) {
  switch (t.kind()) {
    case ArrowKind::Bang:
    case ArrowKind::Curry:
    case ArrowKind::Eval:
      reject(t, "relational");
    default:
      break;
  }
  if (t.is_primitive()) {
    bool ok = relational_formula(t.a());
    if (t.kind() != ArrowKind::Id) ok = ok && relational_formula(t.b());
    if (!ok) throw FragmentError("formula outside {&, |, T} has no relational interpretation");
    return;
  }
  require_relational(t.first());
  if (t.arity() == 2) require_relational(t.second());
}

}  // namespace

OrdinalFunction interp_function(const ArrowTerm& t) {
  check_fragment(t, Fragment::Cart);
  infer_type(t);
  return function_of(t);
}

Relation interp_relation(const ArrowTerm& t) {
  require_relational(t);
  infer_type(t);
  return relation_of(t);
}

Matrix interp_matrix(const ArrowTerm& t) {
  check_fragment(t, Fragment::Matrix);
  infer_type(t);
  return matrix_of(t);
}

const Matrix& GraphCache::cached_matrix(const ArrowTerm& t) {
  if (auto it = matrices_.find(t.identity()); it != matrices_.end()) return it->second.second;
  Matrix m = matrix_step(t, [this](const ArrowTerm& c) -> const Matrix& { return cached_matrix(c); });
  return matrices_.emplace(t.identity(), std::pair{t, std::move(m)}).first->second.second;
}

const Relation& GraphCache::cached_relation(const ArrowTerm& t) {
  if (auto it = relations_.find(t.identity()); it != relations_.end()) return it->second.second;
  Relation r = relation_step(t, [this](const ArrowTerm& c) -> const Relation& { return cached_relation(c); });
  return relations_.emplace(t.identity(), std::pair{t, std::move(r)}).first->second.second;
}

Matrix GraphCache::matrix(const ArrowTerm& t) {
  return matrix_step(t, [this](const ArrowTerm& c) -> const Matrix& { return cached_matrix(c); });
}

Relation GraphCache::relation(const ArrowTerm& t) {
  return relation_step(t, [this](const ArrowTerm& c) -> const Relation& { return cached_relation(c); });
}

GraphValue interpret(const ArrowTerm& t, Fragment fragment) {
  switch (fragment) {
    case Fragment::Cart: return interp_function(t);
    case Fragment::ConjDisj:
      check_fragment(t, Fragment::ConjDisj);
      return interp_relation(t);
    case Fragment::Matrix: return interp_matrix(t);
    case Fragment::Ccc: break;
  }
  throw FragmentError("no graph semantics for fragment ccc");
}

Relation support(const Matrix& m) {
  Relation r{m.rows(), m.cols(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) > 0) r.pairs.emplace_back(i, j);
  return r;
}

bool is_difunctional(const Relation& r) {
  // (a,d) in R R^-1 R iff exist b, c with (a,b), (c,b), (c,d) in R.
  Relation rr = compose(r, compose(r.inverse(), r));
  return std::all_of(rr.pairs.begin(), rr.pairs.end(),
                     [&](const auto& p) { return r.contains(p.first, p.second); });
}

bool equal_by_generality(const ArrowTerm& f, const ArrowTerm& g, Fragment fragment) {
  if (!(infer_type(f) == infer_type(g))) throw TypeError("terms have different types", "root");
  if (fragment == Fragment::Ccc) {
    throw FragmentError("generality for ccc is not a graph semantics; use principal types");
  }
  return interpret(f, fragment) == interpret(g, fragment);
}

bool equal_by_generality(const ArrowTerm& f, const ArrowTerm& g) {
  Fragment a = smallest_fragment(f);
  Fragment b = smallest_fragment(g);
  Fragment joint = a;
  if (a != b) {
    // The join exists only when one side embeds in the other's fragment.
    joint = Fragment::Matrix;
    for (Fragment candidate : {Fragment::Cart, Fragment::ConjDisj, Fragment::Ccc, Fragment::Matrix}) {
      try {
        check_fragment(f, candidate);
        check_fragment(g, candidate);
        joint = candidate;
        break;
      } catch (const FragmentError&) {
      }
    }
  }
  return equal_by_generality(f, g, joint);
}

// ---- normal form and witnesses --------------------------------------------

std::vector<Matrix> single_entry_decomposition(const Matrix& m, std::size_t cap) {
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) > Natural(cap) || parts.size() + static_cast<std::size_t>(m.at(i, j)) > cap) {
        throw BoundError("matrix multiplicity exceeds decomposition cap");
      }
      for (Natural k = 0; k < m.at(i, j); ++k) {
        Matrix unit(m.rows(), m.cols());
        unit.at(i, j) = 1;
        parts.push_back(std::move(unit));
      }
    }
  }
  return parts;
}

Matrix resum(const std::vector<Matrix>& parts, std::size_t rows, std::size_t cols) {
  Matrix total(rows, cols);
  for (const auto& p : parts) total = total + p;
  return total;
}

namespace {

std::vector<Relation> all_relations(std::size_t dom, std::size_t cod) {
  std::vector<Relation> out;
  std::size_t cells = dom * cod;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    Relation r{dom, cod, {}};
    for (std::size_t bit = 0; bit < cells; ++bit) {
      if (mask & (std::size_t{1} << bit)) r.pairs.emplace_back(bit / cod, bit % cod);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::optional<DifunctionalWitness> find_difunctional_noncomposition_witness(std::size_t max_size) {
  for (std::size_t x = 1; x <= max_size; ++x) {
    for (std::size_t y = 1; y <= max_size; ++y) {
      for (std::size_t z = 1; z <= max_size; ++z) {
        auto firsts = all_relations(x, y);
        auto seconds = all_relations(y, z);
        for (const auto& r : firsts) {
          if (!is_difunctional(r)) continue;
          for (const auto& s : seconds) {
            if (!is_difunctional(s)) continue;
            Relation c = compose(s, r);
            if (!is_difunctional(c)) return DifunctionalWitness{r, s, c};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---- rendering -------------------------------------------------------------

std::string render(const OrdinalFunction& f) {
  std::ostringstream os;
  os << "function source=" << f.source_size << " target=" << f.target_size << " map=[";
  for (std::size_t i = 0; i < f.map.size(); ++i) os << (i ? "," : "") << f.map[i];
  os << "]";
  return os.str();
}

std::string render(const Relation& r) {
  std::ostringstream os;
  os << "relation dom=" << r.dom_size << " cod=" << r.cod_size << " pairs=[";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    os << (i ? "," : "") << "(" << r.pairs[i].first << "," << r.pairs[i].second << ")";
  }
  os << "]";
  return os.str();
}

std::string render(const Matrix& m) {
  std::ostringstream os;
  os << "matrix rows=" << m.rows() << " cols=" << m.cols() << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string render(const GraphValue& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

}  // namespace proofid
