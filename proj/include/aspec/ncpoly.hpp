#pragma once

// Free-algebra polynomials (words in the generators with exact coefficients),
// finitely presented associative algebras, and homomorphisms given by
// generator images. There is no rewriting modulo relations: whether an
// element vanishes is only ever decided on a module, by evaluation.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aspec/linalg.hpp"

namespace aspec {

using Word = std::vector<std::uint32_t>;  // generator indices; empty = unit monomial

struct LenLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NcPoly {
 public:
  explicit NcPoly(const FieldTag& f) : field_(f) {}

  static NcPoly zero(const FieldTag& f) { return NcPoly(f); }

  static NcPoly constant(const Scalar& c) {
    NcPoly p(c.field());
    p.add_term({}, c);
    return p;
  }

  static NcPoly generator(std::uint32_t index, const FieldTag& f) {
    NcPoly p(f);
    p.add_term({index}, Scalar::one(f));
    return p;
  }

  const FieldTag& field() const { return field_; }
  const std::map<Word, Scalar, LenLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch("term coefficient field");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(w, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    a.check_same(b);
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend NcPoly operator-(const NcPoly& a, const NcPoly& b) {
    a.check_same(b);
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }

  NcPoly operator-() const {
    NcPoly r(field_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    a.check_same(b);
    NcPoly r(a.field_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    }
    return r;
  }

  NcPoly scaled(const Scalar& c) const {
    NcPoly r(field_);
    for (const auto& [w, coeff] : terms_) r.add_term(w, c * coeff);
    return r;
  }

  NcPoly pow(unsigned k) const {
    NcPoly r = constant(Scalar::one(field_));
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  std::uint32_t max_generator() const {
    std::uint32_t m = 0;
    for (const auto& [w, c] : terms_)
      for (auto g : w) m = std::max(m, g + 1);
    return m;
  }

  // Evaluate under generator -> matrix; the unit monomial maps to I.
  Mat eval(const std::vector<Mat>& assignment, int dim) const {
    for (const auto& x : assignment) {
      if (!x.is_square() || x.rows() != dim) throw SizeMismatch("evaluation matrix shape");
      if (!(x.field() == field_)) throw FieldMismatch("evaluation matrix field");
    }
    Mat acc(dim, dim, field_);
    for (const auto& [w, c] : terms_) {
      Mat prod = Mat::identity(dim, field_);
      for (auto g : w) {
        if (g >= assignment.size()) throw SizeMismatch("generator without assigned matrix");
        prod = prod * assignment[g];
      }
      acc = acc + prod.scaled(c);
    }
    return acc;
  }

  Mat eval(const std::vector<Mat>& assignment) const {
    if (assignment.empty()) throw SizeMismatch("evaluation needs an explicit dimension");
    return eval(assignment, assignment[0].rows());
  }

  // Coefficients reinterpreted in another field (Q -> Q(i), or reduction mod p
  // when every denominator is invertible).
  NcPoly with_field(const FieldTag& f) const {
    NcPoly r(f);
    for (const auto& [w, c] : terms_) {
      if (!c.is_rational()) throw NonRationalRelations("coefficient " + c.str() + " is not rational");
      r.add_term(w, Scalar::of_rat(c.re(), f));
    }
    return r;
  }

  bool all_coefficients_rational() const {
    for (const auto& [w, c] : terms_)
      if (!c.is_rational()) return false;
    return true;
  }

 private:
  void check_same(const NcPoly& b) const {
    if (!(field_ == b.field_)) throw FieldMismatch("polynomials over mixed fields");
  }

  FieldTag field_;
  std::map<Word, Scalar, LenLexLess> terms_;
};

struct Presentation {
  FieldTag field;
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;

  int arity() const { return static_cast<int>(generators.size()); }

  std::optional<std::uint32_t> generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.field == b.field && a.generators == b.generators && a.relations == b.relations;
  }
};

using PresPtr = std::shared_ptr<const Presentation>;

inline bool same_presentation(const PresPtr& a, const PresPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline PresPtr make_presentation(FieldTag f, std::vector<std::string> gens,
                                 std::vector<NcPoly> relations) {
  for (const auto& r : relations) {
    if (!(r.field() == f)) throw FieldMismatch("relation field");
    if (r.max_generator() > gens.size()) throw SizeMismatch("relation uses unknown generator");
  }
  Presentation p{std::move(f), std::move(gens), std::move(relations)};
  return std::make_shared<const Presentation>(std::move(p));
}

inline std::vector<std::string> default_generator_names(int n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> names;
  if (n <= 3) {
    for (int i = 0; i < n; ++i) names.push_back(small[i]);
  } else {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

// k[x_1,...,x_n]: n generators with the n(n-1)/2 commutator relations.
inline PresPtr commutative_preset(int n, const FieldTag& f,
                                  std::vector<std::string> names = {}) {
  if (n < 1) throw SizeMismatch("commutative_preset needs n >= 1");
  if (names.empty()) names = default_generator_names(n);
  std::vector<NcPoly> rels;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
    for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(n); ++j) {
      NcPoly xi = NcPoly::generator(i, f), xj = NcPoly::generator(j, f);
      rels.push_back(xi * xj - xj * xi);
    }
  }
  return make_presentation(f, std::move(names), std::move(rels));
}

// n generators, no relations.
inline PresPtr free_preset(int n, const FieldTag& f, std::vector<std::string> names = {}) {
  if (n < 1) throw SizeMismatch("free_preset needs n >= 1");
  if (names.empty()) names = default_generator_names(n);
  return make_presentation(f, std::move(names), {});
}

struct AlgHom {
  PresPtr source;
  PresPtr target;
  std::vector<NcPoly> images;  // one per source generator, over target

  void check() const {
    if (static_cast<int>(images.size()) != source->arity())
      throw SizeMismatch("homomorphism image count");
    if (!(source->field == target->field))
      throw FieldMismatch("homomorphism between algebras over distinct fields");
    for (const auto& p : images) {
      if (!(p.field() == target->field)) throw FieldMismatch("homomorphism image field");
      if (p.max_generator() > target->generators.size())
        throw SizeMismatch("image uses unknown target generator");
    }
  }
};

inline AlgHom identity_hom(const PresPtr& p) {
  std::vector<NcPoly> images;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(p->arity()); ++i)
    images.push_back(NcPoly::generator(i, p->field));
  return {p, p, std::move(images)};
}

// Substitute generator images; products expand in the free algebra.
inline NcPoly hom_apply(const AlgHom& phi, const NcPoly& p) {
  phi.check();
  if (!(p.field() == phi.source->field)) throw FieldMismatch("hom_apply polynomial field");
  NcPoly out(phi.target->field);
  for (const auto& [w, c] : p.terms()) {
    NcPoly prod = NcPoly::constant(Scalar::one(phi.target->field));
    for (auto g : w) {
      if (g >= phi.images.size()) throw SizeMismatch("polynomial uses unknown generator");
      prod = prod * phi.images[g];
    }
    out = out + prod.scaled(c);
  }
  return out;
}

inline AlgHom hom_compose(const AlgHom& psi, const AlgHom& phi) {
  if (!same_presentation(phi.target, psi.source))
    throw CompositionMismatch("inner target differs from outer source");
  std::vector<NcPoly> images;
  for (const auto& img : phi.images) images.push_back(hom_apply(psi, img));
  return {phi.source, psi.target, std::move(images)};
}

}  // namespace aspec
