#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "extremal/scalar.hpp"

namespace extremal::freelie {

// Letters are generator indices 1..r.
using Word = std::vector<int>;
using MultiDegree = std::vector<int>;

bool is_lyndon(const Word& w);
// Lyndon words of length d over r letters, in lexicographic order.
std::vector<Word> lyndon_words(int r, int d);
// Number of Lyndon words of length d over r letters (necklace formula).
long long witt_number(int r, int d);
// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
MultiDegree multidegree(const Word& w, int r);

// "[x1,[x1,x2]]": standard bracketing of a Lyndon word.
std::string bracket_string(const Word& lyndon);
// "[x1,[x2,x3]]": right-nested bracketing of an arbitrary word.
std::string left_normed_string(const Word& w);

class Element {
 public:
  Element() = default;
  explicit Element(Field f) : field_(f) {}

  const Field& field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add(const Word& w, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& e);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  // Multidegree if every term shares one, else empty.
  MultiDegree homogeneous_degree(int r) const;
  std::string to_string() const;

 private:
  Field field_;
  std::map<Word, Scalar> terms_;
};

// Free Lie algebra on r generators with the Lyndon basis.
class FreeLieAlgebra {
 public:
  explicit FreeLieAlgebra(int r, Field f = Field::rationals());

  int rank() const { return r_; }
  const Field& field() const { return field_; }

  Element generator(int i) const;
  Element basis_element(const Word& lyndon) const;
  Element bracket(const Element& a, const Element& b) const;
  // Right-nested bracket [w1,[w2,...[w_{s-1},w_s]...]] in the Lyndon basis.
  Element monomial(const Word& w) const;
  // Lyndon words of length d, built once per d.
  const std::vector<Word>& basis(int d) const;

 private:
  Element bracket_words(const Word& u, const Word& v) const;

  int r_;
  Field field_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Word, Word>, Element> cache_;
  mutable std::map<int, std::vector<Word>> basis_cache_;
};

}  // namespace extremal::freelie
