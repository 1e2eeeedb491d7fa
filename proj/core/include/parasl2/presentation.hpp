#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parasl2/errors.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/rational.hpp"
#include "parasl2/spin.hpp"

namespace parasl2 {

/// Product of generator letters, left to right. The empty word is the unit.
using Word = std::vector<int>;

struct Term {
  Rational coef;
  Word word;
};

/// Rational linear combination of words.
using Element = std::vector<Term>;

/// Rational combination of n-fold tensor words. Products are factor-wise:
/// (a (x) b)(c (x) d) = ac (x) bd.
struct TensorTerm {
  Rational coef;
  std::vector<Word> factors;
};
using TensorElement = std::vector<TensorTerm>;

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({Rational(x.coef * y.coef), concat(x.word, y.word)});
  return out;
}
inline Element operator+(Element a, const Element& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
inline Element operator*(const Rational& s, Element a) {
  for (auto& t : a) t.coef *= s;
  return a;
}
inline Element operator-(const Element& a, const Element& b) { return a + Rational(-1) * b; }

inline TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.factors.size() != y.factors.size()) throw structural_error("tensor arity mismatch");
      TensorTerm t{Rational(x.coef * y.coef), {}};
      for (std::size_t i = 0; i < x.factors.size(); ++i) t.factors.push_back(concat(x.factors[i], y.factors[i]));
      out.push_back(std::move(t));
    }
  return out;
}

/// Finitely generated algebra with a Hopf structure given on generators and
/// a matrix representation for every spin. Coefficients of the matrices live
/// in the ring C (theta series or bi-theta series); the structure maps use
/// rational coefficients only, with theta-dependent scalars entering as
/// dedicated letters.
template <class C>
class Presentation {
 public:
  struct Letter {
    std::string name;
    std::function<Matrix<C>(Spin)> rep;
    TensorElement coproduct;  // arity 2
    Element antipode;
    C counit;
  };

  Presentation(C zero, C one) : zero_(std::move(zero)), one_(std::move(one)) {}

  int add(Letter letter) {
    letters_.push_back(std::move(letter));
    return static_cast<int>(letters_.size()) - 1;
  }
  void set_structure(int id, TensorElement coproduct, Element antipode, C counit) {
    auto& l = letters_.at(static_cast<std::size_t>(id));
    l.coproduct = std::move(coproduct);
    l.antipode = std::move(antipode);
    l.counit = std::move(counit);
  }

  int id(std::string_view name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  }
  const Letter& letter(int id) const { return letters_.at(static_cast<std::size_t>(id)); }
  const C& zero() const { return zero_; }
  const C& one() const { return one_; }

  Element element(std::initializer_list<std::string_view> names, Rational coef = Rational(1)) const {
    Word w;
    for (auto n : names) w.push_back(id(n));
    return {{std::move(coef), std::move(w)}};
  }

  Matrix<C> identity(Spin j) const { return Matrix<C>::identity(j.dim(), zero_, one_); }

  Matrix<C> rep(int letter_id, Spin j) const {
    const auto key = std::make_pair(letter_id, j.twice());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, letter(letter_id).rep(j)).first;
    return it->second;
  }
  Matrix<C> rep(const Word& w, Spin j) const {
    if (w.empty()) return identity(j);
    Matrix<C> out = rep(w.front(), j);
    for (std::size_t i = 1; i < w.size(); ++i) out = out * rep(w[i], j);
    return out;
  }
  Matrix<C> rep(const Element& e, Spin j) const {
    Matrix<C> out(j.dim(), j.dim(), zero_);
    for (const auto& t : e) out += rep(t.word, j) * t.coef;
    return out;
  }

  /// Evaluates an n-fold tensor element on V_{j1} (x) ... (x) V_{jn} by
  /// Kronecker products, left factor's coefficients multiplied first.
  Matrix<C> flatten(const TensorElement& e, const std::vector<Spin>& spins) const {
    std::size_t dim = 1;
    for (Spin s : spins) dim *= s.dim();
    Matrix<C> out(dim, dim, zero_);
    for (const auto& t : e) {
      if (t.factors.size() != spins.size()) throw structural_error("tensor arity does not match spin list");
      Matrix<C> m = rep(t.factors[0], spins[0]);
      for (std::size_t i = 1; i < spins.size(); ++i) m = kron(m, rep(t.factors[i], spins[i]));
      out += m * t.coef;
    }
    return out;
  }

  TensorElement coproduct(const Word& w) const {
    TensorElement out{{Rational(1), {Word{}, Word{}}}};
    for (int l : w) out = out * letter(l).coproduct;
    return out;
  }
  TensorElement coproduct(const Element& e) const {
    TensorElement out;
    for (const auto& t : e)
      for (auto term : coproduct(t.word)) {
        term.coef *= t.coef;
        out.push_back(std::move(term));
      }
    return out;
  }

  /// Applies the coproduct to factor `index`, raising the arity by one.
  TensorElement coproduct_on_factor(const TensorElement& e, std::size_t index) const {
    TensorElement out;
    for (const auto& t : e)
      for (const auto& split : coproduct(t.factors.at(index))) {
        TensorTerm n{Rational(t.coef * split.coef), {}};
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
          if (i == index) {
            n.factors.push_back(split.factors[0]);
            n.factors.push_back(split.factors[1]);
          } else {
            n.factors.push_back(t.factors[i]);
          }
        }
        out.push_back(std::move(n));
      }
    return out;
  }

  /// Antihomomorphic extension: S(ab) = S(b) S(a).
  Element antipode(const Word& w) const {
    Element out{{Rational(1), Word{}}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * letter(*it).antipode;
    return out;
  }
  Element antipode(const Element& e) const {
    Element out;
    for (const auto& t : e) out = out + t.coef * antipode(t.word);
    return out;
  }

  C counit(const Word& w) const {
    C out = one_;
    for (int l : w) out = out * letter(l).counit;
    return out;
  }
  C counit(const Element& e) const {
    C out = zero_;
    for (const auto& t : e) out = out + counit(t.word) * t.coef;
    return out;
  }

  /// Exchanges the two factors of every term.
  static TensorElement swap_factors(const TensorElement& e) {
    TensorElement out = e;
    for (auto& t : out) std::swap(t.factors.at(0), t.factors.at(1));
    return out;
  }

 private:
  C zero_;
  C one_;
  std::vector<Letter> letters_;
  mutable std::map<std::pair<int, int>, Matrix<C>> cache_;
};

}  // namespace parasl2
