#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cobrack/cyclic_words.hpp"
#include "cobrack/error.hpp"
#include "cobrack/surface_group.hpp"
#include "cobrack/surface_model.hpp"

namespace cobrack {

using Coefficient = boost::multiprecision::cpp_int;

/// How tensor factors are identified.
///   Literal: canonical cyclic rotation in the free group.
///   Dehn:    conjugacy class in the surface group.
enum class NormalizationMode { Literal, Dehn };

std::string_view to_string(NormalizationMode mode);
std::optional<NormalizationMode> parse_mode(std::string_view text);

/// Maps words to class keys under one genus and mode. Copies share the
/// presentation and a key cache; safe to use from several threads.
class Normalizer {
 public:
  Normalizer(Genus g, NormalizationMode mode);

  Genus genus() const noexcept { return genus_; }
  NormalizationMode mode() const noexcept { return mode_; }
  /// Null in literal mode.
  const Presentation* presentation() const noexcept { return presentation_.get(); }

  /// Class key of `w`, or nullopt when `w` is the trivial class.
  std::optional<CyclicWord> key(std::span<const Letter> w) const;
  std::optional<CyclicWord> key(const CyclicWord& w) const { return key(w.letters()); }

  /// Level of the class: repetition level of the letters in literal mode,
  /// the largest level among shortest representatives in Dehn mode.
  int level(std::span<const Letter> w) const;

  friend bool operator==(const Normalizer& a, const Normalizer& b) {
    return a.genus_ == b.genus_ && a.mode_ == b.mode_;
  }

 private:
  struct Cache;
  const ClassInfo& classify(const CyclicWord& w) const;

  Genus genus_;
  NormalizationMode mode_;
  std::shared_ptr<const Presentation> presentation_;
  std::shared_ptr<Cache> cache_;
};

/// Finitely supported integer combination of N-fold tensors of class keys.
/// Zero coefficients are never stored and no stored factor is trivial.
template <std::size_t N>
class TensorSum {
 public:
  using Key = std::array<CyclicWord, N>;
  using Terms = std::map<Key, Coefficient>;

  explicit TensorSum(Normalizer normalizer) : normalizer_(std::move(normalizer)) {}

  const Normalizer& normalizer() const noexcept { return normalizer_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Normalizes every factor; drops the term if any factor is trivial.
  void insert(const std::array<std::span<const Letter>, N>& factors, const Coefficient& coeff) {
    Key key;
    for (std::size_t i = 0; i < N; ++i) {
      auto k = normalizer_.key(factors[i]);
      if (!k) return;
      key[i] = std::move(*k);
    }
    add_term(key, coeff);
  }

  /// Adds to a term whose factors are already keys of this normalizer.
  void add_term(const Key& key, const Coefficient& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorSum& operator+=(const TensorSum& other) {
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }
  TensorSum& operator-=(const TensorSum& other) {
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
  }
  TensorSum& operator*=(const Coefficient& n) {
    if (n == 0) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) c *= n;
    }
    return *this;
  }

  /// Divides every coefficient by n; InvariantError if some is not a multiple.
  TensorSum divided_exactly(const Coefficient& n) const {
    if (n == 0) throw DomainError("division of a formal sum by zero");
    TensorSum out(normalizer_);
    for (const auto& [key, c] : terms_) {
      if (c % n != 0) {
        throw InvariantError("coefficient " + c.str() + " is not divisible by " + n.str());
      }
      out.terms_.emplace(key, c / n);
    }
    return out;
  }

  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend TensorSum operator-(TensorSum a) { return a *= Coefficient(-1); }
  friend TensorSum operator*(const Coefficient& n, TensorSum a) { return a *= n; }

  friend bool operator==(const TensorSum& a, const TensorSum& b) {
    return a.normalizer_ == b.normalizer_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TensorSum& other) const {
    if (!(normalizer_ == other.normalizer_)) {
      throw DomainError("formal sums use different genus or normalization mode");
    }
  }

  Normalizer normalizer_;
  Terms terms_;
};

using FormalSum = TensorSum<2>;
using TripleSum = TensorSum<3>;

/// x (x) y -> y (x) x, coefficient kept.
FormalSum swap_factors(const FormalSum& a);

/// a (x) b (x) c -> c (x) a (x) b.
TripleSum cyclic_permute(const TripleSum& a);

/// Adds coeff * (left (x) right), normalizing both factors.
void insert_pair(FormalSum& sum, std::span<const Letter> left, std::span<const Letter> right,
                 const Coefficient& coeff);

}  // namespace cobrack
