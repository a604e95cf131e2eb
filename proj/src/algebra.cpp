#include "cobrack/algebra.hpp"

#include <mutex>
#include <shared_mutex>

namespace cobrack {

std::string_view to_string(NormalizationMode mode) {
  return mode == NormalizationMode::Literal ? "literal" : "dehn";
}

std::optional<NormalizationMode> parse_mode(std::string_view text) {
  if (text == "literal") return NormalizationMode::Literal;
  if (text == "dehn") return NormalizationMode::Dehn;
  return std::nullopt;
}

struct Normalizer::Cache {
  std::shared_mutex mutex;
  std::map<CyclicWord, ClassInfo> entries;
};

Normalizer::Normalizer(Genus g, NormalizationMode mode)
    : genus_(g), mode_(mode), cache_(std::make_shared<Cache>()) {
  require_hyperbolic(g);
  if (mode == NormalizationMode::Dehn) presentation_ = std::make_shared<const Presentation>(g);
}

const ClassInfo& Normalizer::classify(const CyclicWord& w) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->entries.find(w); it != cache_->entries.end()) return it->second;
  }
  ClassInfo info = presentation_->classify(w);
  std::unique_lock lock(cache_->mutex);
  // std::map never invalidates references on insert.
  return cache_->entries.try_emplace(w, std::move(info)).first->second;
}

std::optional<CyclicWord> Normalizer::key(std::span<const Letter> w) const {
  validate_word(w, genus_);
  CyclicWord c = CyclicWord::from_word(w);
  if (mode_ == NormalizationMode::Dehn && !c.empty()) c = classify(c).key;
  if (c.empty()) return std::nullopt;
  return c;
}

int Normalizer::level(std::span<const Letter> w) const {
  validate_word(w, genus_);
  CyclicWord c = CyclicWord::from_word(w);
  if (mode_ == NormalizationMode::Literal || c.empty()) return cobrack::level(c);
  return classify(c).level;
}

FormalSum swap_factors(const FormalSum& a) {
  FormalSum out(a.normalizer());
  for (const auto& [key, c] : a.terms()) out.add_term({key[1], key[0]}, c);
  return out;
}

TripleSum cyclic_permute(const TripleSum& a) {
  TripleSum out(a.normalizer());
  for (const auto& [key, c] : a.terms()) out.add_term({key[2], key[0], key[1]}, c);
  return out;
}

void insert_pair(FormalSum& sum, std::span<const Letter> left, std::span<const Letter> right,
                 const Coefficient& coeff) {
  sum.insert({left, right}, coeff);
}

}  // namespace cobrack
