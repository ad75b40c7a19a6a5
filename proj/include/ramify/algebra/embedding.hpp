#pragma once

#include <vector>

#include "ramify/algebra/field.hpp"

namespace ramify {

/// Ring embedding F_{p^a} -> F_{p^b} determined by the image of the source
/// generator.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Field source, Field target, Elem generator_image);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem generator_image() const { return image_; }
  Elem operator()(Elem a) const;

  /// (this ∘ inner), i.e. first `inner` then this.
  Embedding after(const Embedding& inner) const;

 private:
  Field source_;
  Field target_;
  Elem image_ = 0;
  std::vector<Elem> table_;
};

/// Roots, ascending by key, of the source field's modulus inside `target`.
std::vector<Elem> modulus_roots(const Field& source, const Field& target);

/// Canonical embedding: generator goes to the smallest-key root of the source
/// modulus. Throws PreconditionError on mismatched characteristic or
/// non-dividing degrees.
Embedding ff_embed(const Field& sub, const Field& sup);

/// Smallest-key embedding sub -> sup with result ∘ base_to_sub == base_to_sup.
Embedding ff_embed_over(const Embedding& base_to_sub, const Embedding& base_to_sup);

/// Identity embedding of a field into itself.
Embedding identity_embedding(const Field& f);

}  // namespace ramify
