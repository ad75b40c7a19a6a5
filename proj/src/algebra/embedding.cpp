#include "ramify/algebra/embedding.hpp"

#include "ramify/error.hpp"

namespace ramify {

namespace {

constexpr std::uint64_t kTableBound = std::uint64_t{1} << 16;
constexpr std::uint64_t kRootSearchBound = std::uint64_t{1} << 20;

Elem apply_direct(const Field& source, const Field& target, Elem image, Elem a) {
  auto d = source.digits(a);
  Elem r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = target.add(target.mul(r, image), target.from_int(static_cast<std::int64_t>(d[i])));
  return r;
}

void check_compatible(const Field& sub, const Field& sup) {
  if (sub.characteristic() != sup.characteristic()) throw PreconditionError("embedding between different characteristics");
  if (sup.degree() % sub.degree() != 0)
    throw PreconditionError("cannot embed F_{p^" + std::to_string(sub.degree()) + "} into F_{p^" + std::to_string(sup.degree()) + "}");
}

}  // namespace

Embedding::Embedding(Field source, Field target, Elem generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(generator_image) {
  if (source_.order() <= kTableBound) {
    table_.resize(source_.order());
    for (Elem a = 0; a < source_.order(); ++a) table_[a] = apply_direct(source_, target_, image_, a);
  }
}

Elem Embedding::operator()(Elem a) const {
  if (!table_.empty()) return table_[a];
  return apply_direct(source_, target_, image_, a);
}

Embedding Embedding::after(const Embedding& inner) const {
  if (!(inner.target() == source_)) throw PreconditionError("embedding composition mismatch");
  return Embedding(inner.source(), target_, (*this)(inner.generator_image()));
}

std::vector<Elem> modulus_roots(const Field& source, const Field& target) {
  check_compatible(source, target);
  if (target.order() > kRootSearchBound) throw BudgetError("embedding target too large for root search");
  auto mod = source.modulus();
  std::vector<Elem> roots;
  for (Elem z = 0; z < target.order(); ++z) {
    Elem r = 0;
    for (std::size_t i = mod.size(); i-- > 0;) r = target.add(target.mul(r, z), target.from_int(static_cast<std::int64_t>(mod[i])));
    if (r == 0) roots.push_back(z);
  }
  return roots;
}

Embedding ff_embed(const Field& sub, const Field& sup) {
  check_compatible(sub, sup);
  if (sub.degree() == 1) return Embedding(sub, sup, 0);
  auto roots = modulus_roots(sub, sup);
  if (roots.empty()) throw PreconditionError("modulus has no root in target field");
  return Embedding(sub, sup, roots.front());
}

Embedding ff_embed_over(const Embedding& base_to_sub, const Embedding& base_to_sup) {
  const Field& sub = base_to_sub.target();
  const Field& sup = base_to_sup.target();
  if (!(base_to_sub.source() == base_to_sup.source())) throw PreconditionError("embeddings over different base fields");
  check_compatible(sub, sup);
  const Elem gamma = base_to_sub.source().generator();
  const Elem want = base_to_sup(gamma);
  for (Elem root : (sub.degree() == 1 ? std::vector<Elem>{0} : modulus_roots(sub, sup))) {
    Embedding e(sub, sup, root);
    if (e(base_to_sub(gamma)) == want) return e;
  }
  throw PreconditionError("no compatible embedding exists");
}

Embedding identity_embedding(const Field& f) { return Embedding(f, f, f.generator()); }

}  // namespace ramify
