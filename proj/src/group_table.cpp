#include "qrg/group_table.hpp"

#include <mutex>
#include <numeric>

#include "qrg/error.hpp"

namespace qrg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Encoding compose(const ElementAlgebra& algebra, EncodingView a, EncodingView b) {
  return std::visit(
      Overloaded{
          [&](const MatrixAlgebra& m) {
            const std::uint32_t d = m.dim;
            Encoding c(std::size_t{d} * d, u'\0');
            for (std::uint32_t i = 0; i < d; ++i) {
              for (std::uint32_t j = 0; j < d; ++j) {
                std::uint64_t acc = 0;
                for (std::uint32_t l = 0; l < d; ++l) {
                  acc += std::uint64_t{a[i * d + l]} * b[l * d + j];
                }
                c[i * d + j] = static_cast<char16_t>(acc % m.modulus);
              }
            }
            return c;
          },
          [&](const PermutationAlgebra& p) {
            Encoding c(p.degree, u'\0');
            for (std::uint32_t x = 0; x < p.degree; ++x) c[x] = a[b[x]];
            return c;
          },
          [&](const AbelianAlgebra& ab) {
            Encoding c(ab.factors.size(), u'\0');
            for (std::size_t i = 0; i < ab.factors.size(); ++i) {
              c[i] = static_cast<char16_t>((std::uint32_t{a[i]} + b[i]) % ab.factors[i]);
            }
            return c;
          },
      },
      algebra);
}

Encoding invert(const ElementAlgebra& algebra, EncodingView a) {
  return std::visit(
      Overloaded{
          [&](const MatrixAlgebra& m) {
            const auto inv = inverse(decode_matrix(a, m.modulus));
            if (!inv) fail(ErrorKind::Internal, "group element is not invertible");
            return encode(*inv);
          },
          [&](const PermutationAlgebra& p) {
            Encoding c(p.degree, u'\0');
            for (std::uint32_t x = 0; x < p.degree; ++x) c[a[x]] = static_cast<char16_t>(x);
            return c;
          },
          [&](const AbelianAlgebra& ab) {
            Encoding c(ab.factors.size(), u'\0');
            for (std::size_t i = 0; i < ab.factors.size(); ++i) {
              c[i] = static_cast<char16_t>((ab.factors[i] - a[i]) % ab.factors[i]);
            }
            return c;
          },
      },
      algebra);
}

Encoding identity_encoding(const ElementAlgebra& algebra) {
  return std::visit(Overloaded{
                        [](const MatrixAlgebra& m) { return encode(identity_matrix(m.dim, m.modulus)); },
                        [](const PermutationAlgebra& p) {
                          Encoding c(p.degree, u'\0');
                          for (std::uint32_t x = 0; x < p.degree; ++x) c[x] = static_cast<char16_t>(x);
                          return c;
                        },
                        [](const AbelianAlgebra& ab) { return Encoding(ab.factors.size(), u'\0'); },
                    },
                    algebra);
}

Encoding encode(const ModMatrix& m) {
  if (m.modulus > 0xFFFF) fail(ErrorKind::TooLarge, "matrix modulus does not fit the encoding");
  Encoding e(m.entries.size(), u'\0');
  for (std::size_t i = 0; i < m.entries.size(); ++i) e[i] = static_cast<char16_t>(m.entries[i]);
  return e;
}

ModMatrix decode_matrix(EncodingView e, std::uint32_t modulus) {
  std::uint32_t dim = 0;
  while (std::size_t{dim} * dim < e.size()) ++dim;
  ModMatrix m{dim, modulus, std::vector<std::uint32_t>(e.size())};
  for (std::size_t i = 0; i < e.size(); ++i) m.entries[i] = e[i];
  return m;
}

Encoding encode_permutation(const std::vector<std::uint32_t>& images) {
  Encoding e(images.size(), u'\0');
  for (std::size_t i = 0; i < images.size(); ++i) e[i] = static_cast<char16_t>(images[i]);
  return e;
}

std::string display_name(const GroupDescriptor& d) {
  const auto s = [](std::uint32_t v) { return std::to_string(v); };
  const auto ring = [&]() { return d.n == 1 ? "F_" + s(d.p) : "Z/" + s(d.p) + "^" + s(d.n); };
  if (d.family == "sl") return "SL_" + s(d.k) + "(" + ring() + ")";
  if (d.family == "sp") return "Sp_" + s(2 * d.k) + "(" + ring() + ")";
  if (d.family == "alt") return "Alt_" + s(d.k);
  if (d.family == "sym") return "Sym_" + s(d.k);
  if (d.family == "tree") return "F_" + s(d.depth) + "(k=" + s(d.k) + ")";
  if (d.family == "abelian") {
    if (d.factors.empty()) return "trivial";
    std::string name;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      if (i > 0) name += " x ";
      name += "Z/" + s(d.factors[i]);
    }
    return name;
  }
  if (d.family == "quaternion") return "Q8";
  return d.family;
}

struct GroupTable::Impl {
  ElementAlgebra algebra;
  GroupDescriptor descriptor;
  std::deque<Encoding> elements;
  std::unordered_map<EncodingView, Ordinal> index;
  std::vector<Ordinal> inverses;
  std::vector<Ordinal> generators;

  mutable std::once_flag cayley_once;
  mutable std::vector<std::uint16_t> cayley;

  Ordinal add(Encoding e) {
    const auto ord = static_cast<Ordinal>(elements.size());
    elements.push_back(std::move(e));
    index.emplace(EncodingView(elements.back()), ord);
    return ord;
  }

  Ordinal lookup(EncodingView e) const {
    const auto it = index.find(e);
    if (it == index.end()) fail(ErrorKind::Internal, "product left the enumerated group");
    return it->second;
  }
};

GroupTable::GroupTable(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
GroupTable::GroupTable(GroupTable&&) noexcept = default;
GroupTable& GroupTable::operator=(GroupTable&&) noexcept = default;
GroupTable::~GroupTable() = default;

GroupTable GroupTable::close(ElementAlgebra algebra, const std::vector<Encoding>& generators,
                             GroupDescriptor descriptor, std::uint64_t element_budget) {
  auto impl = std::make_unique<Impl>();
  impl->algebra = std::move(algebra);
  impl->add(identity_encoding(impl->algebra));

  std::vector<Encoding> gens;
  for (const auto& g : generators) {
    if (g != impl->elements.front()) gens.push_back(g);
  }
  for (std::size_t head = 0; head < impl->elements.size(); ++head) {
    for (const auto& g : gens) {
      Encoding product = compose(impl->algebra, impl->elements[head], g);
      if (impl->index.find(product) != impl->index.end()) continue;
      if (impl->elements.size() >= element_budget) {
        fail(ErrorKind::TooLarge, display_name(descriptor) + " exceeds the element budget of " +
                                      std::to_string(element_budget));
      }
      impl->add(std::move(product));
    }
  }
  for (const auto& g : gens) impl->generators.push_back(impl->lookup(g));

  impl->inverses.resize(impl->elements.size());
  for (std::size_t i = 0; i < impl->elements.size(); ++i) {
    impl->inverses[i] = impl->lookup(invert(impl->algebra, impl->elements[i]));
  }
  descriptor.order = impl->elements.size();
  descriptor.generator_count = static_cast<std::uint32_t>(gens.size());
  impl->descriptor = std::move(descriptor);
  return GroupTable(std::move(impl));
}

std::size_t GroupTable::order() const { return impl_->elements.size(); }

Ordinal GroupTable::mul(Ordinal a, Ordinal b) const {
  if (!impl_->cayley.empty()) return impl_->cayley[std::size_t{a} * order() + b];
  return impl_->lookup(compose(impl_->algebra, impl_->elements[a], impl_->elements[b]));
}

Ordinal GroupTable::inv(Ordinal a) const { return impl_->inverses[a]; }

Ordinal GroupTable::power(Ordinal a, std::uint64_t exponent) const {
  Ordinal result = identity();
  Ordinal base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t GroupTable::element_order(Ordinal a) const {
  std::uint64_t k = 1;
  for (Ordinal x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

EncodingView GroupTable::encoding(Ordinal a) const { return impl_->elements.at(a); }

std::optional<Ordinal> GroupTable::find(EncodingView e) const {
  const auto it = impl_->index.find(e);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Ordinal GroupTable::ordinal(EncodingView e) const {
  const auto found = find(e);
  if (!found) fail(ErrorKind::InvalidArgument, "element is not in " + display_name(descriptor()));
  return *found;
}

const std::vector<Ordinal>& GroupTable::generators() const { return impl_->generators; }
const GroupDescriptor& GroupTable::descriptor() const { return impl_->descriptor; }
const ElementAlgebra& GroupTable::algebra() const { return impl_->algebra; }

void GroupTable::ensure_cayley_table() const {
  const std::size_t n = order();
  if (n > kCayleyCacheLimit) return;
  std::call_once(impl_->cayley_once, [this, n] {
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<std::uint16_t>(
            impl_->lookup(compose(impl_->algebra, impl_->elements[a], impl_->elements[b])));
      }
    }
    impl_->cayley = std::move(table);
  });
}

bool GroupTable::has_cayley_table() const { return !impl_->cayley.empty(); }

}  // namespace qrg
