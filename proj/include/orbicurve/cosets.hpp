#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbicurve/presentation.hpp"

namespace orbicurve {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Completed coset table. Coset 0 is the subgroup itself. Column 2g holds the
/// action of generator g and column 2g+1 that of its inverse.
struct CosetTable {
  std::size_t generator_count = 0;
  std::size_t cosets = 0;
  std::vector<std::uint32_t> action;
  bool complete = false;

  std::size_t columns() const { return 2 * generator_count; }
  std::uint32_t image(std::size_t coset, std::size_t generator, bool inverse = false) const {
    return action[coset * columns() + 2 * generator + (inverse ? 1 : 0)];
  }
};

/// Hasse-Lee-Trotter enumeration of the cosets of the subgroup generated by
/// `subgroup` in the group presented by `p`. New cosets are defined in
/// first-undefined scan order; coincidences are resolved with union-find.
/// Returns nullopt (Exceeded) as soon as the live coset count would pass
/// `max_cosets`.
std::optional<CosetTable> coset_enumeration(const FinitePresentation& p,
                                            const std::vector<Word>& subgroup,
                                            std::size_t max_cosets);

/// Order of the group, or nullopt when the enumeration exceeds `bound`.
std::optional<std::uint64_t> group_order(const FinitePresentation& p,
                                         std::size_t bound = kDefaultMaxCosets);

/// Post hoc check: each generator column is a permutation and every relator
/// traced from every coset returns to its start.
bool table_is_closed(const CosetTable& t, const FinitePresentation& p);

/// A permutation as a 0-based image array.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
/// Right action: apply `a` first, then `b`.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
std::uint64_t permutation_order(const Permutation& p);
bool is_bijection(const Permutation& p);

/// One permutation of {0..degree-1} per generator.
struct PermutationImages {
  std::size_t degree = 0;
  std::vector<Permutation> images;

  /// Throws InvalidPermutation if an image has the wrong size or is not a
  /// bijection.
  void validate() const;
};

/// Right-multiplication action of each generator on the cosets.
/// Throws IncompleteTable on an incomplete table.
PermutationImages generator_permutations(const CosetTable& t);

/// Order of the generated group by breadth-first closure, or nullopt when it
/// has more than `cap` elements.
std::optional<std::uint64_t> permutation_group_order(const PermutationImages& perms,
                                                     std::size_t cap = kDefaultClosureCap);

/// Image of a word under the generator assignment.
Permutation evaluate_word(const PermutationImages& perms, const Word& w);

/// True iff every relator maps to the identity. Throws ArityMismatch when the
/// number of images differs from the number of generators.
bool verify_homomorphism(const FinitePresentation& p, const PermutationImages& images);

/// Parses a cycle decomposition such as "(1 2)(3 4)" (1-based points) into a
/// permutation of the given degree. "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

/// Parses lines `name = (1 2)(3 4)`, one per generator of `p`; `#` starts a
/// comment. The degree is the largest point mentioned.
PermutationImages parse_permutation_file(std::string_view text, const FinitePresentation& p);

}  // namespace orbicurve
