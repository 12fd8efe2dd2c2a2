#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "ualpha/monomial.hpp"

namespace ualpha {

/// 128-bit vertex set; enough for the 127 vertices at level 7.
struct VertexSet {
  std::array<std::uint64_t, 2> words{};

  void set(int v) noexcept { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  [[nodiscard]] bool test(int v) const noexcept { return (words[v >> 6] >> (v & 63)) & 1u; }
  [[nodiscard]] bool empty() const noexcept { return (words[0] | words[1]) == 0; }
  [[nodiscard]] int count() const noexcept {
    return __builtin_popcountll(words[0]) + __builtin_popcountll(words[1]);
  }
  /// Lowest member, or -1 when empty.
  [[nodiscard]] int first() const noexcept {
    if (words[0]) return __builtin_ctzll(words[0]);
    if (words[1]) return 64 + __builtin_ctzll(words[1]);
    return -1;
  }
  void reset(int v) noexcept { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  /// Members strictly above v.
  [[nodiscard]] VertexSet above(int v) const noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept {
    a.words[0] &= b.words[0];
    a.words[1] &= b.words[1];
    return a;
  }
};

/// Vertices are the unsigned non-identity masks of a level; an edge joins
/// two masks that anticommute.
class AnticommutationGraph {
 public:
  static constexpr int kMaxLevel = 7;

  explicit AnticommutationGraph(int level);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(masks_.size()); }
  [[nodiscard]] Mask mask(int v) const { return masks_.at(v); }
  [[nodiscard]] int vertex_of(Mask m) const noexcept { return static_cast<int>(m) - 1; }
  [[nodiscard]] bool has_edge(int a, int b) const { return adjacency_.at(a).test(b); }
  [[nodiscard]] bool has_edge(Mask a, Mask b) const { return has_edge(vertex_of(a), vertex_of(b)); }
  [[nodiscard]] const VertexSet& neighbours(int v) const { return adjacency_.at(v); }
  [[nodiscard]] VertexSet all_vertices() const noexcept;

 private:
  int level_;
  std::vector<Mask> masks_;
  std::vector<VertexSet> adjacency_;
};

inline AnticommutationGraph anticommutation_graph(int level) { return AnticommutationGraph(level); }

/// Size of the largest pairwise-anticommuting set (maximum clique).
int max_anticommuting_set_size(int level);

/// Lists all pairwise-anticommuting sets of exactly `size` masks in
/// lexicographic order of their (ascending) members.
std::vector<std::vector<Mask>> anticommuting_sets(int level, int size);

using Signature = std::array<int, 5>;

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Five pairwise-anticommuting positive monomials, in canonical mask order
/// unless reordered by dirac_ordered().
class Pentad {
 public:
  /// Validates the invariants (pairwise anticommutation, no scalars) and
  /// computes signature and generation. Throws std::invalid_argument.
  Pentad(int level, std::array<Monomial, 5> members);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] const std::array<Monomial, 5>& members() const noexcept { return members_; }
  [[nodiscard]] const Signature& signature() const noexcept { return signature_; }
  [[nodiscard]] bool generates_full_group() const noexcept { return generates_; }
  /// Number of +1 entries in the signature.
  [[nodiscard]] int positive_squares() const noexcept;
  /// XOR of the five member masks.
  [[nodiscard]] Mask parity() const noexcept;

  /// Reordered as: first +1 member, then every -1 member, then the remaining
  /// +1 members (each group in canonical order). Gives (+,-,-,-,-) and
  /// (+,-,-,-,+) for the two Dirac-type signatures.
  [[nodiscard]] Pentad dirac_ordered() const;

  friend bool operator==(const Pentad& a, const Pentad& b) noexcept {
    return a.level_ == b.level_ && a.members_ == b.members_;
  }

 private:
  int level_;
  std::array<Monomial, 5> members_;
  Signature signature_{};
  bool generates_ = false;
};

/// Size of the subgroup generated by the given monomials (brute-force closure).
std::size_t generated_subgroup_order(const std::vector<Monomial>& generators);

/// True iff the members generate every element of the pentad's level.
bool generates_full_group(const Pentad& p);

/// Filter matching a signature as a multiset of squares.
struct SignatureFilter {
  Signature signature{};
  [[nodiscard]] bool matches(const Pentad& p) const noexcept;
  /// Parses "+1,-1,-1,-1,-1" (also "+,-,-,-,-").
  static SignatureFilter parse(std::string_view text);
};

/// All 5-cliques of the level's anticommutation graph as pentads, deduplicated
/// up to member order and listed in canonical order.
std::vector<Pentad> find_pentads(int level, const std::optional<SignatureFilter>& filter = std::nullopt);

std::string signature_string(const Signature& s);

nlohmann::ordered_json to_json(const Pentad& p);
nlohmann::ordered_json pentads_json(int level, int max_set, const std::vector<Pentad>& pentads);

}  // namespace ualpha
