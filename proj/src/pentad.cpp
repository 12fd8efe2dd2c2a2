#include "ualpha/pentad.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ualpha/group.hpp"

namespace ualpha {

VertexSet VertexSet::above(int v) const noexcept {
  VertexSet out = *this;
  if (v >= 64) {
    out.words[0] = 0;
    out.words[1] &= (~std::uint64_t{0} << (v - 64)) << 1;
  } else {
    out.words[0] &= (~std::uint64_t{0} << v) << 1;
  }
  return out;
}

AnticommutationGraph::AnticommutationGraph(int level) : level_(level) {
  if (level < 0 || level > kMaxLevel) {
    throw ResourceBoundError("anticommutation graph level must be in [0, 7], got " + std::to_string(level));
  }
  const Mask count = Mask{1} << level;
  for (Mask m = 1; m < count; ++m) masks_.push_back(m);
  adjacency_.resize(masks_.size());
  for (int a = 0; a < vertex_count(); ++a) {
    for (int b = 0; b < vertex_count(); ++b) {
      if (a != b && anticommutes(masks_[a], masks_[b])) adjacency_[a].set(b);
    }
  }
}

VertexSet AnticommutationGraph::all_vertices() const noexcept {
  VertexSet s;
  for (int v = 0; v < vertex_count(); ++v) s.set(v);
  return s;
}

namespace {

// Branch and bound with greedy colouring bounds.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const AnticommutationGraph& g) : g_(g) {}

  int run() {
    expand(0, g_.all_vertices());
    return best_;
  }

 private:
  void expand(int depth, VertexSet candidates) {
    std::vector<int> order;
    std::vector<int> colours;
    colour_sort(candidates, order, colours);
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
      if (depth + colours[k] <= best_) return;
      const int v = order[k];
      const VertexSet next = candidates & g_.neighbours(v);
      if (next.empty()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(depth + 1, next);
      }
      candidates.reset(v);
    }
  }

  void colour_sort(VertexSet uncoloured, std::vector<int>& order, std::vector<int>& colours) const {
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet available = uncoloured;
      while (!available.empty()) {
        const int v = available.first();
        available.reset(v);
        uncoloured.reset(v);
        // Vertices in one colour class are pairwise non-adjacent.
        const VertexSet& nb = g_.neighbours(v);
        available.words[0] &= ~nb.words[0];
        available.words[1] &= ~nb.words[1];
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  const AnticommutationGraph& g_;
  int best_ = 0;
};

void collect_cliques(const AnticommutationGraph& g, int size, std::vector<int>& current, VertexSet candidates,
                     std::vector<std::vector<Mask>>& out) {
  if (static_cast<int>(current.size()) == size) {
    std::vector<Mask> masks;
    for (int v : current) masks.push_back(g.mask(v));
    out.push_back(std::move(masks));
    return;
  }
  while (!candidates.empty()) {
    if (static_cast<int>(current.size()) + candidates.count() < size) return;
    const int v = candidates.first();
    candidates.reset(v);
    current.push_back(v);
    collect_cliques(g, size, current, (candidates & g.neighbours(v)).above(v), out);
    current.pop_back();
  }
}

}  // namespace

int max_anticommuting_set_size(int level) {
  const AnticommutationGraph g(level);
  if (g.vertex_count() == 0) return 0;
  return MaxCliqueSearch(g).run();
}

std::vector<std::vector<Mask>> anticommuting_sets(int level, int size) {
  const AnticommutationGraph g(level);
  std::vector<std::vector<Mask>> out;
  if (size <= 0) return out;
  std::vector<int> current;
  collect_cliques(g, size, current, g.all_vertices(), out);
  return out;
}

std::size_t generated_subgroup_order(const std::vector<Monomial>& generators) {
  std::set<Monomial> seen{Monomial::one()};
  std::vector<Monomial> frontier{Monomial::one()};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& x : frontier) {
      for (const Monomial& g : generators) {
        const Monomial y = multiply(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Pentad::Pentad(int level, std::array<Monomial, 5> members) : level_(level), members_(members) {
  for (std::size_t a = 0; a < 5; ++a) {
    if (members_[a].is_scalar()) throw std::invalid_argument("pentad member must not be +-1");
    if ((members_[a].mask >> level_) != 0) {
      throw std::invalid_argument("pentad member " + members_[a].name() + " lies outside level " +
                                  std::to_string(level_));
    }
    for (std::size_t b = a + 1; b < 5; ++b) {
      if (!anticommutes(members_[a], members_[b])) {
        throw std::invalid_argument("pentad members " + members_[a].name() + " and " + members_[b].name() +
                                    " do not anticommute");
      }
    }
  }
  for (std::size_t a = 0; a < 5; ++a) signature_[a] = square(members_[a]).sign();
  const std::vector<Monomial> gens(members_.begin(), members_.end());
  generates_ = generated_subgroup_order(gens) == (std::size_t{2} << level_);
}

int Pentad::positive_squares() const noexcept {
  return static_cast<int>(std::count(signature_.begin(), signature_.end(), 1));
}

Mask Pentad::parity() const noexcept {
  Mask x = 0;
  for (const auto& m : members_) x ^= m.mask;
  return x;
}

Pentad Pentad::dirac_ordered() const {
  std::vector<Monomial> positive;
  std::vector<Monomial> negative;
  for (std::size_t a = 0; a < 5; ++a) (signature_[a] > 0 ? positive : negative).push_back(members_[a]);
  std::vector<Monomial> ordered;
  if (!positive.empty()) ordered.push_back(positive.front());
  ordered.insert(ordered.end(), negative.begin(), negative.end());
  if (positive.size() > 1) ordered.insert(ordered.end(), positive.begin() + 1, positive.end());
  std::array<Monomial, 5> arr{};
  std::copy(ordered.begin(), ordered.end(), arr.begin());
  return Pentad(level_, arr);
}

bool generates_full_group(const Pentad& p) { return p.generates_full_group(); }

bool SignatureFilter::matches(const Pentad& p) const noexcept {
  return std::count(signature.begin(), signature.end(), 1) == p.positive_squares();
}

SignatureFilter SignatureFilter::parse(std::string_view text) {
  SignatureFilter f;
  std::size_t idx = 0;
  std::size_t pos = 0;
  const std::string s(text);
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    int value = 0;
    if (tok == "+1" || tok == "1" || tok == "+") {
      value = 1;
    } else if (tok == "-1" || tok == "-") {
      value = -1;
    } else {
      throw ParseError("bad signature entry '" + tok + "' in '" + s + "'");
    }
    if (idx >= 5) throw ParseError("signature must have 5 entries: '" + s + "'");
    f.signature[idx++] = value;
    pos = comma + 1;
  }
  if (idx != 5) throw ParseError("signature must have 5 entries: '" + s + "'");
  return f;
}

std::vector<Pentad> find_pentads(int level, const std::optional<SignatureFilter>& filter) {
  std::vector<Pentad> out;
  for (const auto& masks : anticommuting_sets(level, 5)) {
    std::array<Monomial, 5> members{};
    for (std::size_t a = 0; a < 5; ++a) members[a] = Monomial{false, masks[a]};
    Pentad p(level, members);
    if (!filter || filter->matches(p)) out.push_back(std::move(p));
  }
  return out;
}

std::string signature_string(const Signature& s) {
  std::string out = "(";
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (a) out += ",";
    out += s[a] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

nlohmann::ordered_json to_json(const Pentad& p) {
  nlohmann::ordered_json j;
  auto names = nlohmann::ordered_json::array();
  for (const auto& m : p.members()) names.push_back(m.name());
  j["members"] = std::move(names);
  j["signature"] = p.signature();
  j["generates"] = p.generates_full_group();
  return j;
}

nlohmann::ordered_json pentads_json(int level, int max_set, const std::vector<Pentad>& pentads) {
  nlohmann::ordered_json j;
  j["level"] = level;
  j["max_set"] = max_set;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : pentads) arr.push_back(to_json(p));
  j["pentads"] = std::move(arr);
  return j;
}

}  // namespace ualpha
