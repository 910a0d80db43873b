#pragma once

// Abstract argumentation frameworks and Dung-style semantics.
//
// Nodes are kept in natural identifier order and every set-of-sets result
// is returned sorted by IdSetLess, so results are reproducible byte for byte.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "goalxai/common.hpp"

namespace goalxai::af {

using Extension = IdSet;
using Extensions = std::vector<Extension>;

class AbstractAF {
 public:
  using Mask = boost::dynamic_bitset<>;

  AbstractAF() = default;

  /// Throws InputError on duplicate nodes, dangling endpoints or self-attacks.
  AbstractAF(const std::vector<Id>& nodes, const std::vector<IdPair>& attacks) {
    for (const auto& n : nodes) {
      if (!index_.emplace(n, 0).second) throw InputError("duplicate node '" + n + "'");
    }
    nodes_.reserve(index_.size());
    for (auto& [id, idx] : index_) {
      idx = nodes_.size();
      nodes_.push_back(id);
    }
    const std::size_t n = nodes_.size();
    out_.assign(n, Mask(n));
    in_.assign(n, Mask(n));
    for (const auto& [from, to] : attacks) {
      const std::size_t a = index_of(from, "attack source");
      const std::size_t b = index_of(to, "attack target");
      if (a == b) throw InputError("self-attack on '" + from + "'");
      out_[a].set(b);
      in_[b].set(a);
      attacks_.insert({from, to});
    }
  }

  const std::vector<Id>& nodes() const { return nodes_; }
  const IdPairSet& attacks() const { return attacks_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Id& id) const { return index_.count(id) != 0; }
  bool attacks(const Id& from, const Id& to) const { return attacks_.count({from, to}) != 0; }

  std::size_t index_of(const Id& id, std::string_view what = "node") const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown " + std::string(what) + " '" + id + "'");
    return it->second;
  }

  Mask mask_of(const IdSet& ids) const {
    Mask m(size());
    for (const auto& id : ids) m.set(index_of(id));
    return m;
  }

  IdSet ids_of(const Mask& m) const {
    IdSet out;
    for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) out.insert(nodes_[i]);
    return out;
  }

  const Mask& attackers_of(std::size_t i) const { return in_[i]; }
  const Mask& targets_of(std::size_t i) const { return out_[i]; }

  /// Union of everything attacked by a member of s.
  Mask attacked_by(const Mask& s) const {
    Mask hit(size());
    for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) hit |= out_[i];
    return hit;
  }

  bool is_conflict_free(const Mask& s) const { return !attacked_by(s).intersects(s); }

  /// The characteristic function: every node whose attackers are all attacked by s.
  Mask defended_by(const Mask& s) const {
    const Mask hit = attacked_by(s);
    Mask out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (in_[i].is_subset_of(hit)) out.set(i);
    }
    return out;
  }

 private:
  std::vector<Id> nodes_;
  std::map<Id, std::size_t, NaturalLess> index_;
  IdPairSet attacks_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

namespace detail {

inline Extensions sorted(const AbstractAF& af, const std::vector<AbstractAF::Mask>& masks) {
  Extensions out;
  out.reserve(masks.size());
  for (const auto& m : masks) out.push_back(af.ids_of(m));
  std::sort(out.begin(), out.end(), IdSetLess{});
  return out;
}

/// Depth-first include/exclude over the node order; a node is only included
/// when it has no attack in either direction with the current selection.
inline void for_each_conflict_free(const AbstractAF& af, const std::function<void(const AbstractAF::Mask&)>& visit) {
  const std::size_t n = af.size();
  AbstractAF::Mask current(n);
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == n) {
      visit(current);
      return;
    }
    step(i + 1);
    if (!af.attackers_of(i).intersects(current) && !af.targets_of(i).intersects(current)) {
      current.set(i);
      step(i + 1);
      current.reset(i);
    }
  };
  step(0);
}

inline std::vector<AbstractAF::Mask> admissible_masks(const AbstractAF& af) {
  std::vector<AbstractAF::Mask> out;
  for_each_conflict_free(af, [&](const AbstractAF::Mask& s) {
    if (s.is_subset_of(af.defended_by(s))) out.push_back(s);
  });
  return out;
}

inline std::vector<AbstractAF::Mask> complete_masks(const AbstractAF& af) {
  std::vector<AbstractAF::Mask> out;
  for (auto& s : admissible_masks(af)) {
    if (af.defended_by(s) == s) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Every subset with no attack between two members; always contains the empty set.
inline Extensions conflict_free_sets(const AbstractAF& af) {
  std::vector<AbstractAF::Mask> masks;
  detail::for_each_conflict_free(af, [&](const AbstractAF::Mask& s) { masks.push_back(s); });
  return detail::sorted(af, masks);
}

inline std::size_t count_conflict_free(const AbstractAF& af) {
  std::size_t count = 0;
  detail::for_each_conflict_free(af, [&](const AbstractAF::Mask&) { ++count; });
  return count;
}

/// True iff every attacker of `node` is attacked by some member of `s`.
inline bool defends(const AbstractAF& af, const IdSet& s, const Id& node) {
  const auto target = af.index_of(node);
  return af.attackers_of(target).is_subset_of(af.attacked_by(af.mask_of(s)));
}

inline Extension grounded_extension(const AbstractAF& af) {
  AbstractAF::Mask s(af.size());
  for (;;) {
    AbstractAF::Mask next = af.defended_by(s);
    if (next == s) break;
    s = std::move(next);
  }
  return af.ids_of(s);
}

inline Extensions admissible_sets(const AbstractAF& af) { return detail::sorted(af, detail::admissible_masks(af)); }

inline Extensions complete_extensions(const AbstractAF& af) { return detail::sorted(af, detail::complete_masks(af)); }

/// Complete extensions that are maximal for set inclusion.
inline Extensions preferred_extensions(const AbstractAF& af) {
  const auto complete = detail::complete_masks(af);
  std::vector<AbstractAF::Mask> out;
  for (const auto& s : complete) {
    const bool dominated = std::any_of(complete.begin(), complete.end(), [&](const AbstractAF::Mask& t) {
      return s != t && s.is_subset_of(t);
    });
    if (!dominated) out.push_back(s);
  }
  return detail::sorted(af, out);
}

/// Conflict-free sets attacking every node outside them. May be empty.
inline Extensions stable_extensions(const AbstractAF& af) {
  std::vector<AbstractAF::Mask> out;
  detail::for_each_conflict_free(af, [&](const AbstractAF::Mask& s) {
    if ((s | af.attacked_by(s)).all()) out.push_back(s);
  });
  return detail::sorted(af, out);
}

enum class Semantics { grounded, complete, preferred, stable };

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::grounded: return "grounded";
    case Semantics::complete: return "complete";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
  }
  return "grounded";
}

inline Semantics parse_semantics(std::string_view name) {
  if (name == "grounded") return Semantics::grounded;
  if (name == "complete") return Semantics::complete;
  if (name == "preferred") return Semantics::preferred;
  if (name == "stable") return Semantics::stable;
  throw InputError("unknown semantics '" + std::string(name) + "'");
}

/// Extensions of `af` under `semantics`; grounded always yields exactly one.
inline Extensions extensions(const AbstractAF& af, Semantics semantics) {
  switch (semantics) {
    case Semantics::grounded: return {grounded_extension(af)};
    case Semantics::complete: return complete_extensions(af);
    case Semantics::preferred: return preferred_extensions(af);
    case Semantics::stable: return stable_extensions(af);
  }
  return {};
}

}  // namespace goalxai::af
