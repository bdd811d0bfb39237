#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mackey/gsets.hpp"
#include "mackey/span.hpp"

namespace mackey {

/// A 2-full sub-2-category of groupoids given by its 1-cells, with a class J
/// of forward legs.
struct SpannablePair {
  std::string name;
  std::function<bool(GroupoidFunctor const&)> is_cell;
  std::function<bool(GroupoidFunctor const&)> in_j;
};
SpannablePair pair_all();
SpannablePair pair_faithful_right();  ///< all functors, faithful forward legs
SpannablePair pair_faithful_both();   ///< faithful functors only
/// Negative control: J rejects identity functors.
SpannablePair pair_rejecting_identities();

struct SpannableReport {
  std::string pair;
  bool axiom_a = true;  ///< J contains equivalences, is closed under composition and isomorphism
  bool axiom_b = true;  ///< iso-commas along J-legs are Mackey squares with the parallel leg in J
  bool axiom_c = true;  ///< a copairing is in J iff each component is
  long long instances = 0;
  std::string detail;   ///< first counterexample
  bool pass() const { return axiom_a && axiom_b && axiom_c; }
};

/// Exhaustive over all functors between corpus members and the coproducts
/// of pairs of them.
SpannableReport check_spannable(SpannablePair const& pair, std::vector<GroupoidPtr> const& corpus);

/// The comma 2-category of groupoids faithfully embedded in G, with J = all.
/// Objects are transported orbits of G and their pairwise coproducts; 1-cells
/// are transported G-maps paired with every automorphism of the source's
/// embedding. Axiom (b) checks that the gpd iso-comma with the composite
/// embedding is a Mackey square whose 2-cell is compatible with the
/// embeddings.
SpannableReport check_spannable_over_g(GroupPtr const& G);

/// End((G, id)) in spans over G on the basis [H ↪ G], composed through
/// iso-commas of groupoids; the apex components are classified by the image
/// of their vertex group in G.
BurnsideTable over_g_burnside_table(GroupPtr const& G, int bound = 8);

}  // namespace mackey
