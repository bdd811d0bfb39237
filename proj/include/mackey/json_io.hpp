#pragma once

#include <json.hpp>
#include <string>

#include "mackey/biset.hpp"
#include "mackey/gsets.hpp"
#include "mackey/presentation.hpp"

namespace mackey::io {

using json = nlohmann::json;

/// Parse failures (malformed JSON, wrong shapes, axioms violated) throw
/// ParseError. Endpoint mismatches between otherwise valid pieces throw
/// TypeError.

/// A group reference: a registry name ("S3"), {"table": [[...]]} or
/// {"permutations": [[...]]}, with an optional "name".
GroupPtr group_from_json(json const& j);
json group_to_json(Group const& G);

/// {"objects": [int], "arrows": [{"id", "src", "tgt"}], "compose": [[g, f, g∘f]],
/// "identity": [[x, arrow]]}. {"group": ref} is accepted as the one-object groupoid.
GroupoidPtr groupoid_from_json(json const& j);
json groupoid_to_json(FiniteGroupoid const& G);

/// {"object_map": [[x, y]], "arrow_map": [[a, b]]} between given groupoids.
GroupoidFunctor functor_from_json(json const& j, GroupoidPtr const& source, GroupoidPtr const& target);
json functor_to_json(GroupoidFunctor const& F);
/// A functor file: the maps together with "source" and "target" groupoids.
GroupoidFunctor functor_file_from_json(json const& j);
json functor_file_to_json(GroupoidFunctor const& F);

/// {"apex": groupoid, "left": functor, "right": functor}; each leg carries its
/// "target" groupoid.
Span span_from_json(json const& j);
json span_to_json(Span const& s);

/// {"start": group ref, "letters": [letter]} where a letter is
/// {"kind": "Res"|"Ind", "group": ref, "subgroup": [..]},
/// {"kind": "Infl"|"Defl", "group": ref, "normal": [..]} or
/// {"kind": "Iso", "group": ref, "images": [..], optional "target": ref}.
/// A bare list of letters is accepted when it is nonempty.
SpanWord word_from_json(json const& j);

/// {"elements": [{"id", "src_obj", "tgt_obj"}], "left_action": [[g, u, g·u]],
/// "right_action": [[u, h, u·h]], "source": groupoid, "target": groupoid}.
Biset biset_from_json(json const& j);
json biset_to_json(Biset const& U);

/// {"group": ref, "points": [int], "action": [[g, x, g·x]]}.
GSet gset_from_json(json const& j);
json gset_to_json(GSet const& X);

json iso_comma_to_json(IsoCommaResult const& r);

/// Reads a file and parses it as JSON; ParseError on failure.
json read_json_file(std::string const& path);

}  // namespace mackey::io
