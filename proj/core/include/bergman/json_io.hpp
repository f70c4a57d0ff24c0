#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bergman/closure_operator.hpp"
#include "bergman/complexes.hpp"
#include "bergman/decompose.hpp"
#include "bergman/shelling.hpp"
#include "bergman/simplicial_complex.hpp"

namespace bergman {

using json = nlohmann::json;

/// {"vertices":[label...],"facets":[[label...]...]}; labels "y:<elt>" or
/// "x:{a,b,...}", facets in canonical order.
json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

/// {"ground_set":[...],"proper_flats":[[...]...]} — E appended implicitly —
/// or {"ground_set":[...],"matroid":{"type":"uniform","rank":r}} or
/// {"ground_set":[...],"matroid":{"type":"bases","bases":[[...]...]}}.
ClosureOperator instance_from_json(const json& j);
json instance_to_json(const ClosureOperator& f);

/// {"leaf":true} or {"vertex":label,"del":{...},"link":{...}}.
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

/// {"order":[[label...]...],"restriction_sets":[[...]...],"verified":true,
///  "h_from_restrictions":[...]}.
json shelling_report_json(const SimplicialComplex& complex, const ShellingOrder& order);
ShellingOrder shelling_order_from_json(const json& j);

/// {"layers":{"flag":[...],"hybrid":[...],"independent":[...]}}.
json layers_json(const LayerClassification& layers);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace bergman
