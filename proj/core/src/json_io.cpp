#include "bergman/json_io.hpp"

#include "bergman/errors.hpp"

namespace bergman {

namespace {

json labels_to_json(const std::vector<VertexLabel>& labels) {
  json out = json::array();
  for (const VertexLabel& v : labels) out.push_back(v.to_string());
  return out;
}

std::vector<VertexLabel> labels_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of labels");
  std::vector<VertexLabel> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(where + ": labels must be strings");
    out.push_back(VertexLabel::parse(item.get<std::string>()));
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(where + ": entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

json complex_to_json(const SimplicialComplex& complex) {
  json out;
  out["vertices"] = labels_to_json(complex.vertex_labels());
  json facets = json::array();
  for (const auto& facet : complex.facets_as_labels()) facets.push_back(labels_to_json(facet));
  out["facets"] = facets;
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("facets"))
    throw InputError("complex: expected an object with a 'facets' array");
  std::vector<std::vector<VertexLabel>> faces;
  for (std::size_t i = 0; i < j.at("facets").size(); ++i)
    faces.push_back(labels_from_json(j.at("facets")[i], "facets[" + std::to_string(i) + "]"));
  return SimplicialComplex::from_faces(faces);
}

ClosureOperator instance_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance: expected a JSON object");
  if (!j.contains("ground_set")) throw InputError("instance: missing 'ground_set'");
  std::vector<std::string> ground = string_list(j.at("ground_set"), "ground_set");

  if (j.contains("proper_flats")) {
    const json& flats = j.at("proper_flats");
    if (!flats.is_array()) throw InputError("proper_flats: expected an array of element arrays");
    std::vector<std::vector<std::string>> family;
    for (std::size_t i = 0; i < flats.size(); ++i)
      family.push_back(string_list(flats[i], "proper_flats[" + std::to_string(i) + "]"));
    family.push_back(ground);  // E is implicit in the file format
    return ClosureOperator::validate(std::move(ground), family);
  }

  if (j.contains("matroid")) {
    const json& m = j.at("matroid");
    if (!m.is_object() || !m.contains("type"))
      throw InputError("matroid: expected an object with a 'type'");
    std::string type = m.at("type").get<std::string>();
    if (type == "uniform") {
      if (!m.contains("rank") || !m.at("rank").is_number_integer())
        throw InputError("matroid: uniform type needs an integer 'rank'");
      return uniform_matroid(m.at("rank").get<int>(), std::move(ground));
    }
    if (type == "bases") {
      if (!m.contains("bases")) throw InputError("matroid: bases type needs a 'bases' array");
      std::vector<std::vector<std::string>> bases;
      for (std::size_t i = 0; i < m.at("bases").size(); ++i)
        bases.push_back(string_list(m.at("bases")[i], "bases[" + std::to_string(i) + "]"));
      return matroid_from_bases(std::move(ground), bases);
    }
    throw InputError("matroid: unknown type '" + type + "'");
  }

  throw InputError("instance: expected 'proper_flats' or 'matroid'");
}

json instance_to_json(const ClosureOperator& f) {
  json out;
  out["ground_set"] = f.ground_names();
  json flats = json::array();
  for (ElemMask m : f.proper_flats()) flats.push_back(f.names_from_mask(m));
  out["proper_flats"] = flats;
  return out;
}

json certificate_to_json(const Certificate& cert) {
  if (cert.is_leaf()) return json{{"leaf", true}};
  json out;
  out["vertex"] = cert.vertex().to_string();
  out["del"] = certificate_to_json(cert.del_child());
  out["link"] = certificate_to_json(cert.link_child());
  return out;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate: expected a JSON object");
  if (j.contains("leaf")) {
    if (j.at("leaf") != json(true)) throw InputError("certificate: 'leaf' must be true");
    return Certificate::leaf();
  }
  if (!j.contains("vertex") || !j.contains("del") || !j.contains("link"))
    throw InputError("certificate: node needs 'vertex', 'del' and 'link'");
  return Certificate::node(VertexLabel::parse(j.at("vertex").get<std::string>()),
                           certificate_from_json(j.at("del")),
                           certificate_from_json(j.at("link")));
}

json shelling_report_json(const SimplicialComplex& complex, const ShellingOrder& order) {
  json out;
  json facets = json::array();
  for (const auto& facet : order.facets) facets.push_back(labels_to_json(facet));
  out["order"] = facets;

  std::vector<std::vector<VertexLabel>> rs =
      order.restriction_sets ? *order.restriction_sets : restriction_sets(complex, order);
  json restrictions = json::array();
  for (const auto& r : rs) restrictions.push_back(labels_to_json(r));
  out["restriction_sets"] = restrictions;
  out["verified"] = verify_shelling(complex, order).valid;

  HFromShelling h = h_from_shelling(complex, order);
  out["h_from_restrictions"] = h.histogram;
  if (!h.pure) out["warning"] = "NONPURE";
  return out;
}

ShellingOrder shelling_order_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order"))
    throw InputError("shelling: expected an object with an 'order' array");
  ShellingOrder out;
  for (std::size_t i = 0; i < j.at("order").size(); ++i)
    out.facets.push_back(labels_from_json(j.at("order")[i], "order[" + std::to_string(i) + "]"));
  return out;
}

json layers_json(const LayerClassification& layers) {
  auto facet_list = [](const std::vector<std::vector<VertexLabel>>& facets) {
    json out = json::array();
    for (const auto& facet : facets) out.push_back(labels_to_json(facet));
    return out;
  };
  json inner;
  inner["flag"] = facet_list(layers.flag_only);
  inner["hybrid"] = facet_list(layers.hybrid);
  inner["independent"] = facet_list(layers.independent_only);
  return json{{"layers", inner}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bergman
