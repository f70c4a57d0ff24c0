#include "bergman/vertex_label.hpp"

#include <algorithm>

#include "bergman/errors.hpp"

namespace bergman {

void VertexLabel::check_element_name(const std::string& name) {
  if (name.empty()) throw InputError("empty element name");
  for (char c : name) {
    if (c == ',' || c == '{' || c == '}' || c == ':' || c == ' ' || c == '\t' || c == '\n')
      throw InputError("malformed element name '" + name + "'");
  }
}

VertexLabel VertexLabel::ground(std::string element) {
  check_element_name(element);
  return VertexLabel(Kind::Ground, {std::move(element)});
}

VertexLabel VertexLabel::flat(std::vector<std::string> elements) {
  for (const auto& e : elements) check_element_name(e);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return VertexLabel(Kind::Flat, std::move(elements));
}

const std::string& VertexLabel::element() const {
  if (kind_ != Kind::Ground) throw InputError("element() called on a flat label");
  return payload_.front();
}

std::string VertexLabel::to_string() const {
  if (kind_ == Kind::Ground) return "y:" + payload_.front();
  std::string out = "x:{";
  for (std::size_t i = 0; i < payload_.size(); ++i) {
    if (i) out += ',';
    out += payload_[i];
  }
  out += '}';
  return out;
}

VertexLabel VertexLabel::parse(const std::string& text) {
  if (text.size() >= 2 && text[0] == 'y' && text[1] == ':') {
    return ground(text.substr(2));
  }
  if (text.size() >= 4 && text[0] == 'x' && text[1] == ':' && text[2] == '{' &&
      text.back() == '}') {
    std::vector<std::string> elems;
    std::string body = text.substr(3, text.size() - 4);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      elems.push_back(body.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return flat(std::move(elems));
  }
  throw InputError("malformed vertex label '" + text + "'");
}

}  // namespace bergman
