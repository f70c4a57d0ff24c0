#pragma once

#include <string>
#include <vector>

namespace bergman {

/// Tagged vertex label: a ground-set element vertex ("y:3") or a flat vertex
/// ("x:{1,2}", element set sorted). Ground labels sort before flat labels;
/// within a kind the order is lexicographic on the payload.
class VertexLabel {
 public:
  enum class Kind { Ground, Flat };

  static VertexLabel ground(std::string element);
  static VertexLabel flat(std::vector<std::string> elements);

  Kind kind() const { return kind_; }
  bool is_ground() const { return kind_ == Kind::Ground; }
  bool is_flat() const { return kind_ == Kind::Flat; }

  /// Single element for Ground labels.
  const std::string& element() const;
  /// Sorted element set for Flat labels.
  const std::vector<std::string>& elements() const { return payload_; }

  std::string to_string() const;
  static VertexLabel parse(const std::string& text);

  /// Throws InputError if `name` is empty or contains a reserved character.
  static void check_element_name(const std::string& name);

  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return a.kind_ == b.kind_ && a.payload_ == b.payload_;
  }
  friend bool operator!=(const VertexLabel& a, const VertexLabel& b) { return !(a == b); }
  friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
    if (a.kind_ != b.kind_) return a.kind_ == Kind::Ground;
    return a.payload_ < b.payload_;
  }

 private:
  VertexLabel(Kind kind, std::vector<std::string> payload)
      : kind_(kind), payload_(std::move(payload)) {}

  Kind kind_;
  std::vector<std::string> payload_;
};

}  // namespace bergman
