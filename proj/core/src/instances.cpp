#include "bergman/instances.hpp"

#include <fstream>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/json_io.hpp"

namespace bergman {

ClosureOperator example_1_3() {
  std::vector<std::string> ground = {"1", "2", "3", "4", "5"};
  std::vector<std::vector<std::string>> flats = {
      {},
      {"1"}, {"2"}, {"3"}, {"4"}, {"5"},
      {"1", "2"}, {"1", "3"}, {"2", "3"}, {"3", "4"}, {"3", "5"}, {"4", "5"},
      ground,
  };
  return ClosureOperator::validate(ground, flats);
}

ClosureOperator two_wedge() {
  std::vector<std::string> ground = {"1", "2", "3", "4"};
  std::vector<std::vector<std::string>> flats = {
      {}, {"1"}, {"2"}, {"3"}, {"4"}, {"1", "2"}, {"3", "4"}, ground,
  };
  return ClosureOperator::validate(ground, flats);
}

namespace {

std::vector<std::string> numbered_ground(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

ClosureOperator resolve_instance(const std::string& name_or_path, std::uint64_t seed) {
  if (name_or_path == "example-1-3") return example_1_3();
  if (name_or_path == "two-wedge") return two_wedge();

  if (name_or_path.rfind("uniform:", 0) == 0) {
    std::string args = name_or_path.substr(8);
    std::size_t comma = args.find(',');
    if (comma == std::string::npos)
      throw InputError("builtin 'uniform' expects uniform:<rank>,<size>");
    try {
      int rank = std::stoi(args.substr(0, comma));
      int n = std::stoi(args.substr(comma + 1));
      if (n < 0) throw InputError("uniform: negative ground size");
      return uniform_matroid(rank, numbered_ground(n));
    } catch (const std::invalid_argument&) {
      throw InputError("builtin 'uniform' expects numeric rank and size");
    } catch (const std::out_of_range&) {
      throw InputError("builtin 'uniform' arguments out of range");
    }
  }

  if (name_or_path.rfind("random:", 0) == 0) {
    std::string args = name_or_path.substr(7);
    std::size_t comma = args.find(',');
    double density = 0.3;
    std::string size_part = comma == std::string::npos ? args : args.substr(0, comma);
    try {
      if (comma != std::string::npos) density = std::stod(args.substr(comma + 1));
      int n = std::stoi(size_part);
      if (n < 0) throw InputError("random: negative ground size");
      return random_closure_operator(seed, numbered_ground(n), density);
    } catch (const std::invalid_argument&) {
      throw InputError("builtin 'random' expects random:<size>[,<density>]");
    } catch (const std::out_of_range&) {
      throw InputError("builtin 'random' arguments out of range");
    }
  }

  std::ifstream in(name_or_path);
  if (!in) throw InputError("cannot read instance file '" + name_or_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json parsed;
  try {
    parsed = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError("instance file '" + name_or_path + "': " + e.what());
  }
  return instance_from_json(parsed);
}

}  // namespace bergman
