#include "suptrop/lie.hpp"

#include <algorithm>

namespace suptrop {

BracketWord BracketWord::generator(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Generator;
  node->index = index;
  return BracketWord(std::move(node));
}

BracketWord BracketWord::bracket(BracketWord lhs, BracketWord rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bracket;
  node->children = {std::move(lhs), std::move(rhs)};
  return BracketWord(std::move(node));
}

BracketWord BracketWord::sum(std::vector<BracketWord> terms) {
  if (terms.empty()) throw InvalidArgument("a sum needs at least one term");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->children = std::move(terms);
  return BracketWord(std::move(node));
}

BracketWord BracketWord::power(BracketWord base, unsigned exponent) {
  if (exponent == 0) throw InvalidArgument("power exponent must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Power;
  node->exponent = exponent;
  node->children = {std::move(base)};
  return BracketWord(std::move(node));
}

std::size_t BracketWord::depth() const {
  std::size_t deepest = 0;
  for (const auto& child : children()) deepest = std::max(deepest, child.depth() + 1);
  return deepest;
}

std::size_t BracketWord::max_generator_index() const {
  if (kind() == Kind::Generator) return index();
  std::size_t top = 0;
  for (const auto& child : children()) top = std::max(top, child.max_generator_index());
  return top;
}

std::string BracketWord::to_string() const {
  switch (kind()) {
    case Kind::Generator:
      return "g" + std::to_string(index() + 1);
    case Kind::Bracket:
      return "(bracket " + children()[0].to_string() + " " + children()[1].to_string() + ")";
    case Kind::Sum: {
      std::string s = "(sum";
      for (const auto& child : children()) s += " " + child.to_string();
      return s + ")";
    }
    case Kind::Power:
      return "(power " + children()[0].to_string() + " " + std::to_string(exponent()) + ")";
  }
  return {};
}

}  // namespace suptrop
