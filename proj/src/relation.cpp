#include "polybraid/relation.hpp"

#include <algorithm>
#include <string>

#include "polybraid/error.hpp"

namespace polybraid {

std::string_view tag_name(ChainTag tag) {
  switch (tag) {
    case ChainTag::none:
      return "none";
    case ChainTag::braid:
      return "braid";
    case ChainTag::far:
      return "far";
    case ChainTag::order:
      return "order";
    case ChainTag::coxeter_power:
      return "coxeter-power";
  }
  return "none";
}

ChainTag parse_tag(std::string_view name) {
  for (ChainTag t : {ChainTag::none, ChainTag::braid, ChainTag::far, ChainTag::order,
                     ChainTag::coxeter_power}) {
    if (tag_name(t) == name) return t;
  }
  throw error(errc::parse_error, "unknown chain tag '" + std::string(name) + "'");
}

RelationChain::RelationChain(std::vector<Word> words, ChainTag tag)
    : words_(std::move(words)), tag_(tag) {
  if (words_.size() < 2) {
    throw error(errc::arity_mismatch, "a relation chain needs at least two words");
  }
  for (const Word& w : words_) {
    if (w.mode() != words_.front().mode()) {
      throw error(errc::mode_mismatch, "relation chain mixes semigroup and group words");
    }
  }
}

int RelationChain::max_generator() const {
  int m = 0;
  for (const Word& w : words_) m = std::max(m, w.max_generator());
  return m;
}

}  // namespace polybraid
