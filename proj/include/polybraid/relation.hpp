#pragma once

#include <string_view>
#include <vector>

#include "polybraid/word.hpp"

namespace polybraid {

enum class ChainTag { none, braid, far, order, coxeter_power };

std::string_view tag_name(ChainTag tag);
ChainTag parse_tag(std::string_view name);

/// Two or more words asserted mutually equal.
class RelationChain {
 public:
  RelationChain(std::vector<Word> words, ChainTag tag = ChainTag::none);

  std::span<const Word> words() const { return words_; }
  const Word& first() const { return words_.front(); }
  std::size_t size() const { return words_.size(); }
  ChainTag tag() const { return tag_; }
  Mode mode() const { return words_.front().mode(); }
  int max_generator() const;

  friend bool operator==(const RelationChain&, const RelationChain&) = default;

 private:
  std::vector<Word> words_;
  ChainTag tag_;
};

}  // namespace polybraid
