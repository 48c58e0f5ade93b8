#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polybraid/presentation.hpp"

namespace polybraid {

/// Bijection on {1..degree}. Products compose left to right: in p * q the
/// point x goes first through p, then through q.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // 1-based images
  static Permutation identity(int degree);
  /// Transposition (i j) in degree d.
  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  std::span<const int> images() const { return images_; }
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation, `()` for the identity.
std::string format_permutation(const Permutation& p);

/// Image of a word under generator images (left-to-right composition).
Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree);

/// `degree d` then one line per generator: either cycles `(1 2)(3 4)` / `()`
/// or the list of d images.
std::vector<Permutation> parse_images(std::string_view text);

struct HomomorphismReport {
  bool ok = true;
  std::vector<std::size_t> violated;  // 1-based chain numbers
};

HomomorphismReport check_homomorphism(const Presentation& p, const std::vector<Permutation>& images);

std::string format_homomorphism(const Presentation& p, const std::vector<Permutation>& images,
                                const HomomorphismReport& report);

}  // namespace polybraid
