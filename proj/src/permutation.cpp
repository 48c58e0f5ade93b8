#include "polybraid/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "polybraid/error.hpp"

namespace polybraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > degree() || hit[static_cast<std::size_t>(x - 1)]) {
      throw error(errc::invalid_argument, "permutation images must be a bijection on 1..d");
    }
    hit[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw error(errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p = identity(degree);
  if (i < 1 || j < 1 || i > degree || j > degree) {
    throw error(errc::invalid_argument, "transposition point out of range");
  }
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw error(errc::invalid_argument, "permutation degrees differ");
  std::vector<int> im(p.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = q(p.images_[i]);
  return Permutation(std::move(im));
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  bool any = false;
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || p(start) == start) continue;
    os << '(';
    int x = start;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(x - 1)] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = p(x);
    } while (x != start);
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation acc = Permutation::identity(degree);
  for (const Letter& l : w.letters()) {
    if (l.generator > static_cast<int>(images.size())) {
      throw error(errc::invalid_argument, "no image for generator " + std::to_string(l.generator));
    }
    const Permutation& g = images[static_cast<std::size_t>(l.generator - 1)];
    acc = acc * (l.exponent > 0 ? g : g.inverse());
  }
  return acc;
}

std::vector<Permutation> parse_images(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!trim(line).empty()) lines.emplace_back(trim(line));
  }
  if (lines.empty()) throw error(errc::parse_error, "empty images file");
  std::istringstream header(lines.front());
  std::string kw;
  int degree = 0;
  if (!(header >> kw >> degree) || kw != "degree" || degree < 1) {
    throw error(errc::parse_error, "expected header 'degree d'");
  }
  std::vector<Permutation> out;
  try {
    for (std::size_t li = 1; li < lines.size(); ++li) {
      const std::string& l = lines[li];
      if (l.front() == '(') {
        Permutation p = Permutation::identity(degree);
        std::size_t pos = 0;
        while (pos < l.size()) {
          const std::size_t open = l.find('(', pos);
          if (open == std::string::npos) {
            if (!trim(std::string_view(l).substr(pos)).empty()) {
              throw error(errc::parse_error, "bad cycle notation '" + l + "'");
            }
            break;
          }
          const std::size_t close = l.find(')', open);
          if (close == std::string::npos) throw error(errc::parse_error, "unclosed cycle in '" + l + "'");
          std::istringstream cyc(l.substr(open + 1, close - open - 1));
          std::vector<int> pts;
          int x = 0;
          while (cyc >> x) pts.push_back(x);
          if (!cyc.eof()) throw error(errc::parse_error, "bad cycle entry in '" + l + "'");
          std::vector<int> im(p.images().begin(), p.images().end());
          for (int pt : pts) {
            if (pt < 1 || pt > degree) throw error(errc::parse_error, "cycle point out of range");
          }
          // apply the cycle after what has been read so far
          std::vector<int> cyc_map(static_cast<std::size_t>(degree));
          for (int i = 0; i < degree; ++i) cyc_map[static_cast<std::size_t>(i)] = i + 1;
          for (std::size_t c = 0; c < pts.size(); ++c) {
            cyc_map[static_cast<std::size_t>(pts[c] - 1)] = pts[(c + 1) % pts.size()];
          }
          p = p * Permutation(std::move(cyc_map));
          pos = close + 1;
        }
        out.push_back(std::move(p));
      } else {
        std::istringstream row(l);
        std::vector<int> im;
        std::string tok;
        while (row >> tok) {
          try {
            std::size_t used = 0;
            im.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
          } catch (const std::exception&) {
            throw error(errc::parse_error, "bad image entry '" + tok + "'");
          }
        }
        if (static_cast<int>(im.size()) != degree) {
          throw error(errc::parse_error, "image line has " + std::to_string(im.size()) +
                                             " entries, expected " + std::to_string(degree));
        }
        out.emplace_back(std::move(im));
      }
    }
  } catch (const error& e) {
    throw error(errc::parse_error, e.what());
  }
  return out;
}

HomomorphismReport check_homomorphism(const Presentation& p, const std::vector<Permutation>& images) {
  if (images.size() != static_cast<std::size_t>(p.generators)) {
    throw error(errc::arity_mismatch, "expected one image per generator (" +
                                          std::to_string(p.generators) + "), got " +
                                          std::to_string(images.size()));
  }
  const int degree = images.front().degree();
  for (const Permutation& g : images) {
    if (g.degree() != degree) throw error(errc::invalid_argument, "generator images differ in degree");
  }
  HomomorphismReport report;
  for (std::size_t c = 0; c < p.chains.size(); ++c) {
    const auto words = p.chains[c].words();
    const Permutation first = evaluate(words.front(), images, degree);
    const bool holds = std::all_of(words.begin() + 1, words.end(), [&](const Word& w) {
      return evaluate(w, images, degree) == first;
    });
    if (!holds) report.violated.push_back(c + 1);
  }
  report.ok = report.violated.empty();
  return report;
}

std::string format_homomorphism(const Presentation& p, const std::vector<Permutation>& images,
                                const HomomorphismReport& report) {
  std::ostringstream os;
  os << "composition: left-to-right\n";
  for (std::size_t i = 0; i < images.size(); ++i) {
    os << "s" << (i + 1) << " -> " << format_permutation(images[i]) << '\n';
  }
  os << "homomorphism: " << (report.ok ? "true" : "false") << '\n';
  for (std::size_t c : report.violated) {
    os << "violated chain " << c << ":";
    for (const Word& w : p.chains[c - 1].words()) {
      os << ' ' << format_word(w) << " -> " << format_permutation(evaluate(w, images, images.front().degree())) << ';';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace polybraid
