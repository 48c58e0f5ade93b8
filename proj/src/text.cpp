#include "polybraid/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "polybraid/error.hpp"

namespace polybraid {

namespace {

const char* prefix_of(Alphabet a) {
  switch (a) {
    case Alphabet::s:
      return "s";
    case Alphabet::sigma:
      return "sigma";
    case Alphabet::r:
      return "r";
    case Alphabet::g:
      return "g";
    case Alphabet::letters:
      return "";
  }
  return "s";
}

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw error(errc::parse_error, "bad integer '" + std::string(s) + "' in '" +
                                       std::string(context) + "'");
  }
  return v;
}

void append_power(std::vector<Letter>& out, int generator, int p) {
  const int e = p < 0 ? -1 : 1;
  for (int i = 0; i < (p < 0 ? -p : p); ++i) out.push_back({generator, e});
}

}  // namespace

Alphabet parse_alphabet(std::string_view name) {
  if (name == "s") return Alphabet::s;
  if (name == "sigma") return Alphabet::sigma;
  if (name == "r") return Alphabet::r;
  if (name == "g") return Alphabet::g;
  if (name == "letters") return Alphabet::letters;
  throw error(errc::invalid_argument, "unknown alphabet '" + std::string(name) + "'");
}

std::string format_word(const Word& w, Alphabet alphabet) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (alphabet == Alphabet::letters) {
      if (l.generator > 26) {
        throw error(errc::invalid_argument, "letter alphabet holds at most 26 generators");
      }
      os << static_cast<char>('a' + l.generator - 1);
    } else {
      if (!first) os << ' ';
      os << prefix_of(alphabet) << l.generator;
    }
    if (l.exponent < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

std::vector<std::string> split_trimmed(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Word parse_word(std::string_view text, Mode mode) {
  std::vector<Letter> letters;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::string_view t = tok;
    std::size_t p = 0;
    while (p < t.size() && std::isalpha(static_cast<unsigned char>(t[p]))) ++p;
    const std::string_view prefix = t.substr(0, p);
    if (prefix != "s" && prefix != "sigma" && prefix != "r" && prefix != "g") {
      throw error(errc::parse_error, "bad generator token '" + tok + "'");
    }
    const std::size_t caret = t.find('^', p);
    const int index = parse_int(t.substr(p, caret == std::string_view::npos ? caret : caret - p), tok);
    const int exp = caret == std::string_view::npos ? 1 : parse_int(t.substr(caret + 1), tok);
    if (index < 1) throw error(errc::parse_error, "generator index must be >= 1 in '" + tok + "'");
    append_power(letters, index, exp);
  }
  return Word(mode, std::move(letters));
}

Word parse_letter_word(std::string_view text, Mode mode) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text == "1") return Word(mode, {});
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c < 'a' || c > 'z') {
      throw error(errc::parse_error, "bad letter '" + std::string(1, c) + "' in '" +
                                         std::string(text) + "'");
    }
    ++i;
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == '-') ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      exp = parse_int(text.substr(i + 1, j - i - 1), text);
      i = j;
    }
    append_power(letters, c - 'a' + 1, exp);
  }
  return Word(mode, std::move(letters));
}

}  // namespace polybraid
