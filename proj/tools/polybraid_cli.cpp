// Command-line front end. Every subcommand validates its flags, hands the work
// to the C library and maps the returned status onto the exit code.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polybraid/polybraid.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_software = 70;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int exit_code(pb_status s) {
  switch (s) {
    case PB_OK:
      return exit_ok;
    case PB_FALSE:
      return exit_false;
    case PB_INCONCLUSIVE:
      return exit_inconclusive;
    case PB_ERR_PARSE:
      return exit_data;
    case PB_ERR_ARGUMENT:
    case PB_ERR_LIMIT:
    case PB_ERR_MISMATCH:
      return exit_usage;
    case PB_ERR_INTERNAL:
      break;
  }
  return exit_software;
}

/// Prints the text result (if any) and reports errors on stderr.
int finish(pb_status s, char* text) {
  if (text != nullptr) {
    std::fputs(text, stdout);
    pb_string_free(text);
  }
  if (s < 0) std::fprintf(stderr, "polybraid: %s: %s\n", pb_status_name(s), pb_last_error());
  return exit_code(s);
}

using PresentationPtr = std::unique_ptr<pb_presentation, decltype(&pb_presentation_free)>;

PresentationPtr load_presentation(const std::string& path, pb_status& status) {
  pb_presentation* p = nullptr;
  status = pb_presentation_parse(read_file(path).c_str(), &p);
  return PresentationPtr(p, &pb_presentation_free);
}

struct Options {
  std::string family;
  std::string what;
  int n = 0;
  int k = 0;
  int ell = 1;
  std::string format = "plain";
  std::string alphabet;
  std::string entries;
  std::string table;
  unsigned threads = 1;
  bool sample = false;
  std::string pres;
  std::string a;
  std::string b;
  std::size_t max_len = 12;
  std::size_t max_states = 100000;
  std::size_t max_cosets = 10000;
  std::string images;
};

int run_present(const Options& o) {
  pb_presentation* raw = nullptr;
  pb_status s = PB_ERR_ARGUMENT;
  if (o.family == "braid") s = pb_presentation_braid(o.n, o.k, &raw);
  if (o.family == "symmetric") s = pb_presentation_symmetric(o.n, o.k, &raw);
  if (o.family == "coxeter") s = pb_presentation_coxeter(o.n, o.k, &raw);
  PresentationPtr p(raw, &pb_presentation_free);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  s = pb_presentation_export(p.get(), o.format.c_str(), o.alphabet.empty() ? "s" : o.alphabet.c_str(),
                             &text);
  return finish(s, text);
}

int run_regularity(const Options& o) {
  char* text = nullptr;
  const pb_status s =
      pb_regularity_schema(o.k, o.ell, o.alphabet.empty() ? "letters" : o.alphabet.c_str(), &text);
  return finish(s, text);
}

int run_power(const Options& o) {
  pb_matrix* m = nullptr;
  pb_status s = pb_matrix_create(o.k, o.entries.c_str(), &m);
  if (s != PB_OK) return finish(s, nullptr);
  pb_matrix* pw = nullptr;
  s = pb_matrix_polyadic_power(m, o.ell, &pw);
  pb_matrix_free(m);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  s = pb_matrix_format(pw, &text);
  pb_matrix_free(pw);
  return finish(s, text);
}

int run_quer(const Options& o) {
  pb_matrix* m = nullptr;
  pb_status s = pb_matrix_create(o.k, o.entries.c_str(), &m);
  if (s != PB_OK) return finish(s, nullptr);
  pb_matrix* q = nullptr;
  s = pb_matrix_querelement(m, &q);
  if (s != PB_OK) {
    pb_matrix_free(m);
    return finish(s, nullptr);
  }
  char* text = nullptr;
  s = pb_matrix_format(q, &text);
  if (s == PB_OK) s = pb_matrix_check_querelement(m, q);
  pb_matrix_free(m);
  pb_matrix_free(q);
  if (text != nullptr) {
    std::fputs(text, stdout);
    pb_string_free(text);
    std::printf("querelement law: %s\n", s == PB_OK ? "holds" : "fails");
  }
  return finish(s, nullptr);
}

int run_verify(const Options& o) {
  char* text = nullptr;
  const pb_status s = pb_verify_correspondence(o.n, o.k, &text);
  return finish(s, text);
}

int run_semigroup(const Options& o) {
  pb_table* t = nullptr;
  pb_status s = pb_table_parse(read_file(o.table).c_str(), &t);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  if (o.what == "regular-tuples") {
    s = pb_table_regular_tuples(t, o.k, o.ell, &text);
  } else {
    s = pb_table_closure(t, o.k, o.threads, o.sample ? 1 : 0, &text);
  }
  pb_table_free(t);
  return finish(s, text);
}

int run_wordeq(const Options& o) {
  pb_status s = PB_OK;
  auto p = load_presentation(o.pres, s);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  s = pb_word_equal(p.get(), o.a.c_str(), o.b.c_str(), o.max_len, o.max_states, &text);
  return finish(s, text);
}

int run_abelianize(const Options& o) {
  pb_status s = PB_OK;
  auto p = load_presentation(o.pres, s);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  s = pb_abelianize(p.get(), &text);
  return finish(s, text);
}

int run_enumerate(const Options& o) {
  pb_status s = PB_OK;
  auto p = load_presentation(o.pres, s);
  if (s != PB_OK) return finish(s, nullptr);
  char* text = nullptr;
  s = pb_enumerate_cosets(p.get(), o.max_cosets, &text);
  return finish(s, text);
}

int run_check_hom(const Options& o) {
  pb_status s = PB_OK;
  auto p = load_presentation(o.pres, s);
  if (s != PB_OK) return finish(s, nullptr);
  const std::string images = read_file(o.images);
  char* text = nullptr;
  s = pb_check_homomorphism(p.get(), images.c_str(), &text);
  return finish(s, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyadic braid groups, k-ary matrices and presentation tools"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  const auto alphabets = CLI::IsMember({"s", "sigma", "r", "g", "letters"});

  auto* present = app.add_subcommand("present", "Print a presentation");
  present->add_option("family", o.family, "braid, symmetric or coxeter")
      ->required()
      ->check(CLI::IsMember({"braid", "symmetric", "coxeter"}));
  present->add_option("--n", o.n, "Number of strands")->required();
  present->add_option("--k", o.k, "Arity")->required();
  present->add_option("--format", o.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  present->add_option("--alphabet", o.alphabet, "Generator display names")->check(alphabets);
  present->callback([&] { action = [&] { return run_present(o); }; });

  auto* regularity = app.add_subcommand("regularity", "Print the idempotence equations");
  regularity->add_option("--k", o.k, "Arity")->required();
  regularity->add_option("--ell", o.ell, "Polyadic power")->required();
  regularity->add_option("--alphabet", o.alphabet, "Generator display names (default letters)")
      ->check(alphabets);
  regularity->callback([&] { action = [&] { return run_regularity(o); }; });

  auto* power = app.add_subcommand("power", "Polyadic power of a k-ary matrix");
  power->add_option("--k", o.k, "Arity")->required();
  power->add_option("--ell", o.ell, "Polyadic power")->required();
  power->add_option("--entries", o.entries, "Comma separated slot words")->required();
  power->callback([&] { action = [&] { return run_power(o); }; });

  auto* quer = app.add_subcommand("quer", "Querelement of a k-ary matrix");
  quer->add_option("--k", o.k, "Arity")->required();
  quer->add_option("--entries", o.entries, "Comma separated slot words")->required();
  quer->callback([&] { action = [&] { return run_quer(o); }; });

  auto* verify = app.add_subcommand("verify", "Check matrix/presentation correspondence");
  verify->add_option("what", o.what, "correspondence")->required()->check(CLI::IsMember({"correspondence"}));
  verify->add_option("--n", o.n, "Number of strands")->required();
  verify->add_option("--k", o.k, "Arity")->required();
  verify->callback([&] { action = [&] { return run_verify(o); }; });

  auto* semigroup = app.add_subcommand("semigroup", "Regularity in a finite semigroup");
  semigroup->add_option("what", o.what, "regular-tuples or closure")
      ->required()
      ->check(CLI::IsMember({"regular-tuples", "closure"}));
  semigroup->add_option("--table", o.table, "Cayley table file")->required();
  semigroup->add_option("--k", o.k, "Arity")->required();
  semigroup->add_option("--ell", o.ell, "Polyadic power for regular-tuples");
  semigroup->add_option("--threads", o.threads, "Worker threads for the closure check")
      ->check(CLI::Range(1u, 64u));
  semigroup->add_flag("--sample", o.sample, "Sample products beyond the enumeration guard");
  semigroup->callback([&] { action = [&] { return run_semigroup(o); }; });

  auto* wordeq = app.add_subcommand("wordeq", "Bounded word problem query");
  wordeq->add_option("--pres", o.pres, "Presentation file")->required();
  wordeq->add_option("--a", o.a, "First word")->required();
  wordeq->add_option("--b", o.b, "Second word")->required();
  wordeq->add_option("--max-len", o.max_len, "Longest intermediate word");
  wordeq->add_option("--max-states", o.max_states, "Visited word budget");
  wordeq->callback([&] { action = [&] { return run_wordeq(o); }; });

  auto* abelianize = app.add_subcommand("abelianize", "Abelian quotient of a presentation");
  abelianize->add_option("--pres", o.pres, "Presentation file")->required();
  abelianize->callback([&] { action = [&] { return run_abelianize(o); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Coset enumeration over the trivial subgroup");
  enumerate->add_option("--pres", o.pres, "Presentation file")->required();
  enumerate->add_option("--max-cosets", o.max_cosets, "Coset budget")->check(CLI::PositiveNumber);
  enumerate->callback([&] { action = [&] { return run_enumerate(o); }; });

  auto* check_hom = app.add_subcommand("check-hom", "Check generator images in a permutation group");
  check_hom->add_option("--pres", o.pres, "Presentation file")->required();
  check_hom->add_option("--images", o.images, "Images file")->required();
  check_hom->callback([&] { action = [&] { return run_check_hom(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::fprintf(stderr, "polybraid: %s\n", e.what());
    return exit_data;
  }
}
