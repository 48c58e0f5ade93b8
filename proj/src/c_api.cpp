#include "polybraid/polybraid.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "polybraid/abelian.hpp"
#include "polybraid/coset_enumeration.hpp"
#include "polybraid/error.hpp"
#include "polybraid/permutation.hpp"
#include "polybraid/polymatrix.hpp"
#include "polybraid/presentation.hpp"
#include "polybraid/regularity.hpp"
#include "polybraid/rewriting.hpp"

struct pb_presentation {
  polybraid::Presentation value;
};

struct pb_matrix {
  polybraid::PolyMatrix value;
  polybraid::Alphabet alphabet;
};

struct pb_table {
  polybraid::CayleyTable value;
};

namespace {

using namespace polybraid;

thread_local std::string last_error;

pb_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument:
      return PB_ERR_ARGUMENT;
    case errc::parse_error:
      return PB_ERR_PARSE;
    case errc::limit_exceeded:
      return PB_ERR_LIMIT;
    case errc::mode_mismatch:
    case errc::arity_mismatch:
    case errc::shape_mismatch:
      return PB_ERR_MISMATCH;
  }
  return PB_ERR_INTERNAL;
}

/// Runs body, translating exceptions into status codes and the thread-local message.
template <typename Body>
pb_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PB_ERR_INTERNAL;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw error(errc::invalid_argument, message);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pb_status wrap_presentation(Presentation p, pb_presentation** out) {
  require(out != nullptr, "output handle pointer is null");
  *out = new pb_presentation{std::move(p)};
  return PB_OK;
}

/// Indexed syntax when every entry parses that way, otherwise letters.
std::pair<std::vector<Word>, Alphabet> parse_entries(std::string_view text) {
  const std::vector<std::string> parts = split_trimmed(text, ',');
  try {
    std::vector<Word> words;
    for (const auto& part : parts) words.push_back(parse_word(part));
    return {std::move(words), Alphabet::s};
  } catch (const error&) {
  }
  std::vector<Word> words;
  for (const auto& part : parts) words.push_back(parse_letter_word(part));
  return {std::move(words), Alphabet::letters};
}

Word parse_query_word(std::string_view text) {
  try {
    return parse_word(text);
  } catch (const error&) {
  }
  try {
    return parse_letter_word(text);
  } catch (const error& e) {
    throw error(errc::invalid_argument, "cannot parse word '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace

extern "C" {

const char* pb_last_error(void) { return last_error.c_str(); }

const char* pb_status_name(pb_status status) {
  switch (status) {
    case PB_OK:
      return "ok";
    case PB_FALSE:
      return "false";
    case PB_INCONCLUSIVE:
      return "inconclusive";
    case PB_ERR_ARGUMENT:
      return "invalid argument";
    case PB_ERR_PARSE:
      return "parse error";
    case PB_ERR_LIMIT:
      return "limit exceeded";
    case PB_ERR_MISMATCH:
      return "mismatch";
    case PB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void pb_string_free(char* s) { std::free(s); }

pb_status pb_presentation_braid(int n, int k, pb_presentation** out) {
  return guarded([&] { return wrap_presentation(k == 3 ? artin_braid(n) : higher_braid(n, k), out); });
}

pb_status pb_presentation_symmetric(int n, int k, pb_presentation** out) {
  return guarded([&] { return wrap_presentation(higher_symmetric(n, k), out); });
}

pb_status pb_presentation_coxeter(int n, int k, pb_presentation** out) {
  return guarded([&] { return wrap_presentation(higher_coxeter(CoxeterSpec::defaults(n, k)), out); });
}

pb_status pb_presentation_parse(const char* text, pb_presentation** out) {
  return guarded([&] {
    require(text != nullptr, "presentation text is null");
    return wrap_presentation(parse_presentation(text), out);
  });
}

void pb_presentation_free(pb_presentation* p) { delete p; }

int pb_presentation_generators(const pb_presentation* p) { return p ? p->value.generators : 0; }

size_t pb_presentation_chain_count(const pb_presentation* p) { return p ? p->value.chains.size() : 0; }

pb_status pb_presentation_export(const pb_presentation* p, const char* format, const char* alphabet,
                                 char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null presentation or output pointer");
    const ExportFormat f = parse_export_format(format ? format : "plain");
    const Alphabet a = parse_alphabet(alphabet ? alphabet : "s");
    *out = copy_out(export_presentation(p->value, f, a));
    return PB_OK;
  });
}

pb_status pb_regularity_schema(int k, int ell, const char* alphabet, char** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const Alphabet a = parse_alphabet(alphabet ? alphabet : "letters");
    *out = copy_out(format_schema(idempotence_relations(k, ell), a));
    return PB_OK;
  });
}

pb_status pb_matrix_create(int k, const char* entries, pb_matrix** out) {
  return guarded([&] {
    require(entries != nullptr && out != nullptr, "null entries or output pointer");
    auto [words, alphabet] = parse_entries(entries);
    if (static_cast<int>(words.size()) != k - 1) {
      throw error(errc::arity_mismatch, "expected k-1 = " + std::to_string(k - 1) + " entries, got " +
                                            std::to_string(words.size()));
    }
    *out = new pb_matrix{make_matrix(k, std::move(words)), alphabet};
    return PB_OK;
  });
}

void pb_matrix_free(pb_matrix* m) { delete m; }

pb_status pb_matrix_polyadic_power(const pb_matrix* m, int ell, pb_matrix** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null matrix or output pointer");
    *out = new pb_matrix{polyadic_power(m->value, ell), m->alphabet};
    return PB_OK;
  });
}

pb_status pb_matrix_querelement(const pb_matrix* m, pb_matrix** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null matrix or output pointer");
    *out = new pb_matrix{querelement(m->value), m->alphabet};
    return PB_OK;
  });
}

pb_status pb_matrix_check_querelement(const pb_matrix* m, const pb_matrix* q) {
  return guarded([&] {
    require(m != nullptr && q != nullptr, "null matrix");
    return satisfies_querelement_law(m->value, q->value) ? PB_OK : PB_FALSE;
  });
}

pb_status pb_matrix_format(const pb_matrix* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null matrix or output pointer");
    *out = copy_out(format_matrix(m->value, m->alphabet));
    return PB_OK;
  });
}

pb_status pb_verify_correspondence(int n, int k, char** report) {
  return guarded([&] {
    require(report != nullptr, "output pointer is null");
    const CorrespondenceReport r = verify_braid_matrix_correspondence(n, k);
    *report = copy_out(format_correspondence(r, n, k));
    return r.ok ? PB_OK : PB_FALSE;
  });
}

pb_status pb_table_parse(const char* text, pb_table** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null table text or output pointer");
    try {
      *out = new pb_table{CayleyTable::parse(text)};
    } catch (const error& e) {
      throw error(errc::parse_error, e.what());
    }
    return PB_OK;
  });
}

void pb_table_free(pb_table* t) { delete t; }

int pb_table_order(const pb_table* t) { return t ? t->value.order() : 0; }

pb_status pb_table_regular_tuples(const pb_table* t, int k, int ell, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null table or output pointer");
    const auto tuples = idempotent_matrices(t->value, k, ell);
    std::ostringstream os;
    os << "k=" << k << " ell=" << ell << " regular tuples: " << tuples.size() << '\n';
    for (const auto& tuple : tuples) os << format_tuple(tuple) << '\n';
    *out = copy_out(os.str());
    return PB_OK;
  });
}

pb_status pb_table_closure(const pb_table* t, int k, unsigned threads, int allow_sampling, char** out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null table or output pointer");
    ClosureOptions options;
    options.threads = threads == 0 ? 1 : threads;
    options.allow_sampling = allow_sampling != 0;
    const ClosureReport r = closure_violations(t->value, k, options);
    constexpr std::size_t shown = 10;
    std::ostringstream os;
    os << "k=" << k << '\n';
    os << "idempotents: " << r.idempotents << '\n';
    os << "products_checked: " << r.products_checked << (r.sampled ? " (sampled)" : "") << '\n';
    os << "violations: " << r.violations.size() << '\n';
    for (std::size_t i = 0; i < r.violations.size() && i < shown; ++i) {
      const auto& v = r.violations[i];
      os << "mu[";
      for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << format_tuple(v[j]);
      os << "] = " << format_tuple(mu_k_tuples(t->value, v)) << '\n';
    }
    if (r.violations.size() > shown) os << "... " << (r.violations.size() - shown) << " more\n";
    *out = copy_out(os.str());
    return r.violations.empty() ? PB_OK : PB_FALSE;
  });
}

pb_status pb_word_equal(const pb_presentation* p, const char* a, const char* b, size_t max_len,
                        size_t max_states, char** out) {
  return guarded([&] {
    require(p != nullptr && a != nullptr && b != nullptr && out != nullptr, "null argument");
    const Word wa = parse_query_word(a);
    const Word wb = parse_query_word(b);
    const EqualityResult r = bounded_equal(p->value, wa, wb, {max_len, max_states});
    std::ostringstream os;
    if (r.verdict == Verdict::equal) {
      os << "equal\n" << format_trace(r.trace);
      os << "states: " << r.states << '\n';
      *out = copy_out(os.str());
      return PB_OK;
    }
    if (separate_by_abelianization(p->value, wa, wb) == Separation::distinct) {
      os << "distinct (abelianization)\n";
      os << "states: " << r.states << '\n';
      *out = copy_out(os.str());
      return PB_FALSE;
    }
    os << "unknown\n";
    os << "states: " << r.states << '\n';
    *out = copy_out(os.str());
    return PB_INCONCLUSIVE;
  });
}

pb_status pb_abelianize(const pb_presentation* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null presentation or output pointer");
    *out = copy_out(format_abelian_quotient(abelian_quotient(p->value)));
    return PB_OK;
  });
}

pb_status pb_enumerate_cosets(const pb_presentation* p, size_t max_cosets, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null presentation or output pointer");
    const EnumerationResult r = todd_coxeter(p->value, max_cosets);
    *out = copy_out(format_enumeration(r));
    return r.status == EnumerationStatus::finite ? PB_OK : PB_INCONCLUSIVE;
  });
}

pb_status pb_check_homomorphism(const pb_presentation* p, const char* images_text, char** out) {
  return guarded([&] {
    require(p != nullptr && images_text != nullptr && out != nullptr, "null argument");
    std::vector<Permutation> images;
    HomomorphismReport r;
    try {
      images = parse_images(images_text);
      r = check_homomorphism(p->value, images);
    } catch (const error& e) {
      throw error(errc::parse_error, e.what());
    }
    *out = copy_out(format_homomorphism(p->value, images, r));
    return r.ok ? PB_OK : PB_FALSE;
  });
}

}  // extern "C"
