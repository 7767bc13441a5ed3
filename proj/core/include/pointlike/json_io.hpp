#ifndef POINTLIKE_JSON_IO_HPP_
#define POINTLIKE_JSON_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pointlike/dfa.hpp"
#include "pointlike/presentation.hpp"
#include "pointlike/term.hpp"

namespace pointlike {

/// Contents of a semigroup file:
///   {"order": n, "table": [[...]], "alphabet": ["a", ...],
///    "letter_map": {"a": 0, ...}}
/// alphabet and letter_map are optional together.
struct SemigroupFile {
  FiniteSemigroup semigroup;
  std::optional<Presentation> presentation;
};

SemigroupFile parse_semigroup_json(std::string const& text);
std::string serialize_presentation_json(Presentation const& P);
std::string serialize_semigroup_json(FiniteSemigroup const& S);

/// {"states": n, "initial": i, "accepting": [...], "alphabet": [...],
///  "delta": {"a": [target per state], ...}}
Dfa parse_dfa_json(std::string const& text);

/// {"terms": ["(pow (* a b) w)", ...]}
std::vector<Term> parse_terms_json(std::string const& text);

std::string read_file(std::string const& path);

/// FNV-1a hash of the raw bytes, as "fnv1a:<hex>"; used for input digests.
std::string digest_hex(std::string const& bytes);

}  // namespace pointlike

#endif  // POINTLIKE_JSON_IO_HPP_
