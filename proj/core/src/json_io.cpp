#include "pointlike/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

using nlohmann::json;

json parse_json(std::string const& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw IoError("malformed JSON");
  }
  return j;
}

}  // namespace

SemigroupFile parse_semigroup_json(std::string const& text) {
  json j = parse_json(text);
  if (!j.contains("order") || !j.contains("table")) {
    throw IoError("semigroup file needs \"order\" and \"table\"");
  }
  unsigned order = j["order"].get<unsigned>();
  std::vector<std::vector<unsigned>> table;
  for (auto const& row : j["table"]) {
    table.push_back(row.get<std::vector<unsigned>>());
  }
  FiniteSemigroup S = FiniteSemigroup::from_cayley(order, table);

  if (j.contains("alphabet") != j.contains("letter_map")) {
    throw IoError("\"alphabet\" and \"letter_map\" must appear together");
  }
  if (!j.contains("alphabet")) {
    return SemigroupFile{std::move(S), std::nullopt};
  }
  std::vector<std::string> alphabet = j["alphabet"].get<std::vector<std::string>>();
  std::vector<unsigned> images;
  for (auto const& symbol : alphabet) {
    if (!j["letter_map"].contains(symbol)) {
      throw IoError("letter_map misses letter '" + symbol + "'");
    }
    images.push_back(j["letter_map"][symbol].get<unsigned>());
  }
  Presentation P(S, alphabet, images);
  return SemigroupFile{std::move(S), std::move(P)};
}

std::string serialize_semigroup_json(FiniteSemigroup const& S) {
  json j;
  j["order"] = S.order();
  json table = json::array();
  for (unsigned x = 0; x < S.order(); ++x) {
    json row = json::array();
    for (unsigned y = 0; y < S.order(); ++y) {
      row.push_back(S.product(x, y));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j.dump(2);
}

std::string serialize_presentation_json(Presentation const& P) {
  json j = json::parse(serialize_semigroup_json(P.semigroup()));
  j["alphabet"] = P.alphabet();
  json letter_map = json::object();
  for (unsigned a = 0; a < P.alphabet().size(); ++a) {
    letter_map[P.alphabet()[a]] = P.letter_image(a);
  }
  j["letter_map"] = std::move(letter_map);
  return j.dump(2);
}

Dfa parse_dfa_json(std::string const& text) {
  json j = parse_json(text);
  for (auto const& field : {"states", "initial", "accepting", "alphabet", "delta"}) {
    if (!j.contains(field)) {
      throw IoError(std::string("dfa file needs \"") + field + "\"");
    }
  }
  Dfa dfa;
  dfa.states = j["states"].get<unsigned>();
  dfa.initial = j["initial"].get<unsigned>();
  dfa.accepting = j["accepting"].get<std::vector<unsigned>>();
  dfa.alphabet = j["alphabet"].get<std::vector<std::string>>();
  for (auto const& symbol : dfa.alphabet) {
    if (!j["delta"].contains(symbol)) {
      throw IncompleteAutomaton("delta misses letter '" + symbol + "'");
    }
    dfa.delta.push_back(j["delta"][symbol].get<std::vector<unsigned>>());
  }
  return dfa;
}

std::vector<Term> parse_terms_json(std::string const& text) {
  json j = parse_json(text);
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw IoError("terms file needs a \"terms\" array");
  }
  std::vector<Term> terms;
  for (auto const& item : j["terms"]) {
    terms.push_back(parse_term(item.get<std::string>()));
  }
  return terms;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string digest_hex(std::string const& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << hash;
  return out.str();
}

}  // namespace pointlike
