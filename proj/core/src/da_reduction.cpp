#include "pointlike/da_reduction.hpp"

#include <algorithm>
#include <map>

#include "pointlike/cbf.hpp"
#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

Corpus const& da_corpus(unsigned max_order) {
  static std::map<unsigned, Corpus> cache;
  auto it = cache.find(max_order);
  if (it == cache.end()) {
    it = cache.emplace(max_order, generate_corpus(Variety::da(), max_order)).first;
  }
  return it->second;
}

using Letters = std::set<std::string>;

class Reducer {
 public:
  Reducer(Presentation const& original, ReduceOptions const& options)
      : orig_(original), options_(options), aug_(content_augment(original)) {}

  std::vector<Term> run(std::vector<Term> const& inputs, bool idempotent) {
    if (inputs.empty()) {
      throw Error("reduce: empty input tuple");
    }
    for (auto const& t : inputs) {
      if (!t) {
        throw Error("reduce: null input term");
      }
      if (!is_omega_term(t)) {
        throw Error("reduce: inputs must be omega-terms");
      }
      for (auto const& a : content(t)) {
        if (!orig_.letter_index(a)) {
          throw UnknownLetter(a);
        }
      }
    }
    Letters F = content(inputs[0]);
    for (auto const& t : inputs) {
      if (content(t) != F) {
        throw PreconditionFalsified("input contents differ across the tuple");
      }
    }
    std::vector<Term> check = inputs;
    if (idempotent) {
      check.push_back(make_concat(inputs.back(), inputs.back()));
    }
    if (auto cex = corpus_distinguish(check, da_corpus(options_.corpus_max_order),
                                      PrimeSet::empty())) {
      throw PreconditionFalsified("DA corpus distinguishes the inputs: "
                                  + cex->to_string());
    }
    return reduce_rec(inputs, idempotent);
  }

 private:
  using Tuple = std::vector<Term>;

  unsigned eval_aug(Term const& t) const {
    return eval_term(aug_, t, PrimeSet::empty());
  }

  unsigned letter_aug(std::string const& a) const {
    return aug_.letter_image(*aug_.letter_index(a));
  }

  unsigned aug_product(unsigned x, unsigned y) const {
    return aug_.semigroup().product(x, y);
  }

  // Shortest word with the given image over the content-augmented semigroup;
  // the augmentation makes the content of the word automatic.
  Term word_term(unsigned element) const {
    std::vector<Term> letters;
    for (unsigned idx : aug_.word_for(element)) {
      letters.push_back(make_letter(aug_.alphabet()[idx]));
    }
    return make_concat_all(letters);
  }

  static std::string tuple_key(Tuple const& terms) {
    std::string key;
    for (auto const& t : terms) {
      key += t ? format_term(t) : "\x02";
      key += '\x01';
    }
    return key;
  }

  Tuple reduce_rec(Tuple const& terms, bool require_infinite = false) {
    bool all_null = std::all_of(terms.begin(), terms.end(),
                                [](Term const& t) { return t == nullptr; });
    if (all_null) {
      return terms;
    }
    bool any_null = std::any_of(terms.begin(), terms.end(),
                                [](Term const& t) { return t == nullptr; });
    if (any_null) {
      throw PreconditionFalsified("a factor tuple mixes empty and nonempty parts");
    }
    if (require_infinite) {
      return reduce_impl(terms, true);
    }
    std::string key = tuple_key(terms);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      return it->second;
    }
    Tuple out = reduce_impl(terms, false);
    memo_.emplace(std::move(key), out);
    return out;
  }

  Tuple reduce_impl(Tuple const& terms, bool require_infinite) {
    Letters F = content(terms[0]);
    for (auto const& t : terms) {
      if (content(t) != F) {
        throw PreconditionFalsified("factor tuple contents differ");
      }
    }

    // Finite words are sigma-terms already; under the premise they must all
    // be the same word (distinct finite words are separable over DA).
    std::vector<std::optional<std::vector<std::string>>> words;
    words.reserve(terms.size());
    for (auto const& t : terms) {
      words.push_back(finite_word(t));
    }
    bool all_words = std::all_of(words.begin(), words.end(),
                                 [](auto const& w) { return w.has_value(); });
    bool any_words = std::any_of(words.begin(), words.end(),
                                 [](auto const& w) { return w.has_value(); });
    if (all_words) {
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (*words[i] != *words[0]) {
          throw PreconditionFalsified("distinct finite words in a tuple");
        }
      }
      Tuple out;
      for (auto const& w : words) {
        std::vector<Term> letters;
        for (auto const& a : *w) {
          letters.push_back(make_letter(a));
        }
        out.push_back(make_concat_all(letters));
      }
      return out;
    }
    if (any_words) {
      throw PreconditionFalsified("tuple mixes finite words with infinite terms");
    }

    if (F.size() == 1) {
      // u = a^w u for infinite one-letter terms; the tail is a plain word
      // with the right image (trivial-group reduction)
      std::string const& a = *F.begin();
      Tuple out;
      for (auto const& t : terms) {
        out.push_back(make_concat(omega_power(make_letter(a)),
                                  word_term(eval_aug(t))));
      }
      return out;
    }

    std::vector<CbfTower> towers;
    towers.reserve(terms.size());
    for (auto const& t : terms) {
      towers.push_back(cbf_tower(t, options_.tower_cap));
    }
    for (auto const& tw : towers) {
      if (tw.status == CbfTower::Status::undetermined) {
        throw TowerUndetermined("a factorization tower is unclassified after "
                                + std::to_string(options_.tower_cap) + " layers");
      }
    }
    bool all_finite = std::all_of(towers.begin(), towers.end(), [](auto const& tw) {
      return tw.status == CbfTower::Status::finite;
    });
    bool all_infinite = std::all_of(towers.begin(), towers.end(), [](auto const& tw) {
      return tw.status == CbfTower::Status::infinite;
    });
    if (!all_finite && !all_infinite) {
      throw PreconditionFalsified("tower classifications differ across the tuple");
    }
    if (all_finite) {
      if (require_infinite) {
        throw NotIdempotentLike(
            "a finite factorization tower contradicts the idempotency hypothesis");
      }
      return finite_case(towers, F);
    }
    return infinite_case(towers);
  }

  // The towers ended: every layer is wrapped around the reduced middle part.
  Tuple finite_case(std::vector<CbfTower> const& towers, Letters const& F) {
    std::size_t n = towers.size();
    std::size_t depth = towers[0].layers.size();
    for (auto const& tw : towers) {
      if (tw.layers.size() != depth) {
        throw PreconditionFalsified("tower heights differ across the tuple");
      }
    }
    std::vector<Tuple> prefixes(depth), suffixes(depth);
    for (std::size_t p = 0; p < depth; ++p) {
      for (std::size_t i = 1; i < n; ++i) {
        if (towers[i].layers[p].a != towers[0].layers[p].a
            || towers[i].layers[p].b != towers[0].layers[p].b) {
          throw PreconditionFalsified("marker sequences differ across the tuple");
        }
      }
      Tuple ptuple, stuple;
      for (auto const& tw : towers) {
        ptuple.push_back(tw.layers[p].prefix);
        stuple.push_back(tw.layers[p].suffix);
      }
      prefixes[p] = reduce_rec(ptuple);
      suffixes[p] = reduce_rec(stuple);
    }

    Tuple middles;
    for (auto const& tw : towers) {
      middles.push_back(tw.final_middle());
    }
    Tuple mids = middle_parts(middles, F);

    Tuple out;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> parts;
      for (std::size_t p = 0; p < depth; ++p) {
        parts.push_back(prefixes[p][i]);
        parts.push_back(make_letter(towers[0].layers[p].a));
      }
      if (mids[i]) {
        parts.push_back(mids[i]);
      }
      for (std::size_t p = depth; p-- > 0;) {
        parts.push_back(make_letter(towers[0].layers[p].b));
        parts.push_back(suffixes[p][i]);
      }
      out.push_back(make_concat_all(parts));
    }
    return out;
  }

  // The middles that terminated a finite tower: either smaller content
  // (recurse directly) or one of the two overlap forms (recurse into the
  // factors around the markers).
  Tuple middle_parts(Tuple const& middles, Letters const& F) {
    bool all_null = std::all_of(middles.begin(), middles.end(),
                                [](Term const& t) { return t == nullptr; });
    if (all_null) {
      return middles;
    }
    bool any_null = std::any_of(middles.begin(), middles.end(),
                                [](Term const& t) { return t == nullptr; });
    if (any_null) {
      throw PreconditionFalsified("middle tuple mixes empty and nonempty parts");
    }
    Letters G = content(middles[0]);
    for (auto const& m : middles) {
      if (content(m) != G) {
        throw PreconditionFalsified("middle tuple contents differ");
      }
    }
    if (G != F) {
      return reduce_rec(middles);
    }

    std::vector<CbfResult> forms;
    forms.reserve(middles.size());
    for (auto const& m : middles) {
      forms.push_back(cbf(m));
    }
    if (std::holds_alternative<CbfSharedMarker>(forms[0])) {
      auto const& first = std::get<CbfSharedMarker>(forms[0]);
      Tuple alphas, betas;
      for (auto const& form : forms) {
        auto const* s = std::get_if<CbfSharedMarker>(&form);
        if (s == nullptr || s->x != first.x) {
          throw PreconditionFalsified("overlap forms differ across the tuple");
        }
        alphas.push_back(s->alpha);
        betas.push_back(s->beta);
      }
      Tuple ra = reduce_rec(alphas);
      Tuple rb = reduce_rec(betas);
      Tuple out;
      for (std::size_t i = 0; i < middles.size(); ++i) {
        std::vector<Term> parts;
        if (ra[i]) {
          parts.push_back(ra[i]);
        }
        parts.push_back(make_letter(first.x));
        if (rb[i]) {
          parts.push_back(rb[i]);
        }
        out.push_back(make_concat_all(parts));
      }
      return out;
    }
    if (std::holds_alternative<CbfCrossed>(forms[0])) {
      auto const& first = std::get<CbfCrossed>(forms[0]);
      Tuple alphas, betas, gammas;
      for (auto const& form : forms) {
        auto const* c = std::get_if<CbfCrossed>(&form);
        if (c == nullptr || c->x != first.x || c->y != first.y) {
          throw PreconditionFalsified("overlap forms differ across the tuple");
        }
        alphas.push_back(c->alpha);
        betas.push_back(c->beta);
        gammas.push_back(c->gamma);
      }
      Tuple ra = reduce_rec(alphas);
      Tuple rb = reduce_rec(betas);
      Tuple rg = reduce_rec(gammas);
      Tuple out;
      for (std::size_t i = 0; i < middles.size(); ++i) {
        std::vector<Term> parts;
        if (ra[i]) {
          parts.push_back(ra[i]);
        }
        parts.push_back(make_letter(first.y));
        if (rb[i]) {
          parts.push_back(rb[i]);
        }
        parts.push_back(make_letter(first.x));
        if (rg[i]) {
          parts.push_back(rg[i]);
        }
        out.push_back(make_concat_all(parts));
      }
      return out;
    }
    throw PreconditionFalsified("inconsistent middle classification");
  }

  // The towers never end: scan the running (prefix, suffix) image pairs for
  // a repeat k < l and wrap the blocks between them into omega powers.
  Tuple infinite_case(std::vector<CbfTower> const& towers) {
    std::size_t n = towers.size();
    // pigeonhole: the pair tuples live in a set of size |S_aug|^(2n)
    std::size_t guard = 1;
    for (std::size_t i = 0; i < 2 * n && guard < 2'000'000; ++i) {
      guard *= aug_.semigroup().order();
    }
    guard = std::min<std::size_t>(guard, 2'000'000) + 1;

    std::vector<Tuple> pref, suf;
    std::vector<std::string> markers_a, markers_b;
    std::vector<unsigned> pprod(n, 0), qprod(n, 0);
    std::map<std::vector<unsigned>, std::size_t> seen;
    std::size_t k = 0, l = 0;
    for (std::size_t layer = 0;; ++layer) {
      if (layer > guard) {
        throw Error("internal: pigeonhole bound exceeded in the infinite case");
      }
      CbfLayer const& base = towers[0].layer_at(layer);
      Tuple ptuple, stuple;
      for (auto const& tw : towers) {
        CbfLayer const& li = tw.layer_at(layer);
        if (li.a != base.a || li.b != base.b) {
          throw PreconditionFalsified("marker sequences differ across the tuple");
        }
        ptuple.push_back(li.prefix);
        stuple.push_back(li.suffix);
      }
      markers_a.push_back(base.a);
      markers_b.push_back(base.b);
      pref.push_back(reduce_rec(ptuple));
      suf.push_back(reduce_rec(stuple));
      for (std::size_t i = 0; i < n; ++i) {
        unsigned step_p = aug_product(eval_aug(pref[layer][i]), letter_aug(base.a));
        pprod[i] = layer == 0 ? step_p : aug_product(pprod[i], step_p);
        unsigned step_q = aug_product(letter_aug(base.b), eval_aug(suf[layer][i]));
        qprod[i] = layer == 0 ? step_q : aug_product(step_q, qprod[i]);
      }
      std::vector<unsigned> key;
      key.reserve(2 * n);
      key.insert(key.end(), pprod.begin(), pprod.end());
      key.insert(key.end(), qprod.begin(), qprod.end());
      auto [it, fresh] = seen.emplace(std::move(key), layer);
      if (!fresh) {
        k = it->second;
        l = layer;
        break;
      }
    }

    Tuple out;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> parts;
      for (std::size_t p = 0; p <= k; ++p) {
        parts.push_back(pref[p][i]);
        parts.push_back(make_letter(markers_a[p]));
      }
      std::vector<Term> block;
      for (std::size_t p = k + 1; p <= l; ++p) {
        block.push_back(pref[p][i]);
        block.push_back(make_letter(markers_a[p]));
      }
      parts.push_back(omega_power(make_concat_all(block)));
      parts.push_back(word_term(eval_aug(towers[i].middle_at(k + 1))));
      std::vector<Term> suffix_block;
      for (std::size_t p = l + 1; p-- > k + 1;) {
        suffix_block.push_back(make_letter(markers_b[p]));
        suffix_block.push_back(suf[p][i]);
      }
      parts.push_back(omega_power(make_concat_all(suffix_block)));
      for (std::size_t p = k + 1; p-- > 0;) {
        parts.push_back(make_letter(markers_b[p]));
        parts.push_back(suf[p][i]);
      }
      out.push_back(make_concat_all(parts));
    }
    return out;
  }

  Presentation const& orig_;
  ReduceOptions options_;
  Presentation aug_;
  std::map<std::string, Tuple> memo_;
};

}  // namespace

std::vector<Term> reduce_tuple(Presentation const& P, std::vector<Term> const& terms,
                               ReduceOptions const& options) {
  Reducer reducer(P, options);
  return reducer.run(terms, /*idempotent=*/false);
}

std::vector<Term> reduce_idempotent_tuple(Presentation const& P,
                                          std::vector<Term> const& terms,
                                          ReduceOptions const& options) {
  Reducer reducer(P, options);
  return reducer.run(terms, /*idempotent=*/true);
}

bool pure_omega_term(Term const& t) {
  if (!t) {
    return true;
  }
  switch (t->kind) {
    case TermNode::Kind::letter:
      return true;
    case TermNode::Kind::concat:
      return pure_omega_term(t->left) && pure_omega_term(t->right);
    case TermNode::Kind::power:
      return t->exp.kind() == ExpKind::omega && pure_omega_term(t->base);
  }
  return false;
}

ReduceReport reduce_and_verify(Presentation const& P, std::vector<Term> const& terms,
                               bool idempotent, ReduceOptions const& options) {
  ReduceReport report;
  report.outputs = idempotent ? reduce_idempotent_tuple(P, terms, options)
                              : reduce_tuple(P, terms, options);
  report.phi_preserved = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (eval_term(P, report.outputs[i], PrimeSet::empty())
        != eval_term(P, terms[i], PrimeSet::empty())) {
      report.phi_preserved = false;
    }
  }
  report.outputs_pure_omega =
      std::all_of(report.outputs.begin(), report.outputs.end(), pure_omega_term);
  Corpus const& corpus = da_corpus(options.corpus_max_order);
  report.corpus_counterexample =
      corpus_distinguish(report.outputs, corpus, PrimeSet::empty());
  if (idempotent && !report.corpus_counterexample) {
    std::vector<Term> doubled = report.outputs;
    for (auto const& t : report.outputs) {
      doubled.push_back(make_concat(t, t));
    }
    report.squared_counterexample =
        corpus_distinguish(doubled, corpus, PrimeSet::empty());
  }
  return report;
}

}  // namespace pointlike
