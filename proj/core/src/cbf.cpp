#include "pointlike/cbf.hpp"

#include <algorithm>
#include <map>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

using Seq = std::vector<Term>;

void flatten_into(Term const& t, Seq& out) {
  if (t->kind == TermNode::Kind::concat) {
    flatten_into(t->left, out);
    flatten_into(t->right, out);
  } else {
    out.push_back(t);
  }
}

Seq flatten(Term const& t) {
  Seq out;
  flatten_into(t, out);
  return out;
}

Term assemble(Seq const& seq) {
  if (seq.empty()) {
    return nullptr;
  }
  return make_concat_all(seq);
}

void check_omega_exponent(Term const& f) {
  if (f->kind == TermNode::Kind::power && f->exp.kind() != ExpKind::omega
      && !f->exp.is_finite()) {
    throw Error("cbf expects an omega-term (exponents w or finite)");
  }
}

// Remainder of a power after removing one unrolled copy of the base.
void append_power_remainder(Seq& out, Term const& base, ProfiniteExponent const& e) {
  if (e.kind() == ExpKind::omega) {
    out.push_back(make_power(base, e));
    return;
  }
  std::uint64_t left = e.value() - 1;
  if (left == 1) {
    flatten_into(base, out);
  } else if (left >= 2) {
    out.push_back(make_power(base, ProfiniteExponent::finite(left)));
  }
}

// Remainder after removing one copy from each side.
void append_power_core(Seq& out, Term const& base, ProfiniteExponent const& e) {
  if (e.kind() == ExpKind::omega) {
    out.push_back(make_power(base, e));
    return;
  }
  std::uint64_t left = e.value() - 2;
  if (left == 1) {
    flatten_into(base, out);
  } else if (left >= 2) {
    out.push_back(make_power(base, ProfiniteExponent::finite(left)));
  }
}

using Letters = std::set<std::string>;

bool subset_of(Letters const& a, Letters const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Index of the factor at which the accumulated content becomes full, plus
// the letters still missing on entry to that factor.
struct ScanHit {
  std::size_t idx;
  Letters missing;
};

ScanHit scan_left(Seq const& seq, Letters missing) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Term const& f = seq[i];
    if (f->kind == TermNode::Kind::letter) {
      if (missing.count(f->letter)) {
        if (missing.size() == 1) {
          return {i, std::move(missing)};
        }
        missing.erase(f->letter);
      }
    } else {
      check_omega_exponent(f);
      Letters gc = content(f->base);
      if (subset_of(missing, gc)) {
        return {i, std::move(missing)};
      }
      for (auto const& a : gc) {
        missing.erase(a);
      }
    }
  }
  throw Error("internal: content never completed in scan_left");
}

ScanHit scan_right(Seq const& seq, Letters missing) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    Term const& f = seq[i];
    if (f->kind == TermNode::Kind::letter) {
      if (missing.count(f->letter)) {
        if (missing.size() == 1) {
          return {i, std::move(missing)};
        }
        missing.erase(f->letter);
      }
    } else {
      check_omega_exponent(f);
      Letters gc = content(f->base);
      if (subset_of(missing, gc)) {
        return {i, std::move(missing)};
      }
      for (auto const& a : gc) {
        missing.erase(a);
      }
    }
  }
  throw Error("internal: content never completed in scan_right");
}

struct Split {
  Seq before;
  std::string marker;
  Seq after;
};

Split split_left(Seq const& seq, Letters missing);
Split split_right(Seq const& seq, Letters missing);

Split split_left(Seq const& seq, Letters missing) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Term const& f = seq[i];
    if (f->kind == TermNode::Kind::letter) {
      if (missing.count(f->letter)) {
        if (missing.size() == 1) {
          Split out;
          out.before.assign(seq.begin(), seq.begin() + i);
          out.marker = f->letter;
          out.after.assign(seq.begin() + i + 1, seq.end());
          return out;
        }
        missing.erase(f->letter);
      }
    } else {
      Letters gc = content(f->base);
      if (subset_of(missing, gc)) {
        // the completion happens inside the first unrolled copy
        Split inner = split_left(flatten(f->base), std::move(missing));
        Split out;
        out.before.assign(seq.begin(), seq.begin() + i);
        out.before.insert(out.before.end(), inner.before.begin(), inner.before.end());
        out.marker = inner.marker;
        out.after = std::move(inner.after);
        append_power_remainder(out.after, f->base, f->exp);
        out.after.insert(out.after.end(), seq.begin() + i + 1, seq.end());
        return out;
      }
      for (auto const& a : gc) {
        missing.erase(a);
      }
    }
  }
  throw Error("internal: content never completed in split_left");
}

Split split_right(Seq const& seq, Letters missing) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    Term const& f = seq[i];
    if (f->kind == TermNode::Kind::letter) {
      if (missing.count(f->letter)) {
        if (missing.size() == 1) {
          Split out;
          out.before.assign(seq.begin(), seq.begin() + i);
          out.marker = f->letter;
          out.after.assign(seq.begin() + i + 1, seq.end());
          return out;
        }
        missing.erase(f->letter);
      }
    } else {
      Letters gc = content(f->base);
      if (subset_of(missing, gc)) {
        // the completion happens inside the last unrolled copy
        Split inner = split_right(flatten(f->base), std::move(missing));
        Split out;
        out.before.assign(seq.begin(), seq.begin() + i);
        append_power_remainder(out.before, f->base, f->exp);
        out.before.insert(out.before.end(), inner.before.begin(), inner.before.end());
        out.marker = inner.marker;
        out.after = std::move(inner.after);
        out.after.insert(out.after.end(), seq.begin() + i + 1, seq.end());
        return out;
      }
      for (auto const& a : gc) {
        missing.erase(a);
      }
    }
  }
  throw Error("internal: content never completed in split_right");
}

}  // namespace

CbfResult cbf(Term const& t) {
  if (!t) {
    throw Error("cbf of a null term");
  }
  Letters full = content(t);
  if (full.empty()) {
    throw Error("cbf: term has empty content");
  }
  Seq factors = flatten(t);
  for (auto const& f : factors) {
    check_omega_exponent(f);
  }
  if (factors.size() == 1 && factors[0]->kind == TermNode::Kind::letter) {
    return CbfTooShort{factors[0]->letter};
  }

  ScanHit left = scan_left(factors, full);
  ScanHit right = scan_right(factors, full);

  if (left.idx < right.idx) {
    Seq left_slice(factors.begin(), factors.begin() + left.idx + 1);
    Split pre = split_left(left_slice, full);
    Seq right_slice(factors.begin() + right.idx, factors.end());
    Split suf = split_right(right_slice, full);
    Seq middle = std::move(pre.after);
    middle.insert(middle.end(), factors.begin() + left.idx + 1,
                  factors.begin() + right.idx);
    middle.insert(middle.end(), suf.before.begin(), suf.before.end());
    return CbfFull{assemble(pre.before), pre.marker, assemble(middle), suf.marker,
                   assemble(suf.after)};
  }

  if (left.idx == right.idx) {
    Term const& f = factors[left.idx];
    if (f->kind == TermNode::Kind::letter) {
      Seq alpha(factors.begin(), factors.begin() + left.idx);
      Seq beta(factors.begin() + left.idx + 1, factors.end());
      return CbfSharedMarker{assemble(alpha), f->letter, assemble(beta)};
    }
    // both markers sit inside the same power: take the first copy for the
    // prefix and the last one for the suffix
    Seq base = flatten(f->base);
    Split pre = split_left(base, left.missing);
    Split suf = split_right(base, right.missing);
    Seq prefix(factors.begin(), factors.begin() + left.idx);
    prefix.insert(prefix.end(), pre.before.begin(), pre.before.end());
    Seq middle = std::move(pre.after);
    append_power_core(middle, f->base, f->exp);
    middle.insert(middle.end(), suf.before.begin(), suf.before.end());
    Seq suffix = std::move(suf.after);
    suffix.insert(suffix.end(), factors.begin() + left.idx + 1, factors.end());
    return CbfFull{assemble(prefix), pre.marker, assemble(middle), suf.marker,
                   assemble(suffix)};
  }

  // right.idx < left.idx: the full-content regions overlap
  Seq right_slice(factors.begin(), factors.begin() + right.idx + 1);
  Split suf = split_right(right_slice, right.missing);
  Seq left_slice(factors.begin() + left.idx, factors.end());
  Split pre = split_left(left_slice, left.missing);
  Seq beta = std::move(suf.after);
  beta.insert(beta.end(), factors.begin() + right.idx + 1,
              factors.begin() + left.idx);
  beta.insert(beta.end(), pre.before.begin(), pre.before.end());
  return CbfCrossed{assemble(suf.before), suf.marker, assemble(beta), pre.marker,
                    assemble(pre.after)};
}

CbfLayer const& CbfTower::layer_at(std::size_t p) const {
  if (p < layers.size()) {
    return layers[p];
  }
  if (status != Status::infinite || cycle_period == 0) {
    throw Error("layer_at: no layer " + std::to_string(p));
  }
  return layers[cycle_start + (p - cycle_start) % cycle_period];
}

Term CbfTower::middle_at(std::size_t p) const {
  if (p < middles.size()) {
    return middles[p];
  }
  if (status != Status::infinite || cycle_period == 0) {
    throw Error("middle_at: no middle " + std::to_string(p));
  }
  return middles[cycle_start + (p - cycle_start) % cycle_period];
}

CbfTower cbf_tower(Term const& t, std::size_t cap) {
  if (cap < 1) {
    throw Error("cbf_tower: cap must be >= 1");
  }
  CbfTower tower;
  Letters full = content(t);
  tower.middles.push_back(t);
  std::map<std::string, std::size_t> seen;
  seen.emplace(format_term(t), 0);
  while (true) {
    Term m = tower.middles.back();
    if (!m || content(m) != full) {
      tower.status = CbfTower::Status::finite;
      return tower;
    }
    if (tower.layers.size() >= cap) {
      tower.status = CbfTower::Status::undetermined;
      return tower;
    }
    CbfResult r = cbf(m);
    auto const* f = std::get_if<CbfFull>(&r);
    if (f == nullptr) {
      tower.status = CbfTower::Status::finite;  // an overlap form ends the tower
      return tower;
    }
    tower.layers.push_back(CbfLayer{f->prefix, f->a0, f->b0, f->suffix});
    tower.middles.push_back(f->middle);
    if (f->middle && content(f->middle) == full) {
      auto [it, fresh] = seen.emplace(format_term(f->middle), tower.middles.size() - 1);
      if (!fresh) {
        tower.status = CbfTower::Status::infinite;
        tower.cycle_start = it->second;
        tower.cycle_period = tower.middles.size() - 1 - it->second;
        return tower;
      }
    }
  }
}

}  // namespace pointlike
