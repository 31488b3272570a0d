#include "permrel/rewrite_cyclic.hpp"

#include <algorithm>

#include "permrel/errors.hpp"

namespace permrel {

Word Rule::lhs(int n) const {
  if (family == RuleFamily::Rotation) {
    return ascending_run(index + 1, n) + ascending_run(1, index);
  }
  Word w{index};
  w += letter_run(1, static_cast<std::size_t>(run));
  w += ascending_run(2, n);
  return w;
}

Word Rule::rhs(int n) const {
  if (family == RuleFamily::Rotation) {
    return central_word(n);
  }
  Word w = central_word(n);
  w.push_back(index);
  w += letter_run(1, static_cast<std::size_t>(run - 1));
  return w;
}

bool rule_precedes(const Rule& a, const Rule& b) {
  if (a.family != b.family) {
    return a.family == RuleFamily::Rotation;
  }
  if (a.run != b.run) {
    return a.run > b.run;
  }
  return a.index < b.index;
}

std::string to_string(const Rule& r) {
  if (r.family == RuleFamily::Rotation) {
    return "T(" + std::to_string(r.index) + ")";
  }
  return "R(" + std::to_string(r.index) + "," + std::to_string(r.run) + ")";
}

Word assemble(const NormalForm& nf, int n) {
  Word w = letter_run(1, nf.i);
  if (nf.eps == 1) {
    w += central_word(n);
  }
  w += power(ascending_run(2, n), nf.j);
  w += nf.tail;
  return w;
}

CyclicMonoid::CyclicMonoid(int n, RuleOptions options) : n_(n), options_(options) {
  if (n < 3) {
    throw PreconditionError("the cyclic rewriting system needs n >= 3, got " +
                            std::to_string(n));
  }
}

void CyclicMonoid::require_letters(const Word& w) const {
  if (!letters_within(w, n_)) {
    throw PreconditionError("word " + to_string(w) + " has letters outside [1, " +
                            std::to_string(n_) + "]");
  }
}

std::vector<Redex> CyclicMonoid::redexes_at(const Word& w, std::size_t pos) const {
  std::vector<Redex> out;
  const std::size_t len = w.size();
  const auto n = static_cast<std::size_t>(n_);
  if (pos >= len || w[pos] < 2) {
    return out;
  }
  const Letter lead = w[pos];

  // T(lead - 1): a_lead ... a_n a_1 ... a_{lead-1}
  if (pos + n <= len) {
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      ok = w[pos + t] == static_cast<Letter>((static_cast<std::size_t>(lead) - 1 + t) % n + 1);
    }
    if (ok) {
      out.push_back({Rule::rotation(lead - 1), pos});
    }
  }

  // R(lead, m): a_lead a_1^m a_2 ... a_n with m the full run of 1s.
  std::size_t run = 0;
  while (pos + 1 + run < len && w[pos + 1 + run] == 1) {
    ++run;
  }
  const bool run_allowed =
      run >= 1 && (lead < n_ || run >= 2 || options_.allow_degenerate_shift);
  if (run_allowed && pos + run + n <= len) {
    bool ok = true;
    for (std::size_t t = 0; t + 1 < n && ok; ++t) {
      ok = w[pos + 1 + run + t] == static_cast<Letter>(t + 2);
    }
    if (ok) {
      out.push_back({Rule::shift(lead, static_cast<int>(run)), pos});
    }
  }
  return out;
}

std::vector<Redex> CyclicMonoid::find_redexes(const Word& w) const {
  require_letters(w);
  std::vector<Redex> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto here = redexes_at(w, pos);
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::optional<Redex> CyclicMonoid::first_redex(const Word& w, std::size_t from) const {
  for (std::size_t pos = from; pos < w.size(); ++pos) {
    auto here = redexes_at(w, pos);
    if (!here.empty()) {
      return here.front();
    }
  }
  return std::nullopt;
}

bool CyclicMonoid::matches(const Word& w, const Redex& r) const {
  const Rule& rule = r.rule;
  if (rule.family == RuleFamily::Rotation) {
    if (rule.index < 1 || rule.index > n_ - 1) {
      return false;
    }
  } else {
    if (rule.index < 2 || rule.index > n_ || rule.run < 1) {
      return false;
    }
    if (rule.index == n_ && rule.run < 2 && !options_.allow_degenerate_shift) {
      return false;
    }
  }
  const std::size_t span = rule.span(n_);
  if (r.position + span > w.size()) {
    return false;
  }
  return w.subword(r.position, span) == rule.lhs(n_);
}

Word CyclicMonoid::apply(const Word& w, const Redex& r) const {
  if (!matches(w, r)) {
    throw PreconditionError("invalid redex " + to_string(r.rule) + " at " +
                            std::to_string(r.position) + " in " + to_string(w));
  }
  std::vector<Letter> letters = w.letters();
  const Word rhs = r.rule.rhs(n_);
  std::copy(rhs.begin(), rhs.end(), letters.begin() + static_cast<long>(r.position));
  return Word(std::move(letters));
}

RewriteTrace CyclicMonoid::normal_form_trace(const Word& w) const {
  require_letters(w);
  RewriteTrace trace{w, 0};
  const auto n = static_cast<std::size_t>(n_);
  std::size_t from = 0;
  while (auto r = first_redex(trace.result, from)) {
    trace.result = apply(trace.result, *r);
    ++trace.steps;
    // Positions before r->position held no redex. A new one must reach into
    // the rewritten span, so it starts at most n letters back or further
    // back across a run of a_1.
    std::size_t restart = r->position >= n ? r->position - n : 0;
    while (restart > 0 && trace.result[restart] == 1) {
      --restart;
    }
    from = restart;
  }
  return trace;
}

RewriteTrace CyclicMonoid::random_normal_form(const Word& w, std::mt19937_64& rng) const {
  RewriteTrace trace{w, 0};
  while (true) {
    auto redexes = find_redexes(trace.result);
    if (redexes.empty()) {
      return trace;
    }
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    trace.result = apply(trace.result, redexes[pick(rng)]);
    ++trace.steps;
  }
}

NormalForm CyclicMonoid::decompose(const Word& w) const {
  require_letters(w);
  if (!is_irreducible(w)) {
    throw PreconditionError("decompose needs an irreducible word, got " + to_string(w));
  }
  const auto n = static_cast<std::size_t>(n_);
  NormalForm nf;
  std::size_t pos = 0;
  while (pos < w.size() && w[pos] == 1) {
    ++pos;
  }
  nf.i = pos;

  // z begins with a_1, so after a maximal a_1-prefix it can only appear
  // through the a_1 that was absorbed into i.
  auto block_at = [&](std::size_t at) {
    if (at + n - 1 > w.size()) {
      return false;
    }
    for (std::size_t t = 0; t + 1 < n; ++t) {
      if (w[at + t] != static_cast<Letter>(t + 2)) {
        return false;
      }
    }
    return true;
  };
  while (block_at(pos)) {
    ++nf.j;
    pos += n - 1;
  }
  if (nf.j >= 1 && nf.i >= 1) {
    // a_1^i (a_2...a_n)^j = a_1^{i-1} z (a_2...a_n)^{j-1}
    --nf.i;
    nf.eps = 1;
    --nf.j;
  }
  nf.tail = w.subword(pos, w.size() - pos);
  return nf;
}

int CyclicMonoid::prime_witness(const Word& a, const Word& b) const {
  if (is_in_P(a) || is_in_P(b)) {
    throw PreconditionError("prime_witness requires a and b outside P");
  }
  for (Letter k = 1; k <= n_; ++k) {
    if (!is_in_P(a + Word{k, k} + b)) {
      return k;
    }
  }
  throw Error("no letter a_i with a a_i^2 b outside P for a = " + to_string(a) +
              ", b = " + to_string(b));
}

}  // namespace permrel
