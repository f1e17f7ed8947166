#include "dyckzeta/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>

#include "dyckzeta/errors.hpp"

namespace dyckzeta {

Word alphabet(const Graph& g) {
  Word out;
  out.reserve(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back(Letter::minus(e));
    out.push_back(Letter::plus(e));
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 3 || token.front() != 'e' ||
        (token.back() != '-' && token.back() != '+')) {
      throw Error(ErrorKind::DomainError, "bad letter token '" + token + "'");
    }
    const std::string digits = token.substr(1, token.size() - 2);
    if (!std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorKind::DomainError, "bad letter token '" + token + "'");
    }
    out.push_back({static_cast<EdgeId>(std::stoull(digits)),
                   token.back() == '-' ? Sign::Minus : Sign::Plus});
  }
  return out;
}

std::string format_word(std::span<const Letter> word) {
  std::string out;
  for (const auto& x : word) {
    if (!out.empty()) out += ' ';
    out += 'e' + std::to_string(x.edge) + (x.sign == Sign::Minus ? '-' : '+');
  }
  return out;
}

Word charge_conjugate(std::span<const Letter> word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.push_back(it->flipped());
  }
  return out;
}

SemigroupElement SemigroupElement::idempotent(Vertex v) {
  SemigroupElement e(Kind::NonZero);
  e.alpha_.base = v;
  e.beta_.base = v;
  return e;
}

SemigroupElement SemigroupElement::make(const Graph& g, Path alpha,
                                        Path beta) {
  if (alpha.base != beta.base || !alpha.valid_in(g) || !beta.valid_in(g)) {
    throw Error(ErrorKind::DomainError,
                "normal form needs two valid paths from the same vertex");
  }
  SemigroupElement e(Kind::NonZero);
  e.alpha_ = std::move(alpha);
  e.beta_ = std::move(beta);
  return e;
}

Word SemigroupElement::letters() const {
  Word out;
  if (!is_nonzero()) return out;
  for (auto it = alpha_.edges.rbegin(); it != alpha_.edges.rend(); ++it) {
    out.push_back(Letter::plus(*it));
  }
  for (EdgeId e : beta_.edges) out.push_back(Letter::minus(e));
  return out;
}

std::string SemigroupElement::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Unit: return "1";
    case Kind::NonZero: break;
  }
  if (is_idempotent()) return "P" + std::to_string(vertex());
  return format_word(letters());
}

SemigroupElement append_letter(const Graph& g, SemigroupElement e, Letter x) {
  using Kind = SemigroupElement::Kind;
  if (e.kind_ == Kind::Zero) return e;
  const Vertex s = g.source(x.edge);
  const Vertex r = g.range(x.edge);
  if (e.kind_ == Kind::Unit) {
    e.kind_ = Kind::NonZero;
    e.alpha_.base = s;
    e.beta_.base = s;
    (x.sign == Sign::Minus ? e.beta_ : e.alpha_).edges.push_back(x.edge);
    return e;
  }

  auto& beta = e.beta_.edges;
  if (x.sign == Sign::Minus) {
    const Vertex at = beta.empty() ? e.alpha_.base : g.range(beta.back());
    if (at != s) return SemigroupElement::zero();
    beta.push_back(x.edge);
    return e;
  }
  if (!beta.empty()) {
    // f^- g^+: cancels to P_{s(f)} when f == g, zero otherwise.
    if (beta.back() != x.edge) return SemigroupElement::zero();
    beta.pop_back();
    return e;
  }
  if (r != e.alpha_.base) return SemigroupElement::zero();
  e.alpha_.edges.insert(e.alpha_.edges.begin(), x.edge);
  e.alpha_.base = s;
  e.beta_.base = s;
  return e;
}

SemigroupElement multiply(const Graph& g, const SemigroupElement& a,
                          const SemigroupElement& b) {
  if (a.is_zero() || b.is_zero()) return SemigroupElement::zero();
  if (b.is_unit()) return a;
  if (a.is_unit()) return b;
  if (b.is_idempotent()) {
    // a P_w = a iff a ends at w.
    return a.beta().end(g) == b.vertex() ? a : SemigroupElement::zero();
  }
  SemigroupElement out = a;
  for (const auto& x : b.letters()) {
    out = append_letter(g, std::move(out), x);
    if (out.is_zero()) break;
  }
  return out;
}

SemigroupElement reduce_word(const Graph& g, std::span<const Letter> word) {
  SemigroupElement e = SemigroupElement::unit();
  for (const auto& x : word) {
    e = append_letter(g, std::move(e), x);
    if (e.is_zero()) break;
  }
  return e;
}

bool is_admissible(const Graph& g, std::span<const Letter> word) {
  return !reduce_word(g, word).is_zero();
}

namespace {

bool is_closed(const Graph& g, const Path& p) {
  return !p.empty() && g.range(p.edges.back()) == g.source(p.edges.front());
}

// Is `tail` a terminal segment of `whole`?
bool ends_with(const std::vector<EdgeId>& whole,
               const std::vector<EdgeId>& tail) {
  return tail.size() <= whole.size() &&
         std::equal(tail.begin(), tail.end(), whole.end() - tail.size());
}

bool product_is_periodic(const Graph& g, const SemigroupElement& e) {
  if (!e.is_nonzero()) return false;
  const Path& alpha = e.alpha();
  const Path& beta = e.beta();
  if (alpha.empty() && beta.empty()) return true;
  if (alpha.empty()) return is_closed(g, beta);
  if (beta.empty()) return is_closed(g, alpha);
  return alpha.size() <= beta.size() ? ends_with(beta.edges, alpha.edges)
                                     : ends_with(alpha.edges, beta.edges);
}

}  // namespace

bool periodic_orbit_check(const Graph& g, std::span<const Letter> word) {
  if (word.empty()) {
    throw Error(ErrorKind::DomainError, "periodic check of the empty word");
  }
  return product_is_periodic(g, reduce_word(g, word));
}

bool periodic_check_fallback(const Graph& g, std::span<const Letter> word,
                             int window_factor) {
  if (word.empty() || window_factor < 2) {
    throw Error(ErrorKind::DomainError,
                "fallback check needs a nonempty word and window_factor >= 2");
  }
  const std::size_t n = word.size();
  const std::size_t window = n * static_cast<std::size_t>(window_factor);
  for (std::size_t start = 0; start < n; ++start) {
    SemigroupElement e = SemigroupElement::unit();
    for (std::size_t len = 1; len <= window; ++len) {
      e = append_letter(g, std::move(e), word[(start + len - 1) % n]);
      if (e.is_zero()) return false;
    }
  }
  return true;
}

bool forbidden_in_subsystem(const Graph& g, Letter first, Letter second,
                            Vertex v) {
  if (first.sign == Sign::Minus && second.sign == Sign::Plus) {
    return first.edge == second.edge && g.range(first.edge) != v;
  }
  if (first.sign == Sign::Plus && second.sign == Sign::Minus) {
    return g.source(first.edge) != v;
  }
  return false;
}

namespace {

// Depth-first search over admissible words with Zero-pruning.
class WordSearch {
 public:
  WordSearch(const Graph& g, std::size_t length, const EnumerationOptions& opts)
      : g_(g), letters_(alphabet(g)), length_(length), opts_(opts) {
    if (opts.restriction) g.check_vertex(*opts.restriction);
  }

  // `keep(state, depth)` prunes a prefix; `leaf(word, state)` accepts a word.
  template <class Keep, class Leaf>
  std::uint64_t run(Keep keep, Leaf leaf) {
    const unsigned workers =
        std::max(1u, std::min<unsigned>(opts_.threads,
                                        static_cast<unsigned>(letters_.size())));
    if (workers == 1 || letters_.empty()) {
      return run_slice(0, 1, keep, leaf);
    }
    std::vector<std::future<std::uint64_t>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      parts.push_back(std::async(std::launch::async, [&, w] {
        return run_slice(w, workers, keep, leaf);
      }));
    }
    std::uint64_t total = 0;
    for (auto& p : parts) total += p.get();
    return total;
  }

 private:
  template <class Keep, class Leaf>
  std::uint64_t run_slice(unsigned offset, unsigned stride, Keep& keep,
                          Leaf& leaf) {
    Word word;
    word.reserve(length_);
    std::uint64_t count = 0;
    for (std::size_t i = offset; i < letters_.size(); i += stride) {
      descend(SemigroupElement::unit(), letters_[i], word, count, keep, leaf);
    }
    return count;
  }

  template <class Keep, class Leaf>
  void descend(const SemigroupElement& state, Letter x, Word& word,
               std::uint64_t& count, Keep& keep, Leaf& leaf) {
    if (spent_.fetch_add(1, std::memory_order_relaxed) >= opts_.budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeded " + std::to_string(opts_.budget) +
                      " appended letters");
    }
    if (opts_.restriction && !word.empty() &&
        forbidden_in_subsystem(g_, word.back(), x, *opts_.restriction)) {
      return;
    }
    SemigroupElement next = append_letter(g_, state, x);
    if (next.is_zero()) return;
    word.push_back(x);
    if (keep(next, word.size())) {
      if (word.size() == length_) {
        if (leaf(word, next)) ++count;
      } else {
        for (const auto& y : letters_) {
          descend(next, y, word, count, keep, leaf);
        }
      }
    }
    word.pop_back();
  }

  const Graph& g_;
  Word letters_;
  std::size_t length_;
  EnumerationOptions opts_;
  std::atomic<std::uint64_t> spent_{0};
};

void check_length(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "word length must be >= 1");
}

}  // namespace

std::uint64_t count_words(const Graph& g, std::size_t n,
                          const EnumerationOptions& opts) {
  check_length(n);
  WordSearch search(g, n, opts);
  return search.run([](const SemigroupElement&, std::size_t) { return true; },
                    [](const Word&, const SemigroupElement&) { return true; });
}

std::uint64_t count_periodic(const Graph& g, std::size_t n,
                             const EnumerationOptions& opts) {
  check_length(n);
  WordSearch search(g, n, opts);
  return search.run(
      [](const SemigroupElement&, std::size_t) { return true; },
      [&](const Word& w, const SemigroupElement& e) {
        if (opts.restriction &&
            forbidden_in_subsystem(g, w.back(), w.front(), *opts.restriction)) {
          return false;
        }
        return product_is_periodic(g, e);
      });
}

std::uint64_t count_code_words(const Graph& g, Vertex v, std::size_t n,
                               CodeKind kind, const EnumerationOptions& opts) {
  check_length(n);
  g.check_vertex(v);
  EnumerationOptions search_opts = opts;
  search_opts.restriction =
      kind == CodeKind::ElementaryDv ? std::optional<Vertex>(v) : std::nullopt;
  WordSearch search(g, n, search_opts);
  return search.run(
      [&](const SemigroupElement& e, std::size_t depth) {
        // Only alpha-free states at v can still reduce to P_v, the pending
        // minus path must fit in the remaining letters, and P_v may not occur
        // on a proper prefix.
        if (e.vertex() != v || !e.alpha().empty()) return false;
        if (e.beta().size() > n - depth) return false;
        return depth == n || !e.is_idempotent();
      },
      [](const Word&, const SemigroupElement& e) { return e.is_idempotent(); });
}

}  // namespace dyckzeta
