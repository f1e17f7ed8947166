#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dyckzeta/graph.hpp"

namespace dyckzeta {

enum class Sign : std::uint8_t { Minus, Plus };

/// A symbol e^- or e^+ of the Markov-Dyck alphabet.
struct Letter {
  EdgeId edge = 0;
  Sign sign = Sign::Minus;

  static Letter minus(EdgeId e) { return {e, Sign::Minus}; }
  static Letter plus(EdgeId e) { return {e, Sign::Plus}; }
  Letter flipped() const {
    return {edge, sign == Sign::Minus ? Sign::Plus : Sign::Minus};
  }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// All 2|E| letters in traversal order: edge index, then Minus before Plus.
Word alphabet(const Graph& g);

/// Parses "e3- e0+ ..." (whitespace separated).
Word parse_word(const std::string& text);
std::string format_word(std::span<const Letter> word);

/// e^- <-> e^+ letterwise, with the word reversed.
Word charge_conjugate(std::span<const Letter> word);

/// Normal form of an element of the graph inverse semigroup with an adjoined
/// unit (the empty product).
///
/// A nonzero element is alpha^+ beta^- where alpha and beta are paths leaving
/// the same vertex v: alpha^+ runs alpha backwards with Plus letters and ends
/// at v, beta^- then runs beta forwards with Minus letters. Both paths empty
/// is the idempotent P_v.
///
/// The product f^- g^+ is P_{s(f)} when f = g and zero for every f != g,
/// including the case f != g with s(f) = s(g) (as in the one-vertex Dyck
/// monoid, where e_l^- e_m^+ = 0 for l != m).
class SemigroupElement {
 public:
  enum class Kind : std::uint8_t { Zero, Unit, NonZero };

  static SemigroupElement zero() { return SemigroupElement(Kind::Zero); }
  static SemigroupElement unit() { return SemigroupElement(Kind::Unit); }
  static SemigroupElement idempotent(Vertex v);
  /// alpha^+ beta^-; throws DomainError unless both paths leave the same
  /// vertex and are valid in g.
  static SemigroupElement make(const Graph& g, Path alpha, Path beta);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_unit() const noexcept { return kind_ == Kind::Unit; }
  bool is_nonzero() const noexcept { return kind_ == Kind::NonZero; }
  bool is_idempotent() const noexcept {
    return is_nonzero() && alpha_.empty() && beta_.empty();
  }
  Vertex vertex() const noexcept { return alpha_.base; }
  const Path& alpha() const noexcept { return alpha_; }
  const Path& beta() const noexcept { return beta_; }

  /// The reduced word alpha^+ beta^- (empty for P_v, unit and zero).
  Word letters() const;
  std::string to_string() const;

  friend bool operator==(const SemigroupElement&,
                         const SemigroupElement&) = default;

 private:
  friend SemigroupElement append_letter(const Graph&, SemigroupElement,
                                        Letter);
  explicit SemigroupElement(Kind kind) : kind_(kind) {}

  Kind kind_;
  Path alpha_;
  Path beta_;
};

/// Right multiplication by a single letter; the reduction kernel.
SemigroupElement append_letter(const Graph& g, SemigroupElement e, Letter x);
SemigroupElement multiply(const Graph& g, const SemigroupElement& a,
                          const SemigroupElement& b);
SemigroupElement reduce_word(const Graph& g, std::span<const Letter> word);
bool is_admissible(const Graph& g, std::span<const Letter> word);

/// Whether the periodic sequence w w w ... lies in the Markov-Dyck shift.
///
/// w^infinity is in the shift iff every power w^j has a nonzero product
/// (every factor of w^infinity is a factor of some w^j, and factors of
/// admissible words are admissible). With E the product of w: P_v powers to
/// itself; a pure path survives powering iff it is closed; a mixed
/// alpha^+ beta^- survives iff the shorter path is a terminal segment of the
/// longer, which is what makes beta^- alpha^+ cancel down to a pure path
/// again.
bool periodic_orbit_check(const Graph& g, std::span<const Letter> word);

/// Direct check: every factor of w^infinity of length <= |w| * window_factor
/// has a nonzero product.
bool periodic_check_fallback(const Graph& g, std::span<const Letter> word,
                             int window_factor);

/// Two-letter blocks excluded from the subsystem X_v: e^- e^+ with r(e) != v,
/// and f^+ g^- with s(f) != v.
bool forbidden_in_subsystem(const Graph& g, Letter first, Letter second,
                            Vertex v);

struct EnumerationOptions {
  /// Restrict to the subsystem X_v.
  std::optional<Vertex> restriction;
  /// Cap on the number of letters appended during the search.
  std::uint64_t budget = 500'000'000;
  /// Top-level letters are split across this many workers.
  unsigned threads = 1;
};

/// card L_n: admissible words of length n.
std::uint64_t count_words(const Graph& g, std::size_t n,
                          const EnumerationOptions& opts = {});
/// Pi_n: words w of length n with w^infinity in the shift (one per point of
/// period n).
std::uint64_t count_periodic(const Graph& g, std::size_t n,
                             const EnumerationOptions& opts = {});

enum class CodeKind {
  MDCode,        ///< product P_v, no proper prefix with product P_v
  ElementaryDv,  ///< the same, restricted to X_v-admissible words
};

std::uint64_t count_code_words(const Graph& g, Vertex v, std::size_t n,
                               CodeKind kind,
                               const EnumerationOptions& opts = {});

}  // namespace dyckzeta
