#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/multi_index.hpp"
#include "qweyl/report.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

enum class GenKind { X, D, Sigma, Theta };

/// One generator of W_q(2n):
///   X(i)        left multiplication by x_i = x^(eps_i)
///   D(i)        the q-derivative d_i
///   Sigma(i,e)  sigma_i^e, e = +1 or -1
///   Theta(mu)   Theta(mu) for any integer vector mu
/// Indices are 1-based.
struct GenSymbol {
    GenKind kind = GenKind::X;
    int index = 0;
    int exp = 0;
    MultiIndex mu;

    static GenSymbol x(int i) { return {GenKind::X, i, 0, {}}; }
    static GenSymbol d(int i) { return {GenKind::D, i, 0, {}}; }
    static GenSymbol sigma(int i, int e = 1) { return {GenKind::Sigma, i, e, {}}; }
    static GenSymbol theta(MultiIndex mu) { return {GenKind::Theta, 0, 0, std::move(mu)}; }

    friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
    friend std::strong_ordering operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

/// Generator sequence; acts right-to-left, so the last symbol is applied first.
using Word = std::vector<GenSymbol>;

/// +1 for X, -1 for D, 0 for the diagonal generators.
int degree_shift(const GenSymbol& g);
int degree_shift(const Word& w);

/// Throws InvalidIndex / RankMismatch if g is not a generator of W_q(2n).
void validate(const GenSymbol& g, std::size_t n);

/// A Z[q, q^-1]-combination of words. The empty word is the identity.
class Operator {
public:
    using Terms = std::map<Word, LaurentPoly>;

    explicit Operator(std::size_t rank) : rank_(rank) {}

    static Operator identity(std::size_t rank) { return scalar(rank, 1); }
    static Operator scalar(std::size_t rank, const LaurentPoly& c);
    static Operator word(std::size_t rank, Word w, const LaurentPoly& c = 1);
    static Operator generator(std::size_t rank, GenSymbol g) {
        return word(rank, Word{std::move(g)});
    }

    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(Word w, const LaurentPoly& c);

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(const LaurentPoly& c);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(const LaurentPoly& c, Operator a) { return a *= c; }
    friend Operator operator-(Operator a) { return a *= LaurentPoly(-1); }
    /// Composition: (a * b)(v) = a(b(v)).
    friend Operator operator*(const Operator& a, const Operator& b);

    friend bool operator==(const Operator&, const Operator&) = default;

private:
    std::size_t rank_;
    Terms terms_;
};

Operator compose(const Operator& a, const Operator& b);

/// a b - c b a
Operator q_bracket(const Operator& a, const Operator& b, const LaurentPoly& c);

/// Image of x^(beta) under a single word: either zero or c * x^(beta').
std::optional<std::pair<MultiIndex, LaurentPoly>> apply_word(const Word& w,
                                                             const MultiIndex& beta);

Element apply_generator(const GenSymbol& g, const Element& e);
Element apply(const Operator& op, const Element& e);
Element apply(const Operator& op, const MultiIndex& beta);

/// One oriented rewrite rule acting on a window of `arity` adjacent symbols.
struct RewriteRule {
    using Output = std::vector<std::pair<LaurentPoly, Word>>;

    std::string name;
    std::size_t arity = 2;
    std::function<bool(std::span<const GenSymbol>)> matches;
    std::function<Output(std::span<const GenSymbol>)> rewrite;
};

/// The rule set used by normalize. A word is in normal form iff no rule
/// matches anywhere in it. The standard system orders words as
///   X-block (ascending) D-block (ascending) Sigma-block (ascending,
///   net exponents) and a single trailing Theta,
/// using the "+" branch d_i x_i -> q x_i d_i + sigma_i^-1.
class RewriteSystem {
public:
    static RewriteSystem standard();

    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    const RewriteRule* find(const std::string& name) const;
    /// Replaces the rule with the same name. Throws InvalidArgs if absent.
    void replace(RewriteRule rule);

    /// First (position, rule) that matches in w, if any.
    std::optional<std::pair<std::size_t, const RewriteRule*>> match(const Word& w) const;

private:
    std::vector<RewriteRule> rules_;
};

/// Rewrites op until every word is irreducible. Throws Error if the step
/// budget is exhausted (only possible with a non-terminating rule set).
Operator normalize(const Operator& op, const RewriteSystem& rules = RewriteSystem::standard());

/// Canonical block order as documented on RewriteSystem.
bool is_canonical(const Word& w);

/// numerator / denominator, where the division is carried out exactly on
/// each monomial image (the numerator is normally diagonal).
struct OperatorQuotient {
    Operator numerator;
    LaurentPoly denominator;
};

Element apply(const OperatorQuotient& op, const MultiIndex& beta);

struct EqualityResult {
    bool equal = true;
    std::optional<Counterexample> counterexample;
    explicit operator bool() const noexcept { return equal; }
};

/// Action equality on every x^(beta) with |beta| <= degree. On failure the
/// lexicographically smallest failing beta is reported with both images.
EqualityResult op_eq_up_to_degree(const Operator& a, const Operator& b, int degree);
EqualityResult op_eq_up_to_degree(const Operator& a, const OperatorQuotient& b, int degree);

/// Checks every defining relation of W_q(2n) and every instance of every
/// rule in `rules` as action identities on |beta| <= degree.
VerificationReport verify_weyl_relations(int n, int degree,
                                         const RewriteSystem& rules = RewriteSystem::standard());

/// Parseable text: "x1 d2 s1", "q x1 d1 + s1^-1", "t(1,0)".
std::string to_expression(const GenSymbol& g);
std::string to_expression(const Word& w);
std::string to_expression(const Operator& op);
std::ostream& operator<<(std::ostream& os, const Operator& op);

} // namespace qweyl
