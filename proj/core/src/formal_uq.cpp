#include "qweyl/formal_uq.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/root_vectors.hpp"

#include <algorithm>
#include <numeric>

namespace qweyl {

namespace {

void validate(const UqSymbol& s, std::size_t n) {
    if (s.kind == UqKind::K) {
        if (s.v.rank() != n) {
            throw RankMismatch("K weight " + to_string(s.v) + " in rank " + std::to_string(n));
        }
        return;
    }
    if (s.index < 1 || static_cast<std::size_t>(s.index) > n) {
        throw InvalidIndex("U_q generator index " + std::to_string(s.index) + " outside 1.." +
                           std::to_string(n));
    }
}

UqWord merge_k(UqWord w) {
    UqWord out;
    out.reserve(w.size());
    for (auto& s : w) {
        if (s.kind == UqKind::K && !out.empty() && out.back().kind == UqKind::K) {
            out.back().v += s.v;
        } else {
            out.push_back(std::move(s));
        }
    }
    std::erase_if(out, [](const UqSymbol& s) { return s.kind == UqKind::K && s.v.is_zero(); });
    return out;
}

} // namespace

FormalUq FormalUq::scalar(std::size_t n, const LaurentPoly& c) {
    FormalUq x(n);
    x.add_term({}, c);
    return x;
}

FormalUq FormalUq::word(std::size_t n, UqWord w, const LaurentPoly& c) {
    FormalUq x(n);
    x.add_term(std::move(w), c);
    return x;
}

void FormalUq::add_term(UqWord w, const LaurentPoly& c) {
    if (c.is_zero()) {
        return;
    }
    for (const auto& s : w) {
        validate(s, n_);
    }
    w = merge_k(std::move(w));
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

FormalUq& FormalUq::operator+=(const FormalUq& rhs) {
    if (rhs.n_ != n_) {
        throw RankMismatch(n_, rhs.n_);
    }
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, c);
    }
    return *this;
}

FormalUq& FormalUq::operator-=(const FormalUq& rhs) {
    if (rhs.n_ != n_) {
        throw RankMismatch(n_, rhs.n_);
    }
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, -c);
    }
    return *this;
}

FormalUq& FormalUq::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

FormalUq operator*(const FormalUq& a, const FormalUq& b) {
    if (a.n_ != b.n_) {
        throw RankMismatch(a.n_, b.n_);
    }
    FormalUq out(a.n_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            UqWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(std::move(w), ca * cb);
        }
    }
    return out;
}

namespace {

FormalUq t_image(int i, const UqSymbol& s, std::size_t n) {
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_inv = LaurentPoly::monomial(-1);
    switch (s.kind) {
    case UqKind::K: {
        const CartanMatrix a(static_cast<int>(n));
        int pairing = 0;
        for (int j = 1; j <= static_cast<int>(n); ++j) {
            pairing += a(i, j) * s.v[static_cast<std::size_t>(j - 1)];
        }
        return FormalUq::k(n, s.v - pairing * epsilon(n, i));
    }
    case UqKind::E: {
        const int j = s.index;
        if (j == i) {
            return FormalUq::word(n, {UqSymbol::f(i), UqSymbol::k(-epsilon(n, i))}, -1);
        }
        if (std::abs(i - j) == 1) {
            return FormalUq::word(n, {UqSymbol::e(i), UqSymbol::e(j)}) -
                   FormalUq::word(n, {UqSymbol::e(j), UqSymbol::e(i)}, q);
        }
        return FormalUq::e(n, j);
    }
    case UqKind::F: {
        const int j = s.index;
        if (j == i) {
            return FormalUq::word(n, {UqSymbol::k(epsilon(n, i)), UqSymbol::e(i)}, -1);
        }
        if (std::abs(i - j) == 1) {
            return FormalUq::word(n, {UqSymbol::f(j), UqSymbol::f(i)}) -
                   FormalUq::word(n, {UqSymbol::f(i), UqSymbol::f(j)}, q_inv);
        }
        return FormalUq::f(n, j);
    }
    }
    throw InvalidArgs("unknown U_q symbol");
}

} // namespace

FormalUq lusztig_T(int i, const FormalUq& x) {
    const std::size_t n = x.n();
    if (i < 1 || static_cast<std::size_t>(i) > n) {
        throw InvalidIndex("braid symmetry index " + std::to_string(i) + " outside 1.." +
                           std::to_string(n));
    }
    FormalUq out(n);
    for (const auto& [w, c] : x.terms()) {
        FormalUq product = FormalUq::scalar(n, c);
        for (const auto& s : w) {
            product = product * t_image(i, s, n);
        }
        out += product;
    }
    return out;
}

Operator evaluate(const FormalUq& x, const Realization& r) {
    if (x.n() != static_cast<std::size_t>(r.n)) {
        throw RankMismatch(x.n(), static_cast<std::size_t>(r.n));
    }
    const std::size_t n = x.n();
    Operator out(n);
    for (const auto& [w, c] : x.terms()) {
        Operator product = Operator::scalar(n, c);
        for (const auto& s : w) {
            switch (s.kind) {
            case UqKind::E:
                product = product * r.generator(Chevalley::E, s.index);
                break;
            case UqKind::F:
                product = product * r.generator(Chevalley::F, s.index);
                break;
            case UqKind::K:
                for (int i = 1; i <= static_cast<int>(n); ++i) {
                    const int e = s.v[static_cast<std::size_t>(i - 1)];
                    const Operator& k = r.generator(e > 0 ? Chevalley::K : Chevalley::KInv, i);
                    for (int t = 0; t < std::abs(e); ++t) {
                        product = product * k;
                    }
                }
                break;
            }
        }
        out += product;
    }
    return out;
}

namespace {

std::string symbol_text(const UqSymbol& s) {
    switch (s.kind) {
    case UqKind::E:
        return "E" + std::to_string(s.index);
    case UqKind::F:
        return "F" + std::to_string(s.index);
    case UqKind::K:
        return "K" + to_string(s.v);
    }
    return {};
}

} // namespace

std::string to_expression(const FormalUq& x) {
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [w, c] : x.terms()) {
        std::string term;
        if (w.empty()) {
            term = c.is_monomial() ? to_string(c) : "(" + to_string(c) + ")";
        } else {
            term = coefficient_prefix(c);
            for (std::size_t k = 0; k < w.size(); ++k) {
                term += (k ? " " : "") + symbol_text(w[k]);
            }
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FormalUq& x) { return os << to_expression(x); }

BraidWord default_reduced_word(int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    BraidWord w;
    for (int k = 1; k <= n; ++k) {
        for (int i = k; i >= 1; --i) {
            w.push_back(i);
        }
    }
    return w;
}

void validate_reduced_word(const BraidWord& w, int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    for (int i : w) {
        if (i < 1 || i > n) {
            throw InvalidIndex("reflection index " + std::to_string(i) + " outside 1.." +
                               std::to_string(n));
        }
    }
    const std::size_t length = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
    if (w.size() != length) {
        throw InvalidArgs("reduced word for the longest element must have length " +
                          std::to_string(length));
    }
    // With the right length, the word is reduced for w0 iff it reverses 1..n+1.
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i : w) {
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    }
    if (!std::is_sorted(perm.rbegin(), perm.rend())) {
        throw InvalidArgs("word is not a reduced word for the longest element");
    }
}

std::pair<int, int> prefix_root(const BraidWord& w, int p) {
    if (p < 1 || static_cast<std::size_t>(p) > w.size()) {
        throw InvalidIndex("prefix length " + std::to_string(p) + " outside 1.." +
                           std::to_string(w.size()));
    }
    int a = w[static_cast<std::size_t>(p - 1)];
    int b = a + 1;
    auto reflect = [](int k, int label) {
        return label == k ? k + 1 : label == k + 1 ? k : label;
    };
    for (int t = p - 1; t >= 1; --t) {
        const int k = w[static_cast<std::size_t>(t - 1)];
        a = reflect(k, a);
        b = reflect(k, b);
    }
    if (a > b) {
        throw InvalidArgs("prefix does not give a positive root; word is not reduced");
    }
    return {a, b};
}

FormalUq braid_root_vector(int p, const BraidWord& w, RootSign sign, int n) {
    if (p < 1 || static_cast<std::size_t>(p) > w.size()) {
        throw InvalidIndex("prefix length " + std::to_string(p) + " outside 1.." +
                           std::to_string(w.size()));
    }
    const auto rank = static_cast<std::size_t>(n);
    const int last = w[static_cast<std::size_t>(p - 1)];
    FormalUq x = sign == RootSign::Positive ? FormalUq::e(rank, last) : FormalUq::f(rank, last);
    for (int t = p - 1; t >= 1; --t) {
        x = lusztig_T(w[static_cast<std::size_t>(t - 1)], x);
    }
    return x;
}

namespace {

std::string ij(int i, int j) { return ":i=" + std::to_string(i) + ",j=" + std::to_string(j); }

class ActionChecker {
public:
    ActionChecker(int n, int degree, VerificationReport& report)
        : realization_(build_realization(n)), report_(report),
          monomials_(monomials_up_to(static_cast<std::size_t>(n), degree)) {}

    const Realization& realization() const { return realization_; }

    std::optional<Counterexample> compare(const Operator& lhs, const Operator& rhs) const {
        return sweep_equal(
            monomials_, [&](const MultiIndex& b) { return apply(lhs, b); },
            [&](const MultiIndex& b) { return apply(rhs, b); });
    }

    void equal(std::string id, const Operator& lhs, const Operator& rhs) {
        report_.add(std::move(id), compare(lhs, rhs));
    }
    void equal(std::string id, const FormalUq& lhs, const Operator& rhs) {
        equal(std::move(id), evaluate(lhs, realization_), rhs);
    }
    void equal(std::string id, const FormalUq& lhs, const FormalUq& rhs) {
        equal(std::move(id), evaluate(lhs, realization_), evaluate(rhs, realization_));
    }

private:
    Realization realization_;
    VerificationReport& report_;
    std::vector<MultiIndex> monomials_;
};

std::string ratio_note(const Counterexample& ce) {
    std::optional<LaurentPoly> ratio;
    for (const auto& [beta, c] : ce.lhs.terms()) {
        const LaurentPoly d = ce.rhs.coeff(beta);
        if (d.is_zero()) {
            return "no common ratio: rhs vanishes at " + to_string(beta);
        }
        LaurentPoly r;
        try {
            r = exact_div(c, d);
        } catch (const NotDivisible&) {
            return "no Laurent ratio at " + to_string(beta);
        }
        if (ratio && *ratio != r) {
            return "ratio varies across terms";
        }
        ratio = r;
    }
    for (const auto& [beta, d] : ce.rhs.terms()) {
        if (ce.lhs.coeff(beta).is_zero()) {
            return "no common ratio: lhs vanishes at " + to_string(beta);
        }
    }
    if (!ratio) {
        return "both sides vanish";
    }
    return "lhs/rhs = " + to_string(*ratio) + " on " + to_string(ce.beta);
}

} // namespace

VerificationReport braid_relation_check(int n, int degree) {
    if (n < 2) {
        throw InvalidArgs("braid_relation_check needs n >= 2");
    }
    const auto rank = static_cast<std::size_t>(n);
    VerificationReport report;
    report.check = "braid";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    ActionChecker c(n, degree, report);

    std::vector<std::pair<std::string, FormalUq>> generators;
    for (int k = 1; k <= n; ++k) {
        generators.emplace_back("E" + std::to_string(k), FormalUq::e(rank, k));
        generators.emplace_back("F" + std::to_string(k), FormalUq::f(rank, k));
        generators.emplace_back("K" + std::to_string(k), FormalUq::k(rank, epsilon(rank, k)));
    }
    for (int i = 1; i < n; ++i) {
        const int j = i + 1;
        for (const auto& [name, g] : generators) {
            const FormalUq iji = lusztig_T(i, lusztig_T(j, lusztig_T(i, g)));
            const FormalUq jij = lusztig_T(j, lusztig_T(i, lusztig_T(j, g)));
            c.equal("braid" + ij(i, j) + ",g=" + name, iji, jij);
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (std::abs(i - j) == 1) {
                c.equal("TiTj" + ij(i, j), lusztig_T(i, lusztig_T(j, FormalUq::e(rank, i))),
                        FormalUq::e(rank, j));
            } else if (std::abs(i - j) > 1) {
                c.equal("Tfar" + ij(i, j), lusztig_T(i, FormalUq::e(rank, j)),
                        FormalUq::e(rank, j));
            }
        }
    }
    return report;
}

VerificationReport lemma34_check(int n, int degree) {
    if (n < 2) {
        throw InvalidArgs("lemma34_check needs n >= 2");
    }
    const auto rank = static_cast<std::size_t>(n);
    VerificationReport report;
    report.check = "lemma34";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    ActionChecker c(n, degree, report);
    const Realization& r = c.realization();
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_inv = LaurentPoly::monomial(-1);

    for (int s = 1; s <= n; ++s) {
        c.equal("Te:s=" + std::to_string(s), lusztig_T(s, FormalUq::e(rank, s)),
                -(r.generator(Chevalley::F, s) * r.generator(Chevalley::KInv, s)));
    }
    for (int s = 1; s + 1 <= n; ++s) {
        const Operator te = evaluate(lusztig_T(s, FormalUq::e(rank, s)), r);
        const Operator tf = evaluate(lusztig_T(s, FormalUq::f(rank, s)), r);
        for (int j = s + 2; j <= n + 1; ++j) {
            const std::string id = ":s=" + std::to_string(s) + ",j=" + std::to_string(j);
            c.equal("L34a" + id, q_bracket(root_op(s, j, n), te, q), root_op(s + 1, j, n));
            c.equal("L34b" + id, q_bracket(tf, root_op(j, s, n), q_inv), root_op(j, s + 1, n));
        }
    }
    return report;
}

VerificationReport theorem33_check(int n, int degree) {
    return theorem33_check(n, degree, default_reduced_word(n));
}

VerificationReport theorem33_check(int n, int degree, const BraidWord& w) {
    validate_reduced_word(w, n);
    VerificationReport report;
    report.check = "theorem33";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    ActionChecker c(n, degree, report);

    auto check = [&](const std::string& id, const FormalUq& built, const Operator& expected) {
        auto failure = c.compare(evaluate(built, c.realization()), expected);
        std::string note;
        if (failure) {
            note = ratio_note(*failure);
        }
        report.add(id, std::move(failure), std::move(note));
    };
    for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
        const auto [a, b] = prefix_root(w, p);
        check("pos" + ij(a, b), braid_root_vector(p, w, RootSign::Positive, n), root_op(a, b, n));
    }
    for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
        const auto [a, b] = prefix_root(w, p);
        check("neg" + ij(b, a), braid_root_vector(p, w, RootSign::Negative, n), root_op(b, a, n));
    }
    return report;
}

} // namespace qweyl
