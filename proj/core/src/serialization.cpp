#include "qweyl/serialization.hpp"

#include "qweyl/errors.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace qweyl {

namespace {

Json coefficient_json(const BigInt& c) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

BigInt coefficient_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw InvalidArgs("bad coefficient string " + j.dump());
        }
    }
    throw InvalidArgs("coefficient must be an integer or a decimal string");
}

int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InvalidArgs(std::string(what) + " must be an integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw InvalidArgs(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgs(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::size_t rank_from_json(const Json& j) {
    const int n = int_from_json(field(j, "n"), "n");
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    return static_cast<std::size_t>(n);
}

const Json& terms_array(const Json& j) {
    const Json& t = field(j, "terms");
    if (!t.is_array()) {
        throw InvalidArgs("'terms' must be an array");
    }
    return t;
}

GenSymbol gen_from_json(const Json& j) {
    const Json& k = field(j, "k");
    if (!k.is_string()) {
        throw InvalidArgs("symbol kind must be a string");
    }
    const auto kind = k.get<std::string>();
    if (kind == "X") {
        return GenSymbol::x(int_from_json(field(j, "i"), "i"));
    }
    if (kind == "D") {
        return GenSymbol::d(int_from_json(field(j, "i"), "i"));
    }
    if (kind == "S") {
        return GenSymbol::sigma(int_from_json(field(j, "i"), "i"), int_from_json(field(j, "e"), "e"));
    }
    if (kind == "T") {
        return GenSymbol::theta(multi_index_from_json(field(j, "mu")));
    }
    throw InvalidArgs("unknown operator symbol kind '" + kind + "'");
}

UqSymbol uq_from_json(const Json& j) {
    const Json& k = field(j, "k");
    if (!k.is_string()) {
        throw InvalidArgs("symbol kind must be a string");
    }
    const auto kind = k.get<std::string>();
    if (kind == "E") {
        return UqSymbol::e(int_from_json(field(j, "i"), "i"));
    }
    if (kind == "F") {
        return UqSymbol::f(int_from_json(field(j, "i"), "i"));
    }
    if (kind == "K") {
        return UqSymbol::k(multi_index_from_json(field(j, "v")));
    }
    throw InvalidArgs("unknown U_q symbol kind '" + kind + "'");
}

Json to_json(const UqSymbol& s) {
    switch (s.kind) {
    case UqKind::E:
        return Json{{"k", "E"}, {"i", s.index}};
    case UqKind::F:
        return Json{{"k", "F"}, {"i", s.index}};
    case UqKind::K:
        return Json{{"k", "K"}, {"v", to_json(s.v)}};
    }
    return {};
}

} // namespace

Json to_json(const LaurentPoly& p) {
    Json out = Json::object();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        out[std::to_string(it->first)] = coefficient_json(it->second);
    }
    return out;
}

Json to_json(const MultiIndex& m) { return Json(m.entries()); }

Json to_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& [beta, c] : e.terms()) {
        terms.push_back(Json{{"beta", to_json(beta)}, {"coeff", to_json(c)}});
    }
    return Json{{"n", e.rank()}, {"terms", std::move(terms)}};
}

Json to_json(const GenSymbol& g) {
    switch (g.kind) {
    case GenKind::X:
        return Json{{"k", "X"}, {"i", g.index}};
    case GenKind::D:
        return Json{{"k", "D"}, {"i", g.index}};
    case GenKind::Sigma:
        return Json{{"k", "S"}, {"i", g.index}, {"e", g.exp}};
    case GenKind::Theta:
        return Json{{"k", "T"}, {"mu", to_json(g.mu)}};
    }
    return {};
}

Json to_json(const Operator& op) {
    Json terms = Json::array();
    for (const auto& [w, c] : op.terms()) {
        Json word = Json::array();
        for (const auto& g : w) {
            word.push_back(to_json(g));
        }
        terms.push_back(Json{{"word", std::move(word)}, {"coeff", to_json(c)}});
    }
    return Json{{"n", op.rank()}, {"terms", std::move(terms)}};
}

Json to_json(const FormalUq& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json word = Json::array();
        for (const auto& s : w) {
            word.push_back(to_json(s));
        }
        terms.push_back(Json{{"word", std::move(word)}, {"coeff", to_json(c)}});
    }
    return Json{{"n", x.n()}, {"terms", std::move(terms)}};
}

Json to_json(const BraidWord& w) { return Json(w); }

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return {};
}

Json to_json(const VerificationReport& r) {
    Json relations = Json::array();
    for (const auto& rel : r.relations) {
        Json entry{{"id", rel.id}, {"status", to_string(rel.status)}};
        if (!rel.note.empty()) {
            entry["note"] = rel.note;
        }
        if (rel.counterexample) {
            const auto& ce = *rel.counterexample;
            Json c{{"beta", to_json(ce.beta)},
                   {"lhs", to_json(ce.lhs)},
                   {"rhs", to_json(ce.rhs)}};
            if (!ce.note.empty()) {
                c["note"] = ce.note;
            }
            entry["counterexample"] = std::move(c);
        }
        relations.push_back(std::move(entry));
    }
    return Json{{"check", r.check},       {"n", r.n},
                {"rank_sl", r.rank_sl},   {"degree", r.degree},
                {"relations", relations}, {"failed", r.failed()}};
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InvalidArgs("Laurent polynomial must be a JSON object");
    }
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(key, &used);
        } catch (const std::exception&) {
            throw InvalidArgs("bad exponent key '" + key + "'");
        }
        if (used != key.size() || e < std::numeric_limits<int>::min() ||
            e > std::numeric_limits<int>::max()) {
            throw InvalidArgs("bad exponent key '" + key + "'");
        }
        p += LaurentPoly::monomial(static_cast<int>(e), coefficient_from_json(value));
    }
    return p;
}

MultiIndex multi_index_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InvalidArgs("multi-index must be an integer array");
    }
    std::vector<int> v;
    for (const auto& x : j) {
        v.push_back(int_from_json(x, "multi-index entry"));
    }
    return MultiIndex(std::move(v));
}

Element element_from_json(const Json& j) {
    Element e(rank_from_json(j));
    for (const auto& t : terms_array(j)) {
        e.add_term(multi_index_from_json(field(t, "beta")), laurent_from_json(field(t, "coeff")));
    }
    return e;
}

Operator operator_from_json(const Json& j) {
    Operator op(rank_from_json(j));
    for (const auto& t : terms_array(j)) {
        const Json& word = field(t, "word");
        if (!word.is_array()) {
            throw InvalidArgs("'word' must be an array");
        }
        Word w;
        for (const auto& g : word) {
            w.push_back(gen_from_json(g));
        }
        op.add_term(std::move(w), laurent_from_json(field(t, "coeff")));
    }
    return op;
}

FormalUq formal_uq_from_json(const Json& j) {
    FormalUq x(rank_from_json(j));
    for (const auto& t : terms_array(j)) {
        const Json& word = field(t, "word");
        if (!word.is_array()) {
            throw InvalidArgs("'word' must be an array");
        }
        UqWord w;
        for (const auto& s : word) {
            w.push_back(uq_from_json(s));
        }
        x.add_term(std::move(w), laurent_from_json(field(t, "coeff")));
    }
    return x;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << ": n=" << r.n << " (U_q(sl_" << r.rank_sl << ")), degree <= " << r.degree
       << ", " << r.relations.size() << " relations, " << r.failed() << " failed\n";
    for (const auto& rel : r.relations) {
        os << "  " << to_string(rel.status) << "  " << rel.id;
        if (!rel.note.empty()) {
            os << "  [" << rel.note << "]";
        }
        os << '\n';
        if (rel.counterexample) {
            const auto& ce = *rel.counterexample;
            os << "      at x^" << to_string(ce.beta) << ":\n"
               << "        lhs = " << to_expression(ce.lhs) << '\n'
               << "        rhs = " << to_expression(ce.rhs) << '\n';
            if (!ce.note.empty()) {
                os << "        " << ce.note << '\n';
            }
        }
    }
    return os.str();
}

} // namespace qweyl
