#include "cli.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/formal_uq.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/random_ops.hpp"
#include "qweyl/realization.hpp"
#include "qweyl/root_vectors.hpp"
#include "qweyl/serialization.hpp"
#include "qweyl/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qweyl::cli {

namespace {

struct Config {
    int n = 2;
    int degree = 6;
    std::string format = "text";
    std::string out;
    unsigned threads = 0;
    std::string word;
};

void add_common(CLI::App& cmd, Config& cfg) {
    cmd.add_option("--n", cfg.n, "number of variables; the quantum group is U_q(sl_{n+1})");
    cmd.add_option("--degree", cfg.degree, "check all x^(beta) with |beta| <= degree");
    cmd.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd.add_option("--out", cfg.out, "also write the output to this file");
    cmd.add_option("--threads", cfg.threads, "worker threads for monomial sweeps");
}

void validate(const Config& cfg) {
    if (cfg.n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    if (cfg.degree < 0) {
        throw InvalidArgs("degree must be >= 0");
    }
    if (cfg.threads > 0) {
        set_sweep_threads(cfg.threads);
    }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    out << text;
    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (!file) {
            throw InvalidArgs("cannot write " + cfg.out);
        }
        file << text;
    }
}

BraidWord reduced_word(const Config& cfg) {
    BraidWord w = cfg.word.empty() ? default_reduced_word(cfg.n) : parse_braid_word(cfg.word, cfg.n);
    validate_reduced_word(w, cfg.n);
    return w;
}

// Suites needing two or more variables are reported as skipped under "all".
struct Suite {
    int min_n;
    std::function<std::vector<VerificationReport>(const Config&)> run;
};

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table{
        {"weyl", {1, [](const Config& c) {
                      return std::vector{verify_weyl_relations(c.n, c.degree)};
                  }}},
        {"serre", {1, [](const Config& c) { return std::vector{verify_serre(c.n, c.degree)}; }}},
        {"oracle", {1, [](const Config& c) {
                        return std::vector{oracle_check(c.n, c.degree),
                                           root_oracle_check(c.n, c.degree)};
                    }}},
        {"gl", {2, [](const Config& c) { return std::vector{verify_gl(c.n, c.degree)}; }}},
        {"prop32", {2, [](const Config& c) { return std::vector{prop32_check(c.n, c.degree)}; }}},
        {"braid",
         {2, [](const Config& c) { return std::vector{braid_relation_check(c.n, c.degree)}; }}},
        {"lemma34", {2, [](const Config& c) { return std::vector{lemma34_check(c.n, c.degree)}; }}},
        {"theorem33", {1, [](const Config& c) {
                           return std::vector{theorem33_check(c.n, c.degree, reduced_word(c))};
                       }}},
        {"lemma21", {1, [](const Config& c) { return std::vector{lemma21_check(c.n, c.degree)}; }}},
        {"classical", {1, [](const Config& c) {
                           return std::vector{classical_degeneration_check(c.n, c.degree)};
                       }}},
    };
    return table;
}

const std::vector<std::string> all_order{"weyl",  "serre",   "oracle",    "gl",      "prop32",
                                         "braid", "lemma34", "theorem33", "lemma21", "classical"};

int cmd_verify(const std::string& suite, const Config& cfg, std::ostream& out) {
    validate(cfg);
    std::vector<VerificationReport> reports;
    const bool all = suite == "all";
    for (const auto& name : all ? all_order : std::vector<std::string>{suite}) {
        const Suite& s = suites().at(name);
        if (cfg.n < s.min_n) {
            if (!all) {
                throw InvalidArgs("suite " + name + " needs n >= " + std::to_string(s.min_n));
            }
            VerificationReport skipped;
            skipped.check = name;
            skipped.n = cfg.n;
            skipped.rank_sl = cfg.n + 1;
            skipped.degree = cfg.degree;
            skipped.skip(name, "needs n >= " + std::to_string(s.min_n));
            reports.push_back(std::move(skipped));
            continue;
        }
        for (auto& r : s.run(cfg)) {
            reports.push_back(std::move(r));
        }
    }

    std::size_t failed = 0;
    for (const auto& r : reports) {
        failed += r.failed();
    }
    std::string text;
    if (cfg.format == "json") {
        Json j;
        if (reports.size() == 1) {
            j = to_json(reports.front());
        } else {
            Json list = Json::array();
            for (const auto& r : reports) {
                list.push_back(to_json(r));
            }
            j = Json{{"suite", suite},     {"n", cfg.n},    {"rank_sl", cfg.n + 1},
                     {"degree", cfg.degree}, {"reports", list}, {"failed", failed}};
        }
        text = j.dump(2) + "\n";
    } else {
        for (const auto& r : reports) {
            text += to_text(r);
        }
        text += failed == 0 ? "result: pass\n"
                            : "result: FAIL (" + std::to_string(failed) + " relations)\n";
    }
    emit(cfg, text, out);
    return failed == 0 ? Ok : VerificationFailed;
}

int cmd_act(const std::string& op_src, const std::string& on_src, const Config& cfg,
            std::ostream& out) {
    validate(cfg);
    const Operator op = parse_operator(op_src, cfg.n);
    const Element on = parse_element(on_src, cfg.n);
    const Element result = apply(op, on);
    if (cfg.format == "json") {
        const Json j{{"n", cfg.n},
                     {"op", to_json(op)},
                     {"on", to_json(on)},
                     {"result", to_json(result)},
                     {"expression", to_expression(result)}};
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        emit(cfg, to_expression(result) + "\n", out);
    }
    return Ok;
}

struct NormalizeOutcome {
    Operator normal;
    EqualityResult preserved;
    bool idempotent = true;
    bool canonical = true;

    bool ok() const { return preserved.equal && idempotent && canonical; }
};

NormalizeOutcome normalize_and_check(const Operator& op, int degree, bool check) {
    NormalizeOutcome o{normalize(op), {}, true, true};
    if (check) {
        o.preserved = op_eq_up_to_degree(op, o.normal, degree);
        o.idempotent = normalize(o.normal) == o.normal;
        o.canonical = std::all_of(o.normal.terms().begin(), o.normal.terms().end(),
                                  [](const auto& t) { return is_canonical(t.first); });
    }
    return o;
}

std::string check_text(const NormalizeOutcome& o, int degree) {
    if (o.ok()) {
        return "check: pass (|beta| <= " + std::to_string(degree) + ", idempotent)";
    }
    std::string s = "check: FAIL";
    if (!o.preserved.equal) {
        const auto& ce = *o.preserved.counterexample;
        s += " action differs at x^" + to_string(ce.beta) + ": " + to_expression(ce.lhs) +
             " vs " + to_expression(ce.rhs);
    }
    if (!o.idempotent) {
        s += " not idempotent";
    }
    if (!o.canonical) {
        s += " non-canonical word";
    }
    return s;
}

int cmd_normalize(const std::string& op_src, int random_count, std::uint64_t seed,
                  int max_length, bool check, const Config& cfg, std::ostream& out) {
    validate(cfg);
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        int failures = 0;
        Json cases = Json::array();
        std::string lines;
        for (int k = 0; k < random_count; ++k) {
            const Operator op = random_operator(rng, cfg.n, max_length);
            const NormalizeOutcome o = normalize_and_check(op, cfg.degree, true);
            if (!o.ok()) {
                ++failures;
                lines += "  " + to_expression(op) + "  " + check_text(o, cfg.degree) + "\n";
            }
            cases.push_back(Json{{"op", to_expression(op)},
                                 {"normal", to_expression(o.normal)},
                                 {"status", o.ok() ? "pass" : "fail"}});
        }
        if (cfg.format == "json") {
            const Json j{{"n", cfg.n},          {"degree", cfg.degree}, {"seed", seed},
                         {"count", random_count}, {"cases", cases},     {"failed", failures}};
            emit(cfg, j.dump(2) + "\n", out);
        } else {
            emit(cfg,
                 "random: " + std::to_string(random_count) + " operators, " +
                     std::to_string(failures) + " failures\n" + lines,
                 out);
        }
        return failures == 0 ? Ok : VerificationFailed;
    }
    if (op_src.empty()) {
        throw InvalidArgs("normalize needs --op or --random");
    }
    const Operator op = parse_operator(op_src, cfg.n);
    const NormalizeOutcome o = normalize_and_check(op, cfg.degree, check);
    if (cfg.format == "json") {
        Json j{{"n", cfg.n},
               {"input", to_json(op)},
               {"normal", to_json(o.normal)},
               {"expression", to_expression(o.normal)}};
        if (check) {
            j["check"] = o.ok() ? "pass" : "fail";
        }
        emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::string text = to_expression(o.normal) + "\n";
        if (check) {
            text += check_text(o, cfg.degree) + "\n";
        }
        emit(cfg, text, out);
    }
    return o.ok() ? Ok : VerificationFailed;
}

int cmd_rootvec(int i, int j, const Config& cfg, std::ostream& out) {
    validate(cfg);
    if (i < 1 || j < 1 || i > cfg.n + 1 || j > cfg.n + 1 || i == j) {
        throw InvalidIndex("need 1 <= i != j <= n+1");
    }
    const BraidWord w = reduced_word(cfg);
    const int a = std::min(i, j);
    const int b = std::max(i, j);
    int p = 0;
    for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
        if (prefix_root(w, k) == std::pair{a, b}) {
            p = k;
            break;
        }
    }
    const RootSign sign = i < j ? RootSign::Positive : RootSign::Negative;
    const Operator op = root_op(i, j, cfg.n);
    const Operator normal = normalize(op);
    const FormalUq built = braid_root_vector(p, w, sign, cfg.n);
    const Operator built_op = evaluate(built, build_realization(cfg.n));
    const EqualityResult agree = op_eq_up_to_degree(op, built_op, cfg.degree);

    std::string braid_text;
    for (int k = 1; k < p; ++k) {
        braid_text += "T" + std::to_string(w[static_cast<std::size_t>(k - 1)]);
    }
    braid_text += std::string(braid_text.empty() ? "" : "(") + (i < j ? "E" : "F") +
                  std::to_string(w[static_cast<std::size_t>(p - 1)]) +
                  (braid_text.empty() ? "" : ")");

    const int table_degree = std::min(cfg.degree, 3);
    const auto table = monomials_up_to(static_cast<std::size_t>(cfg.n), table_degree);

    if (cfg.format == "json") {
        Json rows = Json::array();
        for (const auto& beta : table) {
            rows.push_back(Json{{"beta", to_json(beta)},
                                {"root_op", to_json(apply(op, beta))},
                                {"braid", to_json(apply(built_op, beta))}});
        }
        Json jout{{"n", cfg.n},
                  {"i", i},
                  {"j", j},
                  {"word", to_json(w)},
                  {"prefix", p},
                  {"root_op", to_json(op)},
                  {"root_op_expression", to_expression(op)},
                  {"normal_form", to_expression(normal)},
                  {"braid", braid_text},
                  {"braid_vector", to_json(built)},
                  {"braid_expression", to_expression(built)},
                  {"table_degree", table_degree},
                  {"table", rows},
                  {"degree", cfg.degree},
                  {"agreement", agree.equal ? "pass" : "fail"}};
        if (agree.counterexample) {
            jout["counterexample"] = Json{{"beta", to_json(agree.counterexample->beta)},
                                          {"lhs", to_json(agree.counterexample->lhs)},
                                          {"rhs", to_json(agree.counterexample->rhs)}};
        }
        emit(cfg, jout.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "root vector e_{" << i << "," << j << "} on A_q(" << cfg.n << ")\n"
           << "word:    " << to_expression(op) << '\n'
           << "normal:  " << to_expression(normal) << '\n'
           << "braid:   " << braid_text << " = " << to_expression(built) << '\n'
           << "action on |beta| <= " << table_degree << " (root_op | braid):\n";
        for (const auto& beta : table) {
            os << "  x^" << to_string(beta) << "  ->  " << to_expression(apply(op, beta))
               << "  |  " << to_expression(apply(built_op, beta)) << '\n';
        }
        os << "agreement on |beta| <= " << cfg.degree << ": " << (agree.equal ? "pass" : "FAIL");
        if (agree.counterexample) {
            os << " at x^" << to_string(agree.counterexample->beta);
        }
        os << '\n';
        emit(cfg, os.str(), out);
    }
    return agree.equal ? Ok : VerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum Weyl algebra realization of U_q(sl_{n+1}): verification and evaluation",
                 "qweyl"};
    app.require_subcommand(1);
    Config cfg;

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suite_names{"all"};
    for (const auto& [name, s] : suites()) {
        suite_names.push_back(name);
    }
    verify->add_option("suite", suite, "suite to run")->required()->check(
        CLI::IsMember(suite_names));
    add_common(*verify, cfg);
    verify->add_option("--word", cfg.word, "reduced word for theorem33, e.g. \"1,2,1\"");

    std::string op_src;
    std::string on_src;
    auto* act = app.add_subcommand("act", "apply an operator to an element");
    add_common(*act, cfg);
    act->add_option("--op", op_src, "operator expression")->required();
    act->add_option("--on", on_src, "element expression")->required();

    bool check = false;
    int random_count = 0;
    std::uint64_t seed = 1;
    int max_length = 5;
    auto* norm = app.add_subcommand("normalize", "rewrite an operator into normal form");
    add_common(*norm, cfg);
    norm->add_option("--op", op_src, "operator expression");
    norm->add_flag("--check", check, "re-verify action equality up to --degree");
    norm->add_option("--random", random_count, "check this many random operators instead");
    norm->add_option("--seed", seed, "seed for --random");
    norm->add_option("--length", max_length, "maximum word length for --random");

    int i = 0;
    int j = 0;
    auto* rootvec = app.add_subcommand("rootvec", "compare a root vector with its braid form");
    add_common(*rootvec, cfg);
    rootvec->add_option("--i", i, "first index")->required();
    rootvec->add_option("--j", j, "second index")->required();
    rootvec->add_option("--word", cfg.word, "reduced word, e.g. \"1,2,1\"");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(suite, cfg, out);
        }
        if (act->parsed()) {
            return cmd_act(op_src, on_src, cfg, out);
        }
        if (norm->parsed()) {
            return cmd_normalize(op_src, random_count, seed, max_length, check, cfg, out);
        }
        if (rootvec->parsed()) {
            return cmd_rootvec(i, j, cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    return UsageError;
}

} // namespace qweyl::cli
