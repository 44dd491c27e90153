#include "qweyl/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace qweyl {

std::size_t VerificationReport::failed() const {
    return static_cast<std::size_t>(std::count_if(
        relations.begin(), relations.end(),
        [](const RelationResult& r) { return r.status == Status::Fail; }));
}

const RelationResult* VerificationReport::find(const std::string& id) const {
    auto it = std::find_if(relations.begin(), relations.end(),
                           [&](const RelationResult& r) { return r.id == id; });
    return it == relations.end() ? nullptr : &*it;
}

void VerificationReport::add(std::string id, std::optional<Counterexample> failure,
                             std::string note) {
    RelationResult r;
    r.id = std::move(id);
    r.status = failure ? Status::Fail : Status::Pass;
    r.counterexample = std::move(failure);
    r.note = std::move(note);
    relations.push_back(std::move(r));
}

void VerificationReport::skip(std::string id, std::string note) {
    RelationResult r;
    r.id = std::move(id);
    r.status = Status::Skipped;
    r.note = std::move(note);
    relations.push_back(std::move(r));
}

namespace {

unsigned initial_threads() {
    if (const char* env = std::getenv("QWEYL_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::atomic<unsigned>& thread_setting() {
    static std::atomic<unsigned> threads{initial_threads()};
    return threads;
}

std::optional<Counterexample> compare_one(const MultiIndex& beta, const Action& lhs,
                                          const Action& rhs) {
    try {
        Element l = lhs(beta);
        Element r = rhs(beta);
        if (l == r) {
            return std::nullopt;
        }
        return Counterexample{beta, std::move(l), std::move(r), {}};
    } catch (const std::exception& ex) {
        return Counterexample{beta, Element(beta.rank()), Element(beta.rank()), ex.what()};
    }
}

} // namespace

void set_sweep_threads(unsigned threads) { thread_setting() = std::max(1U, threads); }

unsigned sweep_threads() { return thread_setting(); }

std::optional<Counterexample> sweep_equal(const std::vector<MultiIndex>& monomials,
                                          const Action& lhs, const Action& rhs) {
    const unsigned workers =
        std::min<unsigned>(sweep_threads(), static_cast<unsigned>(monomials.size()));
    if (workers <= 1) {
        for (const auto& beta : monomials) {
            if (auto ce = compare_one(beta, lhs, rhs)) {
                return ce;
            }
        }
        return std::nullopt;
    }

    // Strided partition; each worker stops once it is past the best failure
    // found so far, and the minimum index wins.
    std::vector<std::optional<Counterexample>> first(workers);
    std::atomic<std::size_t> best{monomials.size()};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < monomials.size(); k += workers) {
                    if (k > best.load()) {
                        return;
                    }
                    if (auto ce = compare_one(monomials[k], lhs, rhs)) {
                        first[w] = std::move(ce);
                        std::size_t cur = best.load();
                        while (k < cur && !best.compare_exchange_weak(cur, k)) {
                        }
                        return;
                    }
                }
            });
        }
    }
    if (best.load() == monomials.size()) {
        return std::nullopt;
    }
    for (auto& f : first) {
        if (f && f->beta == monomials[best.load()]) {
            return std::move(f);
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> sweep_equal(std::size_t n, int degree, const Action& lhs,
                                          const Action& rhs) {
    return sweep_equal(monomials_up_to(n, degree), lhs, rhs);
}

} // namespace qweyl
