#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/multi_index.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qweyl {

/// First monomial on which two sides of an identity disagree.
struct Counterexample {
    MultiIndex beta;
    Element lhs;
    Element rhs;
    std::string note;
};

enum class Status { Pass, Fail, Skipped };

struct RelationResult {
    std::string id;
    Status status = Status::Pass;
    std::optional<Counterexample> counterexample;
    std::string note;
};

/// Outcome of one verification suite. Relation order is the order in which
/// the suite checks them, which is fixed for given (n, degree).
struct VerificationReport {
    std::string check;
    int n = 0;
    int rank_sl = 0;
    int degree = 0;
    std::vector<RelationResult> relations;

    std::size_t failed() const;
    bool passed() const { return failed() == 0; }
    const RelationResult* find(const std::string& id) const;

    void add(std::string id, std::optional<Counterexample> failure, std::string note = {});
    void skip(std::string id, std::string note);
};

/// Image of x^(beta) under some linear map.
using Action = std::function<Element(const MultiIndex&)>;

/// Worker count used by sweeps. Defaults to 1, or to QWEYL_THREADS when set.
void set_sweep_threads(unsigned threads);
unsigned sweep_threads();

/// Compares lhs and rhs on every x^(beta) in `monomials`. Returns the
/// failure for the earliest monomial in list order, independent of
/// scheduling. An exception thrown by either side counts as a failure and
/// its message becomes the note.
std::optional<Counterexample> sweep_equal(const std::vector<MultiIndex>& monomials,
                                          const Action& lhs, const Action& rhs);

/// sweep_equal over monomials_up_to(n, degree).
std::optional<Counterexample> sweep_equal(std::size_t n, int degree, const Action& lhs,
                                          const Action& rhs);

} // namespace qweyl
