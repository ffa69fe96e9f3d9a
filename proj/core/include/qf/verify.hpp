#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qf/classify.hpp"

namespace qf {

struct VerifyBounds {
    std::int64_t factor_bound = num::kDefaultFactorBound;
    std::int64_t lattice_box = 50;
    std::uint64_t form_budget = 1'000'000;
};

/// Configuration of a verification sweep. Checks not applicable to a
/// configured field skip it; `checks` empty selects the whole catalogue.
struct SweepConfig {
    std::vector<FieldDescriptor> fields;
    std::size_t max_dim = 4;
    std::size_t tower_depth_cap = 2;
    std::vector<std::string> checks;
    std::uint64_t seed = 0;
    VerifyBounds bounds;
};

/// Default configuration of the "paper" suite.
SweepConfig paper_suite_defaults();

struct Counterexample {
    std::string field;
    std::string form;
    std::string witness;
    std::string detail;
};

enum class CheckOutcome { pass, fail, vacuous };

/// One named check: the claim verified, the population swept, the verdict.
/// A check never passes on an empty population; that is reported as
/// `vacuous` ("population 0"), distinct from pass.
struct CheckResult {
    std::string name;
    std::string statement;
    std::uint64_t population{0};
    CheckOutcome outcome{CheckOutcome::vacuous};
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds{0.0};
};

struct VerificationReport {
    SweepConfig config;
    std::vector<CheckResult> checks;

    bool all_passed() const;  // true when no check failed (vacuous is not a failure)
};

/// Test seam: substitute membership primitives and watch the suite catch a
/// broken one. Unset members call the engine.
struct EngineHooks {
    std::function<bool(const QuadraticForm&, const FieldElement&)> represents;
    std::function<bool(const QuadraticForm&, const FieldElement&)> in_G;
    std::function<bool(const QuadraticForm&, const FieldElement&)> in_H;
};

/// The check catalogue as (name, statement) pairs, in execution order.
const std::vector<std::pair<std::string, std::string>>& check_catalogue();

VerificationReport run_suite(const SweepConfig& cfg);
VerificationReport run_suite(const SweepConfig& cfg, const EngineHooks& hooks);

/// Number of forms with entries among the square-class representatives and
/// dims in [lo, hi]: sum of (#classes)^d.
std::uint64_t form_population(const FieldDescriptor& field, std::size_t lo, std::size_t hi);

/// Stream of all such forms, ascending by dimension. Raises BoundError up
/// front when the population exceeds the budget.
class FormEnumerator {
public:
    FormEnumerator(FieldDescriptor field, std::size_t lo, std::size_t hi, std::uint64_t budget);

    bool has_next() const noexcept { return !done_; }
    QuadraticForm next();

private:
    void advance();

    FieldDescriptor field_;
    std::vector<SquareClass> reps_;
    std::size_t dim_, hi_;
    std::vector<std::size_t> idx_;
    bool done_{false};
};

void for_each_form(const FieldDescriptor& field, std::size_t lo, std::size_t hi,
                   std::uint64_t budget, const std::function<void(const QuadraticForm&)>& fn);

}  // namespace qf
