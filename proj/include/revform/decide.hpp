// Top-level avoidability verdicts with certificates.
#pragma once

#include "revform/classic.hpp"
#include "revform/formula.hpp"
#include "revform/morphism.hpp"
#include "revform/oracle.hpp"
#include "revform/word.hpp"

#include <optional>
#include <string>

namespace revform {

enum class Status { unavoidable, avoidable, unknown };
const char* to_string(Status s);

/// Lemma names: "doubled_pattern", "length_bound", "two_way_middle",
/// "all_two_way", "one_way_twice", "flat".
struct Certificate {
    enum class Kind { none, zimin_division, theorem9_contrapositive, lemma, evidence_only };
    Kind kind = Kind::none;

    // zimin_division
    unsigned m = 0, n = 0;
    SymbolicMorphism morphism;

    // theorem9_contrapositive: "reversal_free" (m = 0) or "at_most_two_one_way"
    std::string basis;

    // lemma
    std::string lemma;
    std::string detail;                   // which variables triggered it
    std::optional<Pattern> factor;        // doubled_pattern, length_bound: the avoidable factor
    std::optional<Formula> avoid_target;  // formula the generated component avoids
    std::size_t period_length = 0;        // all_two_way
    std::size_t alphabet_size = 0;        // one_way_twice
    std::optional<Rational> exponent;     // one_way_twice
    std::optional<OmegaWordSpec> witness;
    std::optional<OracleReport> witness_check;  // against `factor` when set, else the whole formula

    // evidence_only
    std::optional<Word> word;
};
const char* to_string(Certificate::Kind k);

struct Verdict {
    Formula formula;     // as given
    Formula normalized;  // what was decided
    unsigned m = 0, n = 0;
    Status status = Status::unknown;
    Certificate certificate;
    std::optional<Word> evidence;  // finite avoiding word, corroboration only
    std::string reason;
};

struct DecideOptions {
    SearchBudget budget;
    std::size_t witness_prefix = 300;
    std::size_t witness_image_bound = 30;
    bool verify_witnesses = true;
    bool attach_evidence = true;
    std::size_t evidence_length = 50;
    std::size_t evidence_max_alphabet = 5;
    OracleBudget evidence_budget{.max_nodes = 20'000};
    OracleBudget oracle;
};

Verdict decide(const Formula& phi, const DecideOptions& opts = {});

bool check_doubled_pattern(const Pattern& p);
bool check_length_bound(const Pattern& p);

// Each lemma returns a certificate with its witness built, or nullopt when
// the lemma's hypothesis fails or the witness cannot be generated.
std::optional<Certificate> lemma_corollaries(const Formula& phi, const DecideOptions& opts = {});
std::optional<Certificate> lemma_two_way_middle(const Formula& phi, const DecideOptions& opts = {});
std::optional<Certificate> lemma_all_two_way(const Formula& phi, const DecideOptions& opts = {});
std::optional<Certificate> lemma_one_way_twice(const Formula& phi, const DecideOptions& opts = {});
std::optional<Certificate> lemma_flat(const Formula& phi, const DecideOptions& opts = {});

/// Avoiding word for a lemma certificate. Throws std::invalid_argument for
/// non-lemma certificates and std::runtime_error when generation fails.
OmegaWordSpec build_witness(const Certificate& cert, const DecideOptions& opts = {});

/// The lemma battery, cheapest first; first certificate whose witness verifies.
std::optional<Certificate> run_lemma_battery(const Formula& phi, const DecideOptions& opts = {});

struct Conjecture2Report {
    Formula formula;
    Formula residual;
    std::optional<Status> formula_status;
    bool residual_unavoidable = false;
    std::optional<ReductionChain> chain;
};

/// Deletes all two-way variables and decides the reversal-free residual.
Conjecture2Report conjecture2_probe(const Formula& phi, const DecideOptions& opts = {}, bool with_verdict = true);

/// Avoiding word over the smallest alphabet up to `max_alphabet`.
std::optional<Word> find_evidence(const Formula& phi, std::size_t length, std::size_t max_alphabet,
                                  OracleBudget budget = {});

}  // namespace revform
