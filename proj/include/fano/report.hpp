#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/classify.hpp"
#include "fano/textspec.hpp"

namespace fano {

enum class Family { complete_intersection, grassmannian, product, p1_bundle };
enum class OutputFormat { table, csv, json };

/// Parameter ranges for a family sweep. The estimated case count must stay
/// below the cap or the sweep is refused.
struct SweepConfig {
    Family family = Family::complete_intersection;
    int n_max = 6;
    int r_max = 2;
    int d_max = 4;
    int k_max = 3;
    int w_max = 1; // > 1 enumerates weight tuples for the ci family
    std::size_t cap = 1000000;
    OutputFormat format = OutputFormat::table;
    bool boundary_only = false;
    bool verbose = false;
};

/// One classification rendered as a report line: the canonical spec text,
/// the record fields, the oracle verdict where one exists, and whether the
/// engine agrees with it.
struct ReportRow {
    std::string spec;
    int dim = 0;
    bool fano = false;
    std::optional<Rational> fano_index;
    bool two_fano = false;
    bool ch2_strict = false;
    bool boundary = false;
    std::optional<bool> oracle;
    bool agree = true;
    std::vector<WitnessPairing> witnesses; // not part of row equality

    friend bool operator==(const ReportRow& a, const ReportRow& b) {
        return a.spec == b.spec && a.dim == b.dim && a.fano == b.fano &&
               a.fano_index == b.fano_index && a.two_fano == b.two_fano &&
               a.ch2_strict == b.ch2_strict && a.boundary == b.boundary &&
               a.oracle == b.oracle && a.agree == b.agree;
    }
};

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t fano = 0;
    std::size_t two_fano = 0;
    std::size_t boundary = 0;
    std::size_t oracle_defined = 0;
    std::size_t oracle_agree = 0;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepResult {
    std::vector<ReportRow> rows;
    SweepSummary summary;
};

ReportRow run_classify(const std::string& spec_text);
/// Rows in lexicographic parameter order; throws SweepCapError when the
/// case count exceeds the cap.
SweepResult run_sweep(const SweepConfig& config);

struct Lemma3Report {
    Rational ch2_term;
    Rational c1sq_term;
    Rational defect_term;
    Rational bound;
};
Lemma3Report run_lemma3(const Lemma3Input& input);

SweepSummary summarize(const std::vector<ReportRow>& rows);

std::string render_table(const std::vector<ReportRow>& rows, const SweepSummary& summary,
                         bool verbose = false);
std::string render_csv(const std::vector<ReportRow>& rows, const SweepSummary& summary);
std::string render_json(const std::vector<ReportRow>& rows, const SweepSummary& summary,
                        bool verbose = false);
std::string render(const SweepResult& result, OutputFormat format, bool verbose = false);

std::vector<ReportRow> parse_csv(const std::string& text);
SweepResult parse_json(const std::string& text);

} // namespace fano
